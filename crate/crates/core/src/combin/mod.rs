//! Partitions, tableaux, permutations, coset representatives and Bratteli paths.

mod partition;
mod path;
mod perm;
mod tableau;

pub use partition::{Dominance, Node, Partition, PartitionError};
pub use path::{distinguished_perms, enumerate_paths, maximal_path, neighbours, Path, UpStep};
pub use perm::{word_string, Perm};
pub use tableau::{
    coset_count, coset_reps, enumerate_std, layer_of, semistandard_of_type, semistandard_set, type_map, SemiStdTableau,
    Tableau, TableauError,
};
