//! Writes cell-module structure constants to disk and reads them back.

use bmw_cellular::algebra::Algebra;
use bmw_cellular::cli::{cache_contents, read_cache, write_cache};

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let alg = Algebra::bmw(3);
    let path = write_cache(dir.path(), &alg).unwrap();
    println!("wrote {}", path.display());
    let fresh = Algebra::bmw(3);
    println!("read back: {:?}", read_cache(dir.path(), &fresh));
    println!("identical: {}", cache_contents(&fresh).unwrap() == cache_contents(&alg).unwrap());
}
