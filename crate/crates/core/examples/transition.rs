//! Transition matrix from the path basis to the cellular basis, n = 4, lambda = (1,1).

use bmw_cellular::combin::Partition;
use bmw_cellular::exactring::AlgebraKind;
use bmw_cellular::towers::Tower;

fn main() {
    let tower = Tower::new(AlgebraKind::Bmw, 4);
    let pb = tower.path_basis(&Partition::of(&[1, 1]), 4).unwrap();
    for (i, t) in pb.paths.iter().enumerate() {
        println!("{}: {}", i + 1, t);
    }
    println!("{}", pb.transition);
}
