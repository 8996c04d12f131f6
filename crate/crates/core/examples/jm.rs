//! Jucys–Murphy elements act triangularly on the path basis; the diagonal
//! entries are the contents along each path.

use bmw_cellular::combin::Partition;
use bmw_cellular::exactring::AlgebraKind;
use bmw_cellular::towers::Tower;

fn main() {
    for kind in [AlgebraKind::Bmw, AlgebraKind::Brauer] {
        let tower = Tower::new(kind, 4);
        let r = tower.jm_triangularity(&Partition::of(&[2]), 4).unwrap();
        println!("{:?}: triangular = {}", kind, r.ok());
        for (t, d) in r.paths.iter().zip(&r.diagonals) {
            let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            println!("  {}  ({})", t, d.join(", "));
        }
        let (alpha, scalar) = tower.central_scalar(&Partition::of(&[2]), 4).unwrap();
        println!("  central element acts as {} (scalar: {})", alpha, scalar);
    }
}
