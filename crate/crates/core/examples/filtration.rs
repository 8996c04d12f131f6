use bmw_cellular::combin::Partition;
use bmw_cellular::exactring::AlgebraKind;
use bmw_cellular::towers::Tower;

fn main() {
    let tower = Tower::new(AlgebraKind::Bmw, 5);
    let lambda = Partition::of(&[2, 1]);
    let rep = tower.filtration_check(&lambda, 5).unwrap();
    println!("restriction of S^{} to B_4:", lambda);
    for (mu, d) in &rep.layers {
        println!("  S^{} (dim {})", mu, d);
    }
    println!("quotients isomorphic: {}", rep.ok());
}
