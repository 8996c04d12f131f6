use bmw_cellular::algebra::Algebra;
use bmw_cellular::brauer::br_gram;
use bmw_cellular::combin::Partition;

fn main() {
    let alg = Algebra::brauer(3);
    for lambda in Partition::cell_shapes(3) {
        let g = br_gram(&alg, &lambda).unwrap();
        println!("S^{}: det = {}", lambda, g.det());
        println!("{}", g);
    }
}
