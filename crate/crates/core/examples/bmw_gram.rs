//! Gram matrix of the cell module S^(1) of the B–M–W algebra B_3(q, r).

use bmw_cellular::algebra::Algebra;
use bmw_cellular::bmw::bmw_gram;
use bmw_cellular::combin::Partition;

fn main() {
    let alg = Algebra::bmw(3);
    let g = bmw_gram(&alg, &Partition::of(&[1])).expect("(1) is a cell shape at n = 3");
    println!("{}", g);
    println!("det = {}", g.det());
}
