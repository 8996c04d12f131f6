//! Composing Brauer diagrams and multiplying words in B_3(q, r).

use bmw_cellular::algebra::{Algebra, Gen};
use bmw_cellular::bmw::{bmw_star, bmw_word};
use bmw_cellular::brauer::br_compose;
use bmw_cellular::diagram::BrauerDiagram;

fn main() {
    let e1 = BrauerDiagram::e(3, 1);
    let (d, loops) = br_compose(&e1, &e1).unwrap();
    println!("E_1 E_1 = z^{} {:?}", loops, d);

    let b = Algebra::bmw(3);
    use Gen::{E, T};
    let x = bmw_word(&b, &[T(1), T(1)]).unwrap();
    println!("T_1^2 = {}", b.format(&x));
    let y = bmw_word(&b, &[E(1), T(2)]).unwrap();
    println!("(E_1 T_2)^* = {}", b.format(&bmw_star(&b, &y)));
    println!("E_1 T_2 T_2^-1 = {}", b.format(&b.mul(&y, &b.gen(Gen::TInv(2)))));
}
