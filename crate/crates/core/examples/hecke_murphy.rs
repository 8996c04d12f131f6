//! Murphy basis coordinates in the Hecke algebra of S_3 and the action of
//! the Jucys–Murphy elements on a Specht module.

use bmw_cellular::combin::{Partition, Perm};
use bmw_cellular::hecke::{Hecke, HeckeElement};

fn main() {
    let h = Hecke::generic(3);
    let x = HeckeElement::basis(&Perm::from_word(3, &[1, 2]));
    let c = h.to_murphy(&x);
    for (ix, v) in &c.entries {
        println!("{:?} -> {}", ix, v);
    }
    println!("round trip: {}", h.from_murphy(&c) == x);
    let lambda = Partition::of(&[2, 1]);
    for k in 1..=3 {
        println!("D_{} on S^{}:\n{}", k, lambda, h.specht_action(&lambda, &h.jm(k)).unwrap());
    }
}
