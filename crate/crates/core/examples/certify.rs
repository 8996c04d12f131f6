//! Content-vector certification, falling back to Gram ranks when inconclusive.

use bmw_cellular::algebra::Algebra;
use bmw_cellular::exactring::{AlgebraKind, Specialization};
use bmw_cellular::specsim::{certify, gram_rank_certify, Outcome, Witness};

fn main() {
    for (kind, spec) in [(AlgebraKind::Bmw, "r=-q^-3"), (AlgebraKind::Brauer, "z=4"), (AlgebraKind::Brauer, "z=1")] {
        let s = Specialization::parse(kind, spec).unwrap();
        let v = certify(kind, 3, &s).unwrap();
        println!("{:?} n=3 {}: {}", kind, spec, v.outcome);
        for w in &v.witnesses {
            if let Witness::Paths { s, t, vector } = w {
                let v: Vec<String> = vector.iter().map(|x| x.to_string()).collect();
                println!("  {} and {} share ({})", s, t, v.join(", "));
            }
        }
        if v.outcome == Outcome::Inconclusive {
            let alg = Algebra::new(kind, 3);
            let g = gram_rank_certify(&alg, &s).unwrap();
            println!("  gram ranks: {}", g.outcome);
            for (lambda, dim, rad) in &g.radicals {
                println!("    S^{}: dim {}, radical {}", lambda, dim, rad);
            }
        }
    }
}
