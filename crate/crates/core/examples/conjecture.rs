//! Roots of det Gram(S^(1)) (odd n) or det Gram(S^()) (even n) for the Brauer
//! algebra, against the predicted polynomials.

use bmw_cellular::specsim::conjecture_evidence;

fn main() {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for n in 2..=top {
        let ev = conjecture_evidence(n).unwrap();
        let roots: Vec<String> = ev.split.roots.iter().map(|(x, m)| format!("{} (x{})", x, m)).collect();
        print!("n={} S^{}: roots {}; agrees with p_{}: {}", n, ev.lambda, roots.join(", "), ev.k, ev.agree);
        match ev.agree_shifted {
            Some(s) => println!("; with z p_{}: {}", ev.k - 1, s),
            None => println!(),
        }
    }
}
