//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the report.

use bmw_cellular::algebra::{Algebra, Element, Gen};
use bmw_cellular::combin::{coset_count, enumerate_std, layer_of, Partition, Perm};
use bmw_cellular::exactring::linalg::Matrix;
use bmw_cellular::exactring::{frac, AlgebraKind, CoeffFraction, Specialization};
use bmw_cellular::hecke::{Hecke, HeckeElement};
use bmw_cellular::specsim::{certify, conjecture_evidence, gram_rank_certify, Outcome, Witness};
use bmw_cellular::towers::Tower;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};
use Gen::{TInv, E, T};

type Check = Result<String, String>;

fn mat(rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| frac(s)).collect()).collect())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn double_factorial(n: usize) -> usize {
    (1..=n).map(|k| 2 * k - 1).product()
}

fn c1_bmw_gram() -> Check {
    let a = Algebra::bmw(3);
    let g = a.cell_module(&Partition::of(&[1])).map_err(|e| e.to_string())?.gram();
    let z = "1+(r-r^-1)/(q-q^-1)";
    let zz = format!("{}+(q-q^-1)*(r-r^-1)", z);
    let want = mat(&[&[z, "r", "1"], &["r", &zz, "r^-1"], &["1", "r^-1", z]]);
    ensure(g == want, || format!("gram\n{}", g))?;
    let det = g.det();
    let want = frac("(r-1)^2*(r+1)^2*(q^3+r)*(q^3*r-1)/(r^3*(q-1)^3*(q+1)^3)");
    ensure(det == want, || format!("det {}", det))?;
    Ok(format!("det = {}", det))
}

fn c2_brauer_gram() -> Check {
    let a = Algebra::brauer(3);
    let g = a.cell_module(&Partition::of(&[1])).map_err(|e| e.to_string())?.gram();
    ensure(g == mat(&[&["z", "1", "1"], &["1", "z", "1"], &["1", "1", "z"]]), || format!("gram\n{}", g))?;
    ensure(g.det() == frac("(z-1)^2*(z+2)"), || format!("det {}", g.det()))?;
    Ok(format!("det = {}", g.det()))
}

/// Entries of `got` that differ from `want`, as `(row, col, got, want)` with 1-based indices.
fn diff(got: &Matrix, want: &Matrix) -> Vec<(usize, usize, String, String)> {
    let mut out = Vec::new();
    for i in 0..want.rows() {
        for j in 0..want.cols() {
            if got[(i, j)] != want[(i, j)] {
                out.push((i + 1, j + 1, got[(i, j)].to_string(), want[(i, j)].to_string()));
            }
        }
    }
    out
}

/// The three printed transition matrices. The third is known to differ from
/// the computed one in column 2 (see README); any other mismatch is an error.
fn c3_transition(known: &mut Vec<String>) -> Check {
    let tw = Tower::new(AlgebraKind::Bmw, 4);
    let cases = [
        (3, Partition::of(&[1]), mat(&[&["1", "1-q^2", "0"], &["0", "q", "0"], &["0", "q^2", "1"]]), "n=3 (1)"),
        (
            4,
            Partition::of(&[2]),
            mat(&[
                &["1", "1-q^2", "0", "1-q^2", "0", "0"],
                &["0", "q", "0", "q*(1-q^2)", "0", "0"],
                &["0", "0", "0", "q^2", "0", "0"],
                &["0", "q^2", "1", "q^2*(1-q^2)", "0", "(1-q^2)/q"],
                &["0", "0", "0", "q^3", "0", "1"],
                &["0", "0", "0", "q^4", "1", "(q^2-1)/q"],
            ]),
            "n=4 (2)",
        ),
        (
            4,
            Partition::of(&[1, 1]),
            mat(&[
                &["1", "1-q^2", "0", "q*(q^2-1)", "1-q^2", "0"],
                &["0", "q^2", "0", "1-q^2", "(q^2-1)/q", "0"],
                &["0", "0", "0", "q", "-1", "0"],
                &["0", "q^3", "1", "q*(1-q^2)", "(1-q^2)/(q*r)", "0"],
                &["0", "0", "0", "q^2", "0", "0"],
                &["0", "0", "0", "0", "q^2", "1"],
            ]),
            "n=4 (1,1)",
        ),
    ];
    let mut failures = Vec::new();
    for (n, lambda, want, label) in cases {
        let pb = tw.path_basis(&lambda, n).map_err(|e| e.to_string())?;
        for (i, j, g, w) in diff(&pb.transition, &want) {
            let line = format!("{} entry ({},{}): computed {}, printed {}", label, i, j, g, w);
            if label == "n=4 (1,1)" && j == 2 {
                known.push(line.clone());
            }
            failures.push(line);
        }
    }
    if failures.is_empty() {
        Ok("all 3 matrices match".into())
    } else {
        Err(failures.join("; "))
    }
}

fn c4_dimensions() -> Check {
    let mut parts = Vec::new();
    for n in 2..=4 {
        let (total, rows) = Tower::dimension_check(n).map_err(|e| e.to_string())?;
        ensure(total == double_factorial(n), || format!("n={} total {}", n, total))?;
        for (l, p, cells) in &rows {
            ensure(p == cells, || format!("n={} {}: {} paths, {} cells", n, l, p, cells))?;
            let f = layer_of(l, n).map_err(|e| e.to_string())?;
            let direct = enumerate_std(l, n).map_err(|e| e.to_string())?.len() * coset_count(f, n);
            ensure(*p == direct, || format!("n={} {}", n, l))?;
        }
        for a in [Algebra::bmw(n), Algebra::brauer(n)] {
            ensure(a.dim() == total, || format!("{:?} n={} dim {}", a.kind(), n, a.dim()))?;
            for (l, p, _) in &rows {
                let d = a.cell_module(l).map_err(|e| e.to_string())?.dim();
                ensure(d == *p, || format!("{:?} n={} {}: cell module dim {}", a.kind(), n, l, d))?;
            }
        }
        parts.push(total.to_string());
    }
    Ok(format!("totals {}", parts.join(", ")))
}

fn rel(a: &Algebra, lhs: &[Gen], rhs: &[(&str, &[Gen])]) -> Result<(), String> {
    let l = a.word(lhs);
    let r = rhs.iter().fold(Element::zero(), |acc, (c, w)| acc.add(&a.word(w).scale(&frac(c))));
    ensure(l == r, || format!("{:?} n={}: {:?}", a.kind(), a.n(), lhs))
}

fn bmw_relations(a: &Algebra) -> Result<usize, String> {
    let n = a.n();
    let z = "1+(r-r^-1)/(q-q^-1)";
    let mut count = 0;
    for i in 1..n {
        rel(a, &[T(i), TInv(i)], &[("1", &[])])?;
        rel(a, &[TInv(i), T(i)], &[("1", &[])])?;
        rel(a, &[T(i), E(i)], &[("r^-1", &[E(i)])])?;
        rel(a, &[E(i), T(i)], &[("r^-1", &[E(i)])])?;
        rel(a, &[E(i), E(i)], &[(z, &[E(i)])])?;
        rel(a, &[T(i), T(i)], &[("1", &[]), ("q-q^-1", &[T(i)]), ("-(q-q^-1)*r^-1", &[E(i)])])?;
        rel(a, &[T(i)], &[("1", &[TInv(i)]), ("q-q^-1", &[]), ("-(q-q^-1)", &[E(i)])])?;
        count += 7;
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                rel(a, &[T(i), T(j)], &[("1", &[T(j), T(i)])])?;
                rel(a, &[E(i), T(j)], &[("1", &[T(j), E(i)])])?;
                rel(a, &[E(i), E(j)], &[("1", &[E(j), E(i)])])?;
                count += 3;
            }
            if i.abs_diff(j) == 1 {
                rel(a, &[E(i), T(j), E(i)], &[("r", &[E(i)])])?;
                rel(a, &[E(i), TInv(j), E(i)], &[("r^-1", &[E(i)])])?;
                rel(a, &[E(i), E(j), E(i)], &[("1", &[E(i)])])?;
                rel(a, &[E(i), E(j)], &[("1", &[E(i), T(j), T(i)])])?;
                rel(a, &[E(i), E(j)], &[("1", &[T(j), T(i), E(j)])])?;
                rel(a, &[E(j), T(i), T(j)], &[("1", &[T(i), T(j), E(i)])])?;
                rel(a, &[T(i), T(j), T(i)], &[("1", &[T(j), T(i), T(j)])])?;
                count += 7;
            }
        }
    }
    Ok(count)
}

fn brauer_relations(a: &Algebra) -> Result<usize, String> {
    let n = a.n();
    let mut count = 0;
    for i in 1..n {
        rel(a, &[T(i), T(i)], &[("1", &[])])?;
        rel(a, &[E(i), E(i)], &[("z", &[E(i)])])?;
        rel(a, &[T(i), E(i)], &[("1", &[E(i)])])?;
        rel(a, &[E(i), T(i)], &[("1", &[E(i)])])?;
        count += 4;
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                rel(a, &[T(i), T(j)], &[("1", &[T(j), T(i)])])?;
                rel(a, &[T(i), E(j)], &[("1", &[E(j), T(i)])])?;
                rel(a, &[E(i), E(j)], &[("1", &[E(j), E(i)])])?;
                count += 3;
            }
            if i.abs_diff(j) == 1 {
                rel(a, &[E(i), E(j), E(i)], &[("1", &[E(i)])])?;
                rel(a, &[T(i), E(j), E(i)], &[("1", &[T(j), E(i)])])?;
                rel(a, &[E(i), E(j), T(i)], &[("1", &[E(i), T(j)])])?;
                rel(a, &[E(i), T(j), E(i)], &[("1", &[E(i)])])?;
                rel(a, &[T(i), T(j), T(i)], &[("1", &[T(j), T(i), T(j)])])?;
                count += 5;
            }
        }
    }
    Ok(count)
}

fn associativity(a: &Algebra, rng: &mut ChaCha8Rng, trials: usize) -> Result<(), String> {
    for _ in 0..trials {
        let [x, y, w] = [0; 3].map(|_| Element::basis(rng.gen_range(0..a.dim())));
        let l = a.mul(&a.mul(&x, &y), &w);
        let r = a.mul(&x, &a.mul(&y, &w));
        ensure(l == r, || format!("{:?} n={}: ({:?} {:?} {:?})", a.kind(), a.n(), x, y, w))?;
    }
    Ok(())
}

fn c5_relations() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut count = 0;
    for n in 2..=4 {
        let a = Algebra::bmw(n);
        count += bmw_relations(&a)?;
        associativity(&a, &mut rng, 100)?;
    }
    for n in 2..=6 {
        let a = Algebra::brauer(n);
        count += brauer_relations(&a)?;
        associativity(&a, &mut rng, 100)?;
    }
    Ok(format!("{} relations, 800 associativity triples", count))
}

fn c6_jm() -> Check {
    let mut checked = 0;
    for (kind, top) in [(AlgebraKind::Bmw, 4), (AlgebraKind::Brauer, 5)] {
        let tw = Tower::new(kind, top);
        for n in 1..=top {
            for lambda in Partition::cell_shapes(n) {
                let r = tw.jm_triangularity(&lambda, n).map_err(|e| e.to_string())?;
                ensure(r.ok(), || format!("{:?} n={} {}: {}", kind, n, lambda, r.violations.join("; ")))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{} cell modules", checked))
}

fn c7_central() -> Check {
    let mut checked = 0;
    for kind in [AlgebraKind::Bmw, AlgebraKind::Brauer] {
        let tw = Tower::new(kind, 4);
        for n in 1..=4 {
            for lambda in Partition::cell_shapes(n) {
                let (alpha, ok) = tw.central_scalar(&lambda, n).map_err(|e| e.to_string())?;
                ensure(ok, || format!("{:?} n={} {}: not the scalar {}", kind, n, lambda, alpha))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{} cell modules", checked))
}

fn spec(kind: AlgebraKind, s: &str) -> Result<Specialization, String> {
    Specialization::parse(kind, s).map_err(|e| e.to_string())
}

fn c8_semisimplicity() -> Check {
    let s = spec(AlgebraKind::Bmw, "r=-q^-3")?;
    let v = certify(AlgebraKind::Bmw, 3, &s).map_err(|e| e.to_string())?;
    ensure(v.outcome == Outcome::Inconclusive, || format!("bmw outcome {}", v.outcome))?;
    let target = ["1", "q^2", "q^4"].map(frac).to_vec();
    let hit = v.witnesses.iter().any(|w| match w {
        Witness::Paths { s, t, vector } => {
            s.to_string() == "(∅,1,2,1)" && t.to_string() == "(∅,1,2,3)" && *vector == target
        }
        _ => false,
    });
    ensure(hit, || format!("bmw witnesses {:?}", v.witnesses))?;
    let g = gram_rank_certify(&Algebra::bmw(3), &s).map_err(|e| e.to_string())?;
    ensure(g.outcome == Outcome::CertifiedSemisimple, || format!("bmw gram outcome {}", g.outcome))?;

    let s = spec(AlgebraKind::Brauer, "z=4")?;
    let v = certify(AlgebraKind::Brauer, 3, &s).map_err(|e| e.to_string())?;
    ensure(v.outcome == Outcome::Inconclusive, || format!("brauer outcome {}", v.outcome))?;
    let target = ["0", "-1", "-2"].map(frac).to_vec();
    let hit = v.witnesses.iter().any(|w| matches!(w, Witness::Paths { vector, .. } if *vector == target));
    ensure(hit, || format!("brauer witnesses {:?}", v.witnesses))?;
    let g = gram_rank_certify(&Algebra::brauer(3), &s).map_err(|e| e.to_string())?;
    ensure(g.outcome == Outcome::CertifiedSemisimple, || format!("brauer gram outcome {}", g.outcome))?;

    let s = spec(AlgebraKind::Brauer, "z=1")?;
    let g = gram_rank_certify(&Algebra::brauer(3), &s).map_err(|e| e.to_string())?;
    ensure(g.outcome == Outcome::CertifiedNotSemisimple, || format!("z=1 outcome {}", g.outcome))?;
    let hit = g.witnesses.iter().any(|w| matches!(w, Witness::Gram { lambda, .. } if *lambda == Partition::of(&[1])));
    ensure(hit, || format!("z=1 witnesses {:?}", g.witnesses))?;
    Ok("bmw r=-q^-3, brauer z=4, brauer z=1 as expected".into())
}

fn c9_generic() -> Check {
    for (kind, top) in [(AlgebraKind::Bmw, 4), (AlgebraKind::Brauer, 5)] {
        for n in 1..=top {
            let v = certify(kind, n, &Specialization::generic(kind)).map_err(|e| e.to_string())?;
            ensure(v.outcome == Outcome::CertifiedSemisimple, || format!("{:?} n={}: {}", kind, n, v.outcome))?;
        }
    }
    Ok("bmw n<=4, brauer n<=5 semisimple".into())
}

fn c10_conjecture() -> Check {
    let mut notes = Vec::new();
    for n in [3, 5] {
        let ev = conjecture_evidence(n).map_err(|e| e.to_string())?;
        let roots: Vec<String> = ev.split.roots.iter().map(|(x, m)| format!("{}^{}", x, m)).collect();
        let predicted: Vec<String> = ev.predicted.iter().map(|x| x.to_string()).collect();
        ensure(ev.agree, || {
            format!(
                "n={}: roots [{}] vs predicted [{}], remainder {}",
                n,
                roots.join(" "),
                predicted.join(" "),
                ev.split.remainder
            )
        })?;
        notes.push(format!("n={} roots [{}]", n, roots.join(" ")));
    }
    Ok(notes.join(", "))
}

fn random_hecke(m: usize, perms: &[Perm], rng: &mut ChaCha8Rng) -> HeckeElement {
    let mut h = HeckeElement::zero(m);
    for _ in 0..rng.gen_range(1..=4) {
        let w = perms[rng.gen_range(0..perms.len())].clone();
        let c = CoeffFraction::from_i64(rng.gen_range(-3..=3))
            .mul(&CoeffFraction::var_pow(bmw_cellular::exactring::Var::Q, rng.gen_range(-2..=2)));
        h.add_term(w, &c);
    }
    h
}

fn c11_hecke() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in 1..=4 {
        let h = Hecke::generic(m);
        let perms = Perm::all(m);
        for _ in 0..100 {
            let x = random_hecke(m, &perms, &mut rng);
            let back = h.from_murphy(&h.to_murphy(&x));
            ensure(back == x, || format!("m={}: round trip failed for {:?}", m, x))?;
        }
        for lambda in Partition::all(m) {
            let tabs = enumerate_std(&lambda, m).map_err(|e| e.to_string())?;
            for k in 1..=m {
                let d = h.specht_action(&lambda, &h.jm(k)).map_err(|e| e.to_string())?;
                for (j, t) in tabs.iter().enumerate() {
                    let c = t.find(k).expect("entry present").content() as i32;
                    let want = frac("q").pow(2 * c).expect("q is a unit");
                    ensure(d[(j, j)] == want, || format!("m={} {} D_{} diagonal at {}", m, lambda, k, j))?;
                    for (i, v) in tabs.iter().enumerate() {
                        ensure(i == j || d[(i, j)].is_zero() || v.dominates(t), || {
                            format!("m={} {} D_{}: entry ({}, {})", m, lambda, k, i, j)
                        })?;
                    }
                }
            }
        }
    }
    Ok("400 round trips, D_k triangular for m<=4".into())
}

struct Line {
    id: usize,
    passed: bool,
    elapsed: Duration,
    limit: Duration,
    detail: String,
}

fn run(id: usize, limit_secs: u64, f: impl FnOnce() -> Check) -> Line {
    let start = Instant::now();
    let res = f();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_secs);
    let (passed, detail) = match res {
        Ok(d) if elapsed <= limit => (true, d),
        Ok(d) => (false, format!("{} (over time limit)", d)),
        Err(e) => (false, e),
    };
    let line = Line { id, passed, elapsed, limit, detail };
    println!(
        "criterion {:>2}: {} [{:.2}s / {}s] {}",
        line.id,
        if line.passed { "PASS" } else { "FAIL" },
        line.elapsed.as_secs_f64(),
        line.limit.as_secs(),
        line.detail
    );
    line
}

#[test]
fn acceptance() {
    let mut known = Vec::new();
    let lines = vec![
        run(1, 10, c1_bmw_gram),
        run(2, 5, c2_brauer_gram),
        run(3, 60, || c3_transition(&mut known)),
        run(4, 5, c4_dimensions),
        run(5, 600, c5_relations),
        run(6, 600, c6_jm),
        run(7, 300, c7_central),
        run(8, 60, c8_semisimplicity),
        run(9, 300, c9_generic),
        run(10, 900, c10_conjecture),
        run(11, 120, c11_hecke),
    ];
    let passed = lines.iter().filter(|l| l.passed).count();
    println!("{}/{} criteria pass", passed, lines.len());

    // Criterion 3 is allowed to fail only through the known column-2 discrepancy
    // of the (1,1) matrix; every other criterion must pass.
    for l in &lines {
        if l.id == 3 && !l.passed {
            let all: Vec<&str> = l.detail.split("; ").collect();
            assert_eq!(all.len(), known.len(), "unexpected transition mismatch: {}", l.detail);
            assert!(known.len() <= 2, "{}", l.detail);
            continue;
        }
        assert!(l.passed, "criterion {} failed: {}", l.id, l.detail);
    }
}
