use bmw_cellular::algebra::Algebra;
use bmw_cellular::cli::{cache_contents, read_cache, run, write_cache, CacheStatus};
use bmw_cellular::exactring::AlgebraKind;
use serde_json::Value;
use std::path::Path;
use std::process::Command;

fn bmwcell(args: &[&str]) -> (i32, String, String) {
    let out = run(std::iter::once("bmwcell").chain(args.iter().copied()));
    (out.code, out.stdout, out.stderr)
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, stdout, stderr) = bmwcell(&all);
    assert_eq!(code, 0, "{:?}: {}", args, stderr);
    let mut v: Value = serde_json::from_str(&stdout).unwrap();
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn gram_json_has_matrix_and_determinant() {
    let v = json(&["gram", "--algebra", "brauer", "--n", "3", "--lambda", "1"]);
    assert_eq!(v["command"], "gram");
    assert_eq!(v["result"]["matrix"], serde_json::json!([["z", "1", "1"], ["1", "z", "1"], ["1", "1", "z"]]));
    assert_eq!(v["result"]["determinant"], "z^3-3*z+2");
}

#[test]
fn dim_brauer_one() {
    let v = json(&["dim", "--algebra", "brauer", "--n", "1"]);
    assert_eq!(v["result"]["dimension"], 1);
    let v = json(&["dim", "--algebra", "bmw", "--n", "4"]);
    assert_eq!(v["result"]["dimension"], 105);
}

#[test]
fn certify_then_gram_certify() {
    let v = json(&["certify", "--algebra", "brauer", "--n", "3", "--spec", "z=4"]);
    assert_eq!(v["result"]["outcome"], "Inconclusive");
    assert_eq!(v["result"]["witnesses"][0]["content_vector"], serde_json::json!(["0", "-1", "-2"]));
    let v = json(&["gram-certify", "--algebra", "brauer", "--n", "3", "--spec", "z=4"]);
    assert_eq!(v["result"]["outcome"], "CertifiedSemisimple");
    let v = json(&["gram-certify", "--algebra", "brauer", "--n", "3", "--spec", "z=1"]);
    assert_eq!(v["result"]["outcome"], "CertifiedNotSemisimple");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["transition", "--n", "4", "--lambda", "1,1"][..],
        &["jm", "--algebra", "brauer", "--n", "3", "--lambda", "1"][..],
        &["certify", "--n", "3", "--spec", "r=-q^-3"][..],
        &["conjecture", "--n", "3"][..],
    ] {
        assert_eq!(json(args), json(args), "{:?}", args);
    }
}

#[test]
fn exit_codes_from_binary() {
    let exe = env!("CARGO_BIN_EXE_bmwcell");
    let code = |args: &[&str]| Command::new(exe).args(args).output().unwrap().status.code();
    assert_eq!(code(&["dim", "--n", "2"]), Some(0));
    assert_eq!(code(&["gram", "--n", "3", "--lambda", "5"]), Some(2));
    assert_eq!(code(&["dim", "--n", "0"]), Some(2));
    assert_eq!(code(&["nonsense"]), Some(2));
    assert_eq!(code(&["gram", "--n", "3", "--lambda", "1", "--spec", "q=zeta(4),r=1/(q^2+1)"]), Some(3));
}

fn with_cache(dir: &Path, args: &[&str]) {
    let mut all = args.to_vec();
    let d = dir.to_str().unwrap();
    all.extend(["--cache-dir", d]);
    let v = json(&all);
    let (_, _, stderr) = bmwcell(&all);
    assert!(stderr.is_empty(), "{}", stderr);
    let mut plain = json(args);
    plain["parameters"] = v["parameters"].clone();
    assert_eq!(v, plain, "{:?}", args);
}

#[test]
fn cache_on_and_off_agree() {
    let dir = tempfile::tempdir().unwrap();
    for kind in ["bmw", "brauer"] {
        for n in ["1", "2", "3"] {
            for cmd in ["gram", "jm", "filtration", "transition"] {
                let lambda = if n == "2" { "--lambda=" } else { "--lambda=1" };
                let args = [cmd, "--algebra", kind, "--n", n, lambda];
                // first call writes, second call reads
                with_cache(dir.path(), &args);
                with_cache(dir.path(), &args);
            }
        }
    }
    let args = ["transition", "--n", "4", "--lambda", "1,1"];
    with_cache(dir.path(), &args);
    with_cache(dir.path(), &args);
    let v = json(&["cache", "--n", "4", "--cache-dir", dir.path().to_str().unwrap()]);
    for level in v["result"]["levels"].as_array().unwrap() {
        assert_eq!(level["status"], "hit");
        assert_eq!(level["roundtrip_exact"], true);
    }
}

#[test]
fn stale_and_corrupt_files_are_rewritten() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(bmwcell(&["cache", "--n", "2", "--cache-dir", d]).0, 0);
    let file = dir.path().join("bmw-n2.json");
    let good = std::fs::read_to_string(&file).unwrap();

    std::fs::write(&file, good.replace("\"version\": 1", "\"version\": 0")).unwrap();
    let (code, _, stderr) = bmwcell(&["gram", "--n", "2", "--lambda", "2", "--cache-dir", d]);
    assert_eq!(code, 0);
    assert!(stderr.contains("version 0"), "{}", stderr);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), good);

    std::fs::write(&file, "{ not json").unwrap();
    let (code, _, stderr) = bmwcell(&["gram", "--n", "2", "--lambda", "2", "--cache-dir", d]);
    assert_eq!(code, 0);
    assert!(stderr.contains("corrupt"), "{}", stderr);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), good);

    std::fs::write(&file, good.replace("\"n\": 2", "\"n\": 3")).unwrap();
    let alg = Algebra::bmw(2);
    assert!(matches!(read_cache(dir.path(), &alg), CacheStatus::Corrupt(_)));
}

#[test]
fn concurrent_writers_agree() {
    let dir = tempfile::tempdir().unwrap();
    let want = cache_contents(&Algebra::new(AlgebraKind::Brauer, 4)).unwrap();
    std::thread::scope(|s| {
        for _ in 0..8 {
            s.spawn(|| {
                let alg = Algebra::brauer(4);
                write_cache(dir.path(), &alg).unwrap();
            });
        }
    });
    let got = std::fs::read_to_string(dir.path().join("brauer-n4.json")).unwrap();
    assert_eq!(got, want);
    let alg = Algebra::brauer(4);
    assert_eq!(read_cache(dir.path(), &alg), CacheStatus::Loaded);
    assert_eq!(cache_contents(&alg).unwrap(), want);
    let leftovers = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(leftovers, 1);
}
