use dcx_cli::corpus;
use dcx_cli::error::CliError;
use dcx_cli::files::{builtin_module, module_to_toml, parse_module, parse_ring, ring_to_toml, AnyRing, Source};
use dcx_core::algebra::Algebra;
use dcx_core::exact::Fp;
use proptest::prelude::*;
use serde_json::Value;

fn fp_ring(name: &str) -> Algebra<Fp> {
    match parse_ring(&corpus::ring_source(name).unwrap()).unwrap() {
        AnyRing::Fp(a) => a,
        AnyRing::Q(_) => panic!("corpus rings live over F_p"),
    }
}

fn run(args: &[&str]) -> (i32, String, String) {
    dcx_cli::run(std::iter::once("dcx").chain(args.iter().copied()))
}

fn json(out: &str) -> Value {
    serde_json::from_str(out).expect("stdout is JSON")
}

fn scratch_dir(tag: &str) -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("dcx-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn ring_tables_round_trip() {
    for (name, _) in corpus::RINGS {
        let a = fp_ring(name);
        let text = ring_to_toml(&a);
        let AnyRing::Fp(b) = parse_ring(&Source::new("round-trip", text)).unwrap() else {
            panic!("{name}: field changed")
        };
        assert!(a.same(&b), "{name}");
    }
}

#[test]
fn module_tables_round_trip() {
    for (name, _) in corpus::RINGS {
        let a = fp_ring(name);
        let mut mods: Vec<_> = ["canonical", "residue_field", "free:2"]
            .iter()
            .map(|b| builtin_module(&a, b).unwrap())
            .collect();
        for (_, src) in corpus::module_sources(name) {
            mods.push(parse_module(&src, &a).unwrap());
        }
        for m in mods {
            let back = parse_module(&Source::new("round-trip", module_to_toml(&m)), &a).unwrap();
            assert!(back.actions() == m.actions(), "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn presented_modules_round_trip(coeffs in proptest::collection::vec(0u8..5, 6)) {
        let a = fp_ring("fat");
        let entry = |c: u8, v: &str| if c == 0 { "0".to_string() } else { format!("{c}*{v}") };
        let row = |i: usize| format!("[\"{}\", \"{}\", \"{}\"]", entry(coeffs[i], "x"), entry(coeffs[i + 1], "y"), coeffs[i + 2]);
        let text = format!("[module]\nkind = \"presentation\"\ngens = 2\nmatrix = [{}, {}]\n", row(0), row(3));
        let m = match parse_module(&Source::new("random", text), &a) {
            Ok(m) => m,
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let back = parse_module(&Source::new("round-trip", module_to_toml(&m)), &a).unwrap();
        prop_assert!(back.actions() == m.actions());
    }
}

#[test]
fn parse_errors_point_at_the_offending_token() {
    let text = "[ring]\nkind = \"monomial_quotient\"\nfield = \"Fp\"\np = 7\nvars = [\"x\"]\nrelations = [\"x^2\", \"z\"]\n";
    match parse_ring(&Source::new("bad.toml", text)) {
        Err(CliError::Parse { file, line, col, msg }) => {
            assert_eq!((file.as_str(), line), ("bad.toml", 6), "{msg}");
            assert_eq!(col, 21, "{msg}");
        }
        other => panic!("expected a located parse error, got {other:?}"),
    }

    let text = "[ring]\nkind = \"monomial_quotient\"\nfield = \"Fp\"\np = 7\nvars = [\"x\"]\nrelationz = []\n";
    assert!(matches!(parse_ring(&Source::new("typo.toml", text)), Err(CliError::Parse { line: 6, .. })));

    let a = fp_ring("fat");
    let text = "[module]\nkind = \"presentation\"\ngens = 1\nmatrix = [[\"w\"]]\n";
    match parse_module(&Source::new("m.toml", text), &a) {
        Err(CliError::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected a located parse error, got {other:?}"),
    }
}

#[test]
fn non_artinian_rings_are_rejected() {
    let text = "[ring]\nkind = \"monomial_quotient\"\nfield = \"Fp\"\np = 7\nvars = [\"x\", \"y\"]\nrelations = [\"x^2\", \"x*y\"]\n";
    let err = parse_ring(&Source::new("open.toml", text)).unwrap_err();
    assert!(matches!(err, CliError::Invalid { source: dcx_core::Error::NotArtinian(_), .. }), "{err}");
    assert_eq!(err.exit_code(), 1);

    let dir = scratch_dir("artinian");
    let path = dir.join("open.toml");
    std::fs::write(&path, text).unwrap();
    let (code, out, err) = run(&["invariants", "--ring", path.to_str().unwrap(), "--module", "builtin:residue_field"]);
    assert_eq!(code, 1, "{err}");
    assert!(out.is_empty());
    assert!(err.contains("not Artinian"), "{err}");
}

#[test]
fn invariants_of_the_canonical_module() {
    let (code, out, err) = run(&["invariants", "--ring", "corpus:fat", "--module", "builtin:canonical"]);
    assert_eq!(code, 0, "{err}");
    let v = json(&out);
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["certificates", "command", "inputs", "results", "seed", "version"]);
    let m = &v["results"]["module"];
    assert_eq!((m["length"].as_u64(), m["min_gens"].as_u64(), m["socle_dim"].as_u64()), (Some(3), Some(2), Some(1)));
    assert_eq!(v["results"]["derived"]["type"], 1);
    assert_eq!(v["results"]["derived"]["bass"]["1"], 0);
    assert_eq!(v["certificates"]["bass"]["kind"], "Exact");
    assert_eq!(v["inputs"]["ring"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn shifts_move_homology() {
    let (code, out, err) = run(&["invariants", "--ring", "corpus:d2", "--module", "builtin:residue_field@2"]);
    assert_eq!(code, 0, "{err}");
    let d = &json(&out)["results"]["derived"];
    assert_eq!((d["inf"].as_i64(), d["sup"].as_i64(), d["depth"].as_i64()), (Some(2), Some(2), Some(-2)));
}

#[test]
fn theorem_verdicts_and_exit_codes() {
    let (code, out, err) = run(&["theorem", "anni", "--ring", "corpus:d2", "--C", "builtin:canonical"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(json(&out)["results"]["conclusion"]["status"], "consistent");

    let (code, out, _) = run(&["theorem", "anni", "--ring", "corpus:fat", "--C", "builtin:residue_field"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["conclusion"]["status"], "consistent");
    assert_eq!(v["results"]["values"]["semidualizing"]["value"], false);
    assert_eq!(v["certificates"]["semidualizing"]["kind"], "Exact");

    let (code, _, err) = run(&["theorem", "no_such", "--ring", "corpus:d2", "--C", "builtin:canonical"]);
    assert_eq!(code, 1, "{err}");
    let (code, _, _) = run(&["invariants", "--ring", "corpus:nowhere", "--module", "builtin:canonical"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["invariants", "--ring", "corpus:d2"]);
    assert_eq!(code, 1);
}

#[test]
fn exhausted_budgets_exit_with_three() {
    let (code, _, err) = run(&["--rank-budget", "3", "resolve", "--ring", "corpus:fat", "--module", "builtin:residue_field"]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["theorem", "main_equiv", "--ring", "corpus:fat", "--C", "builtin:canonical", "--X", "builtin:residue_field"];
    let first = run(&args);
    assert_eq!(first.0, 0, "{}", first.2);
    assert_eq!(first, run(&args));
    let corpus = ["corpus", "run", "--ring", "d3", "--ring", "ci2"];
    let first = run(&corpus);
    assert_eq!(first.0, 0, "{}", first.2);
    assert_eq!(first, run(&corpus));
}

#[test]
fn corpus_list_and_export() {
    let (code, out, _) = run(&["corpus", "list"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), corpus::RINGS.len());

    let dir = scratch_dir("export");
    let (code, _, err) = run(&["corpus", "export", "--dir", dir.to_str().unwrap(), "--expanded"]);
    assert_eq!(code, 0, "{err}");
    for (name, _) in corpus::RINGS {
        let exported = Source::read(dir.join(format!("{name}.toml")).to_str().unwrap()).unwrap();
        assert_eq!(exported.text, corpus::ring_source(name).unwrap().text);
        let path = dir.join(format!("{name}.expanded.toml"));
        let AnyRing::Fp(b) = parse_ring(&Source::read(path.to_str().unwrap()).unwrap()).unwrap() else { panic!() };
        assert!(b.same(&fp_ring(name)), "{name}");
    }
    let ring = dir.join("prod.toml");
    let module = dir.join("prod_canonical_left.toml");
    let (code, out, err) =
        run(&["invariants", "--ring", ring.to_str().unwrap(), "--module", module.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(json(&out)["results"]["module"]["length"], 9);
}
