//! Acceptance criteria AC1–AC8, one line each. Runs without the libtest
//! harness so the lines always reach the output, and exits nonzero when any
//! criterion fails.

use std::time::{Duration, Instant};

use dcx_cli::corpus;
use dcx_cli::files::{parse_module, parse_ring, AnyRing};
use dcx_core::algebra::{Algebra, Vector};
use dcx_core::cplx::{hom_complex, tensor_complex, ChainMap, Complex};
use dcx_core::derived::{Certificate, Engine, Settings};
use dcx_core::exact::{Field, Fp, Mat};
use dcx_core::fgmod::FgModule;
use dcx_core::sdc::{auslander_membership, gc_dimension, is_semidualizing, is_shift_of_ring, GcValue};
use dcx_core::verdict::{
    check_anni, check_auslander_char, check_bass_criterion, check_type_equiv, Conclusion, Named, TheoremReport, Tri,
    Value,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const AC1_LIMIT: Duration = Duration::from_secs(5);
const AC2_LIMIT: Duration = Duration::from_secs(5);
const AC6_LIMIT: Duration = Duration::from_secs(30);
const AC7_LIMIT: Duration = Duration::from_secs(60);
const RANDOM_MODULES_PER_RING: usize = 50;
const SEED: u64 = 0xDC0DE;

type Outcome = Result<String, String>;

fn ring(name: &str) -> Algebra<Fp> {
    match parse_ring(&corpus::ring_source(name).unwrap()).unwrap() {
        AnyRing::Fp(a) => a,
        AnyRing::Q(_) => unreachable!("corpus rings live over F_p"),
    }
}

fn module(m: &FgModule<Fp>) -> Complex<Fp> {
    Complex::of_module(m, 0)
}

fn named(name: &str, m: &FgModule<Fp>) -> Named<Fp> {
    Named::new(name, module(m))
}

fn free(a: &Algebra<Fp>) -> Named<Fp> {
    named("R", &FgModule::free(a, 1))
}

fn canonical(a: &Algebra<Fp>) -> Named<Fp> {
    named("canonical", &FgModule::free(a, 1).k_dual())
}

fn residue(a: &Algebra<Fp>) -> Named<Fp> {
    named("k", &FgModule::residue_field(a))
}

/// R, the canonical module and any corpus extras confirmed semidualizing.
fn semidualizing(name: &str, e: &Engine<Fp>) -> Result<Vec<Named<Fp>>, String> {
    let a = e.algebra();
    let mut out = vec![free(a), canonical(a)];
    for (n, src) in corpus::module_sources(name) {
        let m = parse_module(&src, a).map_err(|err| err.to_string())?;
        let c = named(&n, &m);
        if is_semidualizing(e, &c.complex).map_err(|err| err.to_string())?.holds == Some(true) {
            out.push(c);
        } else {
            return Err(format!("{name}: {n} is not confirmed semidualizing"));
        }
    }
    Ok(out)
}

fn truth(r: &TheoremReport, key: &str) -> Option<Tri> {
    match r.values.get(key) {
        Some(Value::Truth(t)) => Some(t.clone()),
        _ => None,
    }
}

fn int(r: &TheoremReport, key: &str) -> Option<i64> {
    match r.values.get(key) {
        Some(Value::Int(n)) => Some(*n),
        _ => None,
    }
}

fn decided(r: &TheoremReport, key: &str) -> Option<bool> {
    truth(r, key).and_then(|t| t.strong())
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(start: Instant, limit: Duration, summary: String) -> Outcome {
    let took = start.elapsed();
    ensure(took <= limit, || format!("took {:.1}s, limit {}s", took.as_secs_f64(), limit.as_secs()))?;
    Ok(format!("{summary} in {:.1}s", took.as_secs_f64()))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Gorenstein rings: type 1, and the canonical module is dualizing by both
/// routes.
fn ac1() -> Outcome {
    let start = Instant::now();
    let names = ["d2", "d3", "d4", "ci2", "triv"];
    for name in names {
        let a = ring(name);
        let e = Engine::new(&a, Settings::default());
        let t = e.type_of(&free(&a).complex).map_err(err)?;
        ensure(t == 1, || format!("{name}: type R = {t}"))?;
        let c = canonical(&a);
        ensure(is_shift_of_ring(&c.complex), || format!("{name}: canonical is not isomorphic to R"))?;
        let anni = check_anni(&e, &c).map_err(err)?;
        let bass = check_bass_criterion(&e, &c).map_err(err)?;
        for (r, key) in [(&anni, "dualizing"), (&anni, "lhs"), (&bass, "equality"), (&bass, "dualizing")] {
            ensure(decided(r, key) == Some(true), || format!("{name}: {key} not exactly true"))?;
        }
        for r in [&anni, &bass] {
            ensure(r.conclusion == Conclusion::Consistent, || format!("{name}: {}", r.conclusion.label()))?;
        }
    }
    within(start, AC1_LIMIT, format!("{} rings classified Gorenstein", names.len()))
}

/// fat and fat3: type = embedding dimension, R not dualizing, canonical
/// dualizing, and the Bass equality only for the canonical module.
fn ac2() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (name, edim) in [("fat", 2i64), ("fat3", 3)] {
        let a = ring(name);
        let e = Engine::new(&a, Settings::default());
        let t = e.type_of(&free(&a).complex).map_err(err)? as i64;
        ensure(t == edim, || format!("{name}: type R = {t}, expected {edim}"))?;
        for (c, dualizing, beta) in [(free(&a), false, 1), (canonical(&a), true, edim)] {
            let anni = check_anni(&e, &c).map_err(err)?;
            let bass = check_bass_criterion(&e, &c).map_err(err)?;
            for (r, key) in [(&anni, "dualizing"), (&anni, "lhs"), (&bass, "dualizing"), (&bass, "equality")] {
                ensure(decided(r, key) == Some(dualizing), || format!("{name}/{}: {key} should be {dualizing}", c.name))?;
            }
            let (mu, b) = (int(&bass, "mu_R"), int(&bass, "beta_C"));
            ensure(mu == Some(edim) && b == Some(beta), || format!("{name}/{}: mu = {mu:?}, beta = {b:?}", c.name))?;
            seen.push(format!("{name}/{}: {edim} {} {beta}", c.name, if dualizing { "=" } else { "!=" }));
            for r in [&anni, &bass] {
                ensure(r.conclusion == Conclusion::Consistent, || format!("{name}/{}: {}", c.name, r.conclusion.label()))?;
            }
        }
    }
    within(start, AC2_LIMIT, seen.join(", "))
}

/// r(R) = β_{inf C}(C)·μ^{depth C}(C) for every semidualizing candidate.
fn ac3() -> Outcome {
    let mut checked = 0;
    for (name, _) in corpus::RINGS {
        let a = ring(name);
        let e = Engine::new(&a, Settings::default());
        for c in semidualizing(name, &e)? {
            let r = check_type_equiv(&e, &c, &[]).map_err(err)?;
            ensure(decided(&r, "eq_ring") == Some(true), || format!("{name}/{}: identity fails or undecided", c.name))?;
            ensure(!matches!(r.conclusion, Conclusion::Inconsistent(_)), || format!("{name}/{}: INCONSISTENT", c.name))?;
            checked += 1;
        }
    }
    Ok(format!("identity exact on {checked} (ring, C) pairs"))
}

/// G_C-dim X = depth R − depth X and inf RHom(X, C) = depth X − depth C.
fn ac4() -> Outcome {
    let mut checked = 0;
    for (name, _) in corpus::RINGS {
        let a = ring(name);
        let e = Engine::new(&a, Settings::default());
        let depth_r = e.depth(&free(&a).complex).map_err(err)?;
        for c in semidualizing(name, &e)? {
            let depth_c = e.depth(&c.complex).map_err(err)?;
            let mut xs = vec![free(&a).complex, c.complex.clone()];
            xs.extend((-3..=3).map(|n| c.complex.shift(n)));
            if decided_dualizing(&e, &c)? {
                xs.push(residue(&a).complex);
            }
            for x in xs {
                let depth_x = e.depth(&x).map_err(err)?;
                let g = gc_dimension(&e, &c.complex, &x).map_err(err)?;
                let label = || format!("{name}/{} on X with depth {depth_x}", c.name);
                ensure(g.value == GcValue::Finite(depth_r - depth_x), || format!("{}: {:?}", label(), g.value))?;
                ensure(!matches!(g.certificate, Certificate::UpToBound(_)), || format!("{}: {}", label(), g.certificate.label()))?;
                let inf = e.rhom(&x, &c.complex).map_err(err)?.inf();
                ensure(inf == Some(depth_x - depth_c), || format!("{}: inf RHom = {inf:?}", label()))?;
                checked += 1;
            }
        }
    }
    Ok(format!("formula exact on {checked} (ring, C, X) triples"))
}

fn decided_dualizing(e: &Engine<Fp>, c: &Named<Fp>) -> Result<bool, String> {
    Ok(decided(&check_anni(e, c).map_err(err)?, "dualizing") == Some(true))
}

/// Bass numbers of the canonical module, and Betti numbers of k over fat and d2.
fn ac5() -> Outcome {
    for (name, _) in corpus::RINGS {
        let a = ring(name);
        let e = Engine::new(&a, Settings::default());
        let w = e.window();
        let mu = e.bass_numbers(&canonical(&a).complex, 0..=w).map_err(err)?;
        for i in 0..=w {
            let want = usize::from(i == 0);
            ensure(mu.values.get(&i) == Some(&want), || format!("{name}: mu^{i}(canonical) = {:?}", mu.values.get(&i)))?;
        }
    }
    let a = ring("fat");
    let e = Engine::new(&a, Settings::default());
    let beta = e.betti_numbers(&residue(&a).complex, 0..=8).map_err(err)?;
    for i in 0..=8 {
        ensure(beta.values.get(&i) == Some(&(1usize << i)), || format!("fat: beta_{i}(k) = {:?}", beta.values.get(&i)))?;
    }
    let a = ring("d2");
    let e = Engine::new(&a, Settings::default());
    let w = e.window();
    let beta = e.betti_numbers(&residue(&a).complex, 0..=w).map_err(err)?;
    ensure((0..=w).all(|i| beta.values.get(&i) == Some(&1)), || format!("d2: beta(k) = {:?}", beta.values))?;
    // The values are computed directly; the tail beyond them is certified by
    // the syzygy recurrence Ω¹k ≅ k.
    let cert = e.invariants(&residue(&a).complex).map_err(err)?.betti_certificate;
    ensure(matches!(cert, Certificate::Periodic { period: 1, .. }), || format!("d2: certificate {}", cert.label()))?;
    Ok(format!(
        "mu(canonical) = (1, 0, ...) on {} rings; beta(k) = 2^i over fat; beta(k) = 1 over d2 with {}",
        corpus::RINGS.len(),
        cert.label()
    ))
}

/// The Auslander-class characterisation on prod.
fn ac6() -> Outcome {
    let start = Instant::now();
    let a = ring("prod");
    let e = Engine::new(&a, Settings::default());
    let (n, src) = corpus::module_sources("prod").into_iter().find(|(n, _)| n == "canonical_left").ok_or("missing canonical_left")?;
    let c = named(&n, &parse_module(&src, &a).map_err(err)?);
    let sd = is_semidualizing(&e, &c.complex).map_err(err)?;
    ensure(sd.holds == Some(true), || format!("{n} not confirmed semidualizing"))?;
    ensure(!is_shift_of_ring(&c.complex), || format!("{n} is a shift of R"))?;
    let k = residue(&a);
    let member = auslander_membership(&e, &c.complex, &k.complex).map_err(err)?;
    ensure(member.holds == Some(false) && member.certificate == Certificate::Exact && member.witness.is_some(), || {
        format!("k in A_C: {:?} [{}]", member.holds, member.certificate.label())
    })?;
    let pool = vec![free(&a), k, canonical(&a), c.clone()];
    let r = check_auslander_char(&e, &c, &pool).map_err(err)?;
    ensure(truth(&r, "iii").is_some_and(|t| t.value != Some(true)), || "a type-1 CM member of A_C was found".into())?;
    ensure(!matches!(r.conclusion, Conclusion::Inconsistent(_)), || r.conclusion.detail())?;
    let r = check_auslander_char(&e, &free(&a), &pool).map_err(err)?;
    for key in ["i", "ii", "iii"] {
        ensure(decided(&r, key) == Some(true), || format!("C = R: ({key}) not true"))?;
    }
    ensure(r.conclusion == Conclusion::Consistent, || format!("C = R: {}", r.conclusion.label()))?;
    within(start, AC6_LIMIT, format!("{n}: all three false with exact witness; C = R: all three true"))
}

/// The full corpus run through the command line.
fn ac7() -> Outcome {
    let start = Instant::now();
    let (code, out, stderr) = dcx_cli::run(["dcx", "corpus", "run"]);
    let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| format!("{e}: {stderr}"))?;
    let res = &v["results"];
    ensure(code == 0, || format!("exit code {code}"))?;
    ensure(res["inconsistent"] == 0, || format!("inconsistent cells: {}", res["inconsistent"]))?;
    ensure(res["weak_falsifications"] == 0, || {
        format!("weak falsifications: {}", res["weak_falsifications"])
    })?;
    within(start, AC7_LIMIT, format!("exit 0, counts {}", res["counts"]))
}

/// An element of m with small random coefficients.
fn element(a: &Algebra<Fp>, rng: &mut ChaCha8Rng) -> Vector<Fp> {
    let f = a.field();
    let mut v = a.zero_vec();
    for x in v.iter_mut() {
        *x = f.from_i64(rng.gen_range(-2..=2));
    }
    let r = a.residue(&v);
    f.axpy(&mut v, &f.neg(&r), a.unit());
    v
}

fn random_module(a: &Algebra<Fp>, rng: &mut ChaCha8Rng) -> FgModule<Fp> {
    let (g, r) = (rng.gen_range(1..=3), rng.gen_range(0..=3));
    let matrix: Vec<Vec<Vector<Fp>>> = (0..g).map(|_| (0..r).map(|_| element(a, rng)).collect()).collect();
    FgModule::from_presentation(a, g, &matrix).unwrap()
}

/// Structural suites on seeded random inputs.
fn ac8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut modules = 0;
    for (name, _) in corpus::RINGS {
        let a = ring(name);
        let e = Engine::new(&a, Settings::default());
        let short = Engine::new(&a, Settings { window: Some(3), ..Settings::default() });
        for trial in 0..RANDOM_MODULES_PER_RING {
            let m = random_module(&a, &mut rng);
            if m.is_zero() {
                continue;
            }
            modules += 1;
            let x = module(&m);
            let at = |what: &str| format!("{name} module {trial}: {what}");
            let mu0 = e.bass_numbers(&x, 0..=0).map_err(err)?.values[&0];
            let beta0 = e.betti_numbers(&x, 0..=0).map_err(err)?.values[&0];
            ensure(mu0 == m.socle_dim(), || at("mu^0 != socle dim"))?;
            ensure(beta0 == m.min_gens(), || at("beta_0 != min gens"))?;
            if trial % 10 != 0 {
                continue;
            }
            let n = rng.gen_range(-2..=2);
            let y = x.shift(n).direct_sum(&module(&FgModule::residue_field(&a)).shift(n + 1)).map_err(err)?;
            ensure(y.validate().is_ok(), || at("shift or sum breaks d^2 = 0"))?;
            for (_, v) in a.vars() {
                let comps = y.entries().iter().map(|(&i, m)| (i, m.act_matrix(v))).collect();
                let mult = ChainMap::new(&y, &y, comps).map_err(err)?;
                ensure(Complex::cone(&mult).validate().is_ok(), || at("cone breaks d^2 = 0"))?;
            }
            let fc = e.resolution(&x, 2).free(2);
            ensure(hom_complex(&fc, &y).validate().is_ok(), || at("Hom breaks d^2 = 0"))?;
            ensure(tensor_complex(&fc, &y).validate().is_ok(), || at("tensor breaks d^2 = 0"))?;
            let p = short.invariants(&x).map_err(err)?;
            let q = short.invariants(&x.shift(n)).map_err(err)?;
            ensure(
                (q.inf, q.sup, q.depth, q.kdim, q.type_) == (p.inf + n, p.sup + n, p.depth - n, p.kdim - n, p.type_),
                || at("invariants not shift equivariant"),
            )?;
            let z = module(&FgModule::free(&a, 1)).shift(n);
            let w = x.direct_sum(&Complex::cone(&ChainMap::identity(&z))).map_err(err)?;
            let r = short.invariants(&w).map_err(err)?;
            // The exact summand enlarges resolutions, so fewer Bass numbers may
            // fit the budget; compare where both are known.
            let same_bass = p.bass.iter().all(|(i, v)| r.bass.get(i).is_none_or(|u| u == v));
            ensure((p.inf, p.sup, p.depth, p.type_) == (r.inf, r.sup, r.depth, r.type_) && same_bass, || {
                at("invariants change under quasi-isomorphism")
            })?;
        }
    }
    let f = Fp::new(101).unwrap();
    for _ in 0..50 {
        let (rows, cols) = (rng.gen_range(1..8), rng.gen_range(1..8));
        let data: Vec<Vec<_>> = (0..cols).map(|_| (0..rows).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect()).collect();
        let m = Mat::from_cols(&f, rows, &data);
        ensure(m.rank() + m.kernel_vectors().len() == cols, || "rank + nullity != columns".into())?;
    }
    Ok(format!("{modules} random modules over {} rings, 50 random matrices", corpus::RINGS.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] =
        [("AC1", ac1), ("AC2", ac2), ("AC3", ac3), ("AC4", ac4), ("AC5", ac5), ("AC6", ac6), ("AC7", ac7), ("AC8", ac8)];
    let mut failed = 0;
    for (id, check) in criteria {
        match check() {
            Ok(s) => println!("{id} PASS  {s}"),
            Err(s) => {
                failed += 1;
                println!("{id} FAIL  {s}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
