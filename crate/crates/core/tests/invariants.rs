mod common;

use common::*;
use dcx_core::cplx::{hom_complex, tensor_complex, ChainMap, Complex};
use dcx_core::derived::{Engine, Settings};
use dcx_core::exact::Fp;
use dcx_core::fgmod::FgModule;
use proptest::prelude::*;

fn ring_index() -> impl Strategy<Value = usize> {
    0usize..5
}

fn seeds() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(any::<u64>(), 1..8)
}

/// A short window keeps exponential Betti growth out of the suite.
fn engine(a: &dcx_core::algebra::Algebra<Fp>) -> Engine<Fp> {
    Engine::new(a, Settings { window: Some(3), ..Settings::default() })
}

fn pick(i: usize) -> (&'static str, dcx_core::algebra::Algebra<Fp>) {
    rings().swap_remove(i)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn operations_preserve_square_zero(i in ring_index(), g in 1usize..3, r in 0usize..3, s in seeds(), n in -2i64..3) {
        let (_, a) = pick(i);
        let m = random_module(&a, g, r, &s);
        let x = module(&m).shift(n);
        prop_assert!(x.validate().is_ok());
        let y = x.direct_sum(&residue(&a).shift(n + 1)).unwrap();
        prop_assert!(y.validate().is_ok());
        for (_, v) in a.vars() {
            prop_assert!(Complex::cone(&multiplication(&y, v)).validate().is_ok());
        }
        let e = Engine::new(&a, Settings::default());
        let fc = e.resolution(&module(&m), 3).free(3);
        prop_assert!(hom_complex(&fc, &y).validate().is_ok());
        prop_assert!(tensor_complex(&fc, &y).validate().is_ok());
    }

    #[test]
    fn socle_and_generators_two_routes(i in ring_index(), g in 1usize..4, r in 0usize..4, s in seeds()) {
        let (_, a) = pick(i);
        let m = random_module(&a, g, r, &s);
        prop_assume!(!m.is_zero());
        let e = Engine::new(&a, Settings::default());
        let x = module(&m);
        prop_assert_eq!(e.bass_numbers(&x, 0..=0).unwrap().values[&0], m.socle_dim());
        prop_assert_eq!(e.betti_numbers(&x, 0..=0).unwrap().values[&0], m.min_gens());
    }

    #[test]
    fn shift_equivariance(i in 0usize..4, g in 1usize..3, r in 0usize..3, s in seeds(), n in -3i64..4) {
        let (_, a) = pick(i);
        let m = random_module(&a, g, r, &s);
        prop_assume!(!m.is_zero());
        let e = engine(&a);
        let x = module(&m);
        let p = e.invariants(&x).unwrap();
        let q = e.invariants(&x.shift(n)).unwrap();
        prop_assert_eq!(q.inf, p.inf + n);
        prop_assert_eq!(q.sup, p.sup + n);
        prop_assert_eq!(q.amp, p.amp);
        prop_assert_eq!(q.depth, p.depth - n);
        prop_assert_eq!(q.kdim, p.kdim - n);
        prop_assert_eq!(q.type_, p.type_);
        prop_assert_eq!(q.cm, p.cm);
        for (j, mu) in &p.bass {
            if let Some(v) = q.bass.get(&(j - n)) {
                prop_assert_eq!(v, mu);
            }
        }
        prop_assert!(q.depth <= q.kdim);
    }

    #[test]
    fn quasi_isomorphic_complexes_share_invariants(i in 0usize..4, g in 1usize..3, r in 0usize..3, s in seeds(), n in -1i64..2) {
        let (_, a) = pick(i);
        let m = random_module(&a, g, r, &s);
        prop_assume!(!m.is_zero());
        let e = engine(&a);
        let x = module(&m);
        // Adding the cone of an identity adds an exact summand.
        let z = module(&FgModule::free(&a, 1)).shift(n);
        let y = x.direct_sum(&Complex::cone(&ChainMap::identity(&z))).unwrap();
        prop_assert!(ChainMap::identity(&z).is_quasi_iso());
        let p = e.invariants(&x).unwrap();
        let q = e.invariants(&y).unwrap();
        prop_assert_eq!((p.inf, p.sup, p.depth, p.kdim, p.type_), (q.inf, q.sup, q.depth, q.kdim, q.type_));
        prop_assert_eq!(&p.bass, &q.bass);
        prop_assert_eq!(&p.betti, &q.betti);
    }
}

#[test]
fn depth_is_minus_sup_at_dimension_zero() {
    for (name, a) in rings() {
        let e = engine(&a);
        for x in [free(&a), canonical(&a), residue(&a), free(&a).direct_sum(&residue(&a).shift(2)).unwrap()] {
            let inv = e.invariants(&x).unwrap();
            assert_eq!(inv.depth, -inv.sup, "{name}");
            assert_eq!(inv.kdim, -inv.inf, "{name}");
            assert_eq!(inv.cm, inv.amp == 0, "{name}");
        }
    }
}
