#![allow(dead_code)]

use dcx_core::algebra::{Algebra, Vector};
use dcx_core::cplx::{ChainMap, Complex};
use dcx_core::exact::{Field, Fp};
use dcx_core::fgmod::FgModule;

pub fn fp() -> Fp {
    Fp::new(101).unwrap()
}

pub fn ring(vars: &[&str], rels: &[&str]) -> Algebra<Fp> {
    Algebra::monomial_quotient(&fp(), vars, rels).unwrap()
}

/// The small corpus rings used by the property suites.
pub fn rings() -> Vec<(&'static str, Algebra<Fp>)> {
    vec![
        ("d2", ring(&["x"], &["x^2"])),
        ("d3", ring(&["x"], &["x^3"])),
        ("ci2", ring(&["x", "y"], &["x^2", "y^2"])),
        ("fat", ring(&["x", "y"], &["x^2", "x*y", "y^2"])),
        ("fat3", ring(&["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z", "y*z"])),
    ]
}

pub fn module(m: &FgModule<Fp>) -> Complex<Fp> {
    Complex::of_module(m, 0)
}

pub fn free(a: &Algebra<Fp>) -> Complex<Fp> {
    module(&FgModule::free(a, 1))
}

pub fn canonical(a: &Algebra<Fp>) -> Complex<Fp> {
    module(&FgModule::free(a, 1).k_dual())
}

pub fn residue(a: &Algebra<Fp>) -> Complex<Fp> {
    module(&FgModule::residue_field(a))
}

/// A ring element from a seed word: coefficients in 0..3 on the basis of m
/// plus, when `unit` is set, a unit part.
pub fn element(a: &Algebra<Fp>, seed: u64, unit: bool) -> Vector<Fp> {
    let f = a.field();
    let mut v = a.zero_vec();
    let mut s = seed;
    for i in 0..a.dim() {
        let c = (s % 3) as i64;
        s /= 3;
        v[i] = f.from_i64(c);
    }
    // Project onto m, then optionally add 1.
    let r = a.residue(&v);
    let mut one = a.unit().clone();
    f.scale(&mut one, &f.neg(&r));
    f.axpy(&mut v, &f.one(), &one);
    if unit {
        f.axpy(&mut v, &f.one(), a.unit());
    }
    v
}

/// Cokernel of a random g×r presentation with entries in m.
pub fn random_module(a: &Algebra<Fp>, gens: usize, rels: usize, seeds: &[u64]) -> FgModule<Fp> {
    let mut it = seeds.iter().cycle().enumerate();
    let matrix: Vec<Vec<Vector<Fp>>> = (0..gens)
        .map(|_| {
            (0..rels)
                .map(|_| {
                    let (i, s) = it.next().unwrap();
                    element(a, s.wrapping_mul(2654435761).wrapping_add(i as u64), false)
                })
                .collect()
        })
        .collect();
    FgModule::from_presentation(a, gens, &matrix).unwrap()
}

/// Multiplication by a ring element as a chain endomorphism.
pub fn multiplication(x: &Complex<Fp>, r: &[u32]) -> ChainMap<Fp> {
    let comps = x.entries().iter().map(|(&i, m)| (i, m.act_matrix(r))).collect();
    ChainMap::new(x, x, comps).unwrap()
}
