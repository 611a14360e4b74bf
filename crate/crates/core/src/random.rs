//! Seeded generators of small exact data for property tests and fuzzing.

use rand::Rng;

use crate::ainfty::{
    compose_morphisms, functor_t, gauge_transform, transport_linear, AInfinityMorphism, AInfinityPair,
    Associative2Presentation,
};
use crate::cochain::{AssDerCochain, Cochain};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Mostly small integers, occasionally a small fraction, zero with probability `1 - density`.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R, density: f64) -> Scalar {
    if !rng.gen_bool(density.clamp(0.0, 1.0)) {
        return Scalar::zero();
    }
    let n = rng.gen_range(-3i64..=3);
    if rng.gen_bool(0.2) {
        Scalar::ratio(n, rng.gen_range(1i64..=3))
    } else {
        Scalar::from_int(n)
    }
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, density: f64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| scalar(rng, density))
}

pub fn cochain<R: Rng + ?Sized>(rng: &mut R, degree: usize, adim: usize, mdim: usize, density: f64) -> Cochain {
    let len = mdim * crate::cochain::pow(adim, degree);
    let coeffs = (0..len).map(|_| scalar(rng, density)).collect();
    Cochain::from_coeffs(degree, adim, mdim, coeffs).expect("length matches")
}

pub fn assder_cochain<R: Rng + ?Sized>(
    rng: &mut R,
    degree: usize,
    adim: usize,
    mdim: usize,
    density: f64,
) -> AssDerCochain {
    let top = cochain(rng, degree, adim, mdim, density);
    let tail = (degree >= 2).then(|| cochain(rng, degree - 1, adim, mdim, density));
    AssDerCochain::new(top, tail).expect("shapes match")
}

/// Unit lower times unit upper triangular, so always invertible.
pub fn invertible<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Matrix {
    let l = Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Equal => Scalar::one(),
        std::cmp::Ordering::Greater => scalar(rng, density),
        std::cmp::Ordering::Less => Scalar::zero(),
    });
    let u = Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Equal => Scalar::one(),
        std::cmp::Ordering::Less => scalar(rng, density),
        std::cmp::Ordering::Greater => Scalar::zero(),
    });
    l.mul(&u)
}

/// A pair isomorphic to `base` by a random linear change of basis followed by
/// a random gauge `(id, id, f_2, B)`, with the morphism `base -> result`.
pub fn ainfty_pair<R: Rng + ?Sized>(
    rng: &mut R,
    base: &AInfinityPair,
    density: f64,
) -> Result<(AInfinityPair, AInfinityMorphism)> {
    let (a0, a1) = (base.algebra.a0(), base.algebra.a1());
    let p0 = invertible(rng, a0, density);
    let p1 = invertible(rng, a1, density);
    let (moved, m1) = transport_linear(base, &p0, &p1)?;
    let f2 = cochain(rng, 2, a0, a1, density);
    let b = matrix(rng, a1, a0, density);
    let (gauged, m2) = gauge_transform(&moved, &f2, &b)?;
    Ok((gauged, compose_morphisms(&m2, &m1)?))
}

/// `T(x)` presented in random bases of objects and arrows.
pub fn presentation<R: Rng + ?Sized>(rng: &mut R, x: &AInfinityPair, density: f64) -> Result<Associative2Presentation> {
    let p = functor_t(x)?;
    let q = invertible(rng, p.c0(), density);
    let a = invertible(rng, p.c1(), density);
    p.transport(&q, &a)
}
