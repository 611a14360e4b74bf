//! The shipped example structures.

use crate::ainfty::{gauge_transform, identity_strict_pair, skeletal_from_cocycle, AInfinityMorphism, AInfinityPair};
use crate::algebra::{adjoint_rep, dual_rep, truncated_tensor_pair, Algebra, AssDerPair, RepPair};
use crate::cochain::{assder_d, AssDerCochain, Cochain};
use crate::deformation::TruncatedDeformation;
use crate::extensions::ExtensionTriple;
use crate::linalg::Matrix;
use crate::scalar::q;

/// `ℚ` with `φ = 0`.
pub fn rationals() -> AssDerPair {
    let alg = Algebra::from_products(1, &[(0, 0, 0, q(1))])
        .and_then(|a| a.with_unit(vec![q(1)]))
        .and_then(|a| a.with_labels(vec!["1".into()]))
        .expect("fixed table");
    AssDerPair::plain(alg)
}

pub fn dual_numbers_algebra() -> Algebra {
    Algebra::from_products(2, &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1))])
        .and_then(|a| a.with_unit(vec![q(1), q(0)]))
        .and_then(|a| a.with_labels(vec!["1".into(), "x".into()]))
        .expect("fixed table")
}

/// `ℚ[x]/(x²)` with the given derivation.
pub fn dual_numbers(phi: Matrix) -> AssDerPair {
    AssDerPair::new(dual_numbers_algebra(), phi).expect("2x2 derivation")
}

/// `ℚ[x]/(x²)` with `φ = x d/dx`.
pub fn dual_numbers_euler() -> AssDerPair {
    dual_numbers(Matrix::from_ints(&[&[0, 0], &[0, 1]]))
}

/// `ℚ[x]/(x³)` on `1, x, x²` with `φ = x d/dx`.
pub fn cubic_euler() -> AssDerPair {
    let mut products = Vec::new();
    for i in 0..3 {
        for j in 0..3 - i {
            products.push((i, j, i + j, q(1)));
        }
    }
    let alg = Algebra::from_products(3, &products)
        .and_then(|a| a.with_unit(vec![q(1), q(0), q(0)]))
        .and_then(|a| a.with_labels(vec!["1".into(), "x".into(), "x^2".into()]))
        .expect("fixed table");
    AssDerPair::new(alg, Matrix::from_ints(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]])).expect("3x3 derivation")
}

/// 2×2 upper-triangular matrices on `e11, e12, e22` with `φ = [e11, -]`.
pub fn upper_triangular() -> AssDerPair {
    let alg = Algebra::from_products(3, &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 2, 1, q(1)), (2, 2, 2, q(1))])
        .and_then(|a| a.with_unit(vec![q(1), q(0), q(1)]))
        .and_then(|a| a.with_labels(vec!["e11".into(), "e12".into(), "e22".into()]))
        .expect("fixed table");
    AssDerPair::new(alg, Matrix::from_ints(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]])).expect("3x3 derivation")
}

/// Truncated tensor pair on one generator with `d = [1]`, words up to length 3.
pub fn truncated_tensor() -> AssDerPair {
    truncated_tensor_pair(1, &Matrix::from_ints(&[&[1]]), 3).expect("valid parameters")
}

/// The one-dimensional zero-product algebra with `φ = 0`.
pub fn zero_algebra() -> AssDerPair {
    AssDerPair::plain(Algebra::zero(1).expect("dimension 1"))
}

/// The five shipped algebras.
pub fn algebras() -> Vec<(&'static str, AssDerPair)> {
    vec![
        ("rationals", rationals()),
        ("dual_numbers", dual_numbers_euler()),
        ("cubic", cubic_euler()),
        ("upper_triangular", upper_triangular()),
        ("truncated_tensor", truncated_tensor()),
    ]
}

/// A one-dimensional trivial module with `φ_M = 1`.
pub fn trivial_rep(pair: &AssDerPair) -> RepPair {
    RepPair::trivial(pair.dim(), Matrix::identity(1)).expect("dimension 1")
}

/// Adjoint, trivial and coadjoint representations.
pub fn reps(pair: &AssDerPair) -> Vec<(&'static str, RepPair)> {
    let adj = adjoint_rep(pair);
    let coadj = dual_rep(&adj);
    vec![("adjoint", adj), ("trivial", trivial_rep(pair)), ("coadjoint", coadj)]
}

/// `ℚ[x]/(x³)` on `1, x, x²` as a plain extension of the dual numbers by `ℚx²`.
pub fn cubic_over_dual() -> ExtensionTriple {
    let total = Algebra::from_products(
        3,
        &[
            (0, 0, 0, q(1)),
            (0, 1, 1, q(1)),
            (1, 0, 1, q(1)),
            (0, 2, 2, q(1)),
            (2, 0, 2, q(1)),
            (1, 1, 2, q(1)),
        ],
    )
    .expect("fixed table");
    ExtensionTriple {
        total,
        total_derivation: None,
        inclusion: Matrix::from_ints(&[&[0], &[0], &[1]]),
        projection: Matrix::from_ints(&[&[1, 0, 0], &[0, 1, 0]]),
        section: Matrix::from_ints(&[&[1, 0], &[0, 1], &[0, 0]]),
    }
}

/// `μ_1(x, x) = 1` on the dual numbers.
pub fn dual_mu1() -> Cochain {
    let mut mu1 = Cochain::zero(2, 2, 2);
    mu1.set(0, &[1, 1], q(1));
    mu1
}

/// Order-1 deformation of the dual numbers with `φ = 0`, `μ_1(x, x) = 1`, `φ_1 = 0`.
pub fn dual_deformation() -> TruncatedDeformation {
    TruncatedDeformation::first_order(dual_numbers(Matrix::zeros(2, 2)), dual_mu1(), Cochain::zero(1, 2, 2))
        .expect("shapes agree")
}

/// The same `μ_1` over the Euler derivation; not a deformation.
pub fn dual_deformation_euler() -> TruncatedDeformation {
    TruncatedDeformation::first_order(dual_numbers_euler(), dual_mu1(), Cochain::zero(1, 2, 2)).expect("shapes agree")
}

/// The strict pair `id: A → A` on the Euler dual numbers.
pub fn strict_dual() -> AInfinityPair {
    identity_strict_pair(&dual_numbers_euler()).expect("valid pair")
}

/// A gauge transform of [`strict_dual`] with nonzero `μ_3` and `θ_2`, and the morphism onto it.
pub fn gauged_dual() -> (AInfinityPair, AInfinityMorphism) {
    let mut f2 = Cochain::zero(2, 2, 2);
    f2.set(1, &[1, 1], q(1));
    f2.set(0, &[0, 1], q(-2));
    gauge_transform(&strict_dual(), &f2, &Matrix::from_ints(&[&[1, 0], &[2, -1]])).expect("shapes agree")
}

/// The skeletal structure of the adjoint 3-cocycle `∂f` with `f(x, x) = x` on the Euler dual numbers.
pub fn skeletal_dual() -> AInfinityPair {
    let pair = dual_numbers_euler();
    let rep = adjoint_rep(&pair);
    let mut f = AssDerCochain::zero(2, 2, 2);
    f.top.set(1, &[1, 1], q(1));
    let c = assder_d(&pair, &rep, &f).expect("shapes agree");
    skeletal_from_cocycle(&pair, &rep, &c).expect("coboundaries are cocycles")
}

/// Skeletal structure of a nonzero class: the zero algebra with `μ_3 = 1` and `θ_2 = 0`.
pub fn skeletal_zero() -> AInfinityPair {
    let pair = zero_algebra();
    let rep = adjoint_rep(&pair);
    let mut c = AssDerCochain::zero(3, 1, 1);
    c.top.set(0, &[0, 0, 0], q(1));
    skeletal_from_cocycle(&pair, &rep, &c).expect("all cochains are cocycles")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_representation;

    #[test]
    fn all_fixtures_validate() {
        for (name, pair) in algebras() {
            assert!(pair.validate().is_valid(), "{name}");
            for (rname, rep) in reps(&pair) {
                assert!(validate_representation(&pair, &rep).is_valid(), "{name} {rname}");
            }
        }
        assert!(zero_algebra().validate().is_valid());
        for x in [strict_dual(), gauged_dual().0, skeletal_dual(), skeletal_zero()] {
            assert!(x.validate().is_valid());
        }
        assert!(crate::deformation::verify_deformation(&dual_deformation()).is_valid());
        assert!(!crate::deformation::verify_deformation(&dual_deformation_euler()).is_valid());
    }
}
