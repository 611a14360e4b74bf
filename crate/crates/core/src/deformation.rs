//! Truncated formal deformations over `K[t]/(t^{n+1})` and their formal
//! automorphisms.

use crate::algebra::{adjoint_rep, AssDerPair};
use crate::cochain::{assder_d, decode, gerstenhaber_bracket, AssDerCochain, Cochain};
use crate::complex::{cohomology_space, is_coboundary, Limits};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::ValidationReport;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
    base: AssDerPair,
    mus: Vec<Cochain>,
    phis: Vec<Cochain>,
}

fn basis(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

fn bilinear(mu: &Cochain, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    mu.eval(&[u.to_vec(), v.to_vec()])
}

fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b;
    }
}

fn sub_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a -= b;
    }
}

impl TruncatedDeformation {
    /// `mus[0]` and `phis[0]` must be the base product and derivation.
    pub fn new(base: AssDerPair, mus: Vec<Cochain>, phis: Vec<Cochain>) -> Result<Self> {
        if mus.is_empty() || mus.len() != phis.len() {
            return Err(Error::Shape("need μ_0..μ_n and φ_0..φ_n of equal length".into()));
        }
        let n = base.dim();
        for (k, (m, p)) in mus.iter().zip(&phis).enumerate() {
            if m.degree() != 2 || m.adim() != n || m.mdim() != n {
                return Err(Error::Shape(format!("μ_{k} is not an adjoint degree-2 cochain")));
            }
            if p.degree() != 1 || p.adim() != n || p.mdim() != n {
                return Err(Error::Shape(format!("φ_{k} is not an adjoint degree-1 cochain")));
            }
        }
        if mus[0] != Cochain::from_algebra(&base.algebra) {
            return Err(Error::Input("μ_0 differs from the base product".into()));
        }
        if phis[0] != Cochain::from_matrix(&base.derivation) {
            return Err(Error::Input("φ_0 differs from the base derivation".into()));
        }
        Ok(TruncatedDeformation { base, mus, phis })
    }

    /// The base pair with `μ_i = φ_i = 0` for `1 ≤ i ≤ order`.
    pub fn trivial(base: AssDerPair, order: usize) -> Self {
        let n = base.dim();
        let mut mus = vec![Cochain::from_algebra(&base.algebra)];
        let mut phis = vec![Cochain::from_matrix(&base.derivation)];
        for _ in 0..order {
            mus.push(Cochain::zero(2, n, n));
            phis.push(Cochain::zero(1, n, n));
        }
        TruncatedDeformation { base, mus, phis }
    }

    /// The base pair plus `t (μ_1, φ_1)`.
    pub fn first_order(base: AssDerPair, mu1: Cochain, phi1: Cochain) -> Result<Self> {
        let mus = vec![Cochain::from_algebra(&base.algebra), mu1];
        let phis = vec![Cochain::from_matrix(&base.derivation), phi1];
        Self::new(base, mus, phis)
    }

    pub fn base(&self) -> &AssDerPair {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.mus.len() - 1
    }

    pub fn mus(&self) -> &[Cochain] {
        &self.mus
    }

    pub fn phis(&self) -> &[Cochain] {
        &self.phis
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// All terms of positive order vanish.
    pub fn is_trivial(&self) -> bool {
        self.mus[1..].iter().all(Cochain::is_zero) && self.phis[1..].iter().all(Cochain::is_zero)
    }

    /// Drop the terms above `order`.
    pub fn truncate(&self, order: usize) -> TruncatedDeformation {
        let k = order.min(self.order()) + 1;
        TruncatedDeformation {
            base: self.base.clone(),
            mus: self.mus[..k].to_vec(),
            phis: self.phis[..k].to_vec(),
        }
    }

    fn push(&mut self, mu: Cochain, phi: Cochain) {
        self.mus.push(mu);
        self.phis.push(phi);
    }
}

/// Residuals of the order-k associativity equations (`assoc`, indices
/// `[k, a, b, c]`) and derivation equations (`derivation`, indices `[k, a, b]`,
/// residual `Σ μ_i(φ_j a, b) + μ_i(a, φ_j b) − φ_i μ_j(a, b)`).
pub fn verify_deformation(d: &TruncatedDeformation) -> ValidationReport {
    verify_orders(d, 0..=d.order())
}

fn verify_orders(d: &TruncatedDeformation, orders: std::ops::RangeInclusive<usize>) -> ValidationReport {
    let n = d.dim();
    let mut report = ValidationReport::new();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| basis(n, i)).collect();
    for k in orders {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut r = vec![Scalar::zero(); n];
                    for i in 0..=k {
                        let j = k - i;
                        let left = bilinear(&d.mus[i], &d.mus[j].value(&[a, b]), &e[c]);
                        let right = bilinear(&d.mus[i], &e[a], &d.mus[j].value(&[b, c]));
                        add_into(&mut r, &left);
                        sub_into(&mut r, &right);
                    }
                    report.check("assoc", &[k, a, b, c], r);
                }
                let mut r = vec![Scalar::zero(); n];
                for i in 0..=k {
                    let j = k - i;
                    add_into(&mut r, &bilinear(&d.mus[i], &d.phis[j].value(&[a]), &e[b]));
                    add_into(&mut r, &bilinear(&d.mus[i], &e[a], &d.phis[j].value(&[b])));
                    sub_into(&mut r, &d.phis[i].eval(&[d.mus[j].value(&[a, b])]));
                }
                report.check("derivation", &[k, a, b], r);
            }
        }
    }
    report
}

fn require_verified(d: &TruncatedDeformation) -> Result<()> {
    let report = verify_deformation(d);
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::invalid("deformation", report))
    }
}

/// `(μ_1, φ_1)`, certified as a 2-cocycle.
pub fn infinitesimal(d: &TruncatedDeformation) -> Result<AssDerCochain> {
    if d.order() < 1 {
        return Err(Error::Input("an order-0 deformation has no linear term".into()));
    }
    let report = verify_orders(d, 0..=1);
    if !report.is_valid() {
        return Err(Error::invalid("deformation through order 1", report));
    }
    let c = AssDerCochain::new(d.mus[1].clone(), Some(d.phis[1].clone()))?;
    let rep = adjoint_rep(&d.base);
    if !assder_d(&d.base, &rep, &c)?.is_zero() {
        return Err(Error::NotCocycle("infinitesimal".into()));
    }
    Ok(c)
}

/// `Φ_t = Σ t^i Φ_i` with `Φ_0 = id`, truncated at order n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalAutomorphism {
    terms: Vec<Matrix>,
}

impl FormalAutomorphism {
    pub fn new(terms: Vec<Matrix>) -> Result<Self> {
        let Some(first) = terms.first() else {
            return Err(Error::Shape("need at least Φ_0".into()));
        };
        let dim = first.rows();
        if terms.iter().any(|t| t.shape() != (dim, dim)) {
            return Err(Error::Shape(
                "formal automorphism terms must be square of one size".into(),
            ));
        }
        if *first != Matrix::identity(dim) {
            return Err(Error::Input("Φ_0 must be the identity".into()));
        }
        Ok(FormalAutomorphism { terms })
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        let mut terms = vec![Matrix::identity(dim)];
        terms.extend((0..order).map(|_| Matrix::zeros(dim, dim)));
        FormalAutomorphism { terms }
    }

    /// `id + h t^k`.
    pub fn elementary(h: &Matrix, k: usize, order: usize) -> Result<Self> {
        if k == 0 || k > order {
            return Err(Error::Input(format!(
                "elementary automorphism order {k} outside 1..={order}"
            )));
        }
        let mut phi = Self::identity(h.rows(), order);
        if h.shape() != (h.rows(), h.rows()) {
            return Err(Error::Shape("elementary term must be square".into()));
        }
        phi.terms[k] = h.clone();
        Ok(phi)
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.terms[0].rows()
    }

    pub fn terms(&self) -> &[Matrix] {
        &self.terms
    }

    pub fn is_identity(&self) -> bool {
        self.terms[1..].iter().all(Matrix::is_zero)
    }

    /// `self ∘ other` mod `t^{n+1}`.
    pub fn compose(&self, other: &FormalAutomorphism) -> Result<FormalAutomorphism> {
        if self.order() != other.order() || self.dim() != other.dim() {
            return Err(Error::Shape(
                "formal automorphisms of different order or dimension".into(),
            ));
        }
        Ok(FormalAutomorphism {
            terms: convolve(&self.terms, &other.terms),
        })
    }

    /// The truncated inverse, computed term by term.
    pub fn inverse(&self) -> FormalAutomorphism {
        let dim = self.dim();
        let mut inv: Vec<Matrix> = vec![Matrix::identity(dim)];
        for k in 1..=self.order() {
            let mut acc = Matrix::zeros(dim, dim);
            for j in 1..=k {
                acc = acc.sub(&self.terms[j].mul(&inv[k - j]));
            }
            inv.push(acc);
        }
        FormalAutomorphism { terms: inv }
    }
}

fn convolve(a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
    let dim = a[0].rows();
    (0..a.len())
        .map(|k| (0..=k).fold(Matrix::zeros(dim, dim), |acc, i| acc.add(&a[i].mul(&b[k - i]))))
        .collect()
}

/// `μ' = Φ ∘ μ ∘ (Φ^{-1} ⊗ Φ^{-1})`, `φ' = Φ ∘ φ ∘ Φ^{-1}`, truncated.
pub fn apply_equivalence(d: &TruncatedDeformation, phi: &FormalAutomorphism) -> Result<TruncatedDeformation> {
    if phi.order() != d.order() || phi.dim() != d.dim() {
        return Err(Error::Shape(
            "automorphism and deformation disagree in order or dimension".into(),
        ));
    }
    let n = d.dim();
    let order = d.order();
    let inv = phi.inverse();
    let inv_cols: Vec<Vec<Vec<Scalar>>> = inv
        .terms
        .iter()
        .map(|m| (0..n).map(|x| m.column(x)).collect())
        .collect();
    // q[s] = Σ_{b+c+e=s} μ_b(Inv_c ·, Inv_e ·) as value tables
    let mut q: Vec<Vec<Vec<Scalar>>> = vec![vec![vec![Scalar::zero(); n]; n * n]; order + 1];
    for b in 0..=order {
        for c in 0..=order - b {
            for e in 0..=order - b - c {
                let s = b + c + e;
                for x in 0..n {
                    for y in 0..n {
                        let v = bilinear(&d.mus[b], &inv_cols[c][x], &inv_cols[e][y]);
                        add_into(&mut q[s][x * n + y], &v);
                    }
                }
            }
        }
    }
    let mut mus = Vec::with_capacity(order + 1);
    let mut phis = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mu = Cochain::from_values(2, n, n, |j| {
            let idx = j[0] * n + j[1];
            let mut acc = vec![Scalar::zero(); n];
            for a in 0..=k {
                add_into(&mut acc, &phi.terms[a].apply(&q[k - a][idx]));
            }
            acc
        });
        mus.push(mu);
        let mut m = Matrix::zeros(n, n);
        for a in 0..=k {
            for b in 0..=k - a {
                let c = k - a - b;
                m = m.add(&phi.terms[a].mul(&d.phis[b].to_matrix()?).mul(&inv.terms[c]));
            }
        }
        phis.push(Cochain::from_matrix(&m));
    }
    Ok(TruncatedDeformation {
        base: d.base.clone(),
        mus,
        phis,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrivializeOutcome {
    /// `apply_equivalence(d, Φ)` is the trivial deformation.
    Trivialized(FormalAutomorphism),
    /// The lowest surviving term is a 2-cocycle with nonzero class.
    Obstructed {
        order: usize,
        class: AssDerCochain,
        /// Coordinates in the `H^2` basis produced by the cohomology module.
        coordinates: Vec<Scalar>,
    },
}

/// Kill the lowest nonzero term with `id + h t^k` until nothing survives.
pub fn trivialize(d: &TruncatedDeformation, limits: &Limits) -> Result<TrivializeOutcome> {
    require_verified(d)?;
    let rep = adjoint_rep(&d.base);
    let order = d.order();
    let mut total = FormalAutomorphism::identity(d.dim(), order);
    let mut current = d.clone();
    for k in 1..=order {
        if current.mus[k].is_zero() && current.phis[k].is_zero() {
            continue;
        }
        let c = AssDerCochain::new(current.mus[k].clone(), Some(current.phis[k].clone()))?;
        match is_coboundary(&d.base, &rep, &c, limits)? {
            Some(h) => {
                let step = FormalAutomorphism::elementary(&h.top.to_matrix()?, k, order)?;
                current = apply_equivalence(&current, &step)?;
                debug_assert!(current.mus[k].is_zero() && current.phis[k].is_zero());
                total = step.compose(&total)?;
            }
            None => {
                let space = cohomology_space(&d.base, &rep, 2, limits)?;
                let coordinates = space
                    .coordinates(&c.flatten())
                    .ok_or_else(|| Error::NotCocycle("lowest surviving term".into()))?;
                return Ok(TrivializeOutcome::Obstructed {
                    order: k,
                    class: c,
                    coordinates,
                });
            }
        }
    }
    Ok(TrivializeOutcome::Trivialized(total))
}

fn circle_sum(d: &TruncatedDeformation, m: usize) -> Result<Cochain> {
    let n = d.dim();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| basis(n, i)).collect();
    let mut ob = Cochain::zero(3, n, n);
    for i in 1..m {
        let j = m - i;
        for t in 0..ob.tuple_count() {
            let abc = decode(t, 3, n);
            let mut r = bilinear(&d.mus[i], &d.mus[j].value(&abc[..2]), &e[abc[2]]);
            sub_into(&mut r, &bilinear(&d.mus[i], &e[abc[0]], &d.mus[j].value(&abc[1..])));
            for (p, x) in r.into_iter().enumerate() {
                let cur = ob.coeff(p, &abc).clone();
                ob.set(p, &abc, cur + x);
            }
        }
    }
    Ok(ob)
}

/// `(Ob³, Ob²)` at order `n + 1`, certified as a 3-cocycle and cross-checked
/// against the bracket form `½ Σ [μ_i, μ_j]`.
pub fn deformation_obstruction(d: &TruncatedDeformation) -> Result<AssDerCochain> {
    require_verified(d)?;
    let n = d.dim();
    let m = d.order() + 1;
    let ob3 = circle_sum(d, m)?;
    let mut ob2 = Cochain::zero(2, n, n);
    let mut half_bracket = Cochain::zero(3, n, n);
    for i in 1..m {
        let j = m - i;
        ob2 = ob2.add(&gerstenhaber_bracket(&d.phis[i], &d.mus[j])?)?;
        half_bracket = half_bracket.add(&gerstenhaber_bracket(&d.mus[i], &d.mus[j])?)?;
    }
    let half_bracket = half_bracket.scale(&Scalar::ratio(1, 2));
    if half_bracket != ob3 {
        return Err(Error::Input("bracket form of Ob³ disagrees with the direct sum".into()));
    }
    let ob = AssDerCochain::new(ob3, Some(ob2))?;
    let rep = adjoint_rep(&d.base);
    if !assder_d(&d.base, &rep, &ob)?.is_zero() {
        return Err(Error::NotCocycle("deformation obstruction".into()));
    }
    Ok(ob)
}

/// Append `(μ_{n+1}, φ_{n+1})` with `∂(μ_{n+1}, φ_{n+1}) = (Ob³, Ob²)`, when
/// the obstruction class vanishes.
pub fn extend_deformation(d: &TruncatedDeformation, limits: &Limits) -> Result<Option<TruncatedDeformation>> {
    let ob = deformation_obstruction(d)?;
    let rep = adjoint_rep(&d.base);
    let Some(next) = is_coboundary(&d.base, &rep, &ob, limits)? else {
        return Ok(None);
    };
    let mut out = d.clone();
    out.push(next.top, next.tail.expect("degree 2 has a tail"));
    let report = verify_deformation(&out);
    if !report.is_valid() {
        return Err(Error::invalid("extended deformation", report));
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::scalar::q;

    fn dual(phi: Matrix) -> AssDerPair {
        let alg = Algebra::from_products(2, &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1))])
            .unwrap()
            .with_unit(vec![q(1), q(0)])
            .unwrap();
        AssDerPair::new(alg, phi).unwrap()
    }

    fn mu1() -> Cochain {
        let mut m = Cochain::zero(2, 2, 2);
        m.set(0, &[1, 1], q(1));
        m
    }

    #[test]
    fn dual_numbers_order_one() {
        let d = TruncatedDeformation::first_order(dual(Matrix::zeros(2, 2)), mu1(), Cochain::zero(1, 2, 2)).unwrap();
        assert!(verify_deformation(&d).is_valid());
        let inf = infinitesimal(&d).unwrap();
        assert_eq!(inf.top, mu1());
        assert!(deformation_obstruction(&d).unwrap().is_zero());
        let e = extend_deformation(&d, &Limits::default()).unwrap().unwrap();
        assert_eq!(e.order(), 2);
        assert!(e.mus()[2].is_zero() && e.phis()[2].is_zero());
        match trivialize(&d, &Limits::default()).unwrap() {
            TrivializeOutcome::Obstructed { order, coordinates, .. } => {
                assert_eq!(order, 1);
                assert!(coordinates.iter().any(|c| !c.is_zero()));
            }
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn euler_variant_has_constant_residual() {
        let base = dual(Matrix::from_ints(&[&[0, 0], &[0, 1]]));
        for phi1 in [Matrix::zeros(2, 2), Matrix::from_ints(&[&[3, -1], &[2, 5]])] {
            let d = TruncatedDeformation::first_order(base.clone(), mu1(), Cochain::from_matrix(&phi1)).unwrap();
            let report = verify_deformation(&d);
            let v = report.find("derivation", &[1, 1, 1]).expect("residual at (x, x)");
            assert_eq!(v.residual[0], q(2));
        }
    }

    #[test]
    fn automorphism_inverse_and_action() {
        let base = dual(Matrix::zeros(2, 2));
        let d = TruncatedDeformation::first_order(base, mu1(), Cochain::zero(1, 2, 2)).unwrap();
        let phi = FormalAutomorphism::new(vec![Matrix::identity(2), Matrix::from_ints(&[&[0, 1], &[0, 2]])]).unwrap();
        assert!(phi.compose(&phi.inverse()).unwrap().is_identity());
        let moved = apply_equivalence(&d, &phi).unwrap();
        assert!(verify_deformation(&moved).is_valid());
        assert_eq!(apply_equivalence(&moved, &phi.inverse()).unwrap(), d);
    }
}
