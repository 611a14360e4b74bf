//! Abelian and central extensions, the derivation-lifting obstruction, and
//! the induced action on second Hochschild cohomology.
//!
//! An extension `0 -> M -> E -> A -> 0` is stored with explicit inclusion,
//! projection and section matrices, so cocycles can be read off relative to
//! any section. Constructed extensions use `E = A ⊕ M` with the canonical
//! section `a -> (a, 0)`.

use crate::algebra::{validate_representation, Algebra, AssDerPair, Bimodule, RepPair};
use crate::cochain::{assder_d, delta_op, hochschild_differential, AssDerCochain, Cochain};
use crate::complex::{cohomology, hochschild_preimage, hochschild_space, is_coboundary, CohomologyReport, Limits};
use crate::error::{ensure_valid, Error, Result};
use crate::linalg::Matrix;
use crate::report::ValidationReport;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionTriple {
    pub total: Algebra,
    /// Absent for an extension of plain algebras.
    pub total_derivation: Option<Matrix>,
    /// `i: M -> E`, shape `dim E x dim M`.
    pub inclusion: Matrix,
    /// `p: E -> A`, shape `dim A x dim E`.
    pub projection: Matrix,
    /// `s: A -> E` with `p s = id`.
    pub section: Matrix,
}

/// Data for a central extension: trivial actions on the kernel and a pair `(ψ, χ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralExtensionSpec {
    pub base: AssDerPair,
    pub kernel: RepPair,
    pub psi: Cochain,
    pub chi: Cochain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianExtensionSpec {
    pub base: AssDerPair,
    pub rep: RepPair,
    pub cocycle: AssDerCochain,
}

impl ExtensionTriple {
    pub fn base_dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn kernel_dim(&self) -> usize {
        self.inclusion.cols()
    }

    /// The same extension with a different section.
    pub fn with_section(&self, section: Matrix) -> ExtensionTriple {
        ExtensionTriple {
            section,
            ..self.clone()
        }
    }

    /// The extension of plain algebras underneath.
    pub fn forget_derivation(&self) -> ExtensionTriple {
        ExtensionTriple {
            total_derivation: None,
            ..self.clone()
        }
    }

    fn check_shapes(&self) -> Result<()> {
        let e = self.total.dim();
        let (a, m) = (self.base_dim(), self.kernel_dim());
        if self.inclusion.rows() != e || self.projection.cols() != e || self.section.shape() != (e, a) {
            return Err(Error::Shape("extension maps do not match the total algebra".into()));
        }
        if a + m != e {
            return Err(Error::Shape(format!("dim E = {e} but dim A + dim M = {}", a + m)));
        }
        if let Some(d) = &self.total_derivation {
            if d.shape() != (e, e) {
                return Err(Error::Shape("total derivation has the wrong shape".into()));
            }
        }
        Ok(())
    }

    /// `[s | i]^{-1}`: coordinates `(a, m)` of an element of `E`.
    pub fn splitting_inverse(&self) -> Result<Matrix> {
        self.check_shapes()?;
        self.section
            .hstack(&self.inclusion)
            .inverse()
            .ok_or_else(|| Error::Input("section and inclusion do not span the total space".into()))
    }

    /// Exactness, `p ∘ s = id`, `p` multiplicative, and (when present)
    /// compatibility of the derivations with `i` and `p`.
    pub fn validate(&self, base: &AssDerPair, kernel_phi: Option<&Matrix>) -> Result<ValidationReport> {
        self.check_shapes()?;
        if self.base_dim() != base.dim() {
            return Err(Error::Shape("extension base does not match the pair".into()));
        }
        let mut report = self.total.validate().with_prefix("total");
        let (a, m) = (self.base_dim(), self.kernel_dim());
        let pi = self.projection.mul(&self.inclusion);
        report.check("p-i", &[], pi.data().to_vec());
        let ps = self.projection.mul(&self.section).sub(&Matrix::identity(a));
        report.check("p-s", &[], ps.data().to_vec());
        if self.inclusion.rank() != m {
            report.check("i-injective", &[], vec![Scalar::one()]);
        }
        let e = self.total.dim();
        for x in 0..e {
            for y in 0..e {
                let lhs = self.projection.apply(self.total.basis_product(x, y));
                let rhs = base.algebra.mul(&self.projection.column(x), &self.projection.column(y));
                let diff: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(u, v)| u - v).collect();
                report.check("p-multiplicative", &[x, y], diff);
            }
        }
        if let Some(d) = &self.total_derivation {
            let probe = AssDerPair::new(self.total.clone(), d.clone())?;
            report.merge(probe.validate_derivation().with_prefix("total"));
            let pd = self.projection.mul(d).sub(&base.derivation.mul(&self.projection));
            report.check("p-derivation", &[], pd.data().to_vec());
            if let Some(phi_m) = kernel_phi {
                let di = d.mul(&self.inclusion).sub(&self.inclusion.mul(phi_m));
                report.check("i-derivation", &[], di.data().to_vec());
            }
        }
        Ok(report)
    }

    /// `i(m) e = 0 = e i(m)` for all basis elements.
    pub fn centrality(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let e = self.total.dim();
        for k in 0..self.kernel_dim() {
            let im = self.inclusion.column(k);
            for x in 0..e {
                let mut ex = vec![Scalar::zero(); e];
                ex[x] = Scalar::one();
                report.check("central-left", &[k, x], self.total.mul(&im, &ex));
                report.check("central-right", &[k, x], self.total.mul(&ex, &im));
            }
        }
        report
    }

    fn kernel_coordinates(&self, inv: &Matrix, v: &[Scalar], what: &str) -> Result<Vec<Scalar>> {
        let coords = inv.apply(v);
        let a = self.base_dim();
        if coords[..a].iter().any(|x| !x.is_zero()) {
            return Err(Error::Input(format!("{what} does not lie in the kernel")));
        }
        Ok(coords[a..].to_vec())
    }

    /// The bimodule structure induced on `M`: `a m = s(a) i(m)`, `m a = i(m) s(a)`.
    pub fn induced_bimodule(&self) -> Result<Bimodule> {
        let inv = self.splitting_inverse()?;
        let (a, m) = (self.base_dim(), self.kernel_dim());
        let mut left = Vec::with_capacity(a * m * m);
        let mut right = Vec::with_capacity(a * m * m);
        for i in 0..a {
            let si = self.section.column(i);
            for k in 0..m {
                let prod = self.total.mul(&si, &self.inclusion.column(k));
                left.extend(self.kernel_coordinates(&inv, &prod, "s(a) i(m)")?);
            }
        }
        for k in 0..m {
            let ik = self.inclusion.column(k);
            for i in 0..a {
                let prod = self.total.mul(&ik, &self.section.column(i));
                right.extend(self.kernel_coordinates(&inv, &prod, "i(m) s(a)")?);
            }
        }
        Bimodule::new(a, m, left, right)
    }

    /// The map `φ_M` with `φ_E i = i φ_M`.
    pub fn induced_kernel_map(&self) -> Result<Matrix> {
        let d = self
            .total_derivation
            .as_ref()
            .ok_or_else(|| Error::Input("extension carries no derivation".into()))?;
        let inv = self.splitting_inverse()?;
        let m = self.kernel_dim();
        let mut cols = Vec::with_capacity(m);
        for k in 0..m {
            let v = d.apply(&self.inclusion.column(k));
            cols.push(self.kernel_coordinates(&inv, &v, "φ_E(i(m))")?);
        }
        Ok(Matrix::from_columns(m, &cols))
    }

    /// `ψ(a, b) = s(a) s(b) − s(ab)`, read in `M`.
    pub fn product_cocycle(&self, base: &Algebra) -> Result<Cochain> {
        let inv = self.splitting_inverse()?;
        let (a, m) = (self.base_dim(), self.kernel_dim());
        let cols: Vec<Vec<Scalar>> = (0..a).map(|i| self.section.column(i)).collect();
        let mut err = None;
        let psi = Cochain::from_values(2, a, m, |j| {
            let mut v = self.total.mul(&cols[j[0]], &cols[j[1]]);
            let s_ab = self.section.apply(base.basis_product(j[0], j[1]));
            for (x, y) in v.iter_mut().zip(&s_ab) {
                *x -= y;
            }
            match self.kernel_coordinates(&inv, &v, "product defect") {
                Ok(c) => c,
                Err(e) => {
                    err = Some(e);
                    vec![Scalar::zero(); m]
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(psi),
        }
    }

    /// `χ(a) = φ_E(s(a)) − s(φ_A(a))`, read in `M`.
    pub fn derivation_cocycle(&self, base: &AssDerPair) -> Result<Cochain> {
        let d = self
            .total_derivation
            .as_ref()
            .ok_or_else(|| Error::Input("extension carries no derivation".into()))?;
        let inv = self.splitting_inverse()?;
        let (a, m) = (self.base_dim(), self.kernel_dim());
        let mut cols = Vec::with_capacity(a);
        for i in 0..a {
            let mut v = d.apply(&self.section.column(i));
            let s_phi = self.section.apply(&base.derivation.column(i));
            for (x, y) in v.iter_mut().zip(&s_phi) {
                *x -= y;
            }
            cols.push(self.kernel_coordinates(&inv, &v, "derivation defect")?);
        }
        Ok(Cochain::from_matrix(&Matrix::from_columns(m, &cols)))
    }
}

fn cocycle_report(dc: &AssDerCochain) -> ValidationReport {
    let mut report = ValidationReport::new();
    for (rule, part) in [("psi-1", Some(&dc.top)), ("psi-2", dc.tail.as_ref())] {
        let Some(part) = part else { continue };
        for j in 0..part.tuple_count() {
            let digits = crate::cochain::decode(j, part.degree(), part.adim());
            report.check(rule, &digits, part.value_at(j));
        }
    }
    report
}

fn check_rep(base: &AssDerPair, rep: &RepPair) -> Result<()> {
    if rep.adim() != base.dim() {
        return Err(Error::Shape("representation does not match the base".into()));
    }
    ensure_valid("base pair", base.validate())?;
    ensure_valid("representation", validate_representation(base, rep))
}

/// `E = A ⊕ M` with `(a, m)(b, n) = (ab, an + mb + f(a, b))` and
/// `φ_E(a, m) = (φ_A a, φ_M m + f̄(a))`.
pub fn build_abelian_extension(spec: &AbelianExtensionSpec) -> Result<ExtensionTriple> {
    let (base, rep, c) = (&spec.base, &spec.rep, &spec.cocycle);
    check_rep(base, rep)?;
    if c.degree() != 2 || c.adim() != base.dim() || c.mdim() != rep.mdim() {
        return Err(Error::Shape(
            "extension cocycle must be a degree-2 cochain with values in M".into(),
        ));
    }
    let dc = assder_d(base, rep, c)?;
    if !dc.is_zero() {
        return Err(Error::invalid("extension cocycle", cocycle_report(&dc)));
    }
    let (a, m) = (base.dim(), rep.mdim());
    let e = a + m;
    let f = &c.top;
    let f_bar = c.tail.as_ref().expect("degree 2 has a tail");
    let bm = &rep.bimodule;
    let alg = &base.algebra;
    let mut structure = vec![Scalar::zero(); e * e * e];
    let at = |i: usize, j: usize, k: usize| (i * e + j) * e + k;
    for i in 0..a {
        for j in 0..a {
            for k in 0..a {
                structure[at(i, j, k)] = alg.coeff(i, j, k).clone();
            }
            for (p, x) in f.value(&[i, j]).into_iter().enumerate() {
                structure[at(i, j, a + p)] = x;
            }
        }
        for k in 0..m {
            for p in 0..m {
                structure[at(i, a + k, a + p)] = bm.basis_left(i, k)[p].clone();
                structure[at(a + k, i, a + p)] = bm.basis_right(k, i)[p].clone();
            }
        }
    }
    let total = Algebra::new(e, structure)?;
    let f_bar_m = f_bar.to_matrix()?;
    let derivation = Matrix::from_fn(e, e, |r, col| match (r < a, col < a) {
        (true, true) => base.derivation[(r, col)].clone(),
        (false, true) => f_bar_m[(r - a, col)].clone(),
        (false, false) => rep.phi[(r - a, col - a)].clone(),
        (true, false) => Scalar::zero(),
    });
    let inclusion = Matrix::from_fn(e, m, |r, col| if r == a + col { Scalar::one() } else { Scalar::zero() });
    let projection = Matrix::from_fn(a, e, |r, col| if r == col { Scalar::one() } else { Scalar::zero() });
    let section = projection.transpose();
    Ok(ExtensionTriple {
        total,
        total_derivation: Some(derivation),
        inclusion,
        projection,
        section,
    })
}

/// `(f, f̄)` from the product and derivation defects of the stored section.
pub fn extract_abelian_cocycle(ext: &ExtensionTriple, base: &AssDerPair) -> Result<AssDerCochain> {
    let report = ext.validate(base, None)?;
    ensure_valid("extension", report)?;
    let f = ext.product_cocycle(&base.algebra)?;
    let f_bar = ext.derivation_cocycle(base)?;
    let c = AssDerCochain::new(f, Some(f_bar))?;
    let rep = RepPair::new(ext.induced_bimodule()?, ext.induced_kernel_map()?)?;
    if !assder_d(base, &rep, &c)?.is_zero() {
        return Err(Error::NotCocycle("extracted extension cocycle".into()));
    }
    Ok(c)
}

fn trivial_kernel(kernel: &RepPair) -> Result<()> {
    if !kernel.bimodule.is_trivial() {
        return Err(Error::Input(
            "a central extension needs zero actions on the kernel".into(),
        ));
    }
    Ok(())
}

pub fn build_central_extension(spec: &CentralExtensionSpec) -> Result<ExtensionTriple> {
    trivial_kernel(&spec.kernel)?;
    let cocycle = AssDerCochain::new(spec.psi.clone(), Some(spec.chi.clone()))?;
    let ext = build_abelian_extension(&AbelianExtensionSpec {
        base: spec.base.clone(),
        rep: spec.kernel.clone(),
        cocycle,
    })?;
    debug_assert!(ext.centrality().is_valid());
    Ok(ext)
}

/// `(ψ, χ)` relative to the stored section; the extension must be central.
pub fn extract_cocycle(ext: &ExtensionTriple, base: &AssDerPair) -> Result<(Cochain, Cochain)> {
    ensure_valid("centrality", ext.centrality())?;
    let c = extract_abelian_cocycle(ext, base)?;
    Ok((c.top, c.tail.expect("degree 2 has a tail")))
}

pub fn central_classes(pair: &AssDerPair, kernel: &RepPair, limits: &Limits) -> Result<CohomologyReport> {
    trivial_kernel(kernel)?;
    cohomology(pair, kernel, 2, true, limits)
}

/// An isomorphism `η: E1 -> E2` of the form `a ⊕ m -> a ⊕ (m + h(a))` in
/// section coordinates, when the two extension cocycles are cohomologous.
pub fn extensions_isomorphic(
    e1: &ExtensionTriple,
    e2: &ExtensionTriple,
    base: &AssDerPair,
    limits: &Limits,
) -> Result<Option<Matrix>> {
    if e1.base_dim() != e2.base_dim() || e1.kernel_dim() != e2.kernel_dim() || e1.base_dim() != base.dim() {
        return Err(Error::Shape("extensions have different bases or kernels".into()));
    }
    let rep1 = RepPair::new(e1.induced_bimodule()?, e1.induced_kernel_map()?)?;
    let rep2 = RepPair::new(e2.induced_bimodule()?, e2.induced_kernel_map()?)?;
    if rep1 != rep2 {
        return Err(Error::Input(
            "extensions induce different kernel representations".into(),
        ));
    }
    let c1 = extract_abelian_cocycle(e1, base)?;
    let c2 = extract_abelian_cocycle(e2, base)?;
    let Some(h) = is_coboundary(base, &rep1, &c1.sub(&c2)?, limits)? else {
        return Ok(None);
    };
    let h = h.top.to_matrix()?;
    let a = base.dim();
    let m = e1.kernel_dim();
    // [s2 + i2 h | i2] [s1 | i1]^{-1}
    let left = e2.section.add(&e2.inclusion.mul(&h)).hstack(&e2.inclusion);
    let eta = left.mul(&e1.splitting_inverse()?);
    let report = verify_extension_morphism(e1, e2, &eta);
    if !report.is_valid() {
        return Err(Error::invalid("constructed extension isomorphism", report));
    }
    debug_assert_eq!((a + m, a + m), eta.shape());
    Ok(Some(eta))
}

/// `η` is an algebra isomorphism intertwining derivations, inclusions and projections.
pub fn verify_extension_morphism(e1: &ExtensionTriple, e2: &ExtensionTriple, eta: &Matrix) -> ValidationReport {
    let mut report = ValidationReport::new();
    let e = e1.total.dim();
    if eta.inverse().is_none() {
        report.check("invertible", &[], vec![Scalar::one()]);
    }
    for x in 0..e {
        for y in 0..e {
            let lhs = eta.apply(e1.total.basis_product(x, y));
            let rhs = e2.total.mul(&eta.column(x), &eta.column(y));
            let diff: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(u, v)| u - v).collect();
            report.check("multiplicative", &[x, y], diff);
        }
    }
    if let (Some(d1), Some(d2)) = (&e1.total_derivation, &e2.total_derivation) {
        report.check("derivation", &[], eta.mul(d1).sub(&d2.mul(eta)).data().to_vec());
    }
    report.check(
        "inclusion",
        &[],
        eta.mul(&e1.inclusion).sub(&e2.inclusion).data().to_vec(),
    );
    report.check(
        "projection",
        &[],
        e2.projection.mul(eta).sub(&e1.projection).data().to_vec(),
    );
    report
}

fn plain_extension_rep(
    alg_ext: &ExtensionTriple,
    phi_a: &Matrix,
    phi_m: &Matrix,
    base: &Algebra,
) -> Result<(AssDerPair, RepPair)> {
    let pair = AssDerPair::new(base.clone(), phi_a.clone())?;
    ensure_valid("base derivation", pair.validate_derivation())?;
    let check = alg_ext.forget_derivation().validate(&pair, None)?;
    ensure_valid("algebra extension", check)?;
    let rep = RepPair::new(alg_ext.induced_bimodule()?, phi_m.clone())?;
    ensure_valid("kernel derivation", validate_representation(&pair, &rep))?;
    Ok((pair, rep))
}

/// `Ob(a, b) = φ_M ψ(a, b) − ψ(φ_A a, b) − ψ(a, φ_A b)` for the stored section.
///
/// For a central extension the kernel bimodule is trivial; for a general
/// square-zero extension the induced bimodule is used throughout.
pub fn derivation_obstruction(
    alg_ext: &ExtensionTriple,
    base: &Algebra,
    phi_a: &Matrix,
    phi_m: &Matrix,
) -> Result<Cochain> {
    let (pair, rep) = plain_extension_rep(alg_ext, phi_a, phi_m, base)?;
    let psi = alg_ext.product_cocycle(base)?;
    let ob = delta_op(&pair, &rep, &psi)?.neg();
    if !hochschild_differential(base, &rep.bimodule, &ob)?.is_zero() {
        return Err(Error::NotCocycle("derivation obstruction".into()));
    }
    Ok(ob)
}

/// A derivation of the total algebra restricting to `φ_M` and covering `φ_A`,
/// when the obstruction is a Hochschild coboundary.
pub fn extend_derivation_pair(
    alg_ext: &ExtensionTriple,
    base: &Algebra,
    phi_a: &Matrix,
    phi_m: &Matrix,
    limits: &Limits,
) -> Result<Option<Matrix>> {
    let ob = derivation_obstruction(alg_ext, base, phi_a, phi_m)?;
    let bm = alg_ext.induced_bimodule()?;
    let Some(lambda) = hochschild_preimage(base, &bm, &ob, limits)? else {
        return Ok(None);
    };
    let lambda = lambda.to_matrix()?;
    let s = &alg_ext.section;
    let i = &alg_ext.inclusion;
    let left = s.mul(phi_a).add(&i.mul(&lambda)).hstack(&i.mul(phi_m));
    let phi_e = left.mul(&alg_ext.splitting_inverse()?);
    let pair = AssDerPair::new(base.clone(), phi_a.clone())?;
    let lifted = ExtensionTriple {
        total_derivation: Some(phi_e.clone()),
        ..alg_ext.clone()
    };
    let report = lifted.validate(&pair, Some(phi_m))?;
    if !report.is_valid() {
        return Err(Error::invalid("lifted derivation", report));
    }
    Ok(Some(phi_e))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    /// Representatives of the `H^2_Hoch(A, M)` basis.
    pub basis: Vec<Cochain>,
    /// Column `j` holds the coordinates of `Θ[ψ_j]`.
    pub matrix: Matrix,
}

/// `Θ(φ_A, φ_M)[ψ] = [φ_M ψ − ψ(φ_A ⊗ id) − ψ(id ⊗ φ_A)]` on `H^2_Hoch(A, M)`
/// with zero actions on `M`.
pub fn theta_action(base: &Algebra, phi_a: &Matrix, phi_m: &Matrix, limits: &Limits) -> Result<ThetaReport> {
    let pair = AssDerPair::new(base.clone(), phi_a.clone())?;
    ensure_valid("base derivation", pair.validate_derivation())?;
    let rep = RepPair::trivial(base.dim(), phi_m.clone())?;
    let space = hochschild_space(base, &rep.bimodule, 2, limits)?;
    let (a, m) = (base.dim(), rep.mdim());
    let theta = |v: &[Scalar]| -> Result<Cochain> {
        let psi = Cochain::from_coeffs(2, a, m, v.to_vec())?;
        Ok(delta_op(&pair, &rep, &psi)?.neg())
    };
    let mut coords = Vec::with_capacity(space.betti());
    let mut basis = Vec::with_capacity(space.betti());
    for z in &space.representatives {
        let t = theta(z)?;
        if !hochschild_differential(base, &rep.bimodule, &t)?.is_zero() {
            return Err(Error::NotCocycle("Θ of a cocycle".into()));
        }
        coords.push(
            space
                .coordinates(t.coeffs())
                .expect("every cocycle has coordinates modulo coboundaries"),
        );
        basis.push(Cochain::from_coeffs(2, a, m, z.clone())?);
    }
    for (_, row) in space.image.reduced_rows() {
        let b = crate::linalg::dense_from_sparse(row, space.dim);
        if !space.is_coboundary(theta(&b)?.coeffs()) {
            return Err(Error::Input("Θ does not preserve coboundaries".into()));
        }
    }
    let k = basis.len();
    Ok(ThetaReport {
        basis,
        matrix: Matrix::from_columns(k, &coords),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn dual_numbers() -> Algebra {
        Algebra::from_products(2, &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1))])
            .unwrap()
            .with_unit(vec![q(1), q(0)])
            .unwrap()
    }

    fn euler() -> Matrix {
        Matrix::from_ints(&[&[0, 0], &[0, 1]])
    }

    /// ℚ[x]/(x³) as an extension of ℚ[x]/(x²) by ℚx² with the canonical section.
    fn cubic_over_dual() -> ExtensionTriple {
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
        .unwrap();
        ExtensionTriple {
            total,
            total_derivation: None,
            inclusion: Matrix::from_ints(&[&[0], &[0], &[1]]),
            projection: Matrix::from_ints(&[&[1, 0, 0], &[0, 1, 0]]),
            section: Matrix::from_ints(&[&[1, 0], &[0, 1], &[0, 0]]),
        }
    }

    #[test]
    fn split_central_extension() {
        let base = AssDerPair::new(dual_numbers(), euler()).unwrap();
        let kernel = RepPair::trivial(2, Matrix::from_ints(&[&[2]])).unwrap();
        let spec = CentralExtensionSpec {
            base: base.clone(),
            kernel,
            psi: Cochain::zero(2, 2, 1),
            chi: Cochain::zero(1, 2, 1),
        };
        let ext = build_central_extension(&spec).unwrap();
        assert!(ext.centrality().is_valid());
        assert!(ext
            .validate(&base, Some(&Matrix::from_ints(&[&[2]])))
            .unwrap()
            .is_valid());
        let (psi, chi) = extract_cocycle(&ext, &base).unwrap();
        assert!(psi.is_zero() && chi.is_zero());
    }

    #[test]
    fn unital_base_rejects_x_squared_cocycle() {
        let base = AssDerPair::new(dual_numbers(), euler()).unwrap();
        let kernel = RepPair::trivial(2, Matrix::from_ints(&[&[2]])).unwrap();
        let mut psi = Cochain::zero(2, 2, 1);
        psi.set(0, &[1, 1], q(1));
        let spec = CentralExtensionSpec {
            base,
            kernel,
            psi,
            chi: Cochain::zero(1, 2, 1),
        };
        match build_central_extension(&spec) {
            Err(Error::Invalid { report, .. }) => assert!(report.rules().contains(&"psi-1")),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn obstruction_on_cubic_extension() {
        let ext = cubic_over_dual();
        for c in 0..4 {
            let phi_m = Matrix::from_ints(&[&[c]]);
            let ob = derivation_obstruction(&ext, &dual_numbers(), &euler(), &phi_m).unwrap();
            assert_eq!(ob.value(&[1, 1]), vec![q(c - 2)]);
            for t in [[0, 0], [0, 1], [1, 0]] {
                assert_eq!(ob.value(&t), vec![q(0)]);
            }
            let lifted = extend_derivation_pair(&ext, &dual_numbers(), &euler(), &phi_m, &Limits::default()).unwrap();
            if c == 2 {
                assert_eq!(
                    lifted.unwrap(),
                    Matrix::from_ints(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]])
                );
            } else {
                assert!(lifted.is_none());
            }
        }
    }

    #[test]
    fn theta_scalar_action() {
        let zero = Algebra::zero(1).unwrap();
        let t = theta_action(
            &zero,
            &Matrix::zeros(1, 1),
            &Matrix::from_ints(&[&[3]]),
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(t.matrix, Matrix::from_ints(&[&[3]]));
        let t = theta_action(&zero, &Matrix::zeros(1, 1), &Matrix::zeros(1, 1), &Limits::default()).unwrap();
        assert!(t.matrix.is_zero());
    }
}
