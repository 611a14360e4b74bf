//! Hochschild cochains, the AssDer differential, and the bracket structure.
//!
//! A degree-`n` cochain with values in `M` stores `T[p][j_1..j_n]` at
//! `p * adim^n + J`, where `J` is the base-`adim` number with digits
//! `j_1 .. j_n` (most significant first). An [`AssDerCochain`] flattens as
//! its top component followed by its tail.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AssDerPair, Bimodule, RepPair};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::ValidationReport;
use crate::scalar::Scalar;

pub fn pow(base: usize, exp: usize) -> usize {
    base.checked_pow(exp as u32)
        .expect("cochain space size overflows usize")
}

/// Digits of a flat tuple index, most significant first.
pub fn decode(mut idx: usize, n: usize, adim: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = idx % adim;
        idx /= adim;
    }
    out
}

pub fn encode(digits: &[usize], adim: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * adim + d)
}

/// An `M`-valued multilinear map on `A^{⊗n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cochain {
    degree: usize,
    adim: usize,
    mdim: usize,
    coeffs: Vec<Scalar>,
}

impl Cochain {
    pub fn zero(degree: usize, adim: usize, mdim: usize) -> Self {
        Cochain {
            degree,
            adim,
            mdim,
            coeffs: vec![Scalar::zero(); mdim * pow(adim, degree)],
        }
    }

    pub fn from_coeffs(degree: usize, adim: usize, mdim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        let want = mdim * pow(adim, degree);
        if coeffs.len() != want {
            return Err(Error::Shape(format!(
                "degree-{degree} cochain on a dim-{adim} algebra with dim-{mdim} values needs {want} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Cochain {
            degree,
            adim,
            mdim,
            coeffs,
        })
    }

    /// Builds the cochain whose value on the basis tuple `J` is `f(J)`.
    pub fn from_values(degree: usize, adim: usize, mdim: usize, mut f: impl FnMut(&[usize]) -> Vec<Scalar>) -> Self {
        let tuples = pow(adim, degree);
        let mut out = Cochain::zero(degree, adim, mdim);
        for j in 0..tuples {
            let v = f(&decode(j, degree, adim));
            assert_eq!(v.len(), mdim, "cochain value has the wrong length");
            for (p, x) in v.into_iter().enumerate() {
                out.coeffs[p * tuples + j] = x;
            }
        }
        out
    }

    /// Degree-1 cochain with the given matrix (column convention).
    pub fn from_matrix(m: &Matrix) -> Self {
        Cochain {
            degree: 1,
            adim: m.cols(),
            mdim: m.rows(),
            coeffs: m.data().to_vec(),
        }
    }

    /// The multiplication of `alg` as an adjoint-valued 2-cochain.
    pub fn from_algebra(alg: &Algebra) -> Self {
        let n = alg.dim();
        Cochain::from_values(2, n, n, |j| alg.basis_product(j[0], j[1]).to_vec())
    }

    pub fn identity(adim: usize) -> Self {
        Cochain::from_matrix(&Matrix::identity(adim))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn adim(&self) -> usize {
        self.adim
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn tuple_count(&self) -> usize {
        pow(self.adim, self.degree)
    }

    pub fn is_adjoint(&self) -> bool {
        self.adim == self.mdim
    }

    /// Value on the basis tuple with flat index `j`.
    pub fn value_at(&self, j: usize) -> Vec<Scalar> {
        let t = self.tuple_count();
        (0..self.mdim).map(|p| self.coeffs[p * t + j].clone()).collect()
    }

    pub fn value(&self, tuple: &[usize]) -> Vec<Scalar> {
        assert_eq!(tuple.len(), self.degree, "tuple length must equal the degree");
        self.value_at(encode(tuple, self.adim))
    }

    pub fn coeff(&self, p: usize, tuple: &[usize]) -> &Scalar {
        &self.coeffs[p * self.tuple_count() + encode(tuple, self.adim)]
    }

    pub fn set(&mut self, p: usize, tuple: &[usize], value: Scalar) {
        let t = self.tuple_count();
        self.coeffs[p * t + encode(tuple, self.adim)] = value;
    }

    /// All values, indexed by flat tuple.
    pub fn values(&self) -> Vec<Vec<Scalar>> {
        (0..self.tuple_count()).map(|j| self.value_at(j)).collect()
    }

    fn from_value_table(degree: usize, adim: usize, mdim: usize, table: Vec<Vec<Scalar>>) -> Self {
        let t = table.len();
        let mut coeffs = vec![Scalar::zero(); mdim * t];
        for (j, v) in table.into_iter().enumerate() {
            for (p, x) in v.into_iter().enumerate() {
                coeffs[p * t + j] = x;
            }
        }
        Cochain {
            degree,
            adim,
            mdim,
            coeffs,
        }
    }

    /// Multilinear evaluation on arbitrary arguments.
    pub fn eval(&self, args: &[Vec<Scalar>]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let mut out = vec![Scalar::zero(); self.mdim];
        let t = self.tuple_count();
        for j in 0..t {
            let digits = decode(j, self.degree, self.adim);
            let mut w = Scalar::one();
            for (arg, &d) in args.iter().zip(&digits) {
                w *= &arg[d];
                if w.is_zero() {
                    break;
                }
            }
            if w.is_zero() {
                continue;
            }
            for (p, o) in out.iter_mut().enumerate() {
                o.add_product(&w, &self.coeffs[p * t + j]);
            }
        }
        out
    }

    /// Degree-1 cochain as a matrix.
    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.degree != 1 {
            return Err(Error::Shape("only degree-1 cochains are matrices".into()));
        }
        Ok(Matrix::from_fn(self.mdim, self.adim, |p, j| {
            self.coeffs[p * self.adim + j].clone()
        }))
    }

    /// Adjoint-valued 2-cochain as a structure tensor `C[i][j][k]`.
    pub fn to_structure(&self) -> Result<Vec<Scalar>> {
        if self.degree != 2 || !self.is_adjoint() {
            return Err(Error::Shape("a multiplication is an adjoint-valued 2-cochain".into()));
        }
        Ok(self.values().into_iter().flatten().collect())
    }

    fn check_same_space(&self, other: &Cochain) -> Result<()> {
        if (self.degree, self.adim, self.mdim) != (other.degree, other.adim, other.mdim) {
            return Err(Error::Shape(format!(
                "cochains live in different spaces: ({}, {}, {}) vs ({}, {}, {})",
                self.degree, self.adim, self.mdim, other.degree, other.adim, other.mdim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_space(other)?;
        Ok(Cochain {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_space(other)?;
        Ok(Cochain {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
            ..self.clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> Cochain {
        Cochain {
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&Scalar::from_int(-1))
    }

    /// `g ∘ self` for a linear map `g: M -> M'` applied to the values.
    pub fn post_compose(&self, g: &Matrix) -> Result<Cochain> {
        if g.cols() != self.mdim {
            return Err(Error::Shape("post-composition map has the wrong source".into()));
        }
        let values = self.values().into_iter().map(|v| g.apply(&v)).collect();
        Ok(Cochain::from_value_table(self.degree, self.adim, g.rows(), values))
    }

    /// `self ∘ (h ⊗ ... ⊗ h)` for a linear map `h: A' -> A`.
    pub fn pre_compose_all(&self, h: &Matrix) -> Result<Cochain> {
        if h.rows() != self.adim {
            return Err(Error::Shape("pre-composition map has the wrong target".into()));
        }
        let cols: Vec<Vec<Scalar>> = (0..h.cols()).map(|c| h.column(c)).collect();
        Ok(Cochain::from_values(self.degree, h.cols(), self.mdim, |j| {
            let args: Vec<Vec<Scalar>> = j.iter().map(|&x| cols[x].clone()).collect();
            self.eval(&args)
        }))
    }
}

/// An element `(f, f̄)` of `C^n(A, M) ⊕ C^{n-1}(A, M)`; the tail is absent in degree 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssDerCochain {
    pub top: Cochain,
    pub tail: Option<Cochain>,
}

impl AssDerCochain {
    pub fn new(top: Cochain, tail: Option<Cochain>) -> Result<Self> {
        let n = top.degree();
        if n == 0 {
            return Err(Error::Shape("AssDer cochains start in degree 1".into()));
        }
        match (&tail, n) {
            (None, 1) => {}
            (Some(_), 1) => return Err(Error::Shape("a degree-1 AssDer cochain has no tail".into())),
            (None, _) => return Err(Error::Shape(format!("a degree-{n} AssDer cochain needs a tail"))),
            (Some(t), _) => {
                if t.degree() != n - 1 || t.adim() != top.adim() || t.mdim() != top.mdim() {
                    return Err(Error::Shape("tail shape does not match the top component".into()));
                }
            }
        }
        Ok(AssDerCochain { top, tail })
    }

    pub fn zero(degree: usize, adim: usize, mdim: usize) -> Self {
        assert!(degree >= 1, "AssDer cochains start in degree 1");
        AssDerCochain {
            top: Cochain::zero(degree, adim, mdim),
            tail: (degree >= 2).then(|| Cochain::zero(degree - 1, adim, mdim)),
        }
    }

    /// Pads a missing tail with zero in degrees above 1.
    pub fn from_parts(top: Cochain, tail: Option<Cochain>) -> Result<Self> {
        let n = top.degree();
        let tail = match tail {
            None if n >= 2 => Some(Cochain::zero(n - 1, top.adim(), top.mdim())),
            t => t,
        };
        AssDerCochain::new(top, tail)
    }

    pub fn degree(&self) -> usize {
        self.top.degree()
    }

    pub fn adim(&self) -> usize {
        self.top.adim()
    }

    pub fn mdim(&self) -> usize {
        self.top.mdim()
    }

    /// Dimension of `C^n_AssDer` for the given shapes.
    pub fn space_dim(degree: usize, adim: usize, mdim: usize) -> usize {
        let top = mdim * pow(adim, degree);
        if degree >= 2 {
            top + mdim * pow(adim, degree - 1)
        } else {
            top
        }
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        let mut v = self.top.coeffs().to_vec();
        if let Some(t) = &self.tail {
            v.extend_from_slice(t.coeffs());
        }
        v
    }

    pub fn from_flat(degree: usize, adim: usize, mdim: usize, flat: &[Scalar]) -> Result<Self> {
        if flat.len() != AssDerCochain::space_dim(degree, adim, mdim) {
            return Err(Error::Shape("flat AssDer cochain has the wrong length".into()));
        }
        let split = mdim * pow(adim, degree);
        let top = Cochain::from_coeffs(degree, adim, mdim, flat[..split].to_vec())?;
        let tail = if degree >= 2 {
            Some(Cochain::from_coeffs(degree - 1, adim, mdim, flat[split..].to_vec())?)
        } else {
            None
        };
        AssDerCochain::new(top, tail)
    }

    pub fn is_zero(&self) -> bool {
        self.top.is_zero() && self.tail.as_ref().is_none_or(|t| t.is_zero())
    }

    pub fn add(&self, other: &AssDerCochain) -> Result<AssDerCochain> {
        let tail = match (&self.tail, &other.tail) {
            (Some(a), Some(b)) => Some(a.add(b)?),
            (None, None) => None,
            _ => return Err(Error::Shape("AssDer cochain degrees differ".into())),
        };
        Ok(AssDerCochain {
            top: self.top.add(&other.top)?,
            tail,
        })
    }

    pub fn sub(&self, other: &AssDerCochain) -> Result<AssDerCochain> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> AssDerCochain {
        AssDerCochain {
            top: self.top.scale(s),
            tail: self.tail.as_ref().map(|t| t.scale(s)),
        }
    }

    pub fn neg(&self) -> AssDerCochain {
        self.scale(&Scalar::from_int(-1))
    }
}

fn check_coefficients(alg_dim: usize, mdim: usize, f: &Cochain) -> Result<()> {
    if f.adim() != alg_dim || f.mdim() != mdim {
        return Err(Error::Shape(format!(
            "cochain has shape (adim {}, mdim {}), expected ({alg_dim}, {mdim})",
            f.adim(),
            f.mdim()
        )));
    }
    Ok(())
}

/// Hochschild differential with coefficients in an arbitrary bimodule.
pub fn hochschild_differential(alg: &Algebra, bm: &Bimodule, f: &Cochain) -> Result<Cochain> {
    let (n, adim, mdim) = (f.degree(), alg.dim(), bm.mdim());
    if bm.adim() != adim {
        return Err(Error::Shape("bimodule does not match the algebra".into()));
    }
    check_coefficients(adim, mdim, f)?;
    let vals = f.values();
    let out_tuples = pow(adim, n + 1);
    let mut table = Vec::with_capacity(out_tuples);
    for jj in 0..out_tuples {
        let j = decode(jj, n + 1, adim);
        let mut out = vec![Scalar::zero(); mdim];
        // a_1 f(a_2, ..., a_{n+1})
        let rest = &vals[encode(&j[1..], adim)];
        for (m, x) in rest.iter().enumerate() {
            if !x.is_zero() {
                for (o, l) in out.iter_mut().zip(bm.basis_left(j[0], m)) {
                    o.add_product(x, l);
                }
            }
        }
        // sum_i (-1)^i f(a_1, ..., a_i a_{i+1}, ..., a_{n+1})
        for i in 1..=n {
            let sign = Scalar::sign(i);
            let prod = alg.basis_product(j[i - 1], j[i]);
            let mut args: Vec<usize> = Vec::with_capacity(n);
            for (k, c) in prod.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                args.clear();
                args.extend_from_slice(&j[..i - 1]);
                args.push(k);
                args.extend_from_slice(&j[i + 1..]);
                let w = c * &sign;
                for (o, x) in out.iter_mut().zip(&vals[encode(&args, adim)]) {
                    o.add_product(&w, x);
                }
            }
        }
        // (-1)^{n+1} f(a_1, ..., a_n) a_{n+1}
        let sign = Scalar::sign(n + 1);
        let front = &vals[encode(&j[..n], adim)];
        for (m, x) in front.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let w = x * &sign;
            for (o, r) in out.iter_mut().zip(bm.basis_right(m, j[n])) {
                o.add_product(&w, r);
            }
        }
        table.push(out);
    }
    Ok(Cochain::from_value_table(n + 1, adim, mdim, table))
}

pub fn hochschild_d(pair: &AssDerPair, rep: &RepPair, f: &Cochain) -> Result<Cochain> {
    hochschild_differential(&pair.algebra, &rep.bimodule, f)
}

/// `δf = sum_i f ∘ (id ⊗ .. ⊗ φ_A ⊗ .. ⊗ id) − φ_M ∘ f`, defined in degrees ≥ 1.
pub fn delta_op(pair: &AssDerPair, rep: &RepPair, f: &Cochain) -> Result<Cochain> {
    let (n, adim, mdim) = (f.degree(), pair.dim(), rep.mdim());
    if n == 0 {
        return Err(Error::Input(
            "the delta operator is defined on cochains of degree at least 1".into(),
        ));
    }
    check_coefficients(adim, mdim, f)?;
    let vals = f.values();
    let d = &pair.derivation;
    let tuples = pow(adim, n);
    let mut table = Vec::with_capacity(tuples);
    let mut args = vec![0; n];
    for jj in 0..tuples {
        let j = decode(jj, n, adim);
        let mut out = rep.phi.apply(&vals[jj]);
        for o in out.iter_mut() {
            *o = -&*o;
        }
        for slot in 0..n {
            args.copy_from_slice(&j);
            for k in 0..adim {
                let c = &d[(k, j[slot])];
                if c.is_zero() {
                    continue;
                }
                args[slot] = k;
                for (o, x) in out.iter_mut().zip(&vals[encode(&args, adim)]) {
                    o.add_product(c, x);
                }
            }
        }
        table.push(out);
    }
    Ok(Cochain::from_value_table(n, adim, mdim, table))
}

/// `∂(f) = (δ_H f, −δf)` in degree 1 and `∂(f, f̄) = (δ_H f, δ_H f̄ + (−1)^n δf)` above.
pub fn assder_d(pair: &AssDerPair, rep: &RepPair, c: &AssDerCochain) -> Result<AssDerCochain> {
    let n = c.degree();
    let top = hochschild_d(pair, rep, &c.top)?;
    let delta = delta_op(pair, rep, &c.top)?;
    let tail = match &c.tail {
        None => delta.neg(),
        Some(t) => hochschild_d(pair, rep, t)?.add(&delta.scale(&Scalar::sign(n)))?,
    };
    AssDerCochain::new(top, Some(tail))
}

fn require_adjoint(f: &Cochain) -> Result<()> {
    if !f.is_adjoint() {
        return Err(Error::Shape("bracket operations need adjoint-valued cochains".into()));
    }
    if f.degree() == 0 {
        return Err(Error::Shape(
            "bracket operations need cochains of degree at least 1".into(),
        ));
    }
    Ok(())
}

/// Gerstenhaber circle product
/// `(f ∘ g)(a_1..a_{m+n-1}) = sum_i (−1)^{(i−1)(n−1)} f(a_1..a_{i−1}, g(a_i..a_{i+n−1}), ..)`.
pub fn circle_product(f: &Cochain, g: &Cochain) -> Result<Cochain> {
    require_adjoint(f)?;
    require_adjoint(g)?;
    if f.adim() != g.adim() {
        return Err(Error::Shape("circle product of cochains on different algebras".into()));
    }
    let (m, n, dim) = (f.degree(), g.degree(), f.adim());
    let fv = f.values();
    let gv = g.values();
    let deg = m + n - 1;
    let tuples = pow(dim, deg);
    let mut table = Vec::with_capacity(tuples);
    let mut args = vec![0; m];
    for jj in 0..tuples {
        let j = decode(jj, deg, dim);
        let mut out = vec![Scalar::zero(); dim];
        for i in 0..m {
            let sign = Scalar::sign(i * (n - 1));
            let inner = &gv[encode(&j[i..i + n], dim)];
            args[..i].copy_from_slice(&j[..i]);
            args[i + 1..].copy_from_slice(&j[i + n..]);
            for (k, x) in inner.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                args[i] = k;
                let w = x * &sign;
                for (o, y) in out.iter_mut().zip(&fv[encode(&args, dim)]) {
                    o.add_product(&w, y);
                }
            }
        }
        table.push(out);
    }
    Ok(Cochain::from_value_table(deg, dim, dim, table))
}

/// `[f, g] = f ∘ g − (−1)^{(m−1)(n−1)} g ∘ f`.
pub fn gerstenhaber_bracket(f: &Cochain, g: &Cochain) -> Result<Cochain> {
    let fg = circle_product(f, g)?;
    let gf = circle_product(g, f)?;
    let sign = Scalar::sign((f.degree() - 1) * (g.degree() - 1));
    fg.sub(&gf.scale(&sign))
}

/// `⟦(f, f̄), (g, ḡ)⟧ = ([f, g], (−1)^{m+1}[f, ḡ] + [f̄, g])`, absent tails read as zero.
pub fn assder_bracket(c1: &AssDerCochain, c2: &AssDerCochain) -> Result<AssDerCochain> {
    let (m, n) = (c1.degree(), c2.degree());
    let top = gerstenhaber_bracket(&c1.top, &c2.top)?;
    if m + n - 1 == 1 {
        return AssDerCochain::new(top, None);
    }
    let dim = c1.adim();
    let mut tail = Cochain::zero(m + n - 2, dim, dim);
    if let Some(g_bar) = &c2.tail {
        tail = tail.add(&gerstenhaber_bracket(&c1.top, g_bar)?.scale(&Scalar::sign(m + 1)))?;
    }
    if let Some(f_bar) = &c1.tail {
        tail = tail.add(&gerstenhaber_bracket(f_bar, &c2.top)?)?;
    }
    AssDerCochain::new(top, Some(tail))
}

/// The AssDer pair as a degree-2 AssDer cochain `(μ, φ_A)`.
pub fn structure_cochain(pair: &AssDerPair) -> AssDerCochain {
    AssDerCochain {
        top: Cochain::from_algebra(&pair.algebra),
        tail: Some(Cochain::from_matrix(&pair.derivation)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MCReport {
    /// `⟦(μ, φ), (μ, φ)⟧`.
    pub bracket: AssDerCochain,
    /// True iff the bracket vanishes.
    pub is_maurer_cartan: bool,
    /// Associativity and Leibniz residuals from the direct validators.
    pub validators: ValidationReport,
}

impl MCReport {
    /// The bracket test and the direct validators reach the same verdict.
    pub fn consistent(&self) -> bool {
        self.is_maurer_cartan == self.validators.is_valid()
    }
}

/// Maurer–Cartan test for `(μ, φ_A)`. Unit laws are not part of the
/// equation, so only associativity and Leibniz enter the comparison.
pub fn mc_check(pair: &AssDerPair) -> MCReport {
    let c = structure_cochain(pair);
    let bracket = assder_bracket(&c, &c).expect("structure cochain is adjoint-valued");
    let is_maurer_cartan = bracket.is_zero();
    let plain = Algebra::new(pair.dim(), pair.algebra.structure().to_vec()).expect("same shape");
    let mut validators = plain.validate().with_prefix("algebra");
    validators.merge(pair.validate_derivation().with_prefix("derivation"));
    MCReport {
        bracket,
        is_maurer_cartan,
        validators,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::adjoint_rep;
    use crate::scalar::q;

    fn dual_numbers(phi: &[&[i64]]) -> AssDerPair {
        let alg = Algebra::from_products(2, &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1))]).unwrap();
        AssDerPair::new(alg, Matrix::from_ints(phi)).unwrap()
    }

    fn euler_pair() -> AssDerPair {
        dual_numbers(&[&[0, 0], &[0, 1]])
    }

    #[test]
    fn tuple_codec_round_trip() {
        for idx in 0..27 {
            assert_eq!(encode(&decode(idx, 3, 3), 3), idx);
        }
        assert_eq!(decode(5, 3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn hochschild_of_identity_is_product() {
        let pair = euler_pair();
        let rep = adjoint_rep(&pair);
        let d = hochschild_d(&pair, &rep, &Cochain::identity(2)).unwrap();
        assert_eq!(d, Cochain::from_algebra(&pair.algebra));
    }

    #[test]
    fn hochschild_and_delta_on_dual_numbers() {
        let pair = euler_pair();
        let rep = adjoint_rep(&pair);
        // f(1) = 0, f(x) = 1
        let f = Cochain::from_matrix(&Matrix::from_ints(&[&[0, 1], &[0, 0]]));
        let d = hochschild_d(&pair, &rep, &f).unwrap();
        assert_eq!(d.value(&[1, 1]), vec![q(0), q(2)]);
        // every term of (δf)(1, 1) contains f(1) = 0
        assert_eq!(d.value(&[0, 0]), vec![q(0), q(0)]);
        assert_eq!(d.value(&[0, 1]), vec![q(0), q(0)]);
        let delta = delta_op(&pair, &rep, &f).unwrap();
        assert_eq!(delta.value(&[1]), vec![q(1), q(0)]);
        assert_eq!(delta.value(&[0]), vec![q(0), q(0)]);
        let c = AssDerCochain::new(f, None).unwrap();
        let dc = assder_d(&pair, &rep, &c).unwrap();
        assert_eq!(dc.top, d);
        assert_eq!(dc.tail.unwrap().value(&[1]), vec![q(-1), q(0)]);
        assert!(delta_op(&pair, &rep, &Cochain::zero(0, 2, 2)).is_err());
    }

    #[test]
    fn delta_of_derivation_vanishes_on_adjoint() {
        let pair = euler_pair();
        let rep = adjoint_rep(&pair);
        let phi = Cochain::from_matrix(&pair.derivation);
        assert!(delta_op(&pair, &rep, &phi).unwrap().is_zero());
    }

    #[test]
    fn circle_identities() {
        let pair = euler_pair();
        let mu = Cochain::from_algebra(&pair.algebra);
        let id = Cochain::identity(2);
        assert_eq!(circle_product(&mu, &id).unwrap(), mu.scale(&q(2)));
        assert_eq!(circle_product(&id, &mu).unwrap(), mu);
        let mm = circle_product(&mu, &mu).unwrap();
        assert!(mm.is_zero());
        assert_eq!(gerstenhaber_bracket(&id, &mu).unwrap(), mu.scale(&q(-1)));
        let phi = Cochain::from_matrix(&pair.derivation);
        assert!(gerstenhaber_bracket(&phi, &mu).unwrap().is_zero());
    }

    #[test]
    fn maurer_cartan_examples() {
        assert!(mc_check(&euler_pair()).is_maurer_cartan);
        assert!(mc_check(&dual_numbers(&[&[0, 0], &[0, 0]])).is_maurer_cartan);
        // x·x = x with φ(x) = x
        let alg =
            Algebra::from_products(2, &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1)), (1, 1, 1, q(1))]).unwrap();
        let pair = AssDerPair::new(alg, Matrix::from_ints(&[&[0, 0], &[0, 1]])).unwrap();
        let report = mc_check(&pair);
        assert!(!report.is_maurer_cartan);
        assert!(report.consistent());
        // tail = 2(φ(xx) − φ(x)x − xφ(x)) = 2(x − 2x) = −2x
        assert_eq!(report.bracket.tail.unwrap().value(&[1, 1]), vec![q(0), q(-2)]);
    }

    #[test]
    fn flat_round_trip() {
        let c = AssDerCochain::from_flat(2, 2, 1, &(0..6).map(q).collect::<Vec<_>>()).unwrap();
        assert_eq!(c.top.coeffs(), &[q(0), q(1), q(2), q(3)]);
        assert_eq!(c.flatten(), (0..6).map(q).collect::<Vec<_>>());
        assert!(AssDerCochain::new(Cochain::zero(1, 2, 2), Some(Cochain::zero(0, 2, 2))).is_err());
    }
}
