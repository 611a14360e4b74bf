//! Algebras, derivations, bimodules and the constructions built from them.
//!
//! Tensors are stored flat in row-major order: the structure tensor
//! `C[i][j][k]` (with `e_i e_j = sum_k C[i][j][k] e_k`) lives at
//! `(i * dim + j) * dim + k`, the left action `L[i][m][p]` at
//! `(i * mdim + m) * mdim + p`, the right action `R[m][i][p]` at
//! `(m * adim + i) * mdim + p`. Linear maps are [`Matrix`] values acting on
//! coordinate columns.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::ValidationReport;
use crate::scalar::Scalar;

fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_product(s, x);
    }
}

fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn basis(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

fn check_square(m: &Matrix, n: usize, what: &str) -> Result<()> {
    if m.shape() != (n, n) {
        return Err(Error::Shape(format!(
            "{what} must be {n}x{n}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Finite-dimensional algebra given by structure constants. Associativity is
/// checked by [`Algebra::validate`], never assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    structure: Vec<Scalar>,
    unit: Option<Vec<Scalar>>,
    labels: Option<Vec<String>>,
}

impl Algebra {
    pub fn new(dim: usize, structure: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Shape("algebra dimension must be positive".into()));
        }
        if structure.len() != dim * dim * dim {
            return Err(Error::Shape(format!(
                "structure tensor of a dim-{dim} algebra needs {} entries, got {}",
                dim * dim * dim,
                structure.len()
            )));
        }
        Ok(Algebra {
            dim,
            structure,
            unit: None,
            labels: None,
        })
    }

    /// Structure tensor from nested `[i][j][k]` arrays.
    pub fn from_nested(table: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let dim = table.len();
        for row in &table {
            if row.len() != dim || row.iter().any(|v| v.len() != dim) {
                return Err(Error::Shape(format!(
                    "structure tensor must have shape {dim}x{dim}x{dim}"
                )));
            }
        }
        Algebra::new(dim, table.into_iter().flatten().flatten().collect())
    }

    /// Builds an algebra from the nonzero products `e_i e_j = sum c e_k`.
    pub fn from_products(dim: usize, products: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut structure = vec![Scalar::zero(); dim * dim * dim];
        for (i, j, k, c) in products {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Shape(format!("product index ({i}, {j}, {k}) out of range")));
            }
            structure[(i * dim + j) * dim + k] += c;
        }
        Algebra::new(dim, structure)
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Algebra::new(dim, vec![Scalar::zero(); dim * dim * dim])
    }

    pub fn with_unit(mut self, unit: Vec<Scalar>) -> Result<Self> {
        if unit.len() != self.dim {
            return Err(Error::Shape("unit vector length must equal dim".into()));
        }
        self.unit = Some(unit);
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::Shape("one basis label per basis vector is required".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self) -> &[Scalar] {
        &self.structure
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.structure[start..start + self.dim]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                axpy(&mut out, &xy, self.basis_product(i, j));
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Associativity on every basis triple, plus the unit laws when a unit is declared.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut report = ValidationReport::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.mul(ij, &basis(n, k));
                    let right = self.mul(&basis(n, i), self.basis_product(j, k));
                    report.check("associativity", &[i, j, k], sub_vec(&left, &right));
                }
            }
        }
        if let Some(u) = &self.unit {
            for j in 0..n {
                let e = basis(n, j);
                report.check("unit-left", &[j], sub_vec(&self.mul(u, &e), &e));
                report.check("unit-right", &[j], sub_vec(&self.mul(&e, u), &e));
            }
        }
        report
    }

    /// The same algebra written in the basis `e'_i = sum_k P[k][i] e_k`.
    pub fn transport(&self, p: &Matrix) -> Result<Algebra> {
        check_square(p, self.dim, "change of basis")?;
        let p_inv = p
            .inverse()
            .ok_or_else(|| Error::Input("change of basis is singular".into()))?;
        let n = self.dim;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|i| p.column(i)).collect();
        let mut structure = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                structure.extend(p_inv.apply(&self.mul(&cols[i], &cols[j])));
            }
        }
        let mut out = Algebra::new(n, structure)?;
        if let Some(u) = &self.unit {
            out.unit = Some(p_inv.apply(u));
        }
        Ok(out)
    }
}

/// An algebra together with a linear endomorphism intended to be a derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssDerPair {
    pub algebra: Algebra,
    pub derivation: Matrix,
}

impl AssDerPair {
    pub fn new(algebra: Algebra, derivation: Matrix) -> Result<Self> {
        check_square(&derivation, algebra.dim(), "derivation matrix")?;
        Ok(AssDerPair { algebra, derivation })
    }

    /// The pair with the zero derivation.
    pub fn plain(algebra: Algebra) -> Self {
        let n = algebra.dim();
        AssDerPair {
            algebra,
            derivation: Matrix::zeros(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn phi(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.derivation.apply(a)
    }

    /// Leibniz rule on basis pairs.
    pub fn validate_derivation(&self) -> ValidationReport {
        let n = self.dim();
        let alg = &self.algebra;
        let mut report = ValidationReport::new();
        for i in 0..n {
            let ei = basis(n, i);
            let di = self.phi(&ei);
            for j in 0..n {
                let ej = basis(n, j);
                let lhs = self.phi(alg.basis_product(i, j));
                let rhs = add_vec(&alg.mul(&di, &ej), &alg.mul(&ei, &self.phi(&ej)));
                report.check("leibniz", &[i, j], sub_vec(&lhs, &rhs));
            }
        }
        report
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = self.algebra.validate().with_prefix("algebra");
        report.merge(self.validate_derivation().with_prefix("derivation"));
        report
    }

    pub fn transport(&self, p: &Matrix) -> Result<AssDerPair> {
        let algebra = self.algebra.transport(p)?;
        let p_inv = p.inverse().expect("checked by Algebra::transport");
        Ok(AssDerPair {
            algebra,
            derivation: p_inv.mul(&self.derivation).mul(p),
        })
    }
}

/// Left and right actions of an algebra of dimension `adim` on a space of
/// dimension `mdim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    adim: usize,
    mdim: usize,
    left: Vec<Scalar>,
    right: Vec<Scalar>,
}

impl Bimodule {
    pub fn new(adim: usize, mdim: usize, left: Vec<Scalar>, right: Vec<Scalar>) -> Result<Self> {
        let len = adim * mdim * mdim;
        if mdim == 0 {
            return Err(Error::Shape("module dimension must be positive".into()));
        }
        if left.len() != len || right.len() != len {
            return Err(Error::Shape(format!(
                "action tensors need {len} entries each, got {} and {}",
                left.len(),
                right.len()
            )));
        }
        Ok(Bimodule {
            adim,
            mdim,
            left,
            right,
        })
    }

    /// Both actions zero.
    pub fn trivial(adim: usize, mdim: usize) -> Result<Self> {
        let len = adim * mdim * mdim;
        Bimodule::new(adim, mdim, vec![Scalar::zero(); len], vec![Scalar::zero(); len])
    }

    pub fn adim(&self) -> usize {
        self.adim
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn left_tensor(&self) -> &[Scalar] {
        &self.left
    }

    pub fn right_tensor(&self) -> &[Scalar] {
        &self.right
    }

    pub fn is_trivial(&self) -> bool {
        self.left.iter().chain(&self.right).all(Scalar::is_zero)
    }

    /// Coordinates of `e_i f_m`.
    pub fn basis_left(&self, i: usize, m: usize) -> &[Scalar] {
        let start = (i * self.mdim + m) * self.mdim;
        &self.left[start..start + self.mdim]
    }

    /// Coordinates of `f_m e_i`.
    pub fn basis_right(&self, m: usize, i: usize) -> &[Scalar] {
        let start = (m * self.adim + i) * self.mdim;
        &self.right[start..start + self.mdim]
    }

    pub fn act_left(&self, a: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.mdim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in m.iter().enumerate() {
                if !y.is_zero() {
                    axpy(&mut out, &(x * y), self.basis_left(i, k));
                }
            }
        }
        out
    }

    pub fn act_right(&self, m: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.mdim];
        for (k, y) in m.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            for (i, x) in a.iter().enumerate() {
                if !x.is_zero() {
                    axpy(&mut out, &(x * y), self.basis_right(k, i));
                }
            }
        }
        out
    }

    /// Matrix of `m -> e_i m`.
    pub fn left_matrix(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.mdim, self.mdim, |p, m| self.basis_left(i, m)[p].clone())
    }

    /// Matrix of `m -> m e_i`.
    pub fn right_matrix(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.mdim, self.mdim, |p, m| self.basis_right(m, i)[p].clone())
    }

    /// Bimodule axioms on basis triples.
    pub fn validate(&self, alg: &Algebra) -> ValidationReport {
        let mut report = ValidationReport::new();
        if alg.dim() != self.adim {
            report.check("shape", &[alg.dim(), self.adim], vec![Scalar::one()]);
            return report;
        }
        let (n, md) = (self.adim, self.mdim);
        for i in 0..n {
            let ei = basis(n, i);
            for j in 0..n {
                let ej = basis(n, j);
                let eij = alg.basis_product(i, j);
                for m in 0..md {
                    let fm = basis(md, m);
                    // (ab)m = a(bm)
                    let lhs = self.act_left(eij, &fm);
                    let rhs = self.act_left(&ei, self.basis_left(j, m));
                    report.check("bimodule-left", &[i, j, m], sub_vec(&lhs, &rhs));
                    // (am)b = a(mb), with a = e_i, b = e_j
                    let lhs = self.act_right(self.basis_left(i, m), &ej);
                    let rhs = self.act_left(&ei, self.basis_right(m, j));
                    report.check("bimodule-middle", &[i, m, j], sub_vec(&lhs, &rhs));
                    // (ma)b = m(ab)
                    let lhs = self.act_right(self.basis_right(m, i), &ej);
                    let rhs = self.act_right(&fm, eij);
                    report.check("bimodule-right", &[m, i, j], sub_vec(&lhs, &rhs));
                }
            }
        }
        report
    }

    pub fn transport(&self, p: &Matrix, q: &Matrix) -> Result<Bimodule> {
        check_square(p, self.adim, "algebra change of basis")?;
        check_square(q, self.mdim, "module change of basis")?;
        let q_inv = q
            .inverse()
            .ok_or_else(|| Error::Input("module change of basis is singular".into()))?;
        let (n, md) = (self.adim, self.mdim);
        let mut left = Vec::with_capacity(n * md * md);
        let mut right = Vec::with_capacity(n * md * md);
        for i in 0..n {
            for m in 0..md {
                left.extend(q_inv.apply(&self.act_left(&p.column(i), &q.column(m))));
            }
        }
        for m in 0..md {
            for i in 0..n {
                right.extend(q_inv.apply(&self.act_right(&q.column(m), &p.column(i))));
            }
        }
        Bimodule::new(n, md, left, right)
    }
}

/// A bimodule together with its module map `phi_M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepPair {
    pub bimodule: Bimodule,
    pub phi: Matrix,
}

impl RepPair {
    pub fn new(bimodule: Bimodule, phi: Matrix) -> Result<Self> {
        check_square(&phi, bimodule.mdim(), "module map")?;
        Ok(RepPair { bimodule, phi })
    }

    /// Zero actions with the given module map.
    pub fn trivial(adim: usize, phi: Matrix) -> Result<Self> {
        let bimodule = Bimodule::trivial(adim, phi.rows())?;
        RepPair::new(bimodule, phi)
    }

    pub fn mdim(&self) -> usize {
        self.bimodule.mdim()
    }

    pub fn adim(&self) -> usize {
        self.bimodule.adim()
    }

    pub fn transport(&self, p: &Matrix, q: &Matrix) -> Result<RepPair> {
        let bimodule = self.bimodule.transport(p, q)?;
        let q_inv = q.inverse().expect("checked by Bimodule::transport");
        Ok(RepPair {
            bimodule,
            phi: q_inv.mul(&self.phi).mul(q),
        })
    }
}

/// Bimodule axioms plus compatibility of `phi_M` with `phi_A` on both sides.
pub fn validate_representation(pair: &AssDerPair, rep: &RepPair) -> ValidationReport {
    let mut report = ValidationReport::new();
    let (n, md) = (pair.dim(), rep.mdim());
    if rep.adim() != n {
        report.check("shape", &[n, rep.adim()], vec![Scalar::one()]);
        return report;
    }
    report.merge(rep.bimodule.validate(&pair.algebra));
    let bm = &rep.bimodule;
    for i in 0..n {
        let ei = basis(n, i);
        let dai = pair.phi(&ei);
        for m in 0..md {
            let fm = basis(md, m);
            let dm = rep.phi.apply(&fm);
            let lhs = rep.phi.apply(bm.basis_left(i, m));
            let rhs = add_vec(&bm.act_left(&dai, &fm), &bm.act_left(&ei, &dm));
            report.check("rep-1", &[i, m], sub_vec(&lhs, &rhs));
            let lhs = rep.phi.apply(bm.basis_right(m, i));
            let rhs = add_vec(&bm.act_right(&dm, &ei), &bm.act_right(&fm, &dai));
            report.check("rep-2", &[m, i], sub_vec(&lhs, &rhs));
        }
    }
    report
}

pub fn adjoint_rep(pair: &AssDerPair) -> RepPair {
    let n = pair.dim();
    let structure = pair.algebra.structure().to_vec();
    // L[i][m][p] = C[i][m][p]; R[m][i][p] = C[m][i][p]: both are the structure tensor.
    let bimodule = Bimodule {
        adim: n,
        mdim: n,
        left: structure.clone(),
        right: structure,
    };
    RepPair {
        bimodule,
        phi: pair.derivation.clone(),
    }
}

/// The dual representation on `M*` in the dual basis, with module map `-phi_M^T`.
pub fn dual_rep(rep: &RepPair) -> RepPair {
    let bm = &rep.bimodule;
    let (n, md) = (bm.adim, bm.mdim);
    let mut left = vec![Scalar::zero(); n * md * md];
    let mut right = vec![Scalar::zero(); n * md * md];
    for i in 0..n {
        for q in 0..md {
            for m in 0..md {
                // (e_i f^q)(f_m) = f^q(f_m e_i)
                left[(i * md + q) * md + m] = bm.basis_right(m, i)[q].clone();
                // (f^q e_i)(f_m) = f^q(e_i f_m)
                right[(q * n + i) * md + m] = bm.basis_left(i, m)[q].clone();
            }
        }
    }
    RepPair {
        bimodule: Bimodule {
            adim: n,
            mdim: md,
            left,
            right,
        },
        phi: rep.phi.transpose().neg(),
    }
}

/// `A ⊕ M` with product `(a, m)(b, n) = (ab, an + mb)` and block-diagonal derivation.
pub fn semidirect_product(pair: &AssDerPair, rep: &RepPair) -> Result<AssDerPair> {
    let (n, md) = (pair.dim(), rep.mdim());
    if rep.adim() != n {
        return Err(Error::Shape("representation does not match the algebra".into()));
    }
    let total = n + md;
    let alg = &pair.algebra;
    let bm = &rep.bimodule;
    let mut structure = vec![Scalar::zero(); total * total * total];
    let at = |i: usize, j: usize, k: usize| (i * total + j) * total + k;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                structure[at(i, j, k)] = alg.coeff(i, j, k).clone();
            }
        }
        for m in 0..md {
            for p in 0..md {
                structure[at(i, n + m, n + p)] = bm.basis_left(i, m)[p].clone();
                structure[at(n + m, i, n + p)] = bm.basis_right(m, i)[p].clone();
            }
        }
    }
    let mut algebra = Algebra::new(total, structure)?;
    if let Some(u) = alg.unit() {
        let mut candidate = u.to_vec();
        candidate.resize(total, Scalar::zero());
        let with_unit = algebra.clone().with_unit(candidate)?;
        if with_unit.validate().is_valid() {
            algebra = with_unit;
        }
    }
    let derivation = Matrix::from_fn(total, total, |r, c| {
        if r < n && c < n {
            pair.derivation[(r, c)].clone()
        } else if r >= n && c >= n {
            rep.phi[(r - n, c - n)].clone()
        } else {
            Scalar::zero()
        }
    });
    AssDerPair::new(algebra, derivation)
}

/// Words over `0..vdim` of length `1..=cap`, ordered by length then lexicographically.
pub fn tensor_words(vdim: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..cap {
        let mut next = Vec::new();
        for w in &layer {
            for v in 0..vdim {
                let mut w2 = w.clone();
                w2.push(v);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Reduced tensor algebra on `K^vdim` with words longer than `cap` set to
/// zero, and the derivation induced by `d` acting on each letter.
pub fn truncated_tensor_pair(vdim: usize, d: &Matrix, cap: usize) -> Result<AssDerPair> {
    if cap < 1 {
        return Err(Error::Input("truncation cap must be at least 1".into()));
    }
    if vdim == 0 {
        return Err(Error::Input("generator space must be nonzero".into()));
    }
    check_square(d, vdim, "generator derivation")?;
    let words = tensor_words(vdim, cap);
    let index: std::collections::HashMap<Vec<usize>, usize> =
        words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let dim = words.len();
    let mut products = Vec::new();
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if u.len() + v.len() <= cap {
                let mut w = u.clone();
                w.extend(v);
                products.push((i, j, index[&w], Scalar::one()));
            }
        }
    }
    let algebra = Algebra::from_products(dim, &products)?.with_labels(
        words
            .iter()
            .map(|w| w.iter().map(|v| format!("v{v}")).collect::<Vec<_>>().join("*"))
            .collect(),
    )?;
    let mut derivation = Matrix::zeros(dim, dim);
    for (c, w) in words.iter().enumerate() {
        for pos in 0..w.len() {
            for k in 0..vdim {
                let coeff = &d[(k, w[pos])];
                if coeff.is_zero() {
                    continue;
                }
                let mut w2 = w.clone();
                w2[pos] = k;
                derivation[(index[&w2], c)] += coeff;
            }
        }
    }
    AssDerPair::new(algebra, derivation)
}

/// Lie algebra by structure constants `[e_i, e_j] = sum_k B[i][j][k] e_k`, with a derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieDerPair {
    dim: usize,
    bracket: Vec<Scalar>,
    pub derivation: Matrix,
}

impl LieDerPair {
    pub fn new(dim: usize, bracket: Vec<Scalar>, derivation: Matrix) -> Result<Self> {
        if bracket.len() != dim * dim * dim {
            return Err(Error::Shape("bracket tensor must have dim^3 entries".into()));
        }
        check_square(&derivation, dim, "derivation matrix")?;
        Ok(LieDerPair {
            dim,
            bracket,
            derivation,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_tensor(&self) -> &[Scalar] {
        &self.bracket
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.bracket[start..start + self.dim]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    axpy(&mut out, &(a * b), self.basis_bracket(i, j));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(Scalar::is_zero)
    }

    /// Antisymmetry, Jacobi, and the derivation property on basis elements.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut report = ValidationReport::new();
        for i in 0..n {
            for j in 0..n {
                let sym = add_vec(self.basis_bracket(i, j), self.basis_bracket(j, i));
                report.check("antisymmetry", &[i, j], sym);
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ek = basis(n, k);
                    let ei = basis(n, i);
                    let ej = basis(n, j);
                    let t1 = self.bracket(&ei, self.basis_bracket(j, k));
                    let t2 = self.bracket(&ej, self.basis_bracket(k, i));
                    let t3 = self.bracket(&ek, self.basis_bracket(i, j));
                    report.check("jacobi", &[i, j, k], add_vec(&add_vec(&t1, &t2), &t3));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ei = basis(n, i);
                let ej = basis(n, j);
                let lhs = self.derivation.apply(self.basis_bracket(i, j));
                let rhs = add_vec(
                    &self.bracket(&self.derivation.apply(&ei), &ej),
                    &self.bracket(&ei, &self.derivation.apply(&ej)),
                );
                report.check("derivation", &[i, j], sub_vec(&lhs, &rhs));
            }
        }
        report
    }
}

/// Commutator bracket `[a, b] = ab - ba` with the same derivation.
pub fn commutator_liepair(pair: &AssDerPair) -> LieDerPair {
    let n = pair.dim();
    let alg = &pair.algebra;
    let mut bracket = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            bracket.extend(sub_vec(alg.basis_product(i, j), alg.basis_product(j, i)));
        }
    }
    LieDerPair {
        dim: n,
        bracket,
        derivation: pair.derivation.clone(),
    }
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

    #[test]
    fn dual_numbers_associative() {
        assert!(dual_numbers().validate().is_valid());
    }

    #[test]
    fn idempotent_table_associative() {
        let alg = Algebra::from_products(2, &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1)), (1, 1, 1, q(1))])
            .unwrap()
            .with_unit(vec![q(1), q(0)])
            .unwrap();
        assert!(alg.validate().is_valid());
    }

    #[test]
    fn broken_table_reports_triple() {
        let alg = Algebra::from_products(2, &[(0, 0, 0, q(1)), (1, 0, 1, q(1)), (1, 1, 0, q(1))]).unwrap();
        let report = alg.validate();
        assert!(!report.is_valid());
        assert!(report.find("associativity", &[1, 0, 1]).is_some());
    }

    #[test]
    fn derivation_checks() {
        let alg = dual_numbers();
        assert!(AssDerPair::plain(alg.clone()).validate_derivation().is_valid());
        assert!(AssDerPair::new(alg.clone(), euler())
            .unwrap()
            .validate_derivation()
            .is_valid());
        let bad = AssDerPair::new(alg, Matrix::from_ints(&[&[0, 0], &[1, 0]])).unwrap();
        let report = bad.validate_derivation();
        let v = report.find("leibniz", &[0, 0]).expect("fails at (1,1)");
        assert_eq!(v.residual, vec![q(0), q(-1)]);
    }

    #[test]
    fn representation_checks() {
        let pair = AssDerPair::new(dual_numbers(), euler()).unwrap();
        let adj = adjoint_rep(&pair);
        assert!(validate_representation(&pair, &adj).is_valid());
        let triv = RepPair::trivial(2, Matrix::from_ints(&[&[3]])).unwrap();
        assert!(validate_representation(&pair, &triv).is_valid());
        let mut broken = adj.clone();
        broken.phi = Matrix::zeros(2, 2);
        let report = validate_representation(&pair, &broken);
        assert!(report.find("rep-1", &[1, 0]).is_some());
    }

    #[test]
    fn coadjoint_and_biduality() {
        let pair = AssDerPair::new(dual_numbers(), euler()).unwrap();
        let adj = adjoint_rep(&pair);
        let co = dual_rep(&adj);
        assert_eq!(co.phi, Matrix::from_ints(&[&[0, 0], &[0, -1]]));
        assert!(validate_representation(&pair, &co).is_valid());
        assert_eq!(dual_rep(&co), adj);
    }

    #[test]
    fn semidirect_of_rationals_is_dual_numbers() {
        let rationals = Algebra::from_products(1, &[(0, 0, 0, q(1))]).unwrap();
        let pair = AssDerPair::plain(rationals);
        let rep = RepPair::new(
            Bimodule::new(1, 1, vec![q(1)], vec![q(1)]).unwrap(),
            Matrix::zeros(1, 1),
        )
        .unwrap();
        let sd = semidirect_product(&pair, &rep).unwrap();
        assert_eq!(sd.algebra.structure(), dual_numbers().structure());
        assert!(sd.validate().is_valid());
    }

    #[test]
    fn truncated_tensor_examples() {
        let p = truncated_tensor_pair(1, &Matrix::from_ints(&[&[1]]), 2).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.algebra.basis_product(0, 0), &[q(0), q(1)]);
        assert_eq!(p.algebra.basis_product(1, 0), &[q(0), q(0)]);
        assert_eq!(p.derivation, Matrix::from_ints(&[&[1, 0], &[0, 2]]));
        assert!(p.validate().is_valid());

        let p = truncated_tensor_pair(2, &Matrix::from_ints(&[&[1, 0], &[0, 2]]), 2).unwrap();
        assert_eq!(p.dim(), 6);
        let diag: Vec<Scalar> = (0..6).map(|i| p.derivation[(i, i)].clone()).collect();
        assert_eq!(diag, vec![q(1), q(2), q(2), q(3), q(3), q(4)]);
        assert!(p.validate().is_valid());
        assert!(truncated_tensor_pair(1, &Matrix::zeros(1, 1), 0).is_err());
    }

    #[test]
    fn upper_triangular_commutator() {
        // basis e11, e12, e22
        let alg =
            Algebra::from_products(3, &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 2, 1, q(1)), (2, 2, 2, q(1))]).unwrap();
        assert!(alg.validate().is_valid());
        let lie = commutator_liepair(&AssDerPair::plain(alg));
        assert!(!lie.is_abelian());
        assert!(lie.validate().is_valid());
        let lie = commutator_liepair(&AssDerPair::plain(dual_numbers()));
        assert!(lie.is_abelian());
    }
}
