//! The Lie side: Chevalley-Eilenberg and LieDer complexes, the
//! Nijenhuis-Richardson bracket, and skew-symmetrization of Hochschild
//! cochains.

use crate::algebra::{validate_representation, AssDerPair, LieDerPair, RepPair};
use crate::cochain::{assder_d, decode, AssDerCochain, Cochain};
use crate::complex::{cohomology_space, CohomologySpace, Limits};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseMatrix};
use crate::report::ValidationReport;
use crate::scalar::Scalar;

/// Permutations of `0..n` in lexicographic order, each with its sign.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        out.push((perm.clone(), parity_sign(&perm)));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).expect("successor exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

fn parity_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// `(p, q)`-shuffles of `0..p+q` as (first block, rest, sign), lexicographic in the first block.
pub fn shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, Vec<usize>, i64)> {
    combinations(p + q, p)
        .into_iter()
        .map(|first| {
            let rest: Vec<usize> = (0..p + q).filter(|i| !first.contains(i)).collect();
            let mut perm = first.clone();
            perm.extend(&rest);
            let s = parity_sign(&perm);
            (first, rest, s)
        })
        .collect()
}

/// An alternating cochain `∧^n g -> M`, stored as a full tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieCochain(Cochain);

impl LieCochain {
    /// Rejects tensors that are not alternating.
    pub fn new(c: Cochain) -> Result<Self> {
        let n = c.degree();
        for j in 0..c.tuple_count() {
            let t = decode(j, n, c.adim());
            let v = c.value_at(j);
            for i in 1..n {
                let mut s = t.clone();
                s.swap(i - 1, i);
                let w = c.value(&s);
                if t[i - 1] == t[i] && v.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Input(format!(
                        "alternating cochain is nonzero on repeated tuple {t:?}"
                    )));
                }
                if v.iter().zip(&w).any(|(a, b)| !(a + b).is_zero()) {
                    return Err(Error::Input(format!("cochain is not antisymmetric at {t:?}")));
                }
            }
        }
        Ok(LieCochain(c))
    }

    pub fn zero(degree: usize, adim: usize, mdim: usize) -> Self {
        LieCochain(Cochain::zero(degree, adim, mdim))
    }

    /// The alternating cochain with `f(e_I) = value` on one increasing tuple, extended by sign.
    pub fn from_increasing(degree: usize, adim: usize, mdim: usize, values: &[(Vec<usize>, Vec<Scalar>)]) -> Self {
        let mut c = Cochain::zero(degree, adim, mdim);
        let perms = signed_permutations(degree);
        for (tuple, value) in values {
            for (perm, sign) in &perms {
                let t: Vec<usize> = perm.iter().map(|&i| tuple[i]).collect();
                for (p, x) in value.iter().enumerate() {
                    c.set(p, &t, x.signed(*sign));
                }
            }
        }
        LieCochain(c)
    }

    pub fn as_cochain(&self) -> &Cochain {
        &self.0
    }

    pub fn into_cochain(self) -> Cochain {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn adim(&self) -> usize {
        self.0.adim()
    }

    pub fn mdim(&self) -> usize {
        self.0.mdim()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self, tuple: &[usize]) -> Vec<Scalar> {
        self.0.value(tuple)
    }

    /// Coordinates on increasing tuples: index `p * C(adim, n) + rank(I)`.
    pub fn skew_coords(&self) -> Vec<Scalar> {
        let tuples = combinations(self.adim(), self.degree());
        let mut out = Vec::with_capacity(tuples.len() * self.mdim());
        let values: Vec<Vec<Scalar>> = tuples.iter().map(|t| self.value(t)).collect();
        for p in 0..self.mdim() {
            for v in &values {
                out.push(v[p].clone());
            }
        }
        out
    }

    pub fn from_skew_coords(degree: usize, adim: usize, mdim: usize, coords: &[Scalar]) -> Result<Self> {
        let tuples = combinations(adim, degree);
        if coords.len() != tuples.len() * mdim {
            return Err(Error::Shape("wrong number of skew coordinates".into()));
        }
        let values: Vec<(Vec<usize>, Vec<Scalar>)> = tuples
            .iter()
            .enumerate()
            .map(|(r, t)| {
                (
                    t.clone(),
                    (0..mdim).map(|p| coords[p * tuples.len() + r].clone()).collect(),
                )
            })
            .collect();
        Ok(Self::from_increasing(degree, adim, mdim, &values))
    }

    pub fn add(&self, other: &LieCochain) -> Result<LieCochain> {
        Ok(LieCochain(self.0.add(&other.0)?))
    }

    pub fn sub(&self, other: &LieCochain) -> Result<LieCochain> {
        Ok(LieCochain(self.0.sub(&other.0)?))
    }

    pub fn scale(&self, s: &Scalar) -> LieCochain {
        LieCochain(self.0.scale(s))
    }

    pub fn neg(&self) -> LieCochain {
        LieCochain(self.0.neg())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieDerCochain {
    pub top: LieCochain,
    pub tail: Option<LieCochain>,
}

impl LieDerCochain {
    pub fn new(top: LieCochain, tail: Option<LieCochain>) -> Result<Self> {
        let n = top.degree();
        match (&tail, n) {
            (None, 1) => {}
            (Some(t), n) if n >= 2 && t.degree() == n - 1 && t.adim() == top.adim() && t.mdim() == top.mdim() => {}
            _ => {
                return Err(Error::Shape(format!(
                    "LieDer cochain of degree {n} has a mismatched tail"
                )))
            }
        }
        Ok(LieDerCochain { top, tail })
    }

    pub fn zero(degree: usize, adim: usize, mdim: usize) -> Self {
        LieDerCochain {
            top: LieCochain::zero(degree, adim, mdim),
            tail: (degree >= 2).then(|| LieCochain::zero(degree - 1, adim, mdim)),
        }
    }

    pub fn degree(&self) -> usize {
        self.top.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.top.is_zero() && self.tail.as_ref().is_none_or(LieCochain::is_zero)
    }

    pub fn skew_coords(&self) -> Vec<Scalar> {
        let mut v = self.top.skew_coords();
        if let Some(t) = &self.tail {
            v.extend(t.skew_coords());
        }
        v
    }

    pub fn from_skew_coords(degree: usize, adim: usize, mdim: usize, coords: &[Scalar]) -> Result<Self> {
        let k = combinations(adim, degree).len() * mdim;
        if coords.len() < k {
            return Err(Error::Shape("wrong number of skew coordinates".into()));
        }
        let top = LieCochain::from_skew_coords(degree, adim, mdim, &coords[..k])?;
        let tail = if degree >= 2 {
            Some(LieCochain::from_skew_coords(degree - 1, adim, mdim, &coords[k..])?)
        } else if coords.len() != k {
            return Err(Error::Shape("wrong number of skew coordinates".into()));
        } else {
            None
        };
        Self::new(top, tail)
    }

    pub fn sub(&self, other: &LieDerCochain) -> Result<LieDerCochain> {
        let tail = match (&self.tail, &other.tail) {
            (Some(a), Some(b)) => Some(a.sub(b)?),
            (None, None) => None,
            _ => return Err(Error::Shape("LieDer cochains of different degree".into())),
        };
        Ok(LieDerCochain {
            top: self.top.sub(&other.top)?,
            tail,
        })
    }
}

/// A module over a LieDer pair: `ρ(e_i)` on `M` and a map `φ_M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieModule {
    actions: Vec<Matrix>,
    pub phi: Matrix,
}

impl LieModule {
    pub fn new(actions: Vec<Matrix>, phi: Matrix) -> Result<Self> {
        let m = phi.rows();
        if phi.cols() != m || actions.iter().any(|a| a.shape() != (m, m)) {
            return Err(Error::Shape(
                "Lie module maps must be square of the module dimension".into(),
            ));
        }
        Ok(LieModule { actions, phi })
    }

    /// `x · m = xm − mx`.
    pub fn from_rep(rep: &RepPair) -> Self {
        let bm = &rep.bimodule;
        let actions = (0..bm.adim())
            .map(|i| bm.left_matrix(i).sub(&bm.right_matrix(i)))
            .collect();
        LieModule {
            actions,
            phi: rep.phi.clone(),
        }
    }

    pub fn adjoint(lie: &LieDerPair) -> Self {
        let n = lie.dim();
        let actions = (0..n)
            .map(|i| Matrix::from_fn(n, n, |r, c| lie.basis_bracket(i, c)[r].clone()))
            .collect();
        LieModule {
            actions,
            phi: lie.derivation.clone(),
        }
    }

    pub fn adim(&self) -> usize {
        self.actions.len()
    }

    pub fn mdim(&self) -> usize {
        self.phi.rows()
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.actions[i]
    }

    /// `[ρ(x), ρ(y)] = ρ([x, y])` and `φ_M ρ(x) − ρ(x) φ_M = ρ(φ x)`.
    pub fn validate(&self, lie: &LieDerPair) -> ValidationReport {
        let mut report = ValidationReport::new();
        let n = lie.dim();
        let rho = |v: &[Scalar]| {
            v.iter()
                .enumerate()
                .fold(Matrix::zeros(self.mdim(), self.mdim()), |acc, (i, c)| {
                    acc.add(&self.actions[i].scale(c))
                })
        };
        for i in 0..n {
            for j in 0..n {
                let lhs = self.actions[i]
                    .mul(&self.actions[j])
                    .sub(&self.actions[j].mul(&self.actions[i]));
                let r = lhs.sub(&rho(lie.basis_bracket(i, j)));
                report.check("lie-module", &[i, j], r.data().to_vec());
            }
            let lhs = self.phi.mul(&self.actions[i]).sub(&self.actions[i].mul(&self.phi));
            let r = lhs.sub(&rho(&lie.derivation.column(i)));
            report.check("lie-rep", &[i], r.data().to_vec());
        }
        report
    }
}

fn check_shapes(lie: &LieDerPair, module: &LieModule, f: &LieCochain) -> Result<()> {
    if module.adim() != lie.dim() || f.adim() != lie.dim() || f.mdim() != module.mdim() {
        return Err(Error::Shape("Lie cochain does not match the pair and module".into()));
    }
    Ok(())
}

fn ce_value(lie: &LieDerPair, module: &LieModule, f: &LieCochain, t: &[usize]) -> Vec<Scalar> {
    let mdim = module.mdim();
    let n1 = t.len();
    let mut out = vec![Scalar::zero(); mdim];
    for i in 0..n1 {
        let rest: Vec<usize> = t.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
        let v = module.action(t[i]).apply(&f.value(&rest));
        let s = if i % 2 == 0 { 1 } else { -1 };
        for (o, x) in out.iter_mut().zip(&v) {
            *o += x.signed(s);
        }
    }
    for i in 0..n1 {
        for j in i + 1..n1 {
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            let rest: Vec<usize> = t
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .map(|(_, &x)| x)
                .collect();
            for (k, b) in lie.basis_bracket(t[i], t[j]).iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut args = vec![k];
                args.extend(&rest);
                let coef = b.signed(s);
                for (o, x) in out.iter_mut().zip(f.value(&args)) {
                    o.add_product(&coef, &x);
                }
            }
        }
    }
    out
}

/// Chevalley-Eilenberg differential.
pub fn ce_d(lie: &LieDerPair, module: &LieModule, f: &LieCochain) -> Result<LieCochain> {
    check_shapes(lie, module, f)?;
    let n = f.degree();
    Ok(LieCochain(Cochain::from_values(n + 1, lie.dim(), module.mdim(), |t| {
        ce_value(lie, module, f, t)
    })))
}

/// `δf = Σ_i f(.., φ x_i, ..) − φ_M f`.
pub fn lie_delta(lie: &LieDerPair, module: &LieModule, f: &LieCochain) -> Result<LieCochain> {
    check_shapes(lie, module, f)?;
    let n = f.degree();
    if n == 0 {
        return Err(Error::Input("δ is defined from degree 1".into()));
    }
    let phi = &lie.derivation;
    Ok(LieCochain(Cochain::from_values(n, lie.dim(), module.mdim(), |t| {
        let mut out: Vec<Scalar> = module.phi.apply(&f.value(t)).into_iter().map(|x| -x).collect();
        for i in 0..n {
            for k in 0..lie.dim() {
                let c = &phi[(k, t[i])];
                if c.is_zero() {
                    continue;
                }
                let mut s = t.to_vec();
                s[i] = k;
                for (o, x) in out.iter_mut().zip(f.value(&s)) {
                    o.add_product(c, &x);
                }
            }
        }
        out
    })))
}

/// `∂f = (δ_CE f, −δf)` in degree 1, `(δ_CE f, δ_CE f̄ + (−1)^n δf)` above.
pub fn lieder_d(lie: &LieDerPair, module: &LieModule, c: &LieDerCochain) -> Result<LieDerCochain> {
    let n = c.degree();
    let top = ce_d(lie, module, &c.top)?;
    let df = lie_delta(lie, module, &c.top)?;
    let tail = match &c.tail {
        None => df.neg(),
        Some(t) => {
            let s = if n.is_multiple_of(2) { df } else { df.neg() };
            ce_d(lie, module, t)?.add(&s)?
        }
    };
    Ok(LieDerCochain { top, tail: Some(tail) })
}

/// `(f ∘ g)(x) = Σ_{σ ∈ Sh(n, m−1)} (−1)^σ f(g(x_σ(1..n)), x_σ(n+1..))`.
pub fn nr_circle(f: &LieCochain, g: &LieCochain) -> Result<LieCochain> {
    let (m, n) = (f.degree(), g.degree());
    if !f.as_cochain().is_adjoint() || !g.as_cochain().is_adjoint() || f.adim() != g.adim() {
        return Err(Error::Input(
            "Nijenhuis-Richardson bracket needs adjoint-valued cochains".into(),
        ));
    }
    if m == 0 {
        return Ok(LieCochain::zero(n.saturating_sub(1), f.adim(), f.adim()));
    }
    let dim = f.adim();
    let total = m + n - 1;
    let sh = shuffles(n, m - 1);
    Ok(LieCochain(Cochain::from_values(total, dim, dim, |t| {
        let mut out = vec![Scalar::zero(); dim];
        for (first, rest, sign) in &sh {
            let inner: Vec<usize> = first.iter().map(|&i| t[i]).collect();
            let gv = g.value(&inner);
            for (k, c) in gv.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut args = vec![k];
                args.extend(rest.iter().map(|&i| t[i]));
                let coef = c.signed(*sign);
                for (o, x) in out.iter_mut().zip(f.value(&args)) {
                    o.add_product(&coef, &x);
                }
            }
        }
        out
    })))
}

/// `[f, g] = f ∘ g − (−1)^{(m−1)(n−1)} g ∘ f`.
pub fn nr_bracket(f: &LieCochain, g: &LieCochain) -> Result<LieCochain> {
    let (m, n) = (f.degree() as i64, g.degree() as i64);
    let fg = nr_circle(f, g)?;
    let gf = nr_circle(g, f)?;
    if ((m - 1) * (n - 1)).rem_euclid(2) == 0 {
        fg.sub(&gf)
    } else {
        fg.add(&gf)
    }
}

/// `⟦(f, f̄), (g, ḡ)⟧ = ([f, g], (−1)^{m+1}[f, ḡ] + [f̄, g])`.
pub fn lieder_bracket(c1: &LieDerCochain, c2: &LieDerCochain) -> Result<LieDerCochain> {
    let m = c1.degree();
    let top = nr_bracket(&c1.top, &c2.top)?;
    let dim = c1.top.adim();
    let deg = top.degree();
    let mut tail = LieCochain::zero(deg - 1, dim, dim);
    if let Some(g_bar) = &c2.tail {
        let t = nr_bracket(&c1.top, g_bar)?;
        tail = if m % 2 == 1 { tail.add(&t)? } else { tail.sub(&t)? };
    }
    if let Some(f_bar) = &c1.tail {
        tail = tail.add(&nr_bracket(f_bar, &c2.top)?)?;
    }
    let tail = (deg >= 2).then_some(tail);
    LieDerCochain::new(top, tail)
}

/// `(ω, φ)` for a LieDer pair.
pub fn lie_structure_cochain(lie: &LieDerPair) -> LieDerCochain {
    let n = lie.dim();
    let omega = Cochain::from_coeffs(2, n, n, {
        let mut v = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for (k, x) in lie.basis_bracket(i, j).iter().enumerate() {
                    v[k * n * n + i * n + j] = x.clone();
                }
            }
        }
        v
    })
    .expect("shape");
    LieDerCochain {
        top: LieCochain(omega),
        tail: Some(LieCochain(Cochain::from_matrix(&lie.derivation))),
    }
}

/// `T_n(f) = Σ_σ (−1)^σ f(a_σ(1), .., a_σ(n))`, unnormalized.
pub fn skew_symmetrize(f: &Cochain) -> LieCochain {
    let n = f.degree();
    let perms = signed_permutations(n);
    LieCochain(Cochain::from_values(n, f.adim(), f.mdim(), |t| {
        let mut out = vec![Scalar::zero(); f.mdim()];
        for (perm, sign) in &perms {
            let s: Vec<usize> = perm.iter().map(|&i| t[i]).collect();
            for (o, x) in out.iter_mut().zip(f.value(&s)) {
                *o += x.signed(*sign);
            }
        }
        out
    }))
}

/// `(T_n, T_{n−1})`.
pub fn assder_to_lieder(c: &AssDerCochain) -> LieDerCochain {
    LieDerCochain {
        top: skew_symmetrize(&c.top),
        tail: c.tail.as_ref().map(skew_symmetrize),
    }
}

/// `∂_LieDer T(c) − T(∂_AssDer c)`; zero by the chain-map property.
pub fn chain_map_residual(pair: &AssDerPair, rep: &RepPair, c: &AssDerCochain) -> Result<LieDerCochain> {
    if !validate_representation(pair, rep).is_valid() {
        return Err(Error::Input("coefficients are not a representation".into()));
    }
    let lie = commutator_liepair_of(pair);
    let module = LieModule::from_rep(rep);
    let left = lieder_d(&lie, &module, &assder_to_lieder(c))?;
    let right = assder_to_lieder(&assder_d(pair, rep, c)?);
    left.sub(&right)
}

fn commutator_liepair_of(pair: &AssDerPair) -> LieDerPair {
    crate::algebra::commutator_liepair(pair)
}

/// Matrix of `∂: C^n_LieDer -> C^{n+1}_LieDer` in skew coordinates.
pub fn lieder_differential_matrix(
    lie: &LieDerPair,
    module: &LieModule,
    n: usize,
    limits: &Limits,
) -> Result<SparseMatrix> {
    if n == 0 {
        return Err(Error::Input("C^0_LieDer = 0".into()));
    }
    let (adim, mdim) = (lie.dim(), module.mdim());
    let src = lieder_dim(n, adim, mdim);
    let dst = lieder_dim(n + 1, adim, mdim);
    limits.check(n, &[src, dst])?;
    let mut columns = Vec::with_capacity(src);
    for k in 0..src {
        let mut e = vec![Scalar::zero(); src];
        e[k] = Scalar::one();
        let c = LieDerCochain::from_skew_coords(n, adim, mdim, &e)?;
        let d = lieder_d(lie, module, &c)?;
        columns.push(crate::linalg::sparse_from_dense(&d.skew_coords()));
    }
    Ok(SparseMatrix::from_sparse_columns(dst, &columns))
}

pub fn lieder_dim(n: usize, adim: usize, mdim: usize) -> usize {
    let top = combinations(adim, n).len() * mdim;
    let tail = if n >= 2 {
        combinations(adim, n - 1).len() * mdim
    } else {
        0
    };
    top + tail
}

pub fn lieder_cohomology_space(
    lie: &LieDerPair,
    module: &LieModule,
    n: usize,
    limits: &Limits,
) -> Result<CohomologySpace> {
    if n == 0 {
        return Err(Error::Input("C^0_LieDer = 0".into()));
    }
    let d_next = lieder_differential_matrix(lie, module, n, limits)?;
    let d_prev = if n >= 2 {
        Some(lieder_differential_matrix(lie, module, n - 1, limits)?)
    } else {
        None
    };
    Ok(CohomologySpace::compute(&d_next, d_prev.as_ref()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub degree: usize,
    pub assder_betti: usize,
    pub lieder_betti: usize,
    /// Column `j`: coordinates of `T(z_j)` for the `j`-th AssDer representative.
    pub induced: Matrix,
}

/// The map induced by `(T_n, T_{n−1})` from AssDer to LieDer cohomology.
pub fn compare_cohomology(pair: &AssDerPair, rep: &RepPair, n: usize, limits: &Limits) -> Result<Comparison> {
    let ass = cohomology_space(pair, rep, n, limits)?;
    let lie = commutator_liepair_of(pair);
    let module = LieModule::from_rep(rep);
    let lie_space = lieder_cohomology_space(&lie, &module, n, limits)?;
    let (adim, mdim) = (pair.dim(), rep.mdim());
    let mut cols = Vec::with_capacity(ass.betti());
    for z in &ass.representatives {
        let c = AssDerCochain::from_flat(n, adim, mdim, z)?;
        let t = assder_to_lieder(&c).skew_coords();
        cols.push(
            lie_space
                .coordinates(&t)
                .ok_or_else(|| Error::NotCocycle("image of an AssDer cocycle".into()))?,
        );
    }
    Ok(Comparison {
        degree: n,
        assder_betti: ass.betti(),
        lieder_betti: lie_space.betti(),
        induced: Matrix::from_columns(lie_space.betti(), &cols),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{adjoint_rep, commutator_liepair, Algebra};
    use crate::cochain::structure_cochain;
    use crate::scalar::q;

    fn upper() -> AssDerPair {
        // e11, e12, e22
        let alg =
            Algebra::from_products(3, &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 2, 1, q(1)), (2, 2, 2, q(1))]).unwrap();
        AssDerPair::new(alg, Matrix::from_ints(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]])).unwrap()
    }

    #[test]
    fn permutations_and_shuffles() {
        let p = signed_permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|x| x.1).sum::<i64>(), 0);
        let s = shuffles(2, 1);
        assert_eq!(s.iter().map(|x| x.2).collect::<Vec<_>>(), vec![1, -1, 1]);
    }

    #[test]
    fn commutator_is_skew_of_product() {
        let pair = upper();
        let t = skew_symmetrize(&Cochain::from_algebra(&pair.algebra));
        let lie = commutator_liepair(&pair);
        assert_eq!(t, lie_structure_cochain(&lie).top);
        assert!(nr_bracket(&t, &t).unwrap().is_zero());
        let mc = assder_to_lieder(&structure_cochain(&pair));
        assert_eq!(mc, lie_structure_cochain(&lie));
        assert!(lieder_bracket(&mc, &mc).unwrap().is_zero());
    }

    #[test]
    fn ce_squares_to_zero() {
        let pair = upper();
        let lie = commutator_liepair(&pair);
        let module = LieModule::from_rep(&adjoint_rep(&pair));
        assert!(module.validate(&lie).is_valid());
        for n in 1..3 {
            let d1 = lieder_differential_matrix(&lie, &module, n, &Limits::default()).unwrap();
            let d2 = lieder_differential_matrix(&lie, &module, n + 1, &Limits::default()).unwrap();
            assert!(d2.mul(&d1).is_zero());
        }
    }

    #[test]
    fn skew_map_is_a_chain_map_and_bracket_morphism() {
        use crate::cochain::gerstenhaber_bracket;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let pair = upper();
        let rep = adjoint_rep(&pair);
        for n in 1..=3 {
            for _ in 0..5 {
                let c = crate::random::assder_cochain(&mut rng, n, 3, 3, 0.5);
                assert!(chain_map_residual(&pair, &rep, &c).unwrap().is_zero(), "degree {n}");
            }
        }
        for (m, n) in [(1, 1), (1, 2), (2, 2), (2, 1), (1, 3)] {
            let f = crate::random::cochain(&mut rng, m, 3, 3, 0.5);
            let g = crate::random::cochain(&mut rng, n, 3, 3, 0.5);
            let lhs = skew_symmetrize(&gerstenhaber_bracket(&f, &g).unwrap());
            let rhs = nr_bracket(&skew_symmetrize(&f), &skew_symmetrize(&g)).unwrap();
            assert_eq!(lhs, rhs, "degrees {m}, {n}");
        }
    }
}
