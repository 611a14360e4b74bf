//! Differentials as sparse matrices, cohomology, and coboundary solving.
//!
//! The matrices are assembled directly from structure constants, one basis
//! cochain (column) at a time, independently of the evaluation code in
//! [`crate::cochain`]. Tests compare the two routes.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AssDerPair, Bimodule, RepPair};
use crate::cochain::{assder_d, decode, encode, hochschild_differential, pow, AssDerCochain, Cochain};
use crate::error::{Error, Result};
use crate::linalg::{dense_from_sparse, sparse_from_dense, EchelonBasis, SparseMatrix};
use crate::scalar::Scalar;

/// Caps guarding against the `mdim * adim^n` growth of cochain spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Differentials `C^n -> C^{n+1}` are only built for `n < max_degree`.
    pub max_degree: usize,
    /// Largest cochain space (number of coordinates) any matrix may touch.
    pub max_space_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 5,
            max_space_dim: 200_000,
        }
    }
}

impl Limits {
    pub(crate) fn check(&self, n: usize, dims: &[usize]) -> Result<()> {
        if n >= self.max_degree {
            return Err(Error::Resource(format!(
                "degree {n} is at or above the degree cap {}",
                self.max_degree
            )));
        }
        if let Some(d) = dims.iter().find(|&&d| d > self.max_space_dim) {
            return Err(Error::Resource(format!(
                "cochain space of dimension {d} exceeds the cap {}",
                self.max_space_dim
            )));
        }
        Ok(())
    }
}

type Triplets = Vec<(usize, usize, Scalar)>;

/// Nonzero structure constants grouped by output index: `by_output[k]` lists `(a, b, C[a][b][k])`.
fn products_by_output(alg: &Algebra) -> Vec<Vec<(usize, usize, Scalar)>> {
    let n = alg.dim();
    let mut out = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            for (k, c) in alg.basis_product(a, b).iter().enumerate() {
                if !c.is_zero() {
                    out[k].push((a, b, c.clone()));
                }
            }
        }
    }
    out
}

/// Triplets of `sign * δ_H: C^n -> C^{n+1}` placed at the given offsets.
fn hochschild_triplets(
    alg: &Algebra,
    bm: &Bimodule,
    n: usize,
    row_off: usize,
    col_off: usize,
    sign: &Scalar,
    out: &mut Triplets,
) {
    let (adim, mdim) = (alg.dim(), bm.mdim());
    let t_in = pow(adim, n);
    let t_out = pow(adim, n + 1);
    let by_output = products_by_output(alg);
    let mut digits = Vec::with_capacity(n + 1);
    for q in 0..mdim {
        for kk in 0..t_in {
            let col = col_off + q * t_in + kk;
            let k = decode(kk, n, adim);
            // a_1 f(a_2, ..)
            for j1 in 0..adim {
                for (p, l) in bm.basis_left(j1, q).iter().enumerate() {
                    if !l.is_zero() {
                        out.push((row_off + p * t_out + j1 * t_in + kk, col, l * sign));
                    }
                }
            }
            // (-1)^i f(.., a_i a_{i+1}, ..)
            for s in 0..n {
                let si = Scalar::sign(s + 1) * sign;
                for (a, b, c) in &by_output[k[s]] {
                    digits.clear();
                    digits.extend_from_slice(&k[..s]);
                    digits.push(*a);
                    digits.push(*b);
                    digits.extend_from_slice(&k[s + 1..]);
                    out.push((row_off + q * t_out + encode(&digits, adim), col, c * &si));
                }
            }
            // (-1)^{n+1} f(..) a_{n+1}
            let sl = Scalar::sign(n + 1) * sign;
            for j in 0..adim {
                for (p, r) in bm.basis_right(q, j).iter().enumerate() {
                    if !r.is_zero() {
                        out.push((row_off + p * t_out + kk * adim + j, col, r * &sl));
                    }
                }
            }
        }
    }
}

/// Triplets of `sign * δ: C^n -> C^n`.
fn delta_triplets(
    pair: &AssDerPair,
    rep: &RepPair,
    n: usize,
    row_off: usize,
    col_off: usize,
    sign: &Scalar,
    out: &mut Triplets,
) {
    let (adim, mdim) = (pair.dim(), rep.mdim());
    let t = pow(adim, n);
    let d = &pair.derivation;
    let mut digits = vec![0; n];
    for q in 0..mdim {
        for kk in 0..t {
            let col = col_off + q * t + kk;
            let k = decode(kk, n, adim);
            for s in 0..n {
                digits.copy_from_slice(&k);
                for a in 0..adim {
                    let c = &d[(k[s], a)];
                    if !c.is_zero() {
                        digits[s] = a;
                        out.push((row_off + q * t + encode(&digits, adim), col, c * sign));
                    }
                }
            }
            for p in 0..mdim {
                let c = &rep.phi[(p, q)];
                if !c.is_zero() {
                    out.push((row_off + p * t + kk, col, -(c * sign)));
                }
            }
        }
    }
}

/// Matrix of `δ_H: C^n(A, M) -> C^{n+1}(A, M)`, for any `n ≥ 0`.
pub fn hochschild_matrix(alg: &Algebra, bm: &Bimodule, n: usize, limits: &Limits) -> Result<SparseMatrix> {
    if bm.adim() != alg.dim() {
        return Err(Error::Shape("bimodule does not match the algebra".into()));
    }
    let (adim, mdim) = (alg.dim(), bm.mdim());
    let (cols, rows) = (mdim * pow(adim, n), mdim * pow(adim, n + 1));
    limits.check(n, &[cols, rows])?;
    let mut trip = Vec::new();
    hochschild_triplets(alg, bm, n, 0, 0, &Scalar::one(), &mut trip);
    Ok(SparseMatrix::from_triplets(rows, cols, trip))
}

/// Matrix of `∂: C^n_AssDer -> C^{n+1}_AssDer` (top block before tail block).
pub fn differential_matrix(pair: &AssDerPair, rep: &RepPair, n: usize, limits: &Limits) -> Result<SparseMatrix> {
    if n == 0 {
        return Err(Error::Input("the AssDer complex starts in degree 1".into()));
    }
    if rep.adim() != pair.dim() {
        return Err(Error::Shape("representation does not match the pair".into()));
    }
    let (adim, mdim) = (pair.dim(), rep.mdim());
    let cols = AssDerCochain::space_dim(n, adim, mdim);
    let rows = AssDerCochain::space_dim(n + 1, adim, mdim);
    limits.check(n, &[cols, rows])?;
    let top_rows = mdim * pow(adim, n + 1);
    let top_cols = mdim * pow(adim, n);
    let mut trip = Vec::new();
    let one = Scalar::one();
    hochschild_triplets(&pair.algebra, &rep.bimodule, n, 0, 0, &one, &mut trip);
    let delta_sign = if n == 1 { Scalar::from_int(-1) } else { Scalar::sign(n) };
    delta_triplets(pair, rep, n, top_rows, 0, &delta_sign, &mut trip);
    if n >= 2 {
        hochschild_triplets(&pair.algebra, &rep.bimodule, n - 1, top_rows, top_cols, &one, &mut trip);
    }
    Ok(SparseMatrix::from_triplets(rows, cols, trip))
}

/// `Z / B` for consecutive differentials, with deterministic representatives.
#[derive(Clone, Debug)]
pub struct CohomologySpace {
    /// Dimension of the cochain space.
    pub dim: usize,
    pub dim_cocycles: usize,
    /// Reduced basis of the coboundary space.
    pub image: EchelonBasis,
    /// Cocycle representatives of a basis of the quotient, as flat vectors.
    pub representatives: Vec<Vec<Scalar>>,
}

impl CohomologySpace {
    /// `d_next: C^n -> C^{n+1}`, `d_prev: C^{n-1} -> C^n` (absent when `C^{n-1} = 0`).
    pub fn compute(d_next: &SparseMatrix, d_prev: Option<&SparseMatrix>) -> Self {
        let dim = d_next.cols();
        let kernel = d_next.kernel();
        let mut image = EchelonBasis::new(dim);
        if let Some(d) = d_prev {
            assert_eq!(d.rows(), dim, "consecutive differentials do not compose");
            for col in d.columns() {
                image.insert(col);
            }
        }
        let mut span = image.clone();
        let mut representatives = Vec::new();
        for z in &kernel {
            if span.insert_dense(z) {
                representatives.push(z.clone());
            }
        }
        CohomologySpace {
            dim,
            dim_cocycles: kernel.len(),
            image,
            representatives,
        }
    }

    pub fn betti(&self) -> usize {
        self.representatives.len()
    }

    pub fn dim_coboundaries(&self) -> usize {
        self.image.rank()
    }

    /// Coordinates of the class of `z` in the representative basis.
    /// The caller guarantees that `z` is a cocycle.
    pub fn coordinates(&self, z: &[Scalar]) -> Option<Vec<Scalar>> {
        let k = self.representatives.len();
        let mut columns: Vec<Vec<Scalar>> = self.representatives.clone();
        for (_, row) in self.image.reduced_rows() {
            columns.push(dense_from_sparse(row, self.dim));
        }
        let m = SparseMatrix::from_sparse_columns(
            self.dim,
            &columns.iter().map(|c| sparse_from_dense(c)).collect::<Vec<_>>(),
        );
        m.solve(z).map(|x| x[..k].to_vec())
    }

    pub fn is_coboundary(&self, z: &[Scalar]) -> bool {
        self.image.contains_dense(z)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub betti: usize,
    pub representatives: Vec<AssDerCochain>,
}

/// The AssDer cohomology space in degree `n` with its differentials.
pub fn cohomology_space(pair: &AssDerPair, rep: &RepPair, n: usize, limits: &Limits) -> Result<CohomologySpace> {
    let d_next = differential_matrix(pair, rep, n, limits)?;
    let d_prev = if n >= 2 {
        Some(differential_matrix(pair, rep, n - 1, limits)?)
    } else {
        None
    };
    Ok(CohomologySpace::compute(&d_next, d_prev.as_ref()))
}

/// `H^n_AssDer(A, M)` for `n ≥ 1`, with `C^0 = 0`.
pub fn cohomology(
    pair: &AssDerPair,
    rep: &RepPair,
    n: usize,
    want_reps: bool,
    limits: &Limits,
) -> Result<CohomologyReport> {
    let space = cohomology_space(pair, rep, n, limits)?;
    let (adim, mdim) = (pair.dim(), rep.mdim());
    let representatives = if want_reps {
        space
            .representatives
            .iter()
            .map(|v| AssDerCochain::from_flat(n, adim, mdim, v))
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    Ok(CohomologyReport {
        degree: n,
        dim_cochains: space.dim,
        dim_cocycles: space.dim_cocycles,
        dim_coboundaries: space.dim_coboundaries(),
        betti: space.betti(),
        representatives,
    })
}

/// A preimage `b` with `∂b = c`, or `None` when the class of `c` is nonzero.
/// Free variables are set to zero, so the answer is deterministic.
pub fn is_coboundary(
    pair: &AssDerPair,
    rep: &RepPair,
    c: &AssDerCochain,
    limits: &Limits,
) -> Result<Option<AssDerCochain>> {
    let n = c.degree();
    if n < 2 {
        return Err(Error::Input(
            "degree-1 AssDer cochains have no coboundary space (C^0 = 0)".into(),
        ));
    }
    let dc = assder_d(pair, rep, c)?;
    if !dc.is_zero() {
        return Err(Error::NotCocycle(format!(
            "degree-{n} cochain has nonzero differential"
        )));
    }
    let d = differential_matrix(pair, rep, n - 1, limits)?;
    Ok(match d.solve(&c.flatten()) {
        Some(x) => Some(AssDerCochain::from_flat(n - 1, pair.dim(), rep.mdim(), &x)?),
        None => None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HochschildReport {
    pub degree: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub betti: usize,
    pub representatives: Vec<Cochain>,
}

/// Hochschild cohomology space `HH^n(A, M)` (with `C^0 = M`).
pub fn hochschild_space(alg: &Algebra, bm: &Bimodule, n: usize, limits: &Limits) -> Result<CohomologySpace> {
    let d_next = hochschild_matrix(alg, bm, n, limits)?;
    let d_prev = if n >= 1 {
        Some(hochschild_matrix(alg, bm, n - 1, limits)?)
    } else {
        None
    };
    Ok(CohomologySpace::compute(&d_next, d_prev.as_ref()))
}

pub fn hochschild_cohomology(alg: &Algebra, bm: &Bimodule, n: usize, limits: &Limits) -> Result<HochschildReport> {
    let space = hochschild_space(alg, bm, n, limits)?;
    let representatives = space
        .representatives
        .iter()
        .map(|v| Cochain::from_coeffs(n, alg.dim(), bm.mdim(), v.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(HochschildReport {
        degree: n,
        dim_cocycles: space.dim_cocycles,
        dim_coboundaries: space.dim_coboundaries(),
        betti: space.betti(),
        representatives,
    })
}

/// `λ` with `δ_H λ = z`, or `None`; `z` must be a Hochschild cocycle of degree ≥ 1.
pub fn hochschild_preimage(alg: &Algebra, bm: &Bimodule, z: &Cochain, limits: &Limits) -> Result<Option<Cochain>> {
    let n = z.degree();
    if n == 0 {
        return Err(Error::Input("degree-0 cochains have no preimage".into()));
    }
    if !hochschild_differential(alg, bm, z)?.is_zero() {
        return Err(Error::NotCocycle(format!(
            "degree-{n} Hochschild cochain is not closed"
        )));
    }
    let d = hochschild_matrix(alg, bm, n - 1, limits)?;
    Ok(match d.solve(z.coeffs()) {
        Some(x) => Some(Cochain::from_coeffs(n - 1, alg.dim(), bm.mdim(), x)?),
        None => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::adjoint_rep;
    use crate::cochain::{delta_op, hochschild_d};
    use crate::linalg::Matrix;
    use crate::scalar::q;

    fn rationals() -> AssDerPair {
        AssDerPair::plain(Algebra::from_products(1, &[(0, 0, 0, q(1))]).unwrap())
    }

    fn euler_dual() -> AssDerPair {
        let alg = Algebra::from_products(2, &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1))]).unwrap();
        AssDerPair::new(alg, Matrix::from_ints(&[&[0, 0], &[0, 1]])).unwrap()
    }

    #[test]
    fn rationals_first_differential() {
        let pair = rationals();
        let rep = adjoint_rep(&pair);
        let d = differential_matrix(&pair, &rep, 1, &Limits::default()).unwrap();
        assert_eq!(d.to_dense(), Matrix::from_ints(&[&[1], &[0]]));
        let h1 = cohomology(&pair, &rep, 1, true, &Limits::default()).unwrap();
        assert_eq!(h1.betti, 0);
    }

    #[test]
    fn zero_algebra_betti_equals_space_dim() {
        let pair = AssDerPair::plain(Algebra::zero(1).unwrap());
        let rep = adjoint_rep(&pair);
        let limits = Limits::default();
        let bettis: Vec<usize> = (1..=3)
            .map(|n| cohomology(&pair, &rep, n, false, &limits).unwrap().betti)
            .collect();
        assert_eq!(bettis, vec![1, 2, 2]);
        let d = differential_matrix(&pair, &rep, 2, &limits).unwrap();
        assert_eq!((d.rows(), d.cols()), (2, 2));
        assert!(d.is_zero());
    }

    #[test]
    fn matrix_matches_evaluation() {
        let pair = euler_dual();
        let rep = adjoint_rep(&pair);
        let limits = Limits::default();
        for n in 1..=3 {
            let d = differential_matrix(&pair, &rep, n, &limits).unwrap();
            let dim = AssDerCochain::space_dim(n, 2, 2);
            for i in 0..dim {
                let mut v = vec![Scalar::zero(); dim];
                v[i] = q(1);
                let c = AssDerCochain::from_flat(n, 2, 2, &v).unwrap();
                let expected = assder_d(&pair, &rep, &c).unwrap().flatten();
                assert_eq!(d.apply(&v), expected, "degree {n}, column {i}");
            }
        }
    }

    #[test]
    fn hochschild_matrix_matches_evaluation() {
        let pair = euler_dual();
        let rep = adjoint_rep(&pair);
        for n in 0..3 {
            let d = hochschild_matrix(&pair.algebra, &rep.bimodule, n, &Limits::default()).unwrap();
            let dim = 2 * pow(2, n);
            for i in 0..dim {
                let mut v = vec![Scalar::zero(); dim];
                v[i] = q(1);
                let f = Cochain::from_coeffs(n, 2, 2, v.clone()).unwrap();
                assert_eq!(d.apply(&v), hochschild_d(&pair, &rep, &f).unwrap().into_coeffs());
            }
        }
        let f = Cochain::identity(2);
        assert!(delta_op(&pair, &rep, &f).unwrap().is_zero());
    }

    #[test]
    fn degree_cap_is_enforced() {
        let pair = euler_dual();
        let rep = adjoint_rep(&pair);
        let limits = Limits {
            max_degree: 3,
            ..Limits::default()
        };
        assert!(matches!(
            differential_matrix(&pair, &rep, 3, &limits),
            Err(Error::Resource(_))
        ));
        let tiny = Limits {
            max_space_dim: 4,
            ..Limits::default()
        };
        assert!(matches!(
            differential_matrix(&pair, &rep, 2, &tiny),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn coboundary_round_trip() {
        let pair = euler_dual();
        let rep = adjoint_rep(&pair);
        let limits = Limits::default();
        let b = AssDerCochain::from_flat(1, 2, 2, &[q(1), q(-2), q(3), q(5)]).unwrap();
        let c = assder_d(&pair, &rep, &b).unwrap();
        let pre = is_coboundary(&pair, &rep, &c, &limits).unwrap().unwrap();
        assert_eq!(assder_d(&pair, &rep, &pre).unwrap(), c);
        let zero = AssDerCochain::zero(2, 2, 2);
        assert!(is_coboundary(&pair, &rep, &zero, &limits).unwrap().unwrap().is_zero());
        let mut bad = zero.clone();
        bad.top.set(0, &[0, 0], q(1));
        assert!(matches!(
            is_coboundary(&pair, &rep, &bad, &limits),
            Err(Error::NotCocycle(_))
        ));
    }
}
