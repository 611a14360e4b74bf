//! File formats. Rationals are strings in lowest terms ("2", "-3/7"). Matrices
//! are arrays of rows. Tensors are nested arrays in index order, so a product
//! table is `structure[i][j][k]` for `e_i e_j = Σ_k c e_k`. A cochain is
//! `{degree, shape: [adim, mdim], coeffs}` with the coefficient of value
//! component `p` on the basis tuple `J` at `p * adim^degree + J`, tuples read
//! as base-`adim` numbers with the first slot most significant.
//!
//! Fields that name another structure (`base`, `kernel`, `module`, ...) take
//! either a path, resolved against the directory of the referring file, or the
//! object inline.

use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::ainfty::{
    AInfinityMorphism, AInfinityPair, Associative2Presentation, CrossedModule, HomotopyDerivation, TwoTermAInfinity,
};
use crate::algebra::{Algebra, AssDerPair, Bimodule, RepPair};
use crate::cochain::{AssDerCochain, Cochain};
use crate::deformation::{FormalAutomorphism, TruncatedDeformation};
use crate::error::{Error, Result};
use crate::extensions::{AbelianExtensionSpec, CentralExtensionSpec, ExtensionTriple};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub type Rows = Vec<Vec<Scalar>>;
pub type Tensor3 = Vec<Vec<Vec<Scalar>>>;
pub type Tensor4 = Vec<Vec<Vec<Vec<Scalar>>>>;

pub fn read<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Pretty JSON with a trailing newline.
pub fn to_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn parent_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source<T> {
    Path(String),
    Inline(T),
}

impl<T: DeserializeOwned + Clone> Source<T> {
    /// The value and the directory further references inside it resolve against.
    pub fn resolve(&self, dir: &Path) -> Result<(T, PathBuf)> {
        match self {
            Source::Path(p) => {
                let full = dir.join(p);
                Ok((read(&full)?, parent_dir(&full)))
            }
            Source::Inline(v) => Ok((v.clone(), dir.to_path_buf())),
        }
    }
}

fn matrix(rows: &Rows, r: usize, c: usize, what: &str) -> Result<Matrix> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(Error::Shape(format!("{what} must be a {r}x{c} matrix")));
    }
    Ok(Matrix::from_fn(r, c, |i, j| rows[i][j].clone()))
}

fn square(rows: &Rows, what: &str) -> Result<Matrix> {
    matrix(rows, rows.len(), rows.len(), what)
}

pub fn rows_of(m: &Matrix) -> Rows {
    m.to_rows()
}

fn flat3(t: &Tensor3, (a, b, c): (usize, usize, usize), what: &str) -> Result<Vec<Scalar>> {
    let ok = t.len() == a && t.iter().all(|x| x.len() == b && x.iter().all(|y| y.len() == c));
    if !ok {
        return Err(Error::Shape(format!("{what} must have shape {a}x{b}x{c}")));
    }
    Ok(t.iter().flatten().flatten().cloned().collect())
}

fn nest3(flat: &[Scalar], (a, b, c): (usize, usize, usize)) -> Tensor3 {
    (0..a)
        .map(|i| {
            (0..b)
                .map(|j| flat[(i * b + j) * c..(i * b + j + 1) * c].to_vec())
                .collect()
        })
        .collect()
}

/// A degree-2 cochain from `[i][j][p]`.
fn cochain2(t: &Tensor3, adim: usize, mdim: usize, what: &str) -> Result<Cochain> {
    flat3(t, (adim, adim, mdim), what)?;
    Ok(Cochain::from_values(2, adim, mdim, |j| t[j[0]][j[1]].clone()))
}

fn nested2(c: &Cochain) -> Tensor3 {
    let n = c.adim();
    (0..n).map(|i| (0..n).map(|j| c.value(&[i, j])).collect()).collect()
}

fn cochain3(t: &Tensor4, adim: usize, mdim: usize, what: &str) -> Result<Cochain> {
    let ok = t.len() == adim
        && t.iter()
            .all(|x| x.len() == adim && x.iter().all(|y| y.len() == adim && y.iter().all(|z| z.len() == mdim)));
    if !ok {
        return Err(Error::Shape(format!(
            "{what} must have shape {adim}x{adim}x{adim}x{mdim}"
        )));
    }
    Ok(Cochain::from_values(3, adim, mdim, |j| t[j[0]][j[1]][j[2]].clone()))
}

fn nested3(c: &Cochain) -> Tensor4 {
    let n = c.adim();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| c.value(&[i, j, k])).collect()).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Scalar>>,
    pub structure: Tensor3,
    /// Absent means the zero derivation (or none, for extension totals).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation: Option<Rows>,
}

impl PairJson {
    pub fn from_algebra(alg: &Algebra, derivation: Option<&Matrix>) -> Self {
        let n = alg.dim();
        PairJson {
            dim: n,
            labels: alg.labels().map(<[String]>::to_vec),
            unit: alg.unit().map(<[Scalar]>::to_vec),
            structure: nest3(alg.structure(), (n, n, n)),
            derivation: derivation.map(rows_of),
        }
    }

    pub fn from_pair(pair: &AssDerPair) -> Self {
        Self::from_algebra(&pair.algebra, Some(&pair.derivation))
    }

    pub fn algebra(&self) -> Result<(Algebra, Option<Matrix>)> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::Shape("dim must be positive".into()));
        }
        let mut alg = Algebra::new(n, flat3(&self.structure, (n, n, n), "structure")?)?;
        if let Some(u) = &self.unit {
            alg = alg.with_unit(u.clone())?;
        }
        if let Some(l) = &self.labels {
            alg = alg.with_labels(l.clone())?;
        }
        let der = self
            .derivation
            .as_ref()
            .map(|d| matrix(d, n, n, "derivation"))
            .transpose()?;
        Ok((alg, der))
    }

    pub fn pair(&self) -> Result<AssDerPair> {
        let (alg, der) = self.algebra()?;
        let n = alg.dim();
        AssDerPair::new(alg, der.unwrap_or_else(|| Matrix::zeros(n, n)))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub mdim: usize,
    /// `left[i][m][p]`: coefficient of `f_p` in `e_i f_m`.
    pub left: Tensor3,
    /// `right[m][i][p]`: coefficient of `f_p` in `f_m e_i`.
    pub right: Tensor3,
    pub phi: Rows,
}

impl ModuleJson {
    pub fn from_rep(rep: &RepPair) -> Self {
        let (a, m) = (rep.adim(), rep.mdim());
        ModuleJson {
            mdim: m,
            left: nest3(rep.bimodule.left_tensor(), (a, m, m)),
            right: nest3(rep.bimodule.right_tensor(), (m, a, m)),
            phi: rows_of(&rep.phi),
        }
    }

    pub fn rep(&self, adim: usize) -> Result<RepPair> {
        let m = self.mdim;
        let left = flat3(&self.left, (adim, m, m), "left action")?;
        let right = flat3(&self.right, (m, adim, m), "right action")?;
        RepPair::new(Bimodule::new(adim, m, left, right)?, matrix(&self.phi, m, m, "phi")?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainJson {
    pub degree: usize,
    pub shape: [usize; 2],
    pub coeffs: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skew: bool,
}

impl CochainJson {
    pub fn from_cochain(c: &Cochain) -> Self {
        CochainJson {
            degree: c.degree(),
            shape: [c.adim(), c.mdim()],
            coeffs: c.coeffs().to_vec(),
            skew: false,
        }
    }

    pub fn skew(c: &Cochain) -> Self {
        CochainJson {
            skew: true,
            ..Self::from_cochain(c)
        }
    }

    pub fn cochain(&self) -> Result<Cochain> {
        Cochain::from_coeffs(self.degree, self.shape[0], self.shape[1], self.coeffs.clone())
    }

    fn expect(&self, degree: usize, adim: usize, mdim: usize, what: &str) -> Result<Cochain> {
        if self.degree != degree || self.shape != [adim, mdim] {
            return Err(Error::Shape(format!(
                "{what} must be a degree-{degree} cochain of shape [{adim}, {mdim}]"
            )));
        }
        self.cochain()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssDerCochainJson {
    pub degree: usize,
    pub shape: [usize; 2],
    pub top: Vec<Scalar>,
    /// Absent in degree 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skew: bool,
}

impl AssDerCochainJson {
    pub fn from_cochain(c: &AssDerCochain) -> Self {
        AssDerCochainJson {
            degree: c.degree(),
            shape: [c.adim(), c.mdim()],
            top: c.top.coeffs().to_vec(),
            tail: c.tail.as_ref().map(|t| t.coeffs().to_vec()),
            skew: false,
        }
    }

    pub fn cochain(&self) -> Result<AssDerCochain> {
        let [a, m] = self.shape;
        let top = Cochain::from_coeffs(self.degree, a, m, self.top.clone())?;
        let tail = match &self.tail {
            Some(t) if self.degree >= 1 => Some(Cochain::from_coeffs(self.degree - 1, a, m, t.clone())?),
            _ => None,
        };
        AssDerCochain::new(top, tail)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationJson {
    pub base: Source<PairJson>,
    pub order: usize,
    pub mus: Vec<CochainJson>,
    pub phis: Vec<CochainJson>,
}

impl DeformationJson {
    pub fn from_deformation(d: &TruncatedDeformation, base: Source<PairJson>) -> Self {
        DeformationJson {
            base,
            order: d.order(),
            mus: d.mus().iter().map(CochainJson::from_cochain).collect(),
            phis: d.phis().iter().map(CochainJson::from_cochain).collect(),
        }
    }

    pub fn deformation(&self, dir: &Path) -> Result<TruncatedDeformation> {
        let (base, _) = self.base.resolve(dir)?;
        let base = base.pair()?;
        let n = base.dim();
        if self.mus.len() != self.order + 1 || self.phis.len() != self.order + 1 {
            return Err(Error::Shape(format!(
                "order {} needs {} terms of μ and φ",
                self.order,
                self.order + 1
            )));
        }
        let mus = self
            .mus
            .iter()
            .map(|c| c.expect(2, n, n, "μ_i"))
            .collect::<Result<_>>()?;
        let phis = self
            .phis
            .iter()
            .map(|c| c.expect(1, n, n, "φ_i"))
            .collect::<Result<_>>()?;
        TruncatedDeformation::new(base, mus, phis)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismJson {
    /// `Φ_0 = id, Φ_1, ..., Φ_n`.
    pub terms: Vec<Rows>,
}

impl AutomorphismJson {
    pub fn automorphism(&self) -> Result<FormalAutomorphism> {
        let terms = self
            .terms
            .iter()
            .map(|t| square(t, "automorphism term"))
            .collect::<Result<_>>()?;
        FormalAutomorphism::new(terms)
    }

    pub fn from_automorphism(phi: &FormalAutomorphism) -> Self {
        AutomorphismJson {
            terms: phi.terms().iter().map(rows_of).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CentralSpecJson {
    pub base: Source<PairJson>,
    pub kernel: Source<ModuleJson>,
    pub psi: CochainJson,
    pub chi: CochainJson,
}

impl CentralSpecJson {
    pub fn spec(&self, dir: &Path) -> Result<CentralExtensionSpec> {
        let base = self.base.resolve(dir)?.0.pair()?;
        let kernel = self.kernel.resolve(dir)?.0.rep(base.dim())?;
        let (n, m) = (base.dim(), kernel.mdim());
        Ok(CentralExtensionSpec {
            psi: self.psi.expect(2, n, m, "psi")?,
            chi: self.chi.expect(1, n, m, "chi")?,
            base,
            kernel,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbelianSpecJson {
    pub base: Source<PairJson>,
    pub module: Source<ModuleJson>,
    pub cocycle: AssDerCochainJson,
}

impl AbelianSpecJson {
    pub fn spec(&self, dir: &Path) -> Result<AbelianExtensionSpec> {
        let base = self.base.resolve(dir)?.0.pair()?;
        let rep = self.module.resolve(dir)?.0.rep(base.dim())?;
        let cocycle = self.cocycle.cochain()?;
        if cocycle.degree() != 2 || cocycle.adim() != base.dim() || cocycle.mdim() != rep.mdim() {
            return Err(Error::Shape(
                "extension cocycle must be a degree-2 cochain with values in the module".into(),
            ));
        }
        Ok(AbelianExtensionSpec { base, rep, cocycle })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionJson {
    pub base: Source<PairJson>,
    /// The total algebra; its `derivation` is absent for a plain algebra extension.
    pub total: PairJson,
    pub inclusion: Rows,
    pub projection: Rows,
    pub section: Rows,
    /// Checks run when the file was produced; ignored on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified: Option<std::collections::BTreeMap<String, bool>>,
}

impl ExtensionJson {
    pub fn from_triple(ext: &ExtensionTriple, base: Source<PairJson>) -> Self {
        ExtensionJson {
            base,
            total: PairJson::from_algebra(&ext.total, ext.total_derivation.as_ref()),
            inclusion: rows_of(&ext.inclusion),
            projection: rows_of(&ext.projection),
            section: rows_of(&ext.section),
            certified: None,
        }
    }

    pub fn triple(&self, dir: &Path) -> Result<(ExtensionTriple, AssDerPair)> {
        let base = self.base.resolve(dir)?.0.pair()?;
        let (total, total_derivation) = self.total.algebra()?;
        let (e, a) = (total.dim(), base.dim());
        if e <= a {
            return Err(Error::Shape("total algebra must be larger than the base".into()));
        }
        let ext = ExtensionTriple {
            inclusion: matrix(&self.inclusion, e, e - a, "inclusion")?,
            projection: matrix(&self.projection, a, e, "projection")?,
            section: matrix(&self.section, e, a, "section")?,
            total,
            total_derivation,
        };
        Ok((ext, base))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtendDerivationJson {
    pub extension: Source<ExtensionJson>,
    /// Defaults to the derivation of the extension's base.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_a: Option<Rows>,
    pub phi_m: Rows,
}

impl ExtendDerivationJson {
    pub fn parts(&self, dir: &Path) -> Result<(ExtensionTriple, Algebra, Matrix, Matrix)> {
        let (ext_json, ext_dir) = self.extension.resolve(dir)?;
        let (ext, base) = ext_json.triple(&ext_dir)?;
        let n = base.dim();
        let phi_a = match &self.phi_a {
            Some(m) => matrix(m, n, n, "phi_a")?,
            None => base.derivation.clone(),
        };
        let k = ext.kernel_dim();
        let phi_m = matrix(&self.phi_m, k, k, "phi_m")?;
        Ok((ext, base.algebra, phi_a, phi_m))
    }
}

/// A 2-term A∞-algebra together with its homotopy derivation.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AInfinityJson {
    pub a0: usize,
    pub a1: usize,
    /// `a0 x a1`.
    pub d: Rows,
    /// `mu2[i][j][k]` on `A_0 ⊗ A_0`.
    pub mu2: Tensor3,
    /// `left[i][m][p]` for `μ_2(e_i, f_m)`, `right[m][i][p]` for `μ_2(f_m, e_i)`.
    pub left: Tensor3,
    pub right: Tensor3,
    /// `mu3[i][j][k][p]`.
    pub mu3: Tensor4,
    pub theta0: Rows,
    pub theta1: Rows,
    /// `theta2[i][j][p]`.
    pub theta2: Tensor3,
}

impl AInfinityJson {
    pub fn from_pair(x: &AInfinityPair) -> Self {
        let alg = &x.algebra;
        let (a0, a1) = (alg.a0(), alg.a1());
        AInfinityJson {
            a0,
            a1,
            d: rows_of(alg.d()),
            mu2: nested2(alg.mu2()),
            left: nest3(alg.left_tensor(), (a0, a1, a1)),
            right: nest3(alg.right_tensor(), (a1, a0, a1)),
            mu3: nested3(alg.mu3()),
            theta0: rows_of(&x.derivation.theta0),
            theta1: rows_of(&x.derivation.theta1),
            theta2: nested2(&x.derivation.theta2),
        }
    }

    pub fn pair(&self) -> Result<AInfinityPair> {
        let (a0, a1) = (self.a0, self.a1);
        let algebra = TwoTermAInfinity::new(
            matrix(&self.d, a0, a1, "d")?,
            cochain2(&self.mu2, a0, a0, "mu2")?,
            flat3(&self.left, (a0, a1, a1), "left")?,
            flat3(&self.right, (a1, a0, a1), "right")?,
            cochain3(&self.mu3, a0, a1, "mu3")?,
        )?;
        let derivation = HomotopyDerivation {
            theta0: matrix(&self.theta0, a0, a0, "theta0")?,
            theta1: matrix(&self.theta1, a1, a1, "theta1")?,
            theta2: cochain2(&self.theta2, a0, a1, "theta2")?,
        };
        AInfinityPair::new(algebra, derivation)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub f0: Rows,
    pub f1: Rows,
    /// `f2[i][j][p]`.
    pub f2: Tensor3,
    pub b: Rows,
}

impl MorphismJson {
    pub fn from_morphism(f: &AInfinityMorphism) -> Self {
        MorphismJson {
            f0: rows_of(&f.f0),
            f1: rows_of(&f.f1),
            f2: nested2(&f.f2),
            b: rows_of(&f.b),
        }
    }

    pub fn morphism(&self, src: &TwoTermAInfinity, tgt: &TwoTermAInfinity) -> Result<AInfinityMorphism> {
        Ok(AInfinityMorphism {
            f0: matrix(&self.f0, tgt.a0(), src.a0(), "f0")?,
            f1: matrix(&self.f1, tgt.a1(), src.a1(), "f1")?,
            f2: cochain2(&self.f2, src.a0(), tgt.a1(), "f2")?,
            b: matrix(&self.b, tgt.a1(), src.a0(), "b")?,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedJson {
    /// `(A, φ_A)`, acted on.
    pub a: Source<PairJson>,
    /// `(B, φ_B)`, acting.
    pub b: Source<PairJson>,
    /// `dim B x dim A`.
    pub dt: Rows,
    /// `left[b][m][p]` for `φ(e_b, f_m)`, `right[m][b][p]` for `φ(f_m, e_b)`.
    pub left: Tensor3,
    pub right: Tensor3,
}

impl CrossedJson {
    pub fn from_crossed(cm: &CrossedModule) -> Self {
        let (na, nb) = (cm.a.dim(), cm.b.dim());
        CrossedJson {
            a: Source::Inline(PairJson::from_pair(&cm.a)),
            b: Source::Inline(PairJson::from_pair(&cm.b)),
            dt: rows_of(&cm.dt),
            left: nest3(cm.action.left_tensor(), (nb, na, na)),
            right: nest3(cm.action.right_tensor(), (na, nb, na)),
        }
    }

    pub fn crossed(&self, dir: &Path) -> Result<CrossedModule> {
        let a = self.a.resolve(dir)?.0.pair()?;
        let b = self.b.resolve(dir)?.0.pair()?;
        let (na, nb) = (a.dim(), b.dim());
        let action = Bimodule::new(
            nb,
            na,
            flat3(&self.left, (nb, na, na), "left")?,
            flat3(&self.right, (na, nb, na), "right")?,
        )?;
        Ok(CrossedModule {
            dt: matrix(&self.dt, nb, na, "dt")?,
            a,
            b,
            action,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub objects: usize,
    pub arrows: usize,
    pub source: Rows,
    pub target: Rows,
    pub identity: Rows,
    pub mu_objects: CochainJson,
    pub mu_arrows: CochainJson,
    pub associator: CochainJson,
    pub d_objects: Rows,
    pub d_arrows: Rows,
    pub derivator: CochainJson,
}

impl PresentationJson {
    pub fn from_presentation(p: &Associative2Presentation) -> Self {
        PresentationJson {
            objects: p.c0(),
            arrows: p.c1(),
            source: rows_of(&p.source),
            target: rows_of(&p.target),
            identity: rows_of(&p.identity),
            mu_objects: CochainJson::from_cochain(&p.mu_objects),
            mu_arrows: CochainJson::from_cochain(&p.mu_arrows),
            associator: CochainJson::from_cochain(&p.associator),
            d_objects: rows_of(&p.d_objects),
            d_arrows: rows_of(&p.d_arrows),
            derivator: CochainJson::from_cochain(&p.derivator),
        }
    }

    pub fn presentation(&self) -> Result<Associative2Presentation> {
        let (c0, c1) = (self.objects, self.arrows);
        Ok(Associative2Presentation {
            source: matrix(&self.source, c0, c1, "source")?,
            target: matrix(&self.target, c0, c1, "target")?,
            identity: matrix(&self.identity, c1, c0, "identity")?,
            mu_objects: self.mu_objects.expect(2, c0, c0, "mu_objects")?,
            mu_arrows: self.mu_arrows.expect(2, c1, c1, "mu_arrows")?,
            associator: self.associator.expect(3, c0, c1, "associator")?,
            d_objects: matrix(&self.d_objects, c0, c0, "d_objects")?,
            d_arrows: matrix(&self.d_arrows, c1, c1, "d_arrows")?,
            derivator: self.derivator.expect(2, c0, c1, "derivator")?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn pair_round_trip() {
        for (_, pair) in fixtures::algebras() {
            let j = PairJson::from_pair(&pair);
            let text = to_string(&j).unwrap();
            let back: PairJson = serde_json::from_str(&text).unwrap();
            assert_eq!(back.pair().unwrap(), pair);
            for (_, rep) in fixtures::reps(&pair) {
                let m = ModuleJson::from_rep(&rep);
                let back: ModuleJson = serde_json::from_str(&to_string(&m).unwrap()).unwrap();
                assert_eq!(back.rep(pair.dim()).unwrap(), rep);
            }
        }
    }

    #[test]
    fn rejects_unreduced_and_ragged() {
        let bad = r#"{"dim": 1, "structure": [[["2/4"]]]}"#;
        assert!(serde_json::from_str::<PairJson>(bad).is_err());
        let ragged: PairJson = serde_json::from_str(r#"{"dim": 2, "structure": [[["1"]]]}"#).unwrap();
        assert!(matches!(ragged.pair(), Err(Error::Shape(_))));
        assert!(serde_json::from_str::<PairJson>(r#"{"dim": 1, "structure": [[["1/0"]]]}"#).is_err());
    }

    #[test]
    fn ainfty_round_trip() {
        let x = crate::ainfty::identity_strict_pair(&fixtures::dual_numbers_euler()).unwrap();
        let j = AInfinityJson::from_pair(&x);
        let back: AInfinityJson = serde_json::from_str(&to_string(&j).unwrap()).unwrap();
        assert_eq!(back.pair().unwrap(), x);
        let p = crate::ainfty::functor_t(&x).unwrap();
        let pj = PresentationJson::from_presentation(&p);
        assert_eq!(pj.presentation().unwrap(), p);
        let cm = crate::ainfty::strict_to_crossed(&x).unwrap();
        assert_eq!(CrossedJson::from_crossed(&cm).crossed(Path::new(".")).unwrap(), cm);
    }
}
