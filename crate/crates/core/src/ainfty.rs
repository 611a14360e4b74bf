//! 2-term A∞-algebras `A_1 -d-> A_0` with homotopy derivations, their
//! morphisms, the skeletal and strict classifications, and the passage to
//! associative 2-algebras presented on the 2-term complex `A_0 ⊕ A_1 ⇉ A_0`.

use crate::algebra::{validate_representation, Algebra, AssDerPair, Bimodule, RepPair};
use crate::cochain::{assder_d, decode, AssDerCochain, Cochain};
use crate::error::{ensure_valid, Error, Result};
use crate::linalg::Matrix;
use crate::report::ValidationReport;
use crate::scalar::Scalar;

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn bilinear_tensor(t: &[Scalar], n1: usize, n2: usize, out: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut r = vec![Scalar::zero(); out];
    for (i, a) in x.iter().enumerate().take(n1) {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate().take(n2) {
            if b.is_zero() {
                continue;
            }
            let w = a * b;
            let start = (i * n2 + j) * out;
            for (p, o) in r.iter_mut().enumerate() {
                o.add_product(&w, &t[start + p]);
            }
        }
    }
    r
}

/// `(A_1 -d-> A_0, μ_2, μ_3)`. The mixed products use the bimodule tensor
/// layouts: `left[(i * a1 + m) * a1 + p]` for `μ_2(e_i, f_m)` and
/// `right[(m * a0 + i) * a1 + p]` for `μ_2(f_m, e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermAInfinity {
    d: Matrix,
    mu2: Cochain,
    left: Vec<Scalar>,
    right: Vec<Scalar>,
    mu3: Cochain,
}

impl TwoTermAInfinity {
    pub fn new(d: Matrix, mu2: Cochain, left: Vec<Scalar>, right: Vec<Scalar>, mu3: Cochain) -> Result<Self> {
        let (a0, a1) = d.shape();
        if a0 == 0 {
            return Err(Error::Shape("A_0 must be nonzero".into()));
        }
        if mu2.degree() != 2 || mu2.adim() != a0 || mu2.mdim() != a0 {
            return Err(Error::Shape("μ_2 on A_0 must be a degree-2 A_0-valued cochain".into()));
        }
        if left.len() != a0 * a1 * a1 || right.len() != a0 * a1 * a1 {
            return Err(Error::Shape("mixed products have the wrong number of entries".into()));
        }
        if mu3.degree() != 3 || mu3.adim() != a0 || mu3.mdim() != a1 {
            return Err(Error::Shape("μ_3 must be a degree-3 A_1-valued cochain on A_0".into()));
        }
        Ok(TwoTermAInfinity {
            d,
            mu2,
            left,
            right,
            mu3,
        })
    }

    pub fn a0(&self) -> usize {
        self.d.rows()
    }

    pub fn a1(&self) -> usize {
        self.d.cols()
    }

    pub fn d(&self) -> &Matrix {
        &self.d
    }

    pub fn mu2(&self) -> &Cochain {
        &self.mu2
    }

    pub fn left_tensor(&self) -> &[Scalar] {
        &self.left
    }

    pub fn right_tensor(&self) -> &[Scalar] {
        &self.right
    }

    pub fn mu3(&self) -> &Cochain {
        &self.mu3
    }

    pub fn is_skeletal(&self) -> bool {
        self.d.is_zero()
    }

    pub fn m00(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.mu2.eval(&[a.to_vec(), b.to_vec()])
    }

    pub fn m01(&self, a: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        bilinear_tensor(&self.left, self.a0(), self.a1(), self.a1(), a, m)
    }

    pub fn m10(&self, m: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        bilinear_tensor(&self.right, self.a1(), self.a0(), self.a1(), m, a)
    }

    pub fn m3(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Vec<Scalar> {
        self.mu3.eval(&[a.to_vec(), b.to_vec(), c.to_vec()])
    }

    fn bases(&self) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
        let e = (0..self.a0()).map(|i| unit(self.a0(), i)).collect();
        let f = (0..self.a1()).map(|i| unit(self.a1(), i)).collect();
        (e, f)
    }
}

/// Conditions (a)-(f) on basis tuples, rules `a`, `b`, `c`, `d`, `e1`, `e2`, `e3`, `f`.
pub fn verify_ainfty(x: &TwoTermAInfinity) -> ValidationReport {
    let mut r = ValidationReport::new();
    let (e, f) = x.bases();
    let d = |m: &[Scalar]| x.d.apply(m);
    for (i, a) in e.iter().enumerate() {
        for (m, fm) in f.iter().enumerate() {
            r.check("a", &[i, m], sub(&d(&x.m01(a, fm)), &x.m00(a, &d(fm))));
            r.check("b", &[m, i], sub(&d(&x.m10(fm, a)), &x.m00(&d(fm), a)));
        }
    }
    for (m, fm) in f.iter().enumerate() {
        for (n, fn_) in f.iter().enumerate() {
            r.check("c", &[m, n], sub(&x.m01(&d(fm), fn_), &x.m10(fm, &d(fn_))));
        }
    }
    for (i, a) in e.iter().enumerate() {
        for (j, b) in e.iter().enumerate() {
            let ab = x.m00(a, b);
            for (k, c) in e.iter().enumerate() {
                let assoc = sub(&x.m00(&ab, c), &x.m00(a, &x.m00(b, c)));
                r.check("d", &[i, j, k], sub(&d(&x.m3(a, b, c)), &assoc));
            }
            for (m, fm) in f.iter().enumerate() {
                let dm = d(fm);
                let e1 = sub(&x.m01(&ab, fm), &x.m01(a, &x.m01(b, fm)));
                r.check("e1", &[i, j, m], sub(&x.m3(a, b, &dm), &e1));
                let e2 = sub(&x.m10(&x.m01(a, fm), b), &x.m01(a, &x.m10(fm, b)));
                r.check("e2", &[i, m, j], sub(&x.m3(a, &dm, b), &e2));
                let e3 = sub(&x.m10(&x.m10(fm, a), b), &x.m10(fm, &ab));
                r.check("e3", &[m, i, j], sub(&x.m3(&dm, a, b), &e3));
            }
        }
    }
    let n = x.a0();
    for t in 0..n.pow(4) {
        let idx = decode(t, 4, n);
        let (a, b, c, g) = (&e[idx[0]], &e[idx[1]], &e[idx[2]], &e[idx[3]]);
        let lhs = add(
            &sub(&x.m3(&x.m00(a, b), c, g), &x.m3(a, &x.m00(b, c), g)),
            &x.m3(a, b, &x.m00(c, g)),
        );
        let rhs = add(&x.m10(&x.m3(a, b, c), g), &x.m01(a, &x.m3(b, c, g)));
        r.check("f", &idx, sub(&lhs, &rhs));
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyDerivation {
    pub theta0: Matrix,
    pub theta1: Matrix,
    pub theta2: Cochain,
}

impl HomotopyDerivation {
    pub fn zero(a0: usize, a1: usize) -> Self {
        HomotopyDerivation {
            theta0: Matrix::zeros(a0, a0),
            theta1: Matrix::zeros(a1, a1),
            theta2: Cochain::zero(2, a0, a1),
        }
    }

    fn check_shapes(&self, x: &TwoTermAInfinity) -> Result<()> {
        let (a0, a1) = (x.a0(), x.a1());
        if self.theta0.shape() != (a0, a0)
            || self.theta1.shape() != (a1, a1)
            || self.theta2.degree() != 2
            || self.theta2.adim() != a0
            || self.theta2.mdim() != a1
        {
            return Err(Error::Shape("homotopy derivation does not match the complex".into()));
        }
        Ok(())
    }
}

/// `θ_0 d = d θ_1` (rule `chain`) and conditions (a)-(d).
pub fn verify_homotopy_derivation(x: &TwoTermAInfinity, th: &HomotopyDerivation) -> Result<ValidationReport> {
    th.check_shapes(x)?;
    let mut r = ValidationReport::new();
    let (e, f) = x.bases();
    let (t0, t1) = (&th.theta0, &th.theta1);
    let t2 = |a: &[Scalar], b: &[Scalar]| th.theta2.eval(&[a.to_vec(), b.to_vec()]);
    r.check("chain", &[], t0.mul(&x.d).sub(&x.d.mul(t1)).data().to_vec());
    for (i, a) in e.iter().enumerate() {
        for (j, b) in e.iter().enumerate() {
            let rhs = sub(
                &add(&x.m00(&t0.apply(a), b), &x.m00(a, &t0.apply(b))),
                &t0.apply(&x.m00(a, b)),
            );
            r.check("a", &[i, j], sub(&x.d.apply(&t2(a, b)), &rhs));
        }
        for (m, fm) in f.iter().enumerate() {
            let dm = x.d.apply(fm);
            let rhs = sub(
                &add(&x.m01(&t0.apply(a), fm), &x.m01(a, &t1.apply(fm))),
                &t1.apply(&x.m01(a, fm)),
            );
            r.check("b", &[i, m], sub(&t2(a, &dm), &rhs));
            let rhs = sub(
                &add(&x.m10(&t1.apply(fm), a), &x.m10(fm, &t0.apply(a))),
                &t1.apply(&x.m10(fm, a)),
            );
            r.check("c", &[m, i], sub(&t2(&dm, a), &rhs));
        }
    }
    for t in 0..x.a0().pow(3) {
        let idx = decode(t, 3, x.a0());
        let (a, b, c) = (&e[idx[0]], &e[idx[1]], &e[idx[2]]);
        let mut rhs = sub(&t2(a, &x.m00(b, c)), &t2(&x.m00(a, b), c));
        rhs = add(&rhs, &x.m01(a, &t2(b, c)));
        rhs = sub(&rhs, &x.m10(&t2(a, b), c));
        rhs = add(&rhs, &x.m3(&t0.apply(a), b, c));
        rhs = add(&rhs, &x.m3(a, &t0.apply(b), c));
        rhs = add(&rhs, &x.m3(a, b, &t0.apply(c)));
        r.check("d", &idx, sub(&t1.apply(&x.m3(a, b, c)), &rhs));
    }
    Ok(r)
}

/// A 2-term A∞-algebra with a homotopy derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfinityPair {
    pub algebra: TwoTermAInfinity,
    pub derivation: HomotopyDerivation,
}

impl AInfinityPair {
    pub fn new(algebra: TwoTermAInfinity, derivation: HomotopyDerivation) -> Result<Self> {
        derivation.check_shapes(&algebra)?;
        Ok(AInfinityPair { algebra, derivation })
    }

    /// Rules prefixed `ainfty.` and `derivation.`.
    pub fn validate(&self) -> ValidationReport {
        let mut r = verify_ainfty(&self.algebra).with_prefix("ainfty");
        let hd = verify_homotopy_derivation(&self.algebra, &self.derivation).expect("shapes checked at construction");
        r.merge(hd.with_prefix("derivation"));
        r
    }

    pub fn is_strict(&self) -> bool {
        self.algebra.mu3.is_zero() && self.derivation.theta2.is_zero()
    }
}

/// `d = 0`, `μ_2` from the product and the actions, `μ_3 = θ`, `θ_0 = φ_A`,
/// `θ_1 = φ_M`, `θ_2 = −θ̄` for a 3-cocycle `(θ, θ̄)`.
pub fn skeletal_from_cocycle(pair: &AssDerPair, rep: &RepPair, c: &AssDerCochain) -> Result<AInfinityPair> {
    if c.degree() != 3 || c.adim() != pair.dim() || c.mdim() != rep.mdim() {
        return Err(Error::Shape("need a degree-3 cochain with values in the module".into()));
    }
    ensure_valid("pair", pair.validate())?;
    ensure_valid("representation", validate_representation(pair, rep))?;
    if !assder_d(pair, rep, c)?.is_zero() {
        return Err(Error::NotCocycle("degree-3 cochain has nonzero differential".into()));
    }
    let (a0, a1) = (pair.dim(), rep.mdim());
    let algebra = TwoTermAInfinity::new(
        Matrix::zeros(a0, a1),
        Cochain::from_algebra(&pair.algebra),
        rep.bimodule.left_tensor().to_vec(),
        rep.bimodule.right_tensor().to_vec(),
        c.top.clone(),
    )?;
    let derivation = HomotopyDerivation {
        theta0: pair.derivation.clone(),
        theta1: rep.phi.clone(),
        theta2: c.tail.as_ref().expect("degree 3 has a tail").neg(),
    };
    AInfinityPair::new(algebra, derivation)
}

/// The classifying triple `((A_0, θ_0), (A_1, θ_1), (μ_3, −θ_2))` of a skeletal pair.
pub fn cocycle_from_skeletal(x: &AInfinityPair) -> Result<(AssDerPair, RepPair, AssDerCochain)> {
    if !x.algebra.is_skeletal() {
        return Err(Error::Input("structure is not skeletal (d ≠ 0)".into()));
    }
    ensure_valid("2-term AssDer∞ pair", x.validate())?;
    let alg = &x.algebra;
    let (a0, a1) = (alg.a0(), alg.a1());
    let algebra = Algebra::new(a0, alg.mu2.to_structure()?)?;
    let pair = AssDerPair::new(algebra, x.derivation.theta0.clone())?;
    let bimodule = Bimodule::new(a0, a1, alg.left.clone(), alg.right.clone())?;
    let rep = RepPair::new(bimodule, x.derivation.theta1.clone())?;
    let c = AssDerCochain::new(alg.mu3.clone(), Some(x.derivation.theta2.neg()))?;
    if !assder_d(&pair, &rep, &c)?.is_zero() {
        return Err(Error::NotCocycle("extracted skeletal cocycle".into()));
    }
    Ok((pair, rep, c))
}

/// `((A, φ_A), (B, φ_B), dt, φ)`; `action` carries `φ: B ⊗ A -> A` and `A ⊗ B -> A`
/// as a `B`-bimodule structure on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    pub a: AssDerPair,
    pub b: AssDerPair,
    pub dt: Matrix,
    pub action: Bimodule,
}

impl CrossedModule {
    /// Both pairs, `dt` a morphism of pairs, the AssDer bimodule axioms, and (i)-(iv).
    pub fn validate(&self) -> Result<ValidationReport> {
        let (na, nb) = (self.a.dim(), self.b.dim());
        if self.dt.shape() != (nb, na) || self.action.adim() != nb || self.action.mdim() != na {
            return Err(Error::Shape("crossed module maps do not match the pairs".into()));
        }
        let mut r = self.a.validate().with_prefix("a");
        r.merge(self.b.validate().with_prefix("b"));
        let bm = &self.action;
        let (ma, mb) = (&self.a.algebra, &self.b.algebra);
        let ea: Vec<Vec<Scalar>> = (0..na).map(|i| unit(na, i)).collect();
        let eb: Vec<Vec<Scalar>> = (0..nb).map(|i| unit(nb, i)).collect();
        let dt = |m: &[Scalar]| self.dt.apply(m);
        for (m, x) in ea.iter().enumerate() {
            for (n, y) in ea.iter().enumerate() {
                r.check(
                    "dt-multiplicative",
                    &[m, n],
                    sub(&dt(&ma.mul(x, y)), &mb.mul(&dt(x), &dt(y))),
                );
                r.check("ii-left", &[m, n], sub(&bm.act_left(&dt(x), y), &ma.mul(x, y)));
                r.check("ii-right", &[m, n], sub(&bm.act_right(x, &dt(y)), &ma.mul(x, y)));
            }
        }
        let dphi = self.dt.mul(&self.a.derivation).sub(&self.b.derivation.mul(&self.dt));
        r.check("dt-derivation", &[], dphi.data().to_vec());
        r.merge(bm.validate(mb).with_prefix("action"));
        let rep = RepPair::new(bm.clone(), self.a.derivation.clone())?;
        // rep-1/rep-2 are condition (iv)
        r.merge(validate_representation(&self.b, &rep).with_prefix("iv"));
        for (bi, b) in eb.iter().enumerate() {
            for (m, x) in ea.iter().enumerate() {
                r.check("i-left", &[bi, m], sub(&dt(&bm.act_left(b, x)), &mb.mul(b, &dt(x))));
                r.check("i-right", &[m, bi], sub(&dt(&bm.act_right(x, b)), &mb.mul(&dt(x), b)));
                for (n, y) in ea.iter().enumerate() {
                    let l = sub(&bm.act_left(b, &ma.mul(x, y)), &ma.mul(&bm.act_left(b, x), y));
                    r.check("iii-left", &[bi, m, n], l);
                    let rr = sub(&bm.act_right(&ma.mul(x, y), b), &ma.mul(x, &bm.act_right(y, b)));
                    r.check("iii-right", &[m, n, bi], rr);
                }
            }
        }
        Ok(r)
    }
}

/// `A = A_1` with `μ_{A_1}(m, n) = μ_2(dm, n)`, `B = A_0`, `dt = d`, actions from `μ_2`.
pub fn strict_to_crossed(x: &AInfinityPair) -> Result<CrossedModule> {
    if !x.is_strict() {
        return Err(Error::Input("structure is not strict (μ_3 or θ_2 nonzero)".into()));
    }
    ensure_valid("2-term AssDer∞ pair", x.validate())?;
    let alg = &x.algebra;
    let (a0, a1) = (alg.a0(), alg.a1());
    if a1 == 0 {
        return Err(Error::Shape("A_1 = 0 has no crossed module".into()));
    }
    let f: Vec<Vec<Scalar>> = (0..a1).map(|i| unit(a1, i)).collect();
    let mut structure = Vec::with_capacity(a1 * a1 * a1);
    for m in &f {
        for n in &f {
            structure.extend(alg.m01(&alg.d.apply(m), n));
        }
    }
    let a = AssDerPair::new(Algebra::new(a1, structure)?, x.derivation.theta1.clone())?;
    let b = AssDerPair::new(Algebra::new(a0, alg.mu2.to_structure()?)?, x.derivation.theta0.clone())?;
    let cm = CrossedModule {
        a,
        b,
        dt: alg.d.clone(),
        action: Bimodule::new(a0, a1, alg.left.clone(), alg.right.clone())?,
    };
    ensure_valid("crossed module", cm.validate()?)?;
    Ok(cm)
}

pub fn crossed_to_strict(cm: &CrossedModule) -> Result<AInfinityPair> {
    ensure_valid("crossed module", cm.validate()?)?;
    let (na, nb) = (cm.a.dim(), cm.b.dim());
    let algebra = TwoTermAInfinity::new(
        cm.dt.clone(),
        Cochain::from_algebra(&cm.b.algebra),
        cm.action.left_tensor().to_vec(),
        cm.action.right_tensor().to_vec(),
        Cochain::zero(3, nb, na),
    )?;
    let derivation = HomotopyDerivation {
        theta0: cm.b.derivation.clone(),
        theta1: cm.a.derivation.clone(),
        theta2: Cochain::zero(2, nb, na),
    };
    let x = AInfinityPair::new(algebra, derivation)?;
    ensure_valid("strict 2-term AssDer∞ pair", x.validate())?;
    Ok(x)
}

/// `A_0 = A_1 = A`, `d = id`, `μ_2 = μ`, `θ_0 = θ_1 = φ_A`.
pub fn identity_strict_pair(pair: &AssDerPair) -> Result<AInfinityPair> {
    let n = pair.dim();
    let s = pair.algebra.structure().to_vec();
    let algebra = TwoTermAInfinity::new(
        Matrix::identity(n),
        Cochain::from_algebra(&pair.algebra),
        s.clone(),
        s,
        Cochain::zero(3, n, n),
    )?;
    let derivation = HomotopyDerivation {
        theta0: pair.derivation.clone(),
        theta1: pair.derivation.clone(),
        theta2: Cochain::zero(2, n, n),
    };
    AInfinityPair::new(algebra, derivation)
}

/// `(f_0, f_1, f_2, B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfinityMorphism {
    pub f0: Matrix,
    pub f1: Matrix,
    pub f2: Cochain,
    pub b: Matrix,
}

impl AInfinityMorphism {
    pub fn identity(x: &TwoTermAInfinity) -> Self {
        let (a0, a1) = (x.a0(), x.a1());
        AInfinityMorphism {
            f0: Matrix::identity(a0),
            f1: Matrix::identity(a1),
            f2: Cochain::zero(2, a0, a1),
            b: Matrix::zeros(a1, a0),
        }
    }

    fn check_shapes(&self, src: &TwoTermAInfinity, tgt: &TwoTermAInfinity) -> Result<()> {
        let ok = self.f0.shape() == (tgt.a0(), src.a0())
            && self.f1.shape() == (tgt.a1(), src.a1())
            && self.f2.degree() == 2
            && self.f2.adim() == src.a0()
            && self.f2.mdim() == tgt.a1()
            && self.b.shape() == (tgt.a1(), src.a0());
        if ok {
            Ok(())
        } else {
            Err(Error::Shape(
                "morphism components do not match source and target".into(),
            ))
        }
    }
}

/// Chain map, conditions (a)-(d) for the A∞ part and (i)-(iii) for the
/// derivations. Condition (iii) reads the bracket as `μ_2`. In (d) the mixed
/// `μ_2'` terms carry the signs that make `d' ∘ (d)` agree with (a):
/// `f_2(ab,c) − f_2(a,bc) + μ_2'(f_2(a,b), f_0 c) − μ_2'(f_0 a, f_2(b,c)) = f_1 μ_3 − μ_3'(f_0,f_0,f_0)`.
/// Likewise (iii) is taken in the form compatible with (i), (ii) and (a):
/// `f_1 θ_2 − f_2(θ_0 a, b) − f_2(a, θ_0 b) + θ_1' f_2 − θ_2'(f_0, f_0) = B μ_2 − μ_2'(B a, f_0 b) − μ_2'(f_0 a, B b)`.
pub fn verify_morphism(f: &AInfinityMorphism, src: &AInfinityPair, tgt: &AInfinityPair) -> Result<ValidationReport> {
    let (x, y) = (&src.algebra, &tgt.algebra);
    f.check_shapes(x, y)?;
    let mut r = ValidationReport::new();
    let (e, fb) = x.bases();
    let f2 = |a: &[Scalar], b: &[Scalar]| f.f2.eval(&[a.to_vec(), b.to_vec()]);
    let (f0, f1, bm) = (&f.f0, &f.f1, &f.b);
    r.check("chain", &[], f0.mul(&x.d).sub(&y.d.mul(f1)).data().to_vec());
    for (i, a) in e.iter().enumerate() {
        for (j, b) in e.iter().enumerate() {
            let rhs = sub(&f0.apply(&x.m00(a, b)), &y.m00(&f0.apply(a), &f0.apply(b)));
            r.check("a", &[i, j], sub(&y.d.apply(&f2(a, b)), &rhs));
        }
        for (m, fm) in fb.iter().enumerate() {
            let dm = x.d.apply(fm);
            let rhs = sub(&f1.apply(&x.m01(a, fm)), &y.m01(&f0.apply(a), &f1.apply(fm)));
            r.check("b", &[i, m], sub(&f2(a, &dm), &rhs));
            let rhs = sub(&f1.apply(&x.m10(fm, a)), &y.m10(&f1.apply(fm), &f0.apply(a)));
            r.check("c", &[m, i], sub(&f2(&dm, a), &rhs));
        }
    }
    for t in 0..x.a0().pow(3) {
        let idx = decode(t, 3, x.a0());
        let (a, b, c) = (&e[idx[0]], &e[idx[1]], &e[idx[2]]);
        let mut lhs = sub(&f2(&x.m00(a, b), c), &f2(a, &x.m00(b, c)));
        lhs = add(&lhs, &y.m10(&f2(a, b), &f0.apply(c)));
        lhs = sub(&lhs, &y.m01(&f0.apply(a), &f2(b, c)));
        let rhs = sub(
            &f1.apply(&x.m3(a, b, c)),
            &y.m3(&f0.apply(a), &f0.apply(b), &f0.apply(c)),
        );
        r.check("d", &idx, sub(&lhs, &rhs));
    }
    let (th, th2) = (&src.derivation, &tgt.derivation);
    let t2 = |a: &[Scalar], b: &[Scalar]| th.theta2.eval(&[a.to_vec(), b.to_vec()]);
    let t2p = |a: &[Scalar], b: &[Scalar]| th2.theta2.eval(&[a.to_vec(), b.to_vec()]);
    for (i, a) in e.iter().enumerate() {
        let lhs = sub(&th2.theta0.apply(&f0.apply(a)), &f0.apply(&th.theta0.apply(a)));
        r.check("i", &[i], sub(&lhs, &y.d.apply(&bm.apply(a))));
    }
    for (m, fm) in fb.iter().enumerate() {
        let lhs = sub(&th2.theta1.apply(&f1.apply(fm)), &f1.apply(&th.theta1.apply(fm)));
        r.check("ii", &[m], sub(&lhs, &bm.apply(&x.d.apply(fm))));
    }
    for (i, a) in e.iter().enumerate() {
        for (j, b) in e.iter().enumerate() {
            let (fa, fb_) = (f0.apply(a), f0.apply(b));
            let mut lhs = f1.apply(&t2(a, b));
            lhs = sub(&lhs, &f2(&th.theta0.apply(a), b));
            lhs = sub(&lhs, &f2(a, &th.theta0.apply(b)));
            lhs = add(&lhs, &th2.theta1.apply(&f2(a, b)));
            lhs = sub(&lhs, &t2p(&fa, &fb_));
            let mut rhs = bm.apply(&x.m00(a, b));
            rhs = sub(&rhs, &y.m10(&bm.apply(a), &fb_));
            rhs = sub(&rhs, &y.m01(&fa, &bm.apply(b)));
            r.check("iii", &[i, j], sub(&lhs, &rhs));
        }
    }
    Ok(r)
}

/// `g ∘ f = (g_0 f_0, g_1 f_1, g_2(f_0, f_0) + g_1 f_2, g_1 B + C f_0)`.
pub fn compose_morphisms(g: &AInfinityMorphism, f: &AInfinityMorphism) -> Result<AInfinityMorphism> {
    if g.f0.cols() != f.f0.rows() || g.f1.cols() != f.f1.rows() {
        return Err(Error::Shape("morphisms are not composable".into()));
    }
    let f2 = g.f2.pre_compose_all(&f.f0)?.add(&f.f2.post_compose(&g.f1)?)?;
    Ok(AInfinityMorphism {
        f0: g.f0.mul(&f.f0),
        f1: g.f1.mul(&f.f1),
        f2,
        b: g.f1.mul(&f.b).add(&g.b.mul(&f.f0)),
    })
}

/// Transport along linear isomorphisms `p0` of `A_0` and `p1` of `A_1`; returns
/// the new pair and the morphism `(p0, p1, 0, 0)` into it.
pub fn transport_linear(x: &AInfinityPair, p0: &Matrix, p1: &Matrix) -> Result<(AInfinityPair, AInfinityMorphism)> {
    let alg = &x.algebra;
    let (a0, a1) = (alg.a0(), alg.a1());
    if p0.shape() != (a0, a0) || p1.shape() != (a1, a1) {
        return Err(Error::Shape("transport maps must be square of the right sizes".into()));
    }
    let q0 = p0.inverse().ok_or_else(|| Error::Input("p0 is singular".into()))?;
    let q1 = p1.inverse().ok_or_else(|| Error::Input("p1 is singular".into()))?;
    let (e, f) = alg.bases();
    let mut left = Vec::with_capacity(a0 * a1 * a1);
    for a in &e {
        for m in &f {
            left.extend(p1.apply(&alg.m01(&q0.apply(a), &q1.apply(m))));
        }
    }
    let mut right = Vec::with_capacity(a0 * a1 * a1);
    for m in &f {
        for a in &e {
            right.extend(p1.apply(&alg.m10(&q1.apply(m), &q0.apply(a))));
        }
    }
    let algebra = TwoTermAInfinity::new(
        p0.mul(&alg.d).mul(&q1),
        alg.mu2.pre_compose_all(&q0)?.post_compose(p0)?,
        left,
        right,
        alg.mu3.pre_compose_all(&q0)?.post_compose(p1)?,
    )?;
    let th = &x.derivation;
    let derivation = HomotopyDerivation {
        theta0: p0.mul(&th.theta0).mul(&q0),
        theta1: p1.mul(&th.theta1).mul(&q1),
        theta2: th.theta2.pre_compose_all(&q0)?.post_compose(p1)?,
    };
    let morphism = AInfinityMorphism {
        f0: p0.clone(),
        f1: p1.clone(),
        f2: Cochain::zero(2, a0, a1),
        b: Matrix::zeros(a1, a0),
    };
    Ok((AInfinityPair::new(algebra, derivation)?, morphism))
}

/// The pair for which `(id, id, f_2, B)` is a morphism out of `x`.
pub fn gauge_transform(x: &AInfinityPair, f2: &Cochain, b: &Matrix) -> Result<(AInfinityPair, AInfinityMorphism)> {
    let alg = &x.algebra;
    let (a0, a1) = (alg.a0(), alg.a1());
    if f2.degree() != 2 || f2.adim() != a0 || f2.mdim() != a1 || b.shape() != (a1, a0) {
        return Err(Error::Shape("gauge data does not match the complex".into()));
    }
    let (e, f) = alg.bases();
    let ev2 = |a: &[Scalar], c: &[Scalar]| f2.eval(&[a.to_vec(), c.to_vec()]);
    let d = &alg.d;
    let mu2 = Cochain::from_values(2, a0, a0, |t| sub(&alg.mu2.value(t), &d.apply(&f2.value(t))));
    let mut left = Vec::with_capacity(a0 * a1 * a1);
    for a in &e {
        for m in &f {
            left.extend(sub(&alg.m01(a, m), &ev2(a, &d.apply(m))));
        }
    }
    let mut right = Vec::with_capacity(a0 * a1 * a1);
    for m in &f {
        for a in &e {
            right.extend(sub(&alg.m10(m, a), &ev2(&d.apply(m), a)));
        }
    }
    let partial = TwoTermAInfinity::new(d.clone(), mu2, left, right, Cochain::zero(3, a0, a1))?;
    let mu3 = Cochain::from_values(3, a0, a1, |t| {
        let (a, bb, c) = (&e[t[0]], &e[t[1]], &e[t[2]]);
        let mut v = alg.m3(a, bb, c);
        v = sub(&v, &ev2(&alg.m00(a, bb), c));
        v = add(&v, &ev2(a, &alg.m00(bb, c)));
        v = sub(&v, &partial.m10(&ev2(a, bb), c));
        add(&v, &partial.m01(a, &ev2(bb, c)))
    });
    let algebra = TwoTermAInfinity { mu3, ..partial };
    let th = &x.derivation;
    let theta0 = th.theta0.add(&d.mul(b));
    let theta1 = th.theta1.add(&b.mul(d));
    let theta2 = Cochain::from_values(2, a0, a1, |t| {
        let (a, c) = (&e[t[0]], &e[t[1]]);
        let mut v = th.theta2.value(t);
        v = sub(&v, &ev2(&th.theta0.apply(a), c));
        v = sub(&v, &ev2(a, &th.theta0.apply(c)));
        v = add(&v, &theta1.apply(&f2.value(t)));
        v = add(&v, &algebra.m10(&b.apply(a), c));
        v = add(&v, &algebra.m01(a, &b.apply(c)));
        sub(&v, &b.apply(&alg.m00(a, c)))
    });
    let derivation = HomotopyDerivation { theta0, theta1, theta2 };
    let morphism = AInfinityMorphism {
        f0: Matrix::identity(a0),
        f1: Matrix::identity(a1),
        f2: f2.clone(),
        b: b.clone(),
    };
    Ok((AInfinityPair::new(algebra, derivation)?, morphism))
}

/// An associative 2-algebra with a 2-derivation, presented on a 2-vector space
/// `C_1 ⇉ C_0`. Composition of arrows is `g ∘ f = f + g − i(t f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Associative2Presentation {
    /// `s, t: C_1 -> C_0`.
    pub source: Matrix,
    pub target: Matrix,
    /// `i: C_0 -> C_1`.
    pub identity: Matrix,
    /// The bifunctor on objects and on arrows.
    pub mu_objects: Cochain,
    pub mu_arrows: Cochain,
    /// `A_{a,b,c}: (ab)c -> a(bc)`, trilinear in objects.
    pub associator: Cochain,
    /// The functor `D` on objects and arrows.
    pub d_objects: Matrix,
    pub d_arrows: Matrix,
    /// `D_{a,b}: D(ab) -> D(a) b + a D(b)`.
    pub derivator: Cochain,
}

impl Associative2Presentation {
    pub fn c0(&self) -> usize {
        self.source.rows()
    }

    pub fn c1(&self) -> usize {
        self.source.cols()
    }

    fn check_shapes(&self) -> Result<()> {
        let (c0, c1) = (self.c0(), self.c1());
        let ok = self.target.shape() == (c0, c1)
            && self.identity.shape() == (c1, c0)
            && self.mu_objects.degree() == 2
            && self.mu_objects.adim() == c0
            && self.mu_objects.mdim() == c0
            && self.mu_arrows.degree() == 2
            && self.mu_arrows.adim() == c1
            && self.mu_arrows.mdim() == c1
            && self.associator.degree() == 3
            && self.associator.adim() == c0
            && self.associator.mdim() == c1
            && self.d_objects.shape() == (c0, c0)
            && self.d_arrows.shape() == (c1, c1)
            && self.derivator.degree() == 2
            && self.derivator.adim() == c0
            && self.derivator.mdim() == c1;
        if ok {
            Ok(())
        } else {
            Err(Error::Shape("presentation components have inconsistent shapes".into()))
        }
    }

    pub fn mo(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.mu_objects.eval(&[a.to_vec(), b.to_vec()])
    }

    pub fn ma(&self, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        self.mu_arrows.eval(&[f.to_vec(), g.to_vec()])
    }

    pub fn assoc(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Vec<Scalar> {
        self.associator.eval(&[a.to_vec(), b.to_vec(), c.to_vec()])
    }

    pub fn der(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.derivator.eval(&[a.to_vec(), b.to_vec()])
    }

    fn id(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.identity.apply(a)
    }

    /// `g ∘ f` for `s g = t f`.
    pub fn compose(&self, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        sub(&add(f, g), &self.id(&self.target.apply(f)))
    }

    /// Basis of `ker s` as columns, one per free coordinate in ascending order.
    pub fn kernel_basis(&self) -> Matrix {
        let s = self.source.to_sparse();
        Matrix::from_columns(self.c1(), &s.kernel())
    }

    /// Transport along isomorphisms `q` of objects and `p` of arrows.
    pub fn transport(&self, q: &Matrix, p: &Matrix) -> Result<Associative2Presentation> {
        self.check_shapes()?;
        let qi = q
            .inverse()
            .ok_or_else(|| Error::Input("object map is singular".into()))?;
        let pi = p
            .inverse()
            .ok_or_else(|| Error::Input("arrow map is singular".into()))?;
        Ok(Associative2Presentation {
            source: q.mul(&self.source).mul(&pi),
            target: q.mul(&self.target).mul(&pi),
            identity: p.mul(&self.identity).mul(&qi),
            mu_objects: self.mu_objects.pre_compose_all(&qi)?.post_compose(q)?,
            mu_arrows: self.mu_arrows.pre_compose_all(&pi)?.post_compose(p)?,
            associator: self.associator.pre_compose_all(&qi)?.post_compose(p)?,
            d_objects: q.mul(&self.d_objects).mul(&qi),
            d_arrows: p.mul(&self.d_arrows).mul(&pi),
            derivator: self.derivator.pre_compose_all(&qi)?.post_compose(p)?,
        })
    }

    /// The 2-vector space, bifunctor, associator and derivator axioms, checked
    /// on basis elements.
    pub fn validate(&self) -> Result<ValidationReport> {
        self.check_shapes()?;
        let (c0, c1) = (self.c0(), self.c1());
        let mut r = ValidationReport::new();
        let (s, t) = (&self.source, &self.target);
        let eye = Matrix::identity(c0);
        r.check("s-i", &[], s.mul(&self.identity).sub(&eye).data().to_vec());
        r.check("t-i", &[], t.mul(&self.identity).sub(&eye).data().to_vec());
        let o: Vec<Vec<Scalar>> = (0..c0).map(|i| unit(c0, i)).collect();
        let ar: Vec<Vec<Scalar>> = (0..c1).map(|i| unit(c1, i)).collect();
        let ker = self.kernel_basis();
        let k: Vec<Vec<Scalar>> = (0..ker.cols()).map(|j| ker.column(j)).collect();
        // bifunctor
        for (x, f) in ar.iter().enumerate() {
            for (y, g) in ar.iter().enumerate() {
                let fg = self.ma(f, g);
                r.check(
                    "mu-source",
                    &[x, y],
                    sub(&s.apply(&fg), &self.mo(&s.apply(f), &s.apply(g))),
                );
                r.check(
                    "mu-target",
                    &[x, y],
                    sub(&t.apply(&fg), &self.mo(&t.apply(f), &t.apply(g))),
                );
            }
            let f_loop = sub(f, &self.id(&t.apply(f)));
            for (l, kv) in k.iter().enumerate() {
                r.check("interchange-left", &[x, l], self.ma(&f_loop, kv));
                r.check("interchange-right", &[l, x], self.ma(kv, &f_loop));
            }
        }
        for (a, oa) in o.iter().enumerate() {
            for (b, ob) in o.iter().enumerate() {
                let v = sub(&self.ma(&self.id(oa), &self.id(ob)), &self.id(&self.mo(oa, ob)));
                r.check("mu-identity", &[a, b], v);
            }
        }
        // associator: endpoints
        for idx in (0..c0.pow(3)).map(|j| decode(j, 3, c0)) {
            let (a, b, c) = (&o[idx[0]], &o[idx[1]], &o[idx[2]]);
            let arr = self.assoc(a, b, c);
            r.check("assoc-source", &idx, sub(&s.apply(&arr), &self.mo(&self.mo(a, b), c)));
            r.check("assoc-target", &idx, sub(&t.apply(&arr), &self.mo(a, &self.mo(b, c))));
        }
        // naturality of the associator in arrows
        for idx in (0..c1.pow(3)).map(|j| decode(j, 3, c1)) {
            let (f, g, h) = (&ar[idx[0]], &ar[idx[1]], &ar[idx[2]]);
            let top = self.ma(&self.ma(f, g), h);
            let lhs = self.compose(&top, &self.assoc(&t.apply(f), &t.apply(g), &t.apply(h)));
            let start = self.assoc(&s.apply(f), &s.apply(g), &s.apply(h));
            let rhs = self.compose(&start, &self.ma(f, &self.ma(g, h)));
            r.check("assoc-natural", &idx, sub(&lhs, &rhs));
        }
        // pentagon
        for idx in (0..c0.pow(4)).map(|j| decode(j, 4, c0)) {
            let (a, b, c, e) = (&o[idx[0]], &o[idx[1]], &o[idx[2]], &o[idx[3]]);
            let (ab, bc, ce) = (self.mo(a, b), self.mo(b, c), self.mo(c, e));
            let left = self.compose(&self.assoc(&ab, c, e), &self.assoc(a, b, &ce));
            let step1 = self.ma(&self.assoc(a, b, c), &self.id(e));
            let step2 = self.assoc(a, &bc, e);
            let step3 = self.ma(&self.id(a), &self.assoc(b, c, e));
            let right = self.compose(&self.compose(&step1, &step2), &step3);
            r.check("pentagon", &idx, sub(&left, &right));
        }
        // D is a functor of 2-vector spaces
        let (d0, d1) = (&self.d_objects, &self.d_arrows);
        r.check("d-source", &[], s.mul(d1).sub(&d0.mul(s)).data().to_vec());
        r.check("d-target", &[], t.mul(d1).sub(&d0.mul(t)).data().to_vec());
        r.check(
            "d-identity",
            &[],
            d1.mul(&self.identity).sub(&self.identity.mul(d0)).data().to_vec(),
        );
        // derivator: endpoints and naturality
        for (a, oa) in o.iter().enumerate() {
            for (b, ob) in o.iter().enumerate() {
                let arr = self.der(oa, ob);
                r.check(
                    "derivator-source",
                    &[a, b],
                    sub(&s.apply(&arr), &d0.apply(&self.mo(oa, ob))),
                );
                let tgt = add(&self.mo(&d0.apply(oa), ob), &self.mo(oa, &d0.apply(ob)));
                r.check("derivator-target", &[a, b], sub(&t.apply(&arr), &tgt));
            }
        }
        for (x, f) in ar.iter().enumerate() {
            for (y, g) in ar.iter().enumerate() {
                let lhs = self.compose(&d1.apply(&self.ma(f, g)), &self.der(&t.apply(f), &t.apply(g)));
                let leib = add(&self.ma(&d1.apply(f), g), &self.ma(f, &d1.apply(g)));
                let rhs = self.compose(&self.der(&s.apply(f), &s.apply(g)), &leib);
                r.check("derivator-natural", &[x, y], sub(&lhs, &rhs));
            }
        }
        // derivator hexagon
        for idx in (0..c0.pow(3)).map(|j| decode(j, 3, c0)) {
            let (a, b, c) = (&o[idx[0]], &o[idx[1]], &o[idx[2]]);
            let (ab, bc) = (self.mo(a, b), self.mo(b, c));
            let (da, db, dc) = (d0.apply(a), d0.apply(b), d0.apply(c));
            let l1 = self.der(&ab, c);
            let l2 = add(&self.ma(&self.der(a, b), &self.id(c)), &self.id(&self.mo(&ab, &dc)));
            let l3 = add(
                &add(&self.assoc(a, b, &dc), &self.assoc(a, &db, c)),
                &self.assoc(&da, b, c),
            );
            let left = self.compose(&self.compose(&l1, &l2), &l3);
            let r1 = d1.apply(&self.assoc(a, b, c));
            let r2 = self.der(a, &bc);
            let r3 = add(&self.id(&self.mo(&da, &bc)), &self.ma(&self.id(a), &self.der(b, c)));
            let right = self.compose(&self.compose(&r1, &r2), &r3);
            r.check("derivator-hexagon", &idx, sub(&left, &right));
        }
        Ok(r)
    }
}

/// Arrows `A_0 ⊕ A_1` with `s(a, m) = a`, `t(a, m) = a + dm`, `i(a) = (a, 0)`;
/// `μ((a,m),(b,n)) = (ab, μ_2(a,n) + μ_2(m,b) + μ_2(dm,n))`,
/// `A_{a,b,c} = ((ab)c, −μ_3(a,b,c))` so that its target is `a(bc)`, `D(a, m) = (θ_0 a, θ_1 m)` and
/// `D_{a,b} = (θ_0(ab), θ_2(a,b))`.
pub fn functor_t(x: &AInfinityPair) -> Result<Associative2Presentation> {
    ensure_valid("2-term AssDer∞ pair", x.validate())?;
    let alg = &x.algebra;
    let (a0, a1) = (alg.a0(), alg.a1());
    let c1 = a0 + a1;
    let split = |v: &[Scalar]| (v[..a0].to_vec(), v[a0..].to_vec());
    let join = |a: Vec<Scalar>, m: Vec<Scalar>| {
        let mut v = a;
        v.extend(m);
        v
    };
    let source = Matrix::from_fn(a0, c1, |r, c| if r == c { Scalar::one() } else { Scalar::zero() });
    let target = source.add(&Matrix::from_fn(a0, c1, |r, c| {
        if c >= a0 {
            alg.d[(r, c - a0)].clone()
        } else {
            Scalar::zero()
        }
    }));
    let identity = source.transpose();
    let e: Vec<Vec<Scalar>> = (0..c1).map(|i| unit(c1, i)).collect();
    let mu_arrows = Cochain::from_values(2, c1, c1, |t| {
        let (a, m) = split(&e[t[0]]);
        let (b, n) = split(&e[t[1]]);
        let arrow = add(&add(&alg.m01(&a, &n), &alg.m10(&m, &b)), &alg.m01(&alg.d.apply(&m), &n));
        join(alg.m00(&a, &b), arrow)
    });
    let mu_objects = alg.mu2.clone();
    let associator = Cochain::from_values(3, a0, c1, |t| {
        let (a, b, c) = (unit(a0, t[0]), unit(a0, t[1]), unit(a0, t[2]));
        join(
            alg.m00(&alg.m00(&a, &b), &c),
            alg.m3(&a, &b, &c).iter().map(|v| -v).collect(),
        )
    });
    let th = &x.derivation;
    let d_arrows = Matrix::from_fn(c1, c1, |r, c| match (r < a0, c < a0) {
        (true, true) => th.theta0[(r, c)].clone(),
        (false, false) => th.theta1[(r - a0, c - a0)].clone(),
        _ => Scalar::zero(),
    });
    let derivator = Cochain::from_values(2, a0, c1, |t| {
        join(th.theta0.apply(&alg.mu2.value(t)), th.theta2.value(t))
    });
    Ok(Associative2Presentation {
        source,
        target,
        identity,
        mu_objects,
        mu_arrows,
        associator,
        d_objects: th.theta0.clone(),
        d_arrows,
        derivator,
    })
}

/// Left inverse of a full-column-rank matrix: `(KᵀK)^{-1} Kᵀ`.
fn left_inverse(k: &Matrix) -> Result<Matrix> {
    let kt = k.transpose();
    let gram = kt.mul(k);
    let inv = gram
        .inverse()
        .ok_or_else(|| Error::Input("kernel basis is degenerate".into()))?;
    Ok(inv.mul(&kt))
}

/// `A_0 = C_0`, `A_1 = ker s` in its deterministic basis, `d = t|ker s`;
/// `μ_3 = −(A − i s A)`, `θ_0 = D`, `θ_1 = D|ker s`, `θ_2 = D_{a,b} − i s D_{a,b}`.
pub fn functor_s(p: &Associative2Presentation) -> Result<AInfinityPair> {
    ensure_valid("associative 2-algebra presentation", p.validate()?)?;
    let c0 = p.c0();
    let k = p.kernel_basis();
    let a1 = k.cols();
    let coords = left_inverse(&k)?;
    let to_kernel = |v: &[Scalar]| coords.apply(v);
    let loop_part = |v: &[Scalar]| sub(v, &p.id(&p.source.apply(v)));
    let kc: Vec<Vec<Scalar>> = (0..a1).map(|j| k.column(j)).collect();
    let o: Vec<Vec<Scalar>> = (0..c0).map(|i| unit(c0, i)).collect();
    let mut left = Vec::with_capacity(c0 * a1 * a1);
    for a in &o {
        for m in &kc {
            left.extend(to_kernel(&p.ma(&p.id(a), m)));
        }
    }
    let mut right = Vec::with_capacity(c0 * a1 * a1);
    for m in &kc {
        for a in &o {
            right.extend(to_kernel(&p.ma(m, &p.id(a))));
        }
    }
    let mu3 = Cochain::from_values(3, c0, a1, |t| to_kernel(&loop_part(&p.associator.value(t)))).neg();
    let algebra = TwoTermAInfinity::new(p.target.mul(&k), p.mu_objects.clone(), left, right, mu3)?;
    let derivation = HomotopyDerivation {
        theta0: p.d_objects.clone(),
        theta1: coords.mul(&p.d_arrows).mul(&k),
        theta2: Cochain::from_values(2, c0, a1, |t| to_kernel(&loop_part(&p.derivator.value(t)))),
    };
    let x = AInfinityPair::new(algebra, derivation)?;
    ensure_valid("S of the presentation", x.validate())?;
    Ok(x)
}

/// `θ_C: T(S(C)) -> C`, `(θ_C)_0 = id`, `(θ_C)_1(a, m) = i(a) + m`.
pub fn ts_isomorphism(p: &Associative2Presentation) -> Matrix {
    p.identity.hstack(&p.kernel_basis())
}

/// A strict isomorphism of presentations `(f0, f1)`: bijective, and
/// compatible with s, t, i, the bifunctor, the associator, D and the derivator.
pub fn verify_presentation_iso(
    src: &Associative2Presentation,
    tgt: &Associative2Presentation,
    f0: &Matrix,
    f1: &Matrix,
) -> Result<ValidationReport> {
    if f0.shape() != (tgt.c0(), src.c0()) || f1.shape() != (tgt.c1(), src.c1()) {
        return Err(Error::Shape(
            "isomorphism components do not match the presentations".into(),
        ));
    }
    let mut r = ValidationReport::new();
    if f0.inverse().is_none() {
        r.check("bijective-objects", &[], vec![Scalar::one()]);
    }
    if f1.inverse().is_none() {
        r.check("bijective-arrows", &[], vec![Scalar::one()]);
    }
    r.check(
        "source",
        &[],
        tgt.source.mul(f1).sub(&f0.mul(&src.source)).data().to_vec(),
    );
    r.check(
        "target",
        &[],
        tgt.target.mul(f1).sub(&f0.mul(&src.target)).data().to_vec(),
    );
    r.check(
        "identity",
        &[],
        f1.mul(&src.identity).sub(&tgt.identity.mul(f0)).data().to_vec(),
    );
    r.check(
        "d-objects",
        &[],
        f0.mul(&src.d_objects).sub(&tgt.d_objects.mul(f0)).data().to_vec(),
    );
    r.check(
        "d-arrows",
        &[],
        f1.mul(&src.d_arrows).sub(&tgt.d_arrows.mul(f1)).data().to_vec(),
    );
    let (c0, c1) = (src.c0(), src.c1());
    let o: Vec<Vec<Scalar>> = (0..c0).map(|i| unit(c0, i)).collect();
    let ar: Vec<Vec<Scalar>> = (0..c1).map(|i| unit(c1, i)).collect();
    for (x, a) in o.iter().enumerate() {
        for (y, b) in o.iter().enumerate() {
            let v = sub(&f0.apply(&src.mo(a, b)), &tgt.mo(&f0.apply(a), &f0.apply(b)));
            r.check("mu-objects", &[x, y], v);
            let v = sub(&f1.apply(&src.der(a, b)), &tgt.der(&f0.apply(a), &f0.apply(b)));
            r.check("derivator", &[x, y], v);
        }
    }
    for (x, f) in ar.iter().enumerate() {
        for (y, g) in ar.iter().enumerate() {
            let v = sub(&f1.apply(&src.ma(f, g)), &tgt.ma(&f1.apply(f), &f1.apply(g)));
            r.check("mu-arrows", &[x, y], v);
        }
    }
    for idx in (0..c0.pow(3)).map(|j| decode(j, 3, c0)) {
        let (a, b, c) = (&o[idx[0]], &o[idx[1]], &o[idx[2]]);
        let v = sub(
            &f1.apply(&src.assoc(a, b, c)),
            &tgt.assoc(&f0.apply(a), &f0.apply(b), &f0.apply(c)),
        );
        r.check("associator", &idx, v);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn dual(phi: Matrix) -> AssDerPair {
        let alg = Algebra::from_products(2, &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1))])
            .unwrap()
            .with_unit(vec![q(1), q(0)])
            .unwrap();
        AssDerPair::new(alg, phi).unwrap()
    }

    #[test]
    fn identity_crossed_module() {
        let pair = dual(Matrix::from_ints(&[&[0, 0], &[0, 1]]));
        let x = identity_strict_pair(&pair).unwrap();
        assert!(x.validate().is_valid());
        let cm = strict_to_crossed(&x).unwrap();
        assert_eq!(
            cm.a,
            AssDerPair::new(
                Algebra::new(2, pair.algebra.structure().to_vec()).unwrap(),
                pair.derivation.clone()
            )
            .unwrap()
        );
        assert_eq!(cm.dt, Matrix::identity(2));
        assert_eq!(crossed_to_strict(&cm).unwrap(), x);
    }

    #[test]
    fn t_then_s_is_identity_and_ts_iso() {
        let pair = dual(Matrix::from_ints(&[&[0, 0], &[0, 1]]));
        let x = identity_strict_pair(&pair).unwrap();
        let mut f2 = Cochain::zero(2, 2, 2);
        f2.set(1, &[1, 1], q(1));
        f2.set(0, &[0, 1], q(-2));
        let (y, m) = gauge_transform(&x, &f2, &Matrix::from_ints(&[&[1, 0], &[2, -1]])).unwrap();
        assert!(y.validate().is_valid(), "{}", y.validate());
        assert!(verify_morphism(&m, &x, &y).unwrap().is_valid());
        assert!(!y.is_strict());
        let p = functor_t(&y).unwrap();
        assert!(p.validate().unwrap().is_valid(), "{}", p.validate().unwrap());
        assert_eq!(functor_s(&p).unwrap(), y);
        let moved = p
            .transport(
                &Matrix::from_ints(&[&[1, 1], &[0, 1]]),
                &Matrix::from_ints(&[&[1, 0, 0, 1], &[0, 1, 2, 0], &[0, 0, 1, 0], &[1, 0, 0, 2]]),
            )
            .unwrap();
        assert!(moved.validate().unwrap().is_valid());
        let s = functor_s(&moved).unwrap();
        let ts = functor_t(&s).unwrap();
        let iso = ts_isomorphism(&moved);
        let report = verify_presentation_iso(&ts, &moved, &Matrix::identity(2), &iso).unwrap();
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn skeletal_round_trip_and_corruption() {
        let pair = dual(Matrix::from_ints(&[&[0, 0], &[0, 1]]));
        let rep = crate::algebra::adjoint_rep(&pair);
        let mut f = AssDerCochain::zero(2, 2, 2);
        f.top.set(1, &[1, 1], q(1));
        let c = assder_d(&pair, &rep, &f).unwrap();
        let x = skeletal_from_cocycle(&pair, &rep, &c).unwrap();
        assert!(x.validate().is_valid());
        let (p2, r2, c2) = cocycle_from_skeletal(&x).unwrap();
        assert_eq!(
            (p2.derivation, r2.phi, c2),
            (pair.derivation.clone(), rep.phi.clone(), c.clone())
        );

        let mut bad = x.clone();
        let mut mu3 = bad.algebra.mu3.clone();
        mu3.set(0, &[1, 1, 1], q(5));
        bad.algebra.mu3 = mu3;
        let report = bad.validate();
        assert!(report.rules().contains(&"ainfty.f"));
        assert!(report.rules().contains(&"derivation.d"));

        let mut bad = x.clone();
        bad.derivation.theta2.set(1, &[0, 1], q(1));
        assert!(bad.validate().rules().contains(&"derivation.d"));
        assert!(!bad.validate().rules().iter().any(|r| r.starts_with("ainfty")));

        let mut noncocycle = c.clone();
        noncocycle.top.set(0, &[1, 1, 1], q(1));
        assert!(matches!(
            skeletal_from_cocycle(&pair, &rep, &noncocycle),
            Err(Error::NotCocycle(_))
        ));
    }

    #[test]
    fn morphisms_compose() {
        use rand::SeedableRng;
        let pair = dual(Matrix::from_ints(&[&[0, 0], &[0, 1]]));
        let x = identity_strict_pair(&pair).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let (y, f) = crate::random::ainfty_pair(&mut rng, &x, 0.6).unwrap();
        let (z, g) = crate::random::ainfty_pair(&mut rng, &y, 0.6).unwrap();
        assert!(y.validate().is_valid() && z.validate().is_valid());
        assert!(verify_morphism(&f, &x, &y).unwrap().is_valid());
        assert!(verify_morphism(&g, &y, &z).unwrap().is_valid());
        let gf = compose_morphisms(&g, &f).unwrap();
        assert!(verify_morphism(&gf, &x, &z).unwrap().is_valid());
        let id = AInfinityMorphism::identity(&x.algebra);
        assert_eq!(compose_morphisms(&f, &id).unwrap(), f);
        let mut broken = gf.clone();
        broken.b[(0, 0)] += q(1);
        assert!(!verify_morphism(&broken, &x, &z).unwrap().is_valid());
    }
}
