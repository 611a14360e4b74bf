//! Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
//! exact over ℚ; the only numeric tolerance is the runtime bound on 1.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use assder_core::ainfty::{
    cocycle_from_skeletal, crossed_to_strict, functor_s, functor_t, identity_strict_pair, skeletal_from_cocycle,
    strict_to_crossed, ts_isomorphism, verify_presentation_iso, AInfinityPair,
};
use assder_core::algebra::adjoint_rep;
use assder_core::cochain::{assder_bracket, assder_d, delta_op, hochschild_d, mc_check};
use assder_core::complex::{cohomology, differential_matrix};
use assder_core::deformation::{deformation_obstruction, extend_deformation, infinitesimal, verify_deformation};
use assder_core::extensions::{
    build_central_extension, derivation_obstruction, extend_derivation_pair, extensions_isomorphic, extract_cocycle,
    verify_extension_morphism,
};
use assder_core::lieder::chain_map_residual;
use assder_core::scalar::q;
use assder_core::{
    fixtures, random, AssDerCochain, AssDerPair, CentralExtensionSpec, Cochain, Limits, Matrix, RepPair, Result, Scalar,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Runtime bound for criterion 1.
const COMPLEX_BUDGET: Duration = Duration::from_secs(10);
const SEED: u64 = 20261014;

type Check = dyn FnOnce(&mut StdRng) -> Result<Outcome>;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
    })
}

fn all_fixtures() -> Vec<(String, AssDerPair, RepPair)> {
    let mut out = Vec::new();
    for (name, pair) in fixtures::algebras() {
        for (rname, rep) in fixtures::reps(&pair) {
            out.push((format!("{name}/{rname}"), pair.clone(), rep));
        }
    }
    out
}

fn complex_axioms() -> Result<Outcome> {
    let start = Instant::now();
    let limits = Limits {
        max_degree: 6,
        ..Limits::default()
    };
    let mut checked = 0;
    for (name, pair, rep) in all_fixtures() {
        let mut prev = differential_matrix(&pair, &rep, 1, &limits)?;
        for n in 1..=4 {
            let next = differential_matrix(&pair, &rep, n + 1, &limits)?;
            if !next.mul(&prev).is_zero() {
                return outcome(false, format!("∂∂ ≠ 0 on {name} at degree {n}"));
            }
            checked += 1;
            prev = next;
        }
    }
    let t = start.elapsed();
    outcome(
        t < COMPLEX_BUDGET,
        format!(
            "{checked} products ∂_(n+1)∂_n, n = 1..4, exact zero; {:.2?} (budget {COMPLEX_BUDGET:?})",
            t
        ),
    )
}

fn commutation_lemma(rng: &mut StdRng) -> Result<Outcome> {
    let mut count = 0;
    for (name, pair, rep) in all_fixtures() {
        for i in 0..100 {
            let n = 1 + i % 3;
            let f = random::cochain(rng, n, pair.dim(), rep.mdim(), 0.6);
            let lhs = hochschild_d(&pair, &rep, &delta_op(&pair, &rep, &f)?)?;
            let rhs = delta_op(&pair, &rep, &hochschild_d(&pair, &rep, &f)?)?;
            if lhs != rhs {
                return outcome(false, format!("δ_Hoch δ ≠ δ δ_Hoch on {name}, degree {n}"));
            }
            count += 1;
        }
    }
    outcome(true, format!("{count} random cochains, degrees 1-3, exact zero"))
}

fn bracket_laws(rng: &mut StdRng) -> Result<Outcome> {
    let dim = 2;
    for _ in 0..50 {
        let (m, n, p) = (rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3));
        let f = random::assder_cochain(rng, m, dim, dim, 0.6);
        let g = random::assder_cochain(rng, n, dim, dim, 0.6);
        let h = random::assder_cochain(rng, p, dim, dim, 0.6);
        let sign = Scalar::sign((m - 1) * (n - 1));
        let fg = assder_bracket(&f, &g)?;
        let gf = assder_bracket(&g, &f)?;
        if !fg.add(&gf.scale(&sign))?.is_zero() {
            return outcome(false, format!("antisymmetry fails in degrees ({m}, {n})"));
        }
        let lhs = assder_bracket(&f, &assder_bracket(&g, &h)?)?;
        let rhs = assder_bracket(&fg, &h)?.add(&assder_bracket(&g, &assder_bracket(&f, &h)?)?.scale(&sign))?;
        if lhs != rhs {
            return outcome(false, format!("Jacobi fails in degrees ({m}, {n}, {p})"));
        }
    }
    outcome(
        true,
        "50 random triples on a 2-dim space, degrees ≤ 3, exact zero residuals",
    )
}

/// Perturb one coefficient of the product or the derivation.
fn corrupt(rng: &mut StdRng, pair: &AssDerPair) -> Result<AssDerPair> {
    let n = pair.dim();
    let mut mu = pair.algebra.structure().to_vec();
    let mut phi = pair.derivation.clone();
    let bump = Scalar::from_int(rng.gen_range(1..=3));
    if rng.gen_bool(0.5) {
        let k = rng.gen_range(0..mu.len());
        mu[k] = &mu[k] + &bump;
    } else {
        let (r, c) = (rng.gen_range(0..n), rng.gen_range(0..n));
        phi = phi.add(&Matrix::from_fn(n, n, |i, j| {
            if (i, j) == (r, c) {
                bump.clone()
            } else {
                Scalar::zero()
            }
        }));
    }
    AssDerPair::new(assder_core::Algebra::new(n, mu)?, phi)
}

fn maurer_cartan(rng: &mut StdRng) -> Result<Outcome> {
    let bases: Vec<AssDerPair> = fixtures::algebras()
        .into_iter()
        .map(|(_, p)| p)
        .chain([fixtures::zero_algebra()])
        .collect();
    let (mut valid, mut invalid) = (0, 0);
    for i in 0..200 {
        let base = &bases[i % bases.len()];
        let moved = base.transport(&random::invertible(rng, base.dim(), 0.5))?;
        let candidate = if i % 2 == 0 { moved } else { corrupt(rng, &moved)? };
        let report = mc_check(&candidate);
        let validators = candidate.algebra.validate().is_valid() && candidate.validate_derivation().is_valid();
        if report.is_maurer_cartan != validators || !report.consistent() {
            return outcome(false, format!("disagreement on candidate {i}"));
        }
        if validators {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    outcome(
        true,
        format!("200 candidates ({valid} valid, {invalid} invalid), full agreement"),
    )
}

fn random_cocycle(rng: &mut StdRng, basis: &[Vec<Scalar>], pair: &AssDerPair, rep: &RepPair) -> Result<AssDerCochain> {
    let len = AssDerCochain::space_dim(2, pair.dim(), rep.mdim());
    let mut v = vec![Scalar::zero(); len];
    for b in basis {
        let s = random::scalar(rng, 0.8);
        for (x, y) in v.iter_mut().zip(b) {
            *x = &*x + &(&s * y);
        }
    }
    AssDerCochain::from_flat(2, pair.dim(), rep.mdim(), &v)
}

fn central(pair: &AssDerPair, kernel: &RepPair, c: &AssDerCochain) -> Result<assder_core::ExtensionTriple> {
    build_central_extension(&CentralExtensionSpec {
        base: pair.clone(),
        kernel: kernel.clone(),
        psi: c.top.clone(),
        chi: c.tail.clone().expect("degree 2"),
    })
}

fn extension_classification(rng: &mut StdRng) -> Result<Outcome> {
    let limits = Limits::default();
    // bar-complex oracle: H² = 0 for the dual numbers (φ = 0) and 2 for the zero-product base, trivial ℚ kernel
    let cases = [
        ("dual numbers", fixtures::dual_numbers(Matrix::zeros(2, 2)), 0),
        ("zero-product", fixtures::zero_algebra(), 2),
    ];
    let mut notes = Vec::new();
    for (name, pair, oracle) in cases {
        let kernel = RepPair::trivial(pair.dim(), Matrix::zeros(1, 1))?;
        let basis = differential_matrix(&pair, &kernel, 2, &limits)?.kernel();
        for _ in 0..50 {
            let c = random_cocycle(rng, &basis, &pair, &kernel)?;
            let ext = central(&pair, &kernel, &c)?;
            let (psi, chi) = extract_cocycle(&ext, &pair)?;
            if AssDerCochain::new(psi, Some(chi))? != c {
                return outcome(false, format!("{name}: build→extract is not the identity"));
            }
            let b = random::assder_cochain(rng, 1, pair.dim(), 1, 0.7);
            let shifted = central(&pair, &kernel, &c.add(&assder_d(&pair, &kernel, &b)?)?)?;
            match extensions_isomorphic(&ext, &shifted, &pair, &limits)? {
                Some(eta) if verify_extension_morphism(&ext, &shifted, &eta).is_valid() => {}
                _ => {
                    return outcome(
                        false,
                        format!("{name}: cohomologous cocycles gave non-isomorphic extensions"),
                    )
                }
            }
        }
        let h2 = cohomology(&pair, &kernel, 2, true, &limits)?;
        if h2.betti != oracle {
            return outcome(
                false,
                format!("{name}: H² = {} but the oracle gives {oracle}", h2.betti),
            );
        }
        let product = central(&pair, &kernel, &AssDerCochain::zero(2, pair.dim(), 1))?;
        for r in &h2.representatives {
            if extensions_isomorphic(&central(&pair, &kernel, r)?, &product, &pair, &limits)?.is_some() {
                return outcome(
                    false,
                    format!("{name}: a nonzero class is isomorphic to the direct product"),
                );
            }
        }
        notes.push(format!("{name} H²={}", h2.betti));
    }
    outcome(
        true,
        format!("50 round trips and 50 coboundary shifts per base; {}", notes.join(", ")),
    )
}

fn obstruction_theorem() -> Result<Outcome> {
    let ext = fixtures::cubic_over_dual();
    let base = fixtures::dual_numbers_euler();
    for c in 0..4 {
        let phi_m = Matrix::from_ints(&[&[c]]);
        let ob = derivation_obstruction(&ext, &base.algebra, &base.derivation, &phi_m)?;
        if ob.value(&[1, 1]) != vec![q(c - 2)] {
            return outcome(false, format!("Ob(x, x) ≠ (c − 2) x² at c = {c}"));
        }
        let lift = extend_derivation_pair(&ext, &base.algebra, &base.derivation, &phi_m, &Limits::default())?;
        let ok = match (c, lift) {
            (2, Some(d)) => d == fixtures::cubic_euler().derivation,
            (2, None) => false,
            (_, lift) => lift.is_none() && !ob.is_zero(),
        };
        if !ok {
            return outcome(false, format!("wrong lifting verdict at c = {c}"));
        }
    }
    outcome(
        true,
        "c = 2 lifts to x d/dx on ℚ[x]/(x³); c ∈ {0, 1, 3} absent with Ob(x, x) = (c − 2) x²",
    )
}

fn deformation_suite() -> Result<Outcome> {
    let d = fixtures::dual_deformation();
    if !verify_deformation(&d).is_valid() {
        return outcome(false, "order-1 deformation does not verify");
    }
    let inf = infinitesimal(&d)?;
    if inf.top != fixtures::dual_mu1() || !inf.tail.as_ref().is_some_and(Cochain::is_zero) {
        return outcome(false, "infinitesimal is not (μ₁, 0)");
    }
    if !deformation_obstruction(&d)?.is_zero() {
        return outcome(false, "obstruction is nonzero");
    }
    match extend_deformation(&d, &Limits::default())? {
        Some(e) if e.order() == 2 && verify_deformation(&e).is_valid() => {}
        _ => return outcome(false, "no verified order-2 extension"),
    }
    let report = verify_deformation(&fixtures::dual_deformation_euler());
    let residual = report.find("derivation", &[1, 1, 1]).map(|v| v.residual[0].clone());
    if report.is_valid() || residual != Some(q(2)) {
        return outcome(false, "Euler variant does not fail with residual 2 at (x, x)");
    }
    outcome(
        true,
        "verify, cocycle, zero obstruction, order-2 extension; Euler residual 2 at (x, x)",
    )
}

fn chain_map(rng: &mut StdRng) -> Result<Outcome> {
    let mut count = 0;
    for (name, pair, rep) in all_fixtures() {
        for i in 0..100 {
            let n = 1 + i % 3;
            let c = random::assder_cochain(rng, n, pair.dim(), rep.mdim(), 0.6);
            if !chain_map_residual(&pair, &rep, &c)?.is_zero() {
                return outcome(false, format!("chain-map residual on {name}, degree {n}"));
            }
            count += 1;
        }
    }
    outcome(true, format!("{count} random cochains, degrees 1-3, exact zero"))
}

fn homotopy_layer(rng: &mut StdRng) -> Result<Outcome> {
    let mut strict = Vec::new();
    for (name, pair) in fixtures::algebras() {
        let x = identity_strict_pair(&pair)?;
        let cm = strict_to_crossed(&x)?;
        if crossed_to_strict(&cm)? != x || strict_to_crossed(&crossed_to_strict(&cm)?)? != cm {
            return outcome(false, format!("strict/crossed round trip fails on {name}"));
        }
        let rep = adjoint_rep(&pair);
        let f = random::assder_cochain(rng, 2, pair.dim(), pair.dim(), 0.6);
        let c = assder_d(&pair, &rep, &f)?;
        let sk = skeletal_from_cocycle(&pair, &rep, &c)?;
        let (p2, r2, c2) = cocycle_from_skeletal(&sk)?;
        if p2.derivation != pair.derivation
            || p2.algebra.structure() != pair.algebra.structure()
            || r2 != rep
            || c2 != c
        {
            return outcome(false, format!("skeletal round trip fails on {name}"));
        }
        strict.push(x);
    }
    let skeletal = [fixtures::skeletal_dual(), fixtures::skeletal_zero()];
    for x in &skeletal {
        let (p, r, c) = cocycle_from_skeletal(x)?;
        if skeletal_from_cocycle(&p, &r, &c)? != *x {
            return outcome(false, "cocycle→skeletal round trip fails on a fixture");
        }
    }
    let bases: Vec<AInfinityPair> = strict.into_iter().chain(skeletal).collect();
    for i in 0..20 {
        let (x, _) = random::ainfty_pair(rng, &bases[i % bases.len()], 0.5)?;
        if !x.validate().is_valid() {
            return outcome(false, format!("random pair {i} does not verify"));
        }
        if functor_s(&functor_t(&x)?)? != x {
            return outcome(false, format!("S∘T ≠ id on random pair {i}"));
        }
    }
    for i in 0..20 {
        let (x, _) = random::ainfty_pair(rng, &bases[i % bases.len()], 0.5)?;
        let p = random::presentation(rng, &x, 0.5)?;
        if !p.validate()?.is_valid() {
            return outcome(false, format!("random presentation {i} does not verify"));
        }
        let ts = functor_t(&functor_s(&p)?)?;
        if !verify_presentation_iso(&ts, &p, &Matrix::identity(p.c0()), &ts_isomorphism(&p))?.is_valid() {
            return outcome(false, format!("T∘S ≅ id fails on random presentation {i}"));
        }
    }
    outcome(
        true,
        "round trips on fixtures; S∘T = id on 20 random pairs; T∘S ≅ id on 20 random presentations",
    )
}

fn determinism() -> Result<Outcome> {
    let rows = common::matrix();
    let first: Vec<_> = rows.iter().map(|(a, _)| common::assder(a)).collect();
    let second: Vec<_> = rows.iter().map(|(a, _)| common::assder(a)).collect();
    for ((args, _), (x, y)) in rows.iter().zip(first.iter().zip(&second)) {
        if x.code != y.code || x.stdout != y.stdout || x.stderr != y.stderr {
            return outcome(false, format!("output differs for {args:?}"));
        }
    }
    let bytes: usize = first.iter().map(|r| r.stdout.len()).sum();
    outcome(
        true,
        format!("{} invocations twice, {bytes} bytes, byte-identical", rows.len()),
    )
}

fn main() -> ExitCode {
    let mut rng = StdRng::seed_from_u64(SEED);
    let criteria: Vec<(&str, Box<Check>)> = vec![
        ("complex axioms", Box::new(|_| complex_axioms())),
        ("commutation lemma", Box::new(commutation_lemma)),
        ("bracket laws", Box::new(bracket_laws)),
        ("Maurer-Cartan equivalence", Box::new(maurer_cartan)),
        ("extension classification", Box::new(extension_classification)),
        ("obstruction theorem", Box::new(|_| obstruction_theorem())),
        ("deformation suite", Box::new(|_| deformation_suite())),
        ("chain map", Box::new(chain_map)),
        ("homotopy layer", Box::new(homotopy_layer)),
        ("determinism", Box::new(|_| determinism())),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let o = check(&mut rng).unwrap_or_else(|e| Outcome {
            pass: false,
            detail: format!("error: {e}"),
        });
        failed += usize::from(!o.pass);
        println!(
            "{} {:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
