//! One adapter per subcommand: read files, call the library, shape the output.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use assder_core::ainfty::{
    cocycle_from_skeletal, crossed_to_strict, functor_s, functor_t, skeletal_from_cocycle, strict_to_crossed,
    ts_isomorphism, verify_morphism, verify_presentation_iso,
};
use assder_core::cochain::{assder_bracket, mc_check};
use assder_core::complex::cohomology;
use assder_core::deformation::{
    apply_equivalence, deformation_obstruction, extend_deformation, infinitesimal, trivialize, verify_deformation,
    TrivializeOutcome,
};
use assder_core::extensions::{
    build_abelian_extension, build_central_extension, central_classes, derivation_obstruction, extend_derivation_pair,
    extensions_isomorphic, extract_abelian_cocycle, extract_cocycle,
};
use assder_core::json::{
    self, parent_dir, rows_of, AInfinityJson, AbelianSpecJson, AssDerCochainJson, AutomorphismJson, CentralSpecJson,
    CochainJson, CrossedJson, DeformationJson, ExtendDerivationJson, ExtensionJson, ModuleJson, MorphismJson, PairJson,
    PresentationJson, Source,
};
use assder_core::lieder::{compare_cohomology, lieder_cohomology_space};
use assder_core::{
    adjoint_rep, commutator_liepair, validate_representation, AssDerPair, Error, ExtensionTriple, LieModule, Limits,
    Matrix, RepPair, Result, ValidationReport,
};
use serde_json::{json, Value};

use crate::render;
use crate::{AbelianCmd, AinftyCmd, CentralCmd, Cli, Command, DeformCmd, Format, LiederCmd, ModuleArgs};

/// A result document and whether it counts as success (exit 0) or a
/// negative finding (exit 1).
pub struct Outcome {
    pub value: Value,
    pub ok: bool,
    pub text: Option<String>,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome {
            value,
            ok: true,
            text: None,
        }
    }

    fn verdict(value: Value, ok: bool) -> Self {
        Outcome { value, ok, text: None }
    }
}

pub fn run(cli: &Cli) -> u8 {
    let limits = limits(cli);
    match dispatch(&cli.command, &limits).and_then(|o| emit(cli, &o).map(|_| o)) {
        Ok(o) => u8::from(!o.ok),
        Err(Error::Invalid { what, report }) => {
            let value = json!({ "error": format!("{what} is invalid"), "violations": report_value(&report) });
            let o = Outcome {
                value,
                ok: false,
                text: Some(format!("{what}: invalid\n{report}")),
            };
            match emit(cli, &o) {
                Ok(()) => 1,
                Err(e) => fail(&e),
            }
        }
        Err(Error::NotCocycle(msg)) => {
            let o = Outcome {
                value: json!({ "error": format!("not a cocycle: {msg}") }),
                ok: false,
                text: None,
            };
            match emit(cli, &o) {
                Ok(()) => 1,
                Err(e) => fail(&e),
            }
        }
        Err(e) => fail(&e),
    }
}

fn fail(e: &Error) -> u8 {
    eprintln!("error: {e}");
    2
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(d) = cli.max_degree {
        l.max_degree = d;
    }
    if let Some(e) = cli.max_entries {
        l.max_space_dim = e;
    }
    l
}

fn emit(cli: &Cli, o: &Outcome) -> Result<()> {
    let body = match cli.format {
        Format::Json => json::to_string(&o.value)?,
        Format::Text => match &o.text {
            Some(t) => format!("{}\n", t.trim_end()),
            None => render::text(&o.value),
        },
    };
    match &cli.out {
        Some(p) => std::fs::write(p, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn report_value(r: &ValidationReport) -> Value {
    to_value(&r.violations)
}

fn verdict_value(r: &ValidationReport) -> Value {
    json!({ "valid": r.is_valid(), "violations": report_value(r) })
}

fn load_pair(path: &Path) -> Result<AssDerPair> {
    json::read::<PairJson>(path)?.pair()
}

fn select_rep(pair: &AssDerPair, m: &ModuleArgs) -> Result<RepPair> {
    if m.trivial {
        return RepPair::trivial(pair.dim(), Matrix::zeros(1, 1));
    }
    match &m.module {
        Some(p) => json::read::<ModuleJson>(p)?.rep(pair.dim()),
        None => Ok(adjoint_rep(pair)),
    }
}

fn inline(pair: &AssDerPair) -> Source<PairJson> {
    Source::Inline(PairJson::from_pair(pair))
}

fn dir(p: &Path) -> PathBuf {
    parent_dir(p)
}

fn dispatch(cmd: &Command, limits: &Limits) -> Result<Outcome> {
    match cmd {
        Command::Validate { file, module } => validate(file, module.as_deref()),
        Command::Cohomology {
            file,
            degree,
            module,
            representatives,
        } => {
            let pair = load_pair(file)?;
            let rep = select_rep(&pair, module)?;
            let r = cohomology(&pair, &rep, *degree, *representatives, limits)?;
            Ok(Outcome::ok(json!({
                "degree": r.degree,
                "dim_cochains": r.dim_cochains,
                "dim_cocycles": r.dim_cocycles,
                "dim_coboundaries": r.dim_coboundaries,
                "betti": r.betti,
                "representatives": r.representatives.iter().map(|c| to_value(&AssDerCochainJson::from_cochain(c))).collect::<Vec<_>>(),
            })))
        }
        Command::Bracket { left, right } => {
            let a = json::read::<AssDerCochainJson>(left)?.cochain()?;
            let b = json::read::<AssDerCochainJson>(right)?.cochain()?;
            Ok(Outcome::ok(to_value(&AssDerCochainJson::from_cochain(
                &assder_bracket(&a, &b)?,
            ))))
        }
        Command::McCheck { file } => {
            let r = mc_check(&load_pair(file)?);
            let value = json!({
                "is_maurer_cartan": r.is_maurer_cartan,
                "consistent": r.consistent(),
                "bracket": to_value(&AssDerCochainJson::from_cochain(&r.bracket)),
                "validators": verdict_value(&r.validators),
            });
            Ok(Outcome::verdict(value, r.is_maurer_cartan))
        }
        Command::CentralExt(c) => central(c, limits),
        Command::ExtendDerivation { spec } => {
            let (ext, base, phi_a, phi_m) = json::read::<ExtendDerivationJson>(spec)?.parts(&dir(spec))?;
            let ob = derivation_obstruction(&ext, &base, &phi_a, &phi_m)?;
            let lift = extend_derivation_pair(&ext, &base, &phi_a, &phi_m, limits)?;
            let value = json!({
                "obstruction": to_value(&CochainJson::from_cochain(&ob)),
                "extensible": lift.is_some(),
                "derivation": lift.as_ref().map(rows_of),
            });
            Ok(Outcome::verdict(value, lift.is_some()))
        }
        Command::AbelianExt(c) => abelian(c),
        Command::Deform(c) => deform(c, limits),
        Command::Ainfty(c) => ainfty(c),
        Command::Lieder(c) => lieder(c, limits),
    }
}

fn validate(file: &Path, module: Option<&Path>) -> Result<Outcome> {
    let pair = load_pair(file)?;
    let alg = pair.algebra.validate();
    let der = pair.validate_derivation();
    let mut parts = vec![("algebra", alg), ("derivation", der)];
    if let Some(m) = module {
        let rep = json::read::<ModuleJson>(m)?.rep(pair.dim())?;
        parts.push(("representation", validate_representation(&pair, &rep)));
    }
    let ok = parts.iter().all(|(_, r)| r.is_valid());
    let mut value = serde_json::Map::new();
    let mut summary = Vec::new();
    let mut details = String::new();
    for (name, r) in &parts {
        value.insert((*name).to_string(), verdict_value(r));
        summary.push(format!("{name}: {}", if r.is_valid() { "valid" } else { "invalid" }));
        if !r.is_valid() {
            details.push_str(&format!("{name}: {r}"));
        }
    }
    value.insert("valid".into(), Value::Bool(ok));
    let text = format!("{}\n{details}", summary.join(", "));
    Ok(Outcome {
        value: Value::Object(value),
        ok,
        text: Some(text),
    })
}

fn extension_output(ext: &ExtensionTriple, base: &AssDerPair) -> Result<Value> {
    let mut out = ExtensionJson::from_triple(ext, inline(base));
    let mut cert = BTreeMap::new();
    cert.insert("valid".to_string(), ext.validate(base, None)?.is_valid());
    cert.insert("central".to_string(), ext.centrality().is_valid());
    out.certified = Some(cert);
    Ok(to_value(&out))
}

fn central(c: &CentralCmd, limits: &Limits) -> Result<Outcome> {
    match c {
        CentralCmd::Build { spec } => {
            let s = json::read::<CentralSpecJson>(spec)?.spec(&dir(spec))?;
            let ext = build_central_extension(&s)?;
            Ok(Outcome::ok(extension_output(&ext, &s.base)?))
        }
        CentralCmd::Extract { extension } => {
            let (ext, base) = json::read::<ExtensionJson>(extension)?.triple(&dir(extension))?;
            let (psi, chi) = extract_cocycle(&ext, &base)?;
            Ok(Outcome::ok(json!({
                "psi": to_value(&CochainJson::from_cochain(&psi)),
                "chi": to_value(&CochainJson::from_cochain(&chi)),
                "cocycle": true,
            })))
        }
        CentralCmd::Classify { file, kernel } => {
            let pair = load_pair(file)?;
            let k = match kernel {
                Some(p) => json::read::<ModuleJson>(p)?.rep(pair.dim())?,
                None => RepPair::trivial(pair.dim(), Matrix::zeros(1, 1))?,
            };
            let r = central_classes(&pair, &k, limits)?;
            Ok(Outcome::ok(json!({
                "betti": r.betti,
                "classes": r.representatives.iter().map(|c| to_value(&AssDerCochainJson::from_cochain(c))).collect::<Vec<_>>(),
            })))
        }
        CentralCmd::Iso { first, second } => {
            let (e1, base) = json::read::<ExtensionJson>(first)?.triple(&dir(first))?;
            let (e2, base2) = json::read::<ExtensionJson>(second)?.triple(&dir(second))?;
            if base != base2 {
                return Err(Error::Input("the two extensions have different bases".into()));
            }
            let eta = extensions_isomorphic(&e1, &e2, &base, limits)?;
            Ok(Outcome::ok(
                json!({ "isomorphic": eta.is_some(), "map": eta.as_ref().map(rows_of) }),
            ))
        }
    }
}

fn abelian(c: &AbelianCmd) -> Result<Outcome> {
    match c {
        AbelianCmd::Build { spec } => {
            let s = json::read::<AbelianSpecJson>(spec)?.spec(&dir(spec))?;
            let ext = build_abelian_extension(&s)?;
            Ok(Outcome::ok(extension_output(&ext, &s.base)?))
        }
        AbelianCmd::Extract { extension } => {
            let (ext, base) = json::read::<ExtensionJson>(extension)?.triple(&dir(extension))?;
            let c = extract_abelian_cocycle(&ext, &base)?;
            let rep = RepPair::new(ext.induced_bimodule()?, ext.induced_kernel_map()?)?;
            Ok(Outcome::ok(json!({
                "cocycle": to_value(&AssDerCochainJson::from_cochain(&c)),
                "module": to_value(&ModuleJson::from_rep(&rep)),
            })))
        }
    }
}

fn load_deformation(file: &Path) -> Result<assder_core::TruncatedDeformation> {
    json::read::<DeformationJson>(file)?.deformation(&dir(file))
}

fn deformation_value(d: &assder_core::TruncatedDeformation) -> Value {
    to_value(&DeformationJson::from_deformation(d, inline(d.base())))
}

fn deform(c: &DeformCmd, limits: &Limits) -> Result<Outcome> {
    match c {
        DeformCmd::Verify { file } => {
            let r = verify_deformation(&load_deformation(file)?);
            Ok(Outcome::verdict(verdict_value(&r), r.is_valid()))
        }
        DeformCmd::Infinitesimal { file } => {
            let c = infinitesimal(&load_deformation(file)?)?;
            Ok(Outcome::ok(
                json!({ "cocycle": true, "infinitesimal": to_value(&AssDerCochainJson::from_cochain(&c)) }),
            ))
        }
        DeformCmd::Obstruction { file } => {
            let ob = deformation_obstruction(&load_deformation(file)?)?;
            let value = json!({ "zero": ob.is_zero(), "obstruction": to_value(&AssDerCochainJson::from_cochain(&ob)) });
            Ok(Outcome::verdict(value, ob.is_zero()))
        }
        DeformCmd::Extend { file } => {
            let d = load_deformation(file)?;
            match extend_deformation(&d, limits)? {
                Some(next) => Ok(Outcome::ok(deformation_value(&next))),
                None => {
                    let ob = deformation_obstruction(&d)?;
                    let value = json!({
                        "extended": false,
                        "obstruction": to_value(&AssDerCochainJson::from_cochain(&ob)),
                    });
                    Ok(Outcome::verdict(value, false))
                }
            }
        }
        DeformCmd::Equivalence { file, automorphism } => {
            let d = load_deformation(file)?;
            let phi = json::read::<AutomorphismJson>(automorphism)?.automorphism()?;
            Ok(Outcome::ok(deformation_value(&apply_equivalence(&d, &phi)?)))
        }
        DeformCmd::Trivialize { file } => match trivialize(&load_deformation(file)?, limits)? {
            TrivializeOutcome::Trivialized(phi) => Ok(Outcome::ok(json!({
                "trivialized": true,
                "automorphism": to_value(&AutomorphismJson::from_automorphism(&phi)),
            }))),
            TrivializeOutcome::Obstructed {
                order,
                class,
                coordinates,
            } => Ok(Outcome::verdict(
                json!({
                    "trivialized": false,
                    "order": order,
                    "class": to_value(&AssDerCochainJson::from_cochain(&class)),
                    "coordinates": to_value(&coordinates),
                }),
                false,
            )),
        },
    }
}

fn load_ainfty(file: &Path) -> Result<assder_core::AInfinityPair> {
    json::read::<AInfinityJson>(file)?.pair()
}

fn ainfty(c: &AinftyCmd) -> Result<Outcome> {
    match c {
        AinftyCmd::Verify { file, morphism, target } => {
            let x = load_ainfty(file)?;
            let r = x.validate();
            let mut value = json!({ "structure": verdict_value(&r) });
            let mut ok = r.is_valid();
            if let (Some(m), Some(t)) = (morphism, target) {
                let y = load_ainfty(t)?;
                let f = json::read::<MorphismJson>(m)?.morphism(&x.algebra, &y.algebra)?;
                let mr = verify_morphism(&f, &x, &y)?;
                ok &= mr.is_valid();
                value["morphism"] = verdict_value(&mr);
            }
            Ok(Outcome::verdict(value, ok))
        }
        AinftyCmd::Skeletal {
            file,
            module,
            cocycle,
            extract,
        } => {
            if *extract {
                let (pair, rep, c) = cocycle_from_skeletal(&load_ainfty(file)?)?;
                return Ok(Outcome::ok(json!({
                    "pair": to_value(&PairJson::from_pair(&pair)),
                    "module": to_value(&ModuleJson::from_rep(&rep)),
                    "cocycle": to_value(&AssDerCochainJson::from_cochain(&c)),
                })));
            }
            let Some(cpath) = cocycle else {
                return Err(Error::Input("--cocycle is required unless --extract is given".into()));
            };
            let pair = load_pair(file)?;
            let rep = select_rep(&pair, module)?;
            let c = json::read::<AssDerCochainJson>(cpath)?.cochain()?;
            Ok(Outcome::ok(to_value(&AInfinityJson::from_pair(
                &skeletal_from_cocycle(&pair, &rep, &c)?,
            ))))
        }
        AinftyCmd::Strict { file, from_crossed } => {
            if *from_crossed {
                let cm = json::read::<CrossedJson>(file)?.crossed(&dir(&file.clone()))?;
                Ok(Outcome::ok(to_value(&AInfinityJson::from_pair(&crossed_to_strict(
                    &cm,
                )?))))
            } else {
                let cm = strict_to_crossed(&load_ainfty(file)?)?;
                Ok(Outcome::ok(to_value(&CrossedJson::from_crossed(&cm))))
            }
        }
        AinftyCmd::FunctorT { file } => Ok(Outcome::ok(to_value(&PresentationJson::from_presentation(&functor_t(
            &load_ainfty(file)?,
        )?)))),
        AinftyCmd::FunctorS { file } => {
            let p = json::read::<PresentationJson>(file)?.presentation()?;
            Ok(Outcome::ok(to_value(&AInfinityJson::from_pair(&functor_s(&p)?))))
        }
        AinftyCmd::Roundtrip { file } => {
            let x = load_ainfty(file)?;
            let p = functor_t(&x)?;
            let st = functor_s(&p)? == x;
            let tst = functor_t(&functor_s(&p)?)?;
            let iso = ts_isomorphism(&p);
            let r = verify_presentation_iso(&tst, &p, &Matrix::identity(p.c0()), &iso)?;
            let value = json!({
                "s_of_t_is_identity": st,
                "t_of_s_isomorphism": verdict_value(&r),
                "isomorphism": rows_of(&iso),
            });
            Ok(Outcome::verdict(value, st && r.is_valid()))
        }
    }
}

fn lieder(c: &LiederCmd, limits: &Limits) -> Result<Outcome> {
    match c {
        LiederCmd::Cohomology { file, degree, module } => {
            let pair = load_pair(file)?;
            let rep = select_rep(&pair, module)?;
            let lie = commutator_liepair(&pair);
            let space = lieder_cohomology_space(&lie, &LieModule::from_rep(&rep), *degree, limits)?;
            Ok(Outcome::ok(json!({
                "degree": degree,
                "dim_cochains": space.dim,
                "dim_cocycles": space.dim_cocycles,
                "dim_coboundaries": space.dim_coboundaries(),
                "betti": space.betti(),
            })))
        }
        LiederCmd::Compare { file, degree, module } => {
            let pair = load_pair(file)?;
            let rep = select_rep(&pair, module)?;
            let cmp = compare_cohomology(&pair, &rep, *degree, limits)?;
            Ok(Outcome::ok(json!({
                "degree": cmp.degree,
                "assder_betti": cmp.assder_betti,
                "lieder_betti": cmp.lieder_betti,
                "rank": cmp.induced.rank(),
                "induced": rows_of(&cmp.induced),
            })))
        }
    }
}
