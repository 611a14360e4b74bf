mod common;

use std::process::Command;

use assder_core::algebra::adjoint_rep;
use assder_core::cochain::assder_d;
use assder_core::complex::is_coboundary;
use assder_core::deformation::verify_deformation;
use assder_core::fixtures;
use assder_core::json::{AssDerCochainJson, DeformationJson};
use assder_core::{Limits, Matrix};
use common::{assder, matrix};

#[test]
fn exit_codes_across_matrix() {
    for (args, code) in matrix() {
        let r = assder(&args);
        assert_eq!(r.code, code, "{args:?}: {}", r.stderr);
        if code == 2 {
            assert!(r.stderr.starts_with("error: "), "{args:?}");
        } else {
            assert!(!r.stdout.is_empty(), "{args:?}");
        }
    }
}

#[test]
fn validate_text_summary() {
    let r = assder(&["--format", "text", "validate", "dual_numbers.json"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.text(), "algebra: valid, derivation: valid\n");
}

#[test]
fn validate_reports_broken_derivation() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(common::fixtures().join("dual_numbers.json")).unwrap()).unwrap();
    // φ(1) = x is not a derivation of a unital algebra
    v["derivation"][1][0] = "1".into();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, v.to_string()).unwrap();
    let r = assder(&["validate", p.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    let out = r.json();
    assert_eq!(out["algebra"]["valid"], true);
    assert_eq!(out["derivation"]["valid"], false);
}

#[test]
fn dual_numbers_cohomology_matches_oracle() {
    // bar-complex oracle: H¹ = 1, H² = 2, H³ = 2 for φ = 0 with adjoint coefficients
    for (deg, betti) in [("1", 1), ("2", 2), ("3", 2)] {
        let out = assder(&["cohomology", "dual_numbers.json", "--degree", deg, "--adjoint"]).json();
        assert_eq!(out["betti"], betti, "degree {deg}");
    }
    let out = assder(&[
        "cohomology",
        "dual_numbers.json",
        "--degree",
        "2",
        "--adjoint",
        "--representatives",
    ])
    .json();
    let pair = fixtures::dual_numbers(Matrix::zeros(2, 2));
    let rep = adjoint_rep(&pair);
    let reps: Vec<_> = out["representatives"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| {
            serde_json::from_value::<AssDerCochainJson>(v.clone())
                .unwrap()
                .cochain()
                .unwrap()
        })
        .collect();
    assert_eq!(reps.len(), 2);
    for c in &reps {
        assert!(assder_d(&pair, &rep, c).unwrap().is_zero());
    }
    let sum = reps[0].add(&reps[1]).unwrap();
    for c in [&reps[0], &reps[1], &sum] {
        assert!(is_coboundary(&pair, &rep, c, &Limits::default()).unwrap().is_none());
    }
}

#[test]
fn extend_defo1_to_order_two() {
    let r = assder(&["deform", "extend", "defo1.json"]);
    assert_eq!(r.code, 0);
    let d = serde_json::from_slice::<DeformationJson>(&r.stdout)
        .unwrap()
        .deformation(&common::fixtures())
        .unwrap();
    assert_eq!(d.order(), 2);
    assert!(verify_deformation(&d).is_valid());
    assert_eq!(d.truncate(1), fixtures::dual_deformation());
}

#[test]
fn euler_variant_residual() {
    let out = assder(&["deform", "verify", "defo1_euler.json"]).json();
    let v = &out["violations"][0];
    assert_eq!(v["rule"], "derivation");
    assert_eq!(v["indices"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["residual"][0], "2");
}

#[test]
fn central_build_extract_and_iso() {
    let dir = tempfile::tempdir().unwrap();
    let e1 = dir.path().join("e1.json");
    let e2 = dir.path().join("e2.json");
    let (e1s, e2s) = (e1.to_str().unwrap(), e2.to_str().unwrap());
    assert_eq!(
        assder(&["central-ext", "build", "central_spec.json", "--out", e1s]).code,
        0
    );
    assert_eq!(
        assder(&["central-ext", "build", "central_spec_shifted.json", "--out", e2s]).code,
        0
    );
    let built: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&e1).unwrap()).unwrap();
    assert_eq!(built["certified"]["central"], true);
    assert_eq!(built["certified"]["valid"], true);

    let out = assder(&["central-ext", "extract", e1s]).json();
    assert_eq!(out["psi"]["coeffs"], serde_json::json!(["1"]));
    assert_eq!(out["chi"]["coeffs"], serde_json::json!(["0"]));

    assert_eq!(assder(&["central-ext", "iso", e1s, e1s]).json()["isomorphic"], true);
    // every differential vanishes on the zero algebra, so distinct cocycles are distinct classes
    assert_eq!(assder(&["central-ext", "iso", e1s, e2s]).json()["isomorphic"], false);
}

#[test]
fn abelian_build_extract_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let e = dir.path().join("ab.json");
    assert_eq!(
        assder(&[
            "abelian-ext",
            "build",
            "abelian_spec.json",
            "--out",
            e.to_str().unwrap()
        ])
        .code,
        0
    );
    let out = assder(&["abelian-ext", "extract", e.to_str().unwrap()]).json();
    let spec: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(common::fixtures().join("abelian_spec.json")).unwrap()).unwrap();
    assert_eq!(out["cocycle"], spec["cocycle"]);
    let module: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(common::fixtures().join("dual_numbers_euler_adjoint.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(out["module"], module);
}

#[test]
fn derivation_lift_on_cubic() {
    let out = assder(&["extend-derivation", "extend_derivation_c2.json"]).json();
    assert_eq!(out["extensible"], true);
    assert_eq!(
        out["derivation"],
        serde_json::json!([["0", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]])
    );
    let r = assder(&["extend-derivation", "extend_derivation_c1.json"]);
    assert_eq!(r.code, 1);
    let out = r.json();
    assert_eq!(out["derivation"], serde_json::Value::Null);
    // Ob(x, x) = (c − 2) x²
    assert_eq!(out["obstruction"]["coeffs"], serde_json::json!(["0", "0", "0", "-1"]));
}

#[test]
fn homotopy_commands_round_trip() {
    let r = assder(&["ainfty", "roundtrip", "gauged_dual.json"]).json();
    assert_eq!(r["s_of_t_is_identity"], true);
    assert_eq!(r["t_of_s_isomorphism"]["valid"], true);

    let t = assder(&["ainfty", "functor-t", "gauged_dual.json"]);
    assert_eq!(
        t.stdout,
        std::fs::read(common::fixtures().join("presentation_dual.json")).unwrap()
    );
    let s = assder(&["ainfty", "functor-s", "presentation_dual.json"]);
    assert_eq!(
        s.stdout,
        std::fs::read(common::fixtures().join("gauged_dual.json")).unwrap()
    );

    let c = assder(&["ainfty", "strict", "strict_dual.json"]);
    assert_eq!(
        c.stdout,
        std::fs::read(common::fixtures().join("crossed_dual.json")).unwrap()
    );

    let sk = assder(&[
        "ainfty",
        "skeletal",
        "dual_numbers_euler.json",
        "--cocycle",
        "cocycle3_dual.json",
    ]);
    assert_eq!(
        sk.stdout,
        std::fs::read(common::fixtures().join("skeletal_dual.json")).unwrap()
    );
    let back = assder(&["ainfty", "skeletal", "skeletal_dual.json", "--extract"]).json();
    let cocycle: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(common::fixtures().join("cocycle3_dual.json")).unwrap()).unwrap();
    assert_eq!(back["cocycle"], cocycle);
}

#[test]
fn wrong_morphism_direction_is_reported() {
    let r = assder(&[
        "ainfty",
        "verify",
        "gauged_dual.json",
        "--morphism",
        "gauge_morphism.json",
        "--target",
        "strict_dual.json",
    ]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["structure"]["valid"], true);
    assert_eq!(r.json()["morphism"]["valid"], false);
}

#[test]
fn skeletal_rejects_non_cocycle() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(common::fixtures().join("cocycle3_dual.json")).unwrap()).unwrap();
    v["top"][7] = "1".into();
    let p = dir.path().join("c.json");
    std::fs::write(&p, v.to_string()).unwrap();
    let r = assder(&[
        "ainfty",
        "skeletal",
        "dual_numbers_euler.json",
        "--cocycle",
        p.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 1);
    assert!(r.json()["error"].as_str().unwrap().starts_with("not a cocycle"));
}

#[test]
fn out_flag_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("o.json");
    let args = ["lieder", "compare", "upper_triangular.json", "--degree", "2"];
    let direct = assder(&args);
    let mut with_out: Vec<&str> = args.to_vec();
    with_out.extend(["--out", p.to_str().unwrap()]);
    let r = assder(&with_out);
    assert!(r.stdout.is_empty());
    assert_eq!(std::fs::read(&p).unwrap(), direct.stdout);
}

#[test]
fn caps_from_env_and_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_assder"))
        .args(["cohomology", "dual_numbers.json", "--degree", "3"])
        .current_dir(common::fixtures())
        .env("ASSDER_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree cap"));
    let r = assder(&[
        "cohomology",
        "dual_numbers.json",
        "--degree",
        "4",
        "--max-entries",
        "10",
    ]);
    assert_eq!(r.code, 2);
    assert_eq!(
        assder(&["cohomology", "dual_numbers.json", "--degree", "6", "--max-degree", "7"]).code,
        0
    );
}

#[test]
fn usage_errors() {
    assert_eq!(assder(&[]).code, 2);
    assert_eq!(assder(&["cohomology", "dual_numbers.json"]).code, 2);
    assert_eq!(
        assder(&[
            "cohomology",
            "dual_numbers.json",
            "--degree",
            "1",
            "--adjoint",
            "--trivial"
        ])
        .code,
        2
    );
    assert_eq!(assder(&["--help"]).code, 0);
    // a pair file is not a deformation file
    let r = assder(&["deform", "verify", "dual_numbers.json"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("unknown field"));
}

#[test]
fn bracket_value() {
    // ⟦(μ₁, 0), (g, ·)⟧ with g(x) = x scales μ₁(x, x) = 1 by 2
    let out = assder(&["bracket", "bracket_left.json", "bracket_right.json"]).json();
    let c = serde_json::from_value::<AssDerCochainJson>(out)
        .unwrap()
        .cochain()
        .unwrap();
    assert_eq!(
        c.top.value(&[1, 1]),
        vec![assder_core::scalar::q(2), assder_core::scalar::q(0)]
    );
}
