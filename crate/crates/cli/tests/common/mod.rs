#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub struct Run {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> serde_json::Value {
        serde_json::from_slice(&self.stdout).expect("stdout is JSON")
    }

    pub fn text(&self) -> String {
        String::from_utf8(self.stdout.clone()).unwrap()
    }
}

/// Run the binary with the fixture directory as working directory.
pub fn assder(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_assder"))
        .args(args)
        .current_dir(fixtures())
        .env_remove("ASSDER_MAX_DEGREE")
        .env_remove("ASSDER_MAX_ENTRIES")
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

/// Every subcommand on the shipped fixtures, with its expected exit code.
pub fn matrix() -> Vec<(Vec<&'static str>, i32)> {
    let rows: &[(&str, i32)] = &[
        ("validate dual_numbers.json", 0),
        ("validate dual_numbers_euler.json --module dual_numbers_trivial.json", 0),
        ("--format text validate upper_triangular.json", 0),
        ("cohomology dual_numbers.json --degree 2 --adjoint --representatives", 0),
        ("cohomology dual_numbers_euler.json --degree 1 --trivial", 0),
        ("cohomology cubic.json --degree 2 --representatives", 0),
        ("cohomology truncated_tensor.json --degree 2", 0),
        ("--format text cohomology rationals.json --degree 3", 0),
        (
            "cohomology dual_numbers_euler.json --degree 2 --module dual_numbers_trivial.json",
            0,
        ),
        ("bracket bracket_left.json bracket_right.json", 0),
        ("mc-check upper_triangular.json", 0),
        ("central-ext build central_spec.json", 0),
        (
            "central-ext classify zero_algebra.json --kernel zero_algebra_trivial.json",
            0,
        ),
        ("central-ext classify dual_numbers.json", 0),
        ("extend-derivation extend_derivation_c2.json", 0),
        ("extend-derivation extend_derivation_c1.json", 1),
        ("abelian-ext build abelian_spec.json", 0),
        ("deform verify defo1.json", 0),
        ("deform verify defo1_euler.json", 1),
        ("deform infinitesimal defo1.json", 0),
        ("deform obstruction defo1.json", 0),
        ("deform extend defo1.json", 0),
        ("deform equivalence defo1.json --automorphism automorphism.json", 0),
        ("deform trivialize defo1.json", 1),
        ("ainfty verify gauged_dual.json", 0),
        (
            "ainfty verify strict_dual.json --morphism gauge_morphism.json --target gauged_dual.json",
            0,
        ),
        (
            "ainfty skeletal dual_numbers_euler.json --cocycle cocycle3_dual.json",
            0,
        ),
        ("ainfty skeletal skeletal_zero.json --extract", 0),
        ("ainfty strict strict_dual.json", 0),
        ("ainfty strict crossed_dual.json --from-crossed", 0),
        ("ainfty functor-t skeletal_dual.json", 0),
        ("ainfty functor-s presentation_dual.json", 0),
        ("ainfty roundtrip gauged_dual.json", 0),
        ("lieder cohomology dual_numbers_euler.json --degree 2", 0),
        ("lieder compare upper_triangular.json --degree 2", 0),
        ("--format text lieder compare cubic.json --degree 1", 0),
        ("validate missing.json", 2),
        ("cohomology dual_numbers.json --degree 7", 2),
        ("ainfty strict gauged_dual.json", 2),
    ];
    rows.iter().map(|(a, c)| (a.split_whitespace().collect(), *c)).collect()
}
