//! Cohomology dimensions frozen from the dense bar-complex script in
//! `tests/oracle/bar_complex.py` (independent evaluation, sympy ranks).

use assder_core::algebra::adjoint_rep;
use assder_core::complex::{cohomology, differential_matrix, hochschild_cohomology};
use assder_core::fixtures;
use assder_core::{AssDerPair, Limits, Matrix, RepPair};

/// Name, pair, coefficients, degrees, expected Betti numbers.
type Case = (&'static str, AssDerPair, RepPair, Vec<usize>, Vec<usize>);

fn bettis(pair: &AssDerPair, rep: &RepPair, degrees: &[usize]) -> Vec<usize> {
    degrees
        .iter()
        .map(|&n| cohomology(pair, rep, n, false, &Limits::default()).unwrap().betti)
        .collect()
}

fn trivial(pair: &AssDerPair, phi: i64) -> RepPair {
    RepPair::trivial(pair.dim(), Matrix::from_ints(&[&[phi]])).unwrap()
}

fn zero_euler() -> AssDerPair {
    AssDerPair::new(fixtures::zero_algebra().algebra, Matrix::identity(1)).unwrap()
}

#[test]
fn assder_bettis() {
    let rationals = fixtures::rationals();
    let zero = fixtures::zero_algebra();
    let dual0 = fixtures::dual_numbers(Matrix::zeros(2, 2));
    let euler = fixtures::dual_numbers_euler();
    let cubic = fixtures::cubic_euler();
    let upper = fixtures::upper_triangular();
    let cases: Vec<Case> = vec![
        (
            "rationals adjoint",
            rationals.clone(),
            adjoint_rep(&rationals),
            vec![1, 2, 3],
            vec![0, 0, 0],
        ),
        (
            "rationals trivial",
            rationals.clone(),
            trivial(&rationals, 0),
            vec![1, 2, 3],
            vec![0, 0, 0],
        ),
        (
            "zero adjoint",
            zero.clone(),
            adjoint_rep(&zero),
            vec![1, 2, 3],
            vec![1, 2, 2],
        ),
        (
            "zero trivial",
            zero.clone(),
            trivial(&zero, 0),
            vec![1, 2, 3],
            vec![1, 2, 2],
        ),
        (
            "dual φ=0 adjoint",
            dual0.clone(),
            adjoint_rep(&dual0),
            vec![1, 2, 3],
            vec![1, 2, 2],
        ),
        (
            "dual φ=0 trivial",
            dual0.clone(),
            trivial(&dual0, 0),
            vec![1, 2, 3],
            vec![0, 0, 0],
        ),
        (
            "dual euler adjoint",
            euler.clone(),
            adjoint_rep(&euler),
            vec![1, 2, 3],
            vec![1, 1, 0],
        ),
        (
            "dual euler trivial φ_M=1",
            euler.clone(),
            trivial(&euler, 1),
            vec![1, 2, 3],
            vec![0, 0, 0],
        ),
        (
            "dual euler trivial φ_M=2",
            euler.clone(),
            trivial(&euler, 2),
            vec![1, 2, 3],
            vec![0, 0, 0],
        ),
        (
            "cubic euler adjoint",
            cubic.clone(),
            adjoint_rep(&cubic),
            vec![1, 2],
            vec![1, 1],
        ),
        (
            "upper triangular adjoint",
            upper.clone(),
            adjoint_rep(&upper),
            vec![1, 2],
            vec![1, 1],
        ),
        (
            "zero euler trivial φ_M=0",
            zero_euler(),
            trivial(&zero, 0),
            vec![1, 2],
            vec![0, 0],
        ),
        (
            "zero euler trivial φ_M=1",
            zero_euler(),
            trivial(&zero, 1),
            vec![1, 2],
            vec![1, 1],
        ),
        (
            "zero euler trivial φ_M=2",
            zero_euler(),
            trivial(&zero, 2),
            vec![1, 2],
            vec![0, 1],
        ),
    ];
    for (name, pair, rep, degrees, expected) in cases {
        assert_eq!(bettis(&pair, &rep, &degrees), expected, "{name}");
    }
}

#[test]
fn hochschild_bettis() {
    for (name, pair, expected) in [
        ("zero", fixtures::zero_algebra(), [1, 1]),
        ("dual numbers", fixtures::dual_numbers(Matrix::zeros(2, 2)), [0, 0]),
        ("rationals", fixtures::rationals(), [0, 0]),
    ] {
        let rep = trivial(&pair, 0);
        let got: Vec<usize> = [1, 2]
            .iter()
            .map(|&n| {
                hochschild_cohomology(&pair.algebra, &rep.bimodule, n, &Limits::default())
                    .unwrap()
                    .betti
            })
            .collect();
        assert_eq!(got, expected, "{name}");
    }
}

#[test]
fn rationals_first_differential() {
    let pair = fixtures::rationals();
    let d = differential_matrix(&pair, &adjoint_rep(&pair), 1, &Limits::default()).unwrap();
    assert_eq!(d.to_dense(), Matrix::from_ints(&[&[1], &[0]]));
}
