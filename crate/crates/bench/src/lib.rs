//! Inputs shared by the benches in `benches/`.

use assder_core::algebra::adjoint_rep;
use assder_core::{fixtures, AssDerPair, RepPair};

/// Adjoint coefficients on each shipped algebra, with the degrees worth timing.
pub fn cases() -> Vec<(&'static str, AssDerPair, RepPair, Vec<usize>)> {
    fixtures::algebras()
        .into_iter()
        .map(|(name, pair)| {
            let rep = adjoint_rep(&pair);
            let degrees = if pair.dim() <= 2 {
                vec![1, 2, 3, 4]
            } else {
                vec![1, 2, 3]
            };
            (name, pair, rep, degrees)
        })
        .collect()
}
