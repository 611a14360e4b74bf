//! Exact computations for associative algebras with derivations: cochain
//! complexes and their cohomology, extensions, truncated deformations, the
//! commutator comparison with Lie algebras, and 2-term homotopy structures.

pub mod ainfty;
pub mod algebra;
pub mod cochain;
pub mod complex;
pub mod deformation;
pub mod error;
pub mod extensions;
pub mod fixtures;
pub mod json;
pub mod lieder;
pub mod linalg;
pub mod random;
pub mod report;
pub mod scalar;

pub use ainfty::{
    AInfinityMorphism, AInfinityPair, Associative2Presentation, CrossedModule, HomotopyDerivation, TwoTermAInfinity,
};
pub use algebra::{
    adjoint_rep, commutator_liepair, dual_rep, semidirect_product, truncated_tensor_pair, validate_representation,
    Algebra, AssDerPair, Bimodule, LieDerPair, RepPair,
};
pub use cochain::{AssDerCochain, Cochain};
pub use complex::{CohomologyReport, Limits};
pub use deformation::{FormalAutomorphism, TruncatedDeformation};
pub use error::{Error, Result};
pub use extensions::{AbelianExtensionSpec, CentralExtensionSpec, ExtensionTriple};
pub use lieder::{LieCochain, LieDerCochain, LieModule};
pub use linalg::{Matrix, SparseMatrix};
pub use report::{ValidationReport, Violation};
pub use scalar::Scalar;
