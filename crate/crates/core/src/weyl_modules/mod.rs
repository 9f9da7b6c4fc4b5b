//! Exact tensor-power models of Weyl modules for GSp(2g).

pub mod characters;
pub mod plethysm;
pub mod tensor;

pub use characters::{h_filtration, levi_dimension, weight_multiplicities, weyl_dimension};
pub use plethysm::{idempotent_check, weyl_lattice, young_symmetrizer, IdempotentReport, LatticeReport, TableauFill};
pub use tensor::{traceless_subspace, SparseOperator, StandardModule, TensorModule, TracelessSubspace, DEFAULT_TENSOR_BUDGET};
