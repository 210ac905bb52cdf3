//! Deciding whether `G -> G/H` is an A_k-map at a prime.

pub mod cells;
pub mod criterion;
pub mod verdict;

pub use cells::{clearance, projective_cells, x_cells, CellSet, Clearance};
pub use criterion::{criterion_check, is_sum_of_types, verify_witness, CriterionVerdict, Witness};
pub use verdict::{ak_verdict, max_ak, Reason, Verdict, VerdictStatus};
