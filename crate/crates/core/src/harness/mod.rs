//! Exhaustive checks of the statements about class products, and exact
//! reproductions of the worked examples.

mod examples;
mod report;
mod sweep;
mod theorems;

pub use examples::{prime_factors, reproduce_example_2_2, reproduce_example_3_2, reproduce_remark_4};
pub use report::{CounterexampleRecord, TheoremId, Verdict, VerificationReport};
pub use sweep::{run_theorem, SweepOptions, NORMAL_SWEEP_MAX_ORDER};
pub use theorems::{
    checks, prime_power, replay, verify_eta_pgroup_bound, verify_lemma_4_1, verify_theorem_4_2,
    verify_theorem_4_2_sweep, verify_theorem_a, verify_theorem_b, verify_transfer_theorem, BoundFn,
};
pub(crate) use theorems::minimal_m_in;
