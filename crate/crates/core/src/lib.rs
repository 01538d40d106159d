//! Exact-arithmetic toolkit for homogeneous second-order recurrences
//! `W_n = p W_{n-1} + q W_{n-2}` (Horadam sequences) over all integer
//! indices, together with a catalog of three-term, weighted-sum and
//! binomial-sum identities and the machinery to check them.
//!
//! Every value is an exact rational; nothing here touches floating point.

pub mod error;
pub mod identity;
pub mod recurrence;
pub mod rng;
pub mod sum;
pub mod verify;

pub use error::{Error, Result};
pub use identity::{
    catalog, check_binomial_sum, check_instance, check_lemma3, check_three_term_xx, check_three_term_xy,
    check_weighted_sum_xx, check_weighted_sum_xy, delta2, lookup, solve_lambda_pair, Assignment,
    CheckOutcome, DeltaArgs, IdentityTemplate, LambdaSolution, SkipReason, Strictness, Symbol, Variant,
};
pub use recurrence::{
    builtin, negative_index_closed_form, Builtin, ExactRational, RecurrencePair, SequenceSpec,
};
pub use sum::{binomial, eval_binomial_sum, eval_geometric_sum, sum_convention, SumSpec};
pub use verify::{
    emit_report, fuzz_general, run_grid, FuzzConfig, GridSpec, IdSelection, ReportFormat, RunOptions,
    VerificationReport,
};
