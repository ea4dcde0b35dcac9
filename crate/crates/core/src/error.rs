use num_bigint::{BigInt, BigUint};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid q = {0}: q must be a positive integer (q ≠ 0)")]
    InvalidBase(BigInt),
    #[error("invalid n = {0}: n must be a non-negative integer")]
    InvalidShift(i64),
    #[error("invalid k = {0}: the degree k must be at least 1")]
    InvalidDegree(i64),
    #[error("exponent n + k = {0} is too large")]
    ExponentOverflow(u64),
    #[error("trapezoid index m = {m} out of range for k = {k} (need 0 ≤ m ≤ k - 2)")]
    TrapezoidIndex { m: u32, k: u32 },
    #[error("diagram is degenerate (q = 1): Pick's theorem needs a non-empty interior region")]
    DegenerateDiagram,
    #[error("Pick oracle out of budget: x-extent {extent} exceeds scan budget {budget}")]
    PickBudget { extent: BigUint, budget: u64 },
    #[error("empty q range: {from}..={to}")]
    EmptyRange { from: BigUint, to: BigUint },
    #[error("difference order {order} needs more than {order} values, sequence has {len}")]
    DifferenceOrder { order: usize, len: usize },
}
