//! Curve invariants, exhaustive point counting and the supersingular `j`-invariants.
mod cache;
mod curve;
mod ss;

pub use cache::{parse_record, serialize_record, CACHE_HEADER};
pub use curve::{
    invariants, is_ordinary, point_count, trace_of_frobenius, CurveInvariants, WeierstrassCurve,
    DEFAULT_POINT_COUNT_CAP,
};
pub use ss::{
    curve_from_j, is_supersingular_j, supersingular_set, supersingular_set_with, SupersingularSet,
    DEFAULT_SUPERSINGULAR_CAP,
};
