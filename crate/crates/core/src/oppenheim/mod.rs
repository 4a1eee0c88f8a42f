//! Consistency projections and the Oppenheim angle between two linear
//! projections, under the Euclidean, sum-of-absolute-values and mixed
//! norms.

mod consistency;
mod infimum;
mod norms;

pub use consistency::{
    check_consistency_projection, consistency_family, ConsistencyFailure, ConsistencyFamily,
    ConsistencyReport,
};
pub use infimum::{
    alternating_limits, oppenheim_cos_given, oppenheim_cos_inf, AlternatingLimits,
    OppenheimInfimum,
};
pub use norms::{operator_norm, sampled_operator_norm, vector_norm, NormSpec};
