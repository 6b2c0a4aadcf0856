//! Closed forms and recurrences for the Tutte polynomials of matroid
//! families, plus the polynomial-level forms of the matroid constructions.

mod basic;
mod exponential;
mod geometry;
mod grid;
mod sums;
mod wheels;

pub use basic::{
    catalan, cycle, free_ext_poly, multilink, paving, relax_poly, sparse_paving, steiner_sparse, uniform, unrelax_poly,
    PavingSpec, STEINER_SYSTEMS,
};
pub use exponential::{
    complete_bipartite, complete_bipartite_bad_colouring, complete_graph, complete_graph_bad_colouring,
    COMPLETE_BIPARTITE_EDGE_LIMIT, COMPLETE_GRAPH_LIMIT,
};
pub use geometry::{affine, gaussian, is_prime_power, projective, q_cone, GEOMETRY_SIZE_LIMIT};
pub use grid::grid2;
pub use sums::{delta_sum_poly, one_sum, stretch_poly, tensor_poly, thicken_poly, two_sum_poly, TensorInputs};
pub use wheels::{wheel, wheel_power_sum, whirl};

use num_bigint::BigInt;

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub(crate) fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}
