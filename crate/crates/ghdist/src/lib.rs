//! Gromov-Hausdorff distances between finite metric spaces.
//!
//! The distance between two spaces is half the minimal distortion over all
//! correspondences between them. This crate computes it several ways and
//! cross-checks the routes against each other:
//!
//! - [`gh_bruteforce`]: exact value for small spaces by branch-and-bound
//!   search over correspondences, with an optimal witness;
//! - [`gh_lower_ultrametric`]: lower bound through the minimax-ultrametric
//!   quotients of the two spaces;
//! - [`gh_lower_diameter`]: the cheap diameter-gap lower bound;
//! - [`simplex_distance`]: exact distance from a simplex (all nonzero
//!   distances equal) to any finite space, by minimizing a max of partition
//!   statistics over partitions into `m` blocks;
//! - [`closed_form`]: exact π-rational values for vertex sets of regular
//!   polygons where a closed form is known (orders dividing, orders 2 and 3,
//!   consecutive orders).
//!
//! [`regular_polygon`] builds the vertex set of the regular `n`-gon on the
//! unit circle with the arc-length metric, the family those closed forms
//! speak about. The `ghdist` binary exposes all of this on the command line.
//!
//! ```
//! use ghdist::{gh_bruteforce, regular_polygon, DEFAULT_BUDGET};
//!
//! let p3 = regular_polygon(3).unwrap();
//! let p6 = regular_polygon(6).unwrap();
//! let d = gh_bruteforce(&p3, &p6, DEFAULT_BUDGET).unwrap();
//! assert!((d.value - std::f64::consts::PI / 6.0).abs() < 1e-9);
//! ```

pub mod closed_form;
pub mod correspondence;
pub mod error;
pub mod exact;
pub mod io;
pub mod partition;
pub mod pi_rational;
pub mod report;
pub mod result;
pub mod simplex;
pub mod space;
pub mod ultrametric;

pub use closed_form::{
    circle_distance, closed_form, divisible_correspondence, lemma_gap, ClosedFormAnswer,
    TheoremTag,
};
pub use correspondence::{distortion, distortion_exact, Correspondence};
pub use error::{GhError, Result};
pub use exact::{gh_bruteforce, gh_lower_diameter, seed_correspondence, DEFAULT_BUDGET};
pub use partition::{enumerate_partitions, stirling2, Partition};
pub use pi_rational::PiRational;
pub use report::{RunReport, VALUE_TOL};
pub use result::{BoundKind, GHResult, Method, Witness};
pub use simplex::{simplex_distance, SimplexSpec};
pub use space::{
    regular_polygon, regular_polygon_prefixed, shortest_path_closure, FiniteMetricSpace,
    MetricViolation, EPS_METRIC,
};
pub use ultrametric::{gh_lower_ultrametric, minimax_metric, quotient, UltrametricQuotient};
