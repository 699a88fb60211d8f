//! Finite metric spaces: representation, axiom validation, diameters,
//! set-to-set distances, partition statistics, and the regular-polygon
//! vertex spaces.

use crate::error::{GhError, Result};
use crate::partition::Partition;
use crate::pi_rational::PiRational;

/// Absolute tolerance for the symmetry and triangle-inequality checks.
///
/// All built-in spaces have distances of order π computed with a single
/// multiplication, so genuine rounding error sits many orders of magnitude
/// below this.
pub const EPS_METRIC: f64 = 1e-9;

/// A labeled finite (pseudo-)metric space with a dense distance matrix.
///
/// Construction checks shape only; [`FiniteMetricSpace::validate`] reports
/// which metric axioms hold. Polygon spaces additionally carry the exact
/// matrix of π-coefficients so polygon-only computations can avoid floats.
#[derive(Clone, Debug)]
pub struct FiniteMetricSpace {
    labels: Vec<String>,
    dist: Vec<f64>,
    exact: Option<Vec<PiRational>>,
}

/// One violated metric axiom, with the indices that witness it.
#[derive(Clone, Debug, PartialEq)]
pub enum MetricViolation {
    NonFinite { i: usize, j: usize, value: f64 },
    Negative { i: usize, j: usize, value: f64 },
    NonzeroDiagonal { i: usize, value: f64 },
    Asymmetric { i: usize, j: usize, delta: f64 },
    TriangleViolation { i: usize, j: usize, k: usize, excess: f64 },
    ZeroOffDiagonal { i: usize, j: usize },
}

impl std::fmt::Display for MetricViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MetricViolation::NonFinite { i, j, value } => {
                write!(f, "non-finite entry d[{i}][{j}] = {value}")
            }
            MetricViolation::Negative { i, j, value } => {
                write!(f, "negative entry d[{i}][{j}] = {value}")
            }
            MetricViolation::NonzeroDiagonal { i, value } => {
                write!(f, "nonzero diagonal d[{i}][{i}] = {value}")
            }
            MetricViolation::Asymmetric { i, j, delta } => {
                write!(f, "asymmetry |d[{i}][{j}] - d[{j}][{i}]| = {delta}")
            }
            MetricViolation::TriangleViolation { i, j, k, excess } => {
                write!(
                    f,
                    "triangle violation at ({i},{k}): d[{i}][{k}] exceeds d[{i}][{j}] + d[{j}][{k}] by {excess}"
                )
            }
            MetricViolation::ZeroOffDiagonal { i, j } => {
                write!(f, "zero distance between distinct points {i} and {j}")
            }
        }
    }
}

impl PartialEq for FiniteMetricSpace {
    /// Bit-exact equality of labels and distances. The optional exact matrix
    /// is derived data and deliberately excluded, so a polygon written to
    /// disk and read back compares equal to the generated one.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.dist == other.dist
    }
}

impl FiniteMetricSpace {
    /// Build a space from labels and matrix rows. Checks shape (square,
    /// nonempty, label count) but not the metric axioms.
    pub fn new(labels: Vec<String>, rows: Vec<Vec<f64>>) -> Result<FiniteMetricSpace> {
        let n = rows.len();
        if n == 0 {
            return Err(GhError::EmptySpace);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(GhError::NonSquare { rows: n, row, cols: r.len() });
            }
        }
        if labels.len() != n {
            return Err(GhError::LabelCount { labels: labels.len(), size: n });
        }
        let dist = rows.into_iter().flatten().collect();
        Ok(FiniteMetricSpace { labels, dist, exact: None })
    }

    /// Like [`FiniteMetricSpace::new`], but also validates the metric axioms
    /// and fails with the full violation list if any are broken.
    pub fn checked(
        labels: Vec<String>,
        rows: Vec<Vec<f64>>,
        allow_pseudo: bool,
    ) -> Result<FiniteMetricSpace> {
        let space = FiniteMetricSpace::new(labels, rows)?;
        let violations = space.validate(allow_pseudo);
        if violations.is_empty() {
            Ok(space)
        } else {
            Err(GhError::InvalidMetric(violations))
        }
    }

    pub(crate) fn from_flat(
        labels: Vec<String>,
        dist: Vec<f64>,
        exact: Option<Vec<PiRational>>,
    ) -> FiniteMetricSpace {
        debug_assert_eq!(dist.len(), labels.len() * labels.len());
        if let Some(e) = &exact {
            debug_assert_eq!(e.len(), dist.len());
        }
        FiniteMetricSpace { labels, dist, exact }
    }

    pub fn points(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.labels.len() + j]
    }

    /// The matrix as rows, for serialization.
    pub fn matrix_rows(&self) -> Vec<Vec<f64>> {
        let n = self.points();
        (0..n).map(|i| (0..n).map(|j| self.dist(i, j)).collect()).collect()
    }

    pub fn has_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// Exact π-coefficient of `d(i, j)`, when the space carries one.
    pub fn exact_dist(&self, i: usize, j: usize) -> Option<PiRational> {
        self.exact.as_ref().map(|e| e[i * self.labels.len() + j])
    }

    /// Report every violated metric axiom. An empty report means the matrix
    /// is a metric (or pseudo-metric, when `allow_pseudo` permits zero
    /// distances between distinct points).
    ///
    /// Symmetry and the triangle inequality are checked to [`EPS_METRIC`];
    /// the diagonal and off-diagonal zero checks are exact.
    pub fn validate(&self, allow_pseudo: bool) -> Vec<MetricViolation> {
        let n = self.points();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let d = self.dist(i, j);
                if !d.is_finite() {
                    out.push(MetricViolation::NonFinite { i, j, value: d });
                } else if d < 0.0 {
                    out.push(MetricViolation::Negative { i, j, value: d });
                }
            }
        }
        if !out.is_empty() {
            // Remaining axioms are meaningless with NaN or negative entries.
            return out;
        }
        for i in 0..n {
            if self.dist(i, i) != 0.0 {
                out.push(MetricViolation::NonzeroDiagonal { i, value: self.dist(i, i) });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let delta = (self.dist(i, j) - self.dist(j, i)).abs();
                if delta > EPS_METRIC {
                    out.push(MetricViolation::Asymmetric { i, j, delta });
                }
                if !allow_pseudo && self.dist(i, j) == 0.0 && self.dist(j, i) == 0.0 {
                    out.push(MetricViolation::ZeroOffDiagonal { i, j });
                }
            }
        }
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    let excess = self.dist(i, k) - self.dist(i, j) - self.dist(j, k);
                    if excess > EPS_METRIC {
                        out.push(MetricViolation::TriangleViolation { i, j, k, excess });
                    }
                }
            }
        }
        out
    }

    /// Largest pairwise distance; 0 for a one-point space.
    pub fn diam(&self) -> f64 {
        let n = self.points();
        let mut best = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                best = best.max(self.dist(i, j));
            }
        }
        best
    }

    /// `|AB| = min { d(a, b) : a in A, b in B }` for nonempty index sets.
    pub fn set_distance(&self, a: &[usize], b: &[usize]) -> Result<f64> {
        if a.is_empty() || b.is_empty() {
            return Err(GhError::EmptyPointSet);
        }
        let n = self.points();
        let mut best = f64::INFINITY;
        for &i in a {
            if i >= n {
                return Err(GhError::PointOutOfRange { index: i, points: n });
            }
            for &j in b {
                if j >= n {
                    return Err(GhError::PointOutOfRange { index: j, points: n });
                }
                best = best.min(self.dist(i, j));
            }
        }
        Ok(best)
    }

    /// Largest block diameter of a partition of this space.
    pub fn partition_diam(&self, d: &Partition) -> Result<f64> {
        self.check_partition(d)?;
        let n = self.points();
        let mut best = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                if d.block_of(i) == d.block_of(j) {
                    best = best.max(self.dist(i, j));
                }
            }
        }
        Ok(best)
    }

    /// Smallest distance between distinct blocks; `+inf` for a one-block
    /// partition (there is nothing to separate).
    pub fn partition_alpha(&self, d: &Partition) -> Result<f64> {
        self.check_partition(d)?;
        if d.block_count() == 1 {
            return Ok(f64::INFINITY);
        }
        let n = self.points();
        let mut best = f64::INFINITY;
        for i in 0..n {
            for j in (i + 1)..n {
                if d.block_of(i) != d.block_of(j) {
                    best = best.min(self.dist(i, j));
                }
            }
        }
        Ok(best)
    }

    fn check_partition(&self, d: &Partition) -> Result<()> {
        if d.points() != self.points() {
            return Err(GhError::PartitionSize { points: d.points(), expected: self.points() });
        }
        Ok(())
    }

    /// Recognize this space as `P_n` for some `n`: bit-exact comparison of
    /// the distance matrix against a freshly generated polygon. Labels are
    /// ignored.
    pub fn as_polygon(&self) -> Option<usize> {
        let n = self.points();
        if n < 2 {
            return None;
        }
        let p = regular_polygon(n).ok()?;
        if self.dist == p.dist {
            Some(n)
        } else {
            None
        }
    }

    /// Recognize this space as a simplex: at least two points and all
    /// off-diagonal distances exactly equal (and positive). Returns the
    /// cardinality and the common distance.
    pub fn as_simplex(&self) -> Option<(usize, f64)> {
        let n = self.points();
        if n < 2 {
            return None;
        }
        let lambda = self.dist(0, 1);
        if !(lambda > 0.0) {
            return None;
        }
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { 0.0 } else { lambda };
                if self.dist(i, j) != expect {
                    return None;
                }
            }
        }
        Some((n, lambda))
    }
}

/// Vertex set of the regular `n`-gon inscribed in the unit circle, with the
/// geodesic (arc-length) metric: `d(v_i, v_j) = (2π/n)·min(|i−j|, n−|i−j|)`.
///
/// Labels are `v1..vn`. The matrix is generated from the exact π-coefficients,
/// so `dist` and `exact_dist` always agree. The smallest case is `P_2`, the
/// pair of diametrically opposed points. The diameter works out to π for even
/// `n` and `π − π/n` for odd `n`.
pub fn regular_polygon(n: usize) -> Result<FiniteMetricSpace> {
    regular_polygon_prefixed(n, "v")
}

/// Same as [`regular_polygon`] but with a custom label prefix (e.g. `u`),
/// handy when two polygons appear side by side.
pub fn regular_polygon_prefixed(n: usize, prefix: &str) -> Result<FiniteMetricSpace> {
    if n < 2 {
        return Err(GhError::PolygonOrder(n));
    }
    let labels: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
    let mut exact = Vec::with_capacity(n * n);
    let mut dist = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let gap = i.abs_diff(j);
            let hops = gap.min(n - gap);
            let q = PiRational::new(2 * hops as i64, n as i64);
            exact.push(q);
            dist.push(q.value());
        }
    }
    Ok(FiniteMetricSpace::from_flat(labels, dist, Some(exact)))
}

/// Replace a symmetric nonnegative matrix with its all-pairs shortest-path
/// closure, forcing the triangle inequality. The standard way to turn an
/// arbitrary symmetric cost matrix into a metric, used by the random-metric
/// test generators.
pub fn shortest_path_closure(rows: &mut [Vec<f64>]) {
    let n = rows.len();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = rows[i][k] + rows[k][j];
                if via < rows[i][j] {
                    rows[i][j] = via;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("p{i}")).collect()
    }

    #[test]
    fn one_point_space_is_valid() {
        let s = FiniteMetricSpace::new(labels(1), vec![vec![0.0]]).unwrap();
        assert!(s.validate(false).is_empty());
        assert_eq!(s.diam(), 0.0);
    }

    #[test]
    fn two_point_space_is_valid() {
        let s = FiniteMetricSpace::new(labels(2), vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!(s.validate(false).is_empty());
    }

    #[test]
    fn triangle_violation_is_reported_at_the_offending_pair() {
        let s = FiniteMetricSpace::new(
            labels(3),
            vec![vec![0.0, 1.0, 3.0], vec![1.0, 0.0, 1.0], vec![3.0, 1.0, 0.0]],
        )
        .unwrap();
        let report = s.validate(false);
        assert!(report.iter().any(|v| matches!(
            v,
            MetricViolation::TriangleViolation { i: 0, j: 1, k: 2, .. }
        )));
    }

    #[test]
    fn distinct_violations_are_named() {
        let s = FiniteMetricSpace::new(
            labels(2),
            vec![vec![0.0, f64::NAN], vec![-1.0, 0.0]],
        )
        .unwrap();
        let report = s.validate(false);
        assert!(report.iter().any(|v| matches!(v, MetricViolation::NonFinite { .. })));
        assert!(report.iter().any(|v| matches!(v, MetricViolation::Negative { .. })));

        let s = FiniteMetricSpace::new(
            labels(2),
            vec![vec![0.0, 1.0], vec![1.1, 0.0]],
        )
        .unwrap();
        assert!(s
            .validate(false)
            .iter()
            .any(|v| matches!(v, MetricViolation::Asymmetric { i: 0, j: 1, .. })));
    }

    #[test]
    fn pseudo_flag_permits_zero_off_diagonal() {
        let rows = vec![
            vec![0.0, 0.0, 1.0],
            vec![0.0, 0.0, 1.0],
            vec![1.0, 1.0, 0.0],
        ];
        let s = FiniteMetricSpace::new(labels(3), rows).unwrap();
        assert!(s.validate(true).is_empty());
        assert!(s
            .validate(false)
            .iter()
            .any(|v| matches!(v, MetricViolation::ZeroOffDiagonal { i: 0, j: 1 })));
    }

    #[test]
    fn non_square_rejected() {
        let err = FiniteMetricSpace::new(labels(2), vec![vec![0.0, 1.0], vec![1.0]]);
        assert!(matches!(err, Err(GhError::NonSquare { .. })));
    }

    #[test]
    fn polygon_distances_match_the_arc_formula() {
        let p = regular_polygon(4).unwrap();
        assert_eq!(p.dist(0, 1), PI / 2.0);
        assert_eq!(p.dist(0, 2), PI);
        assert_eq!(p.label(0), "v1");
        assert_eq!(p.exact_dist(0, 2).unwrap(), PiRational::PI);

        let p2 = regular_polygon(2).unwrap();
        assert_eq!(p2.dist(0, 1), PI);
        assert!(regular_polygon(1).is_err());
    }

    #[test]
    fn polygon_diameters() {
        // Derived by maximizing (2π/n)·min(k, n−k) over k.
        assert_eq!(regular_polygon(2).unwrap().diam(), PI);
        let d5 = regular_polygon(5).unwrap().diam();
        assert!((d5 - 4.0 * PI / 5.0).abs() < 1e-15);
        let d7 = regular_polygon(7).unwrap().diam();
        assert!((d7 - (PI - PI / 7.0)).abs() < 1e-15);
    }

    #[test]
    fn set_distance_between_adjacent_vertices() {
        let p = regular_polygon(6).unwrap();
        let d = p.set_distance(&[0], &[1]).unwrap();
        assert!((d - 2.0 * PI / 6.0).abs() < 1e-15);
        assert!(matches!(p.set_distance(&[], &[1]), Err(GhError::EmptyPointSet)));
    }

    #[test]
    fn partition_statistics_on_polygons() {
        let p7 = regular_polygon(7).unwrap();
        // Singletons: diam 0, alpha = adjacent arc.
        let singles = Partition::new((0..7).collect(), 7).unwrap();
        assert_eq!(p7.partition_diam(&singles).unwrap(), 0.0);
        assert!((p7.partition_alpha(&singles).unwrap() - 2.0 * PI / 7.0).abs() < 1e-15);

        // Consecutive runs {v1,v2},{v3,v4},{v5,v6,v7}: the widest block spans
        // two arcs, so diam D = 4π/7 (exhaustive pairwise max agrees).
        let d = Partition::new(vec![0, 0, 1, 1, 2, 2, 2], 3).unwrap();
        let mut oracle = 0.0f64;
        for i in 0..7 {
            for j in 0..7 {
                if d.block_of(i) == d.block_of(j) {
                    oracle = oracle.max(p7.dist(i, j));
                }
            }
        }
        let got = p7.partition_diam(&d).unwrap();
        assert_eq!(got, oracle);
        assert!((got - 4.0 * PI / 7.0).abs() < 1e-15);

        // One block = the whole space.
        let p4 = regular_polygon(4).unwrap();
        let whole = Partition::new(vec![0, 0, 0, 0], 1).unwrap();
        assert_eq!(p4.partition_diam(&whole).unwrap(), PI);
        assert_eq!(p4.partition_alpha(&whole).unwrap(), f64::INFINITY);
    }

    #[test]
    fn partition_bounds_respect_space_extremes() {
        let p = regular_polygon(9).unwrap();
        let d = Partition::new(vec![0, 1, 2, 0, 1, 2, 0, 1, 2], 3).unwrap();
        assert!(p.partition_diam(&d).unwrap() <= p.diam());
        assert!(p.partition_alpha(&d).unwrap() >= 2.0 * PI / 9.0 - 1e-15);
    }

    #[test]
    fn polygon_rows_are_rotations() {
        for n in 2..=40 {
            let p = regular_polygon(n).unwrap();
            let mut row0: Vec<u64> = (0..n).map(|j| p.dist(0, j).to_bits()).collect();
            row0.sort_unstable();
            let mut distinct: Vec<u64> = row0.clone();
            distinct.dedup();
            // min(k, n−k) over k = 1..n−1 takes each value 1..⌊n/2⌋.
            assert_eq!(distinct.len() - 1, n / 2, "n = {n}");
            for i in 1..n {
                let mut row: Vec<u64> = (0..n).map(|j| p.dist(i, j).to_bits()).collect();
                row.sort_unstable();
                assert_eq!(row, row0, "row {i} of P_{n} is not a permutation of row 0");
            }
        }
    }

    #[test]
    fn polygon_and_simplex_recognition() {
        let p = regular_polygon(5).unwrap();
        assert_eq!(p.as_polygon(), Some(5));
        assert_eq!(p.as_simplex(), None);

        let p3 = regular_polygon(3).unwrap();
        let (m, lambda) = p3.as_simplex().unwrap();
        assert_eq!(m, 3);
        assert_eq!(lambda, 2.0 * PI / 3.0);

        let line = FiniteMetricSpace::new(
            labels(3),
            vec![vec![0.0, 1.0, 2.0], vec![1.0, 0.0, 1.0], vec![2.0, 1.0, 0.0]],
        )
        .unwrap();
        assert_eq!(line.as_polygon(), None);
        assert_eq!(line.as_simplex(), None);
    }

    #[test]
    fn closure_forces_triangle_inequality() {
        let mut rows = vec![
            vec![0.0, 1.0, 3.0],
            vec![1.0, 0.0, 1.0],
            vec![3.0, 1.0, 0.0],
        ];
        shortest_path_closure(&mut rows);
        let s = FiniteMetricSpace::new(labels(3), rows).unwrap();
        assert!(s.validate(false).is_empty());
        assert_eq!(s.dist(0, 2), 2.0);
    }
}
