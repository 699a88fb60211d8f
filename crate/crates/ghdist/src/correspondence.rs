//! Correspondences between two finite spaces and their distortion.
//!
//! A correspondence is a relation `R ⊂ X × Y` that covers both sides: every
//! point of `X` appears in some pair and so does every point of `Y`. Its
//! distortion is the largest discrepancy `| d_X(x₁,x₂) − d_Y(y₁,y₂) |` over
//! pairs of related pairs, and half the minimal distortion over all
//! correspondences is the Gromov-Hausdorff distance.

use crate::error::{GhError, Result};
use crate::pi_rational::PiRational;
use crate::space::FiniteMetricSpace;

/// A set of index pairs `(i, j)` relating points of `X` to points of `Y`,
/// kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correspondence {
    pairs: Vec<(usize, usize)>,
}

impl Correspondence {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Correspondence> {
        if pairs.is_empty() {
            return Err(GhError::EmptyCorrespondence);
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(Correspondence { pairs })
    }

    /// The identity correspondence on an `n`-point space.
    pub fn identity(n: usize) -> Correspondence {
        Correspondence { pairs: (0..n).map(|i| (i, i)).collect() }
    }

    /// The full relation `X × Y`.
    pub fn all_pairs(n: usize, m: usize) -> Correspondence {
        let mut pairs = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                pairs.push((i, j));
            }
        }
        Correspondence { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// True when every index of `0..n` and `0..m` appears in some pair.
    pub fn covers(&self, n: usize, m: usize) -> bool {
        let mut x_seen = vec![false; n];
        let mut y_seen = vec![false; m];
        for &(i, j) in &self.pairs {
            if i >= n || j >= m {
                return false;
            }
            x_seen[i] = true;
            y_seen[j] = true;
        }
        x_seen.into_iter().all(|s| s) && y_seen.into_iter().all(|s| s)
    }

    /// Check that this relation is a correspondence between the two spaces,
    /// naming the first uncovered point otherwise.
    pub fn validate_between(
        &self,
        x: &FiniteMetricSpace,
        y: &FiniteMetricSpace,
    ) -> Result<()> {
        let (n, m) = (x.points(), y.points());
        for &(i, j) in &self.pairs {
            if i >= n || j >= m {
                return Err(GhError::PairOutOfRange { x: i, y: j, n, m });
            }
        }
        let mut x_seen = vec![false; n];
        let mut y_seen = vec![false; m];
        for &(i, j) in &self.pairs {
            x_seen[i] = true;
            y_seen[j] = true;
        }
        if let Some(i) = x_seen.iter().position(|s| !s) {
            return Err(GhError::Uncovered { side: 'X', index: i, label: x.label(i).to_string() });
        }
        if let Some(j) = y_seen.iter().position(|s| !s) {
            return Err(GhError::Uncovered { side: 'Y', index: j, label: y.label(j).to_string() });
        }
        Ok(())
    }
}

/// `dis R = max | d_X(x₁,x₂) − d_Y(y₁,y₂) |` over pairs `(x₁,y₁), (x₂,y₂)`
/// of the correspondence. Errors if `r` does not cover both spaces.
pub fn distortion(
    r: &Correspondence,
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
) -> Result<f64> {
    r.validate_between(x, y)?;
    let pairs = r.pairs();
    let mut worst = 0.0f64;
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[a..] {
            worst = worst.max((x.dist(i, k) - y.dist(j, l)).abs());
        }
    }
    Ok(worst)
}

/// Exact-rational distortion, available when both spaces carry exact
/// π-coefficient matrices (polygons do). Returns `None` otherwise.
pub fn distortion_exact(
    r: &Correspondence,
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
) -> Result<Option<PiRational>> {
    r.validate_between(x, y)?;
    if !x.has_exact() || !y.has_exact() {
        return Ok(None);
    }
    let pairs = r.pairs();
    let mut worst = PiRational::ZERO;
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[a..] {
            let gap = (x.exact_dist(i, k).unwrap() - y.exact_dist(j, l).unwrap()).abs();
            if gap > worst {
                worst = gap;
            }
        }
    }
    Ok(Some(worst))
}
