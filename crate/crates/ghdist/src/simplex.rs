//! Exact distance from a simplex (all nonzero distances equal) to an
//! arbitrary finite metric space, via the partition formula
//! `2·d = min over partitions D of X into m nonempty blocks of
//! max{ diam D, λ − α(D), diam X − λ }`.
//!
//! The minimum is over a finite family, so it is attained and a witness
//! partition is returned. The search assigns points to blocks in index
//! order; both `diam D` of the partial blocks and `λ − α(D)` across them are
//! monotone nondecreasing as points are added (α only shrinks), so the
//! running `max` prunes soundly against the best value found.

use crate::error::{GhError, Result};
use crate::partition::Partition;
use crate::result::{BoundKind, GHResult, Method, Witness};
use crate::space::FiniteMetricSpace;

/// An `m`-point simplex with common nonzero distance `lambda`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimplexSpec {
    m: usize,
    lambda: f64,
}

impl SimplexSpec {
    pub fn new(m: usize, lambda: f64) -> Result<SimplexSpec> {
        if m < 2 {
            return Err(GhError::SimplexCardinality { m, points: usize::MAX });
        }
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(GhError::SimplexLambda(lambda));
        }
        Ok(SimplexSpec { m, lambda })
    }

    pub fn cardinality(&self) -> usize {
        self.m
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The simplex as a concrete space with labels `s1..sm`.
    pub fn materialize(&self) -> FiniteMetricSpace {
        let labels = (1..=self.m).map(|i| format!("s{i}")).collect();
        let mut dist = vec![self.lambda; self.m * self.m];
        for i in 0..self.m {
            dist[i * self.m + i] = 0.0;
        }
        FiniteMetricSpace::from_flat(labels, dist, None)
    }
}

struct PartitionSearch<'a> {
    x: &'a FiniteMetricSpace,
    n: usize,
    m: usize,
    lambda: f64,
    constant: f64,
    block_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    best: f64,
    best_assign: Vec<usize>,
    found: bool,
}

impl<'a> PartitionSearch<'a> {
    fn objective(&self, pdiam: f64, palpha: f64) -> f64 {
        pdiam.max(self.lambda - palpha).max(self.constant)
    }

    fn prune(&self, bound: f64) -> bool {
        if self.found {
            bound >= self.best
        } else {
            bound > self.best
        }
    }

    fn assign(&mut self, i: usize, used: usize, pdiam: f64, palpha: f64) {
        if i == self.n {
            debug_assert_eq!(used, self.m);
            let val = self.objective(pdiam, palpha);
            if !self.found || val < self.best {
                self.best = val;
                self.best_assign = self.block_of.clone();
                self.found = true;
            }
            return;
        }
        let cap = used.min(self.m - 1);
        for b in 0..=cap {
            let new_used = used.max(b + 1);
            // Enough points must remain to open every still-missing block.
            if self.m - new_used > self.n - i - 1 {
                continue;
            }
            let mut ndiam = pdiam;
            let mut nalpha = palpha;
            for (ob, members) in self.members.iter().enumerate() {
                if ob == b {
                    for &p in members {
                        ndiam = ndiam.max(self.x.dist(i, p));
                    }
                } else {
                    for &p in members {
                        nalpha = nalpha.min(self.x.dist(i, p));
                    }
                }
            }
            if self.prune(self.objective(ndiam, nalpha)) {
                continue;
            }
            self.block_of[i] = b;
            let opened = b == self.members.len();
            if opened {
                self.members.push(vec![i]);
            } else {
                self.members[b].push(i);
            }
            self.assign(i + 1, new_used, ndiam, nalpha);
            if opened {
                self.members.pop();
            } else {
                self.members[b].pop();
            }
            self.block_of[i] = usize::MAX;
        }
    }
}

/// Evaluate the consecutive-run partitions (compositions of `n` into `m`
/// positive parts laid out in index order) and return the best as an upper
/// bound seed. For polygon vertex orderings the optimal partitions have this
/// shape, which makes the pruning tight from the start.
fn compositions(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for take in 1..=(total - parts + 1) {
        cur.push(take);
        compositions(total - take, parts - 1, cur, out);
        cur.pop();
    }
}

fn consecutive_seed(
    x: &FiniteMetricSpace,
    m: usize,
    lambda: f64,
    constant: f64,
) -> Option<(f64, Vec<usize>)> {
    let n = x.points();
    let mut sizes = Vec::new();
    compositions(n, m, &mut Vec::with_capacity(m), &mut sizes);
    let mut best: Option<(f64, Vec<usize>)> = None;
    for composition in sizes {
        let mut assign = Vec::with_capacity(n);
        for (b, &s) in composition.iter().enumerate() {
            assign.extend(std::iter::repeat(b).take(s));
        }
        let d = Partition::from_canonical(assign.clone(), m);
        let pdiam = x.partition_diam(&d).expect("valid by construction");
        let palpha = x.partition_alpha(&d).expect("valid by construction");
        let val = pdiam.max(lambda - palpha).max(constant);
        if best.as_ref().map_or(true, |(v, _)| val < *v) {
            best = Some((val, assign));
        }
    }
    best
}

/// Exact `d_GH(λΔ_m, X)` via the partition formula, with an optimal witness
/// partition of `X` into `m` blocks.
pub fn simplex_distance(spec: &SimplexSpec, x: &FiniteMetricSpace) -> Result<GHResult> {
    let n = x.points();
    if n < 2 {
        return Err(GhError::SingletonTarget);
    }
    if spec.m > n {
        return Err(GhError::SimplexCardinality { m: spec.m, points: n });
    }
    let constant = x.diam() - spec.lambda;
    let seed = if x.as_polygon().is_some() {
        consecutive_seed(x, spec.m, spec.lambda, constant)
    } else {
        None
    };
    let (best, best_assign) = seed.unwrap_or((f64::INFINITY, Vec::new()));
    let mut search = PartitionSearch {
        x,
        n,
        m: spec.m,
        lambda: spec.lambda,
        constant,
        block_of: vec![usize::MAX; n],
        members: Vec::with_capacity(spec.m),
        best,
        best_assign,
        found: false,
    };
    search.assign(0, 0, 0.0, f64::INFINITY);
    debug_assert!(search.found || !search.best_assign.is_empty());
    let witness = Partition::from_canonical(search.best_assign.clone(), spec.m);
    Ok(
        GHResult::new(search.best / 2.0, BoundKind::Exact, Method::SimplexPartition)
            .with_witness(Witness::Partition(witness)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::regular_polygon;
    use std::f64::consts::PI;

    const TOL: f64 = 1e-9;

    #[test]
    fn two_gon_simplex_against_odd_polygon() {
        // P_2 = πΔ_2; the distance to P_5 is π/2 − π/10.
        let spec = SimplexSpec::new(2, PI).unwrap();
        let p5 = regular_polygon(5).unwrap();
        let r = simplex_distance(&spec, &p5).unwrap();
        assert!((r.value - (PI / 2.0 - PI / 10.0)).abs() < TOL);
    }

    #[test]
    fn triangle_simplex_against_p7() {
        // P_3 = (2π/3)Δ_3; the distance to P_7 is π/3 − π/21.
        let spec = SimplexSpec::new(3, 2.0 * PI / 3.0).unwrap();
        let p7 = regular_polygon(7).unwrap();
        let r = simplex_distance(&spec, &p7).unwrap();
        assert!((r.value - (PI / 3.0 - PI / 21.0)).abs() < TOL);
    }

    #[test]
    fn simplex_to_itself_is_zero() {
        for m in 2..=5 {
            let spec = SimplexSpec::new(m, 1.25).unwrap();
            let r = simplex_distance(&spec, &spec.materialize()).unwrap();
            assert_eq!(r.value, 0.0);
            match r.witness {
                Some(Witness::Partition(p)) => assert_eq!(p.block_count(), m),
                _ => panic!("expected a partition witness"),
            }
        }
    }

    #[test]
    fn witness_reevaluates_to_the_returned_value() {
        let spec = SimplexSpec::new(3, 2.0 * PI / 3.0).unwrap();
        let p8 = regular_polygon(8).unwrap();
        let r = simplex_distance(&spec, &p8).unwrap();
        let w = match r.witness {
            Some(Witness::Partition(ref p)) => p.clone(),
            _ => panic!("expected a partition witness"),
        };
        let val = p8
            .partition_diam(&w)
            .unwrap()
            .max(spec.lambda() - p8.partition_alpha(&w).unwrap())
            .max(p8.diam() - spec.lambda());
        assert!((val / 2.0 - r.value).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(SimplexSpec::new(1, 1.0), Err(GhError::SimplexCardinality { .. })));
        assert!(matches!(SimplexSpec::new(3, 0.0), Err(GhError::SimplexLambda(_))));
        assert!(matches!(SimplexSpec::new(3, f64::NAN), Err(GhError::SimplexLambda(_))));

        let spec = SimplexSpec::new(5, 1.0).unwrap();
        let p3 = regular_polygon(3).unwrap();
        assert!(matches!(
            simplex_distance(&spec, &p3),
            Err(GhError::SimplexCardinality { m: 5, points: 3 })
        ));

        let one = FiniteMetricSpace::new(vec!["a".into()], vec![vec![0.0]]).unwrap();
        let spec = SimplexSpec::new(2, 1.0).unwrap();
        assert!(matches!(simplex_distance(&spec, &one), Err(GhError::SingletonTarget)));
    }

    #[test]
    fn value_is_lipschitz_in_lambda() {
        let p7 = regular_polygon(7).unwrap();
        let deltas = [1e-3, 0.05, 0.4];
        for m in 2..=4 {
            for base in [0.5, 1.0, 2.0, 3.0] {
                let v0 = simplex_distance(&SimplexSpec::new(m, base).unwrap(), &p7)
                    .unwrap()
                    .value;
                for d in deltas {
                    let v1 = simplex_distance(&SimplexSpec::new(m, base + d).unwrap(), &p7)
                        .unwrap()
                        .value;
                    assert!((v1 - v0).abs() <= d + 1e-9, "m={m} λ={base} δ={d}");
                }
            }
        }
    }
}
