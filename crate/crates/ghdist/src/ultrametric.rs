//! The minimax pseudo-ultrametric `u`, its quotient space, and the lower
//! bound `d_GH(X, Y) ≥ d_GH(U(X), U(Y))`.
//!
//! `u(x, y)` is the smallest over chains `x = x₀, …, x_k = y` of the largest
//! link distance. On a finite space that equals the maximum edge weight on
//! the path joining `x` and `y` in a minimum spanning tree of the complete
//! distance graph, which is how it is computed here: no arithmetic beyond
//! comparisons, so every `u` value is a copy of some input distance.

use crate::error::Result;
use crate::exact::gh_bruteforce;
use crate::result::{BoundKind, GHResult, Method};
use crate::simplex::{simplex_distance, SimplexSpec};
use crate::space::FiniteMetricSpace;

/// The quotient of `(X, u)` by the classes with `u = 0`, with the induced
/// ultrametric, plus the map from original points to quotient points.
#[derive(Clone, Debug)]
pub struct UltrametricQuotient {
    pub space: FiniteMetricSpace,
    pub class_of: Vec<usize>,
}

/// The minimax (pseudo-)ultrametric of `x` as a flat row-major `n×n` matrix.
///
/// Satisfies `u ≤ d` entrywise and the strong triangle inequality
/// `u(i,k) ≤ max(u(i,j), u(j,k))` exactly.
pub fn minimax_metric(x: &FiniteMetricSpace) -> Vec<f64> {
    let n = x.points();
    let mut u = vec![0.0f64; n * n];
    if n == 1 {
        return u;
    }

    // Prim's algorithm on the complete graph. When v enters the tree,
    // best_edge[v] and parent[v] are final and describe its tree edge.
    let mut in_tree = vec![false; n];
    let mut best_edge = vec![f64::INFINITY; n];
    let mut parent = vec![0usize; n];
    in_tree[0] = true;
    for v in 1..n {
        best_edge[v] = x.dist(0, v);
    }
    for _ in 1..n {
        let v = (0..n)
            .filter(|&v| !in_tree[v])
            .min_by(|&a, &b| best_edge[a].partial_cmp(&best_edge[b]).unwrap())
            .unwrap();
        in_tree[v] = true;
        for w in 0..n {
            if !in_tree[w] && x.dist(v, w) < best_edge[w] {
                best_edge[w] = x.dist(v, w);
                parent[w] = v;
            }
        }
    }
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for v in 1..n {
        adj[v].push((parent[v], best_edge[v]));
        adj[parent[v]].push((v, best_edge[v]));
    }

    // From each root, walk the undirected tree; the largest edge seen on the
    // way to a node is the minimax distance.
    for root in 0..n {
        let mut visited = vec![false; n];
        visited[root] = true;
        let mut stack = vec![(root, 0.0f64)];
        while let Some((v, path_max)) = stack.pop() {
            for &(w, weight) in &adj[v] {
                if !visited[w] {
                    visited[w] = true;
                    let link = path_max.max(weight);
                    u[root * n + w] = link;
                    stack.push((w, link));
                }
            }
        }
    }
    u
}

/// Quotient `x` by the equivalence `u(x, y) = 0` (exact zero). For a strict
/// finite metric this is an identity relabeling; pseudo-metric inputs merge
/// their zero-distance classes. Quotient labels come from the lowest-index
/// member of each class.
pub fn quotient(x: &FiniteMetricSpace) -> UltrametricQuotient {
    let n = x.points();
    let u = minimax_metric(x);
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = reps.len();
        class_of[i] = c;
        reps.push(i);
        for j in (i + 1)..n {
            if class_of[j] == usize::MAX && u[i * n + j] == 0.0 {
                class_of[j] = c;
            }
        }
    }
    let k = reps.len();
    let labels: Vec<String> = reps.iter().map(|&i| x.label(i).to_string()).collect();
    let mut dist = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            dist.push(u[a * n + b]);
        }
    }
    UltrametricQuotient {
        space: FiniteMetricSpace::from_flat(labels, dist, None),
        class_of,
    }
}

/// Lower bound on `d_GH(x, y)`: the exact distance between the ultrametric
/// quotients `U(x)` and `U(y)`.
///
/// When both quotients are simplices (all off-diagonal `u` equal, which is
/// the case for polygons) the inner exact distance goes through the simplex
/// partition formula, so large spaces stay cheap; otherwise it falls back to
/// the brute-force search and propagates its budget errors.
pub fn gh_lower_ultrametric(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    budget: u64,
) -> Result<GHResult> {
    let qx = quotient(x).space;
    let qy = quotient(y).space;
    let inner = match (qx.as_simplex(), qy.as_simplex()) {
        (Some((mx, _)), Some((my, _))) => {
            let (small, big) = if mx <= my { (&qx, &qy) } else { (&qy, &qx) };
            let (sm, sl) = small.as_simplex().expect("checked above");
            simplex_distance(&SimplexSpec::new(sm, sl)?, big)?
        }
        _ => gh_bruteforce(&qx, &qy, budget)?,
    };
    Ok(GHResult::new(inner.value, BoundKind::Lower, Method::UltrametricLower))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::regular_polygon;
    use std::f64::consts::PI;

    #[test]
    fn polygon_minimax_is_the_adjacent_arc() {
        for n in 2..=9 {
            let p = regular_polygon(n).unwrap();
            let u = minimax_metric(&p);
            let arc = 2.0 * PI / n as f64;
            for i in 0..n {
                for j in 0..n {
                    let expect = if i == j { 0.0 } else { arc };
                    assert_eq!(u[i * n + j], expect, "u(P_{n})[{i}][{j}]");
                }
            }
        }
    }

    #[test]
    fn one_point_space() {
        let one = FiniteMetricSpace::new(vec!["a".into()], vec![vec![0.0]]).unwrap();
        assert_eq!(minimax_metric(&one), vec![0.0]);
        let q = quotient(&one);
        assert_eq!(q.space.points(), 1);
    }

    #[test]
    fn three_point_line_chains_through_the_middle() {
        let line = FiniteMetricSpace::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![0.0, 1.0, 2.0], vec![1.0, 0.0, 1.0], vec![2.0, 1.0, 0.0]],
        )
        .unwrap();
        let u = minimax_metric(&line);
        assert_eq!(u[0 * 3 + 2], 1.0); // chain a-b-c has max link 1
        assert_eq!(u[2 * 3 + 0], 1.0);
    }

    #[test]
    fn u_is_dominated_by_d_and_strongly_triangular() {
        let p = regular_polygon(7).unwrap();
        let u = minimax_metric(&p);
        let n = 7;
        for i in 0..n {
            for j in 0..n {
                assert!(u[i * n + j] <= p.dist(i, j));
                for k in 0..n {
                    assert!(u[i * n + k] <= u[i * n + j].max(u[j * n + k]));
                }
            }
        }
    }

    #[test]
    fn quotient_of_strict_metric_is_a_relabeling() {
        let p = regular_polygon(5).unwrap();
        let q = quotient(&p);
        assert_eq!(q.space.points(), 5);
        assert_eq!(q.class_of, vec![0, 1, 2, 3, 4]);
        let (m, lambda) = q.space.as_simplex().unwrap();
        assert_eq!(m, 5);
        assert_eq!(lambda, 2.0 * PI / 5.0);
    }

    #[test]
    fn pseudo_metric_classes_merge() {
        let rows = vec![
            vec![0.0, 0.0, 1.0],
            vec![0.0, 0.0, 1.0],
            vec![1.0, 1.0, 0.0],
        ];
        let s = FiniteMetricSpace::new(vec!["a".into(), "b".into(), "c".into()], rows).unwrap();
        let q = quotient(&s);
        assert_eq!(q.space.points(), 2);
        assert_eq!(q.class_of, vec![0, 0, 1]);
        assert_eq!(q.space.labels(), &["a".to_string(), "c".to_string()]);
        assert!(q.space.validate(false).is_empty());
    }

    #[test]
    fn lower_bound_values_on_polygons() {
        let p2 = regular_polygon(2).unwrap();
        let p6 = regular_polygon(6).unwrap();
        // ½·max(2π/6, 2π/2 − 2π/6) over the two quotient simplices.
        let r = gh_lower_ultrametric(&p2, &p6, crate::exact::DEFAULT_BUDGET).unwrap();
        assert!((r.value - PI / 3.0).abs() < 1e-12);
        assert_eq!(r.bound, BoundKind::Lower);

        let p3 = regular_polygon(3).unwrap();
        let r = gh_lower_ultrametric(&p3, &p3, crate::exact::DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn divisible_pairs_match_the_simplex_max_formula() {
        for (n, m) in [(2usize, 4usize), (2, 6), (3, 6), (3, 9), (4, 8)] {
            let x = regular_polygon(n).unwrap();
            let y = regular_polygon(m).unwrap();
            let r = gh_lower_ultrametric(&x, &y, crate::exact::DEFAULT_BUDGET).unwrap();
            let expect =
                0.5 * (2.0 * PI / m as f64).max(2.0 * PI / n as f64 - 2.0 * PI / m as f64);
            assert!((r.value - expect).abs() < 1e-12, "(P_{n}, P_{m})");
        }
    }
}
