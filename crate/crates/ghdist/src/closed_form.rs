//! Closed-form Gromov-Hausdorff distances between regular polygon vertex
//! sets `p(n, m) = d_GH(P_n, P_m)`, exact in π-rational arithmetic:
//!
//! - `n` divides `m`:  `π/n − π/m`;
//! - `n = 2`:  `π/2 − π/(2m)` for odd `m`, `π/2 − π/m` for even `m`;
//! - `n = 3`:  with `r = m mod 3`, `π/3 − π/m` when `r = 0`,
//!   else `π/3 − rπ/(3m)`;
//! - consecutive orders `m = n + 1`:  `π/(n+1)`.
//!
//! Plus the constant `d_GH(S¹, P_m) = π/m` for the circle itself (recorded,
//! not computed: the circle is not a finite space), the explicit low-
//! distortion correspondence behind the divisible case, and the index gap
//! bound that proves it.

use crate::correspondence::Correspondence;
use crate::error::{GhError, Result};
use crate::pi_rational::PiRational;

/// Which closed form produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremTag {
    /// `n | m`.
    Divisible,
    /// `n = 2`, any `m`.
    TwoGon,
    /// `n = 3`, any `m ≥ 3`.
    ThreeGon,
    /// `m = n + 1`.
    Consecutive,
    /// `d_GH(S¹, P_m)`, exposed as a constant.
    Circle,
}

impl TheoremTag {
    pub fn id(&self) -> &'static str {
        match self {
            TheoremTag::Divisible => "divisible",
            TheoremTag::TwoGon => "two-gon",
            TheoremTag::ThreeGon => "three-gon",
            TheoremTag::Consecutive => "consecutive",
            TheoremTag::Circle => "circle",
        }
    }
}

/// Outcome of a closed-form lookup for `(n, m)`: the exact value and the
/// rule that applies, or nothing when no rule covers the pair.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormAnswer {
    pub n: usize,
    pub m: usize,
    pub theorem: Option<TheoremTag>,
    pub value: Option<PiRational>,
}

impl ClosedFormAnswer {
    pub fn is_applicable(&self) -> bool {
        self.value.is_some()
    }
}

/// Exact `d_GH(P_n, P_m)` when a closed form covers the (order-normalized)
/// pair. Where several rules overlap, they are cross-checked against each
/// other before one is reported, in the priority divisible, two-gon,
/// three-gon, consecutive.
pub fn closed_form(n: usize, m: usize) -> Result<ClosedFormAnswer> {
    if n < 2 {
        return Err(GhError::PolygonOrder(n));
    }
    if m < 2 {
        return Err(GhError::PolygonOrder(m));
    }
    let (orig_n, orig_m) = (n, m);
    let (n, m) = if n <= m { (n, m) } else { (m, n) };
    let (ni, mi) = (n as i64, m as i64);

    let mut candidates: Vec<(TheoremTag, PiRational)> = Vec::new();
    if m % n == 0 {
        candidates.push((
            TheoremTag::Divisible,
            PiRational::new(1, ni) - PiRational::new(1, mi),
        ));
    }
    if n == 2 {
        let value = if m % 2 == 1 {
            PiRational::new(1, 2) - PiRational::new(1, 2 * mi)
        } else {
            PiRational::new(1, 2) - PiRational::new(1, mi)
        };
        candidates.push((TheoremTag::TwoGon, value));
    }
    if n == 3 {
        let r = mi % 3;
        let value = if r == 0 {
            PiRational::new(1, 3) - PiRational::new(1, mi)
        } else {
            PiRational::new(1, 3) - PiRational::new(r, 3 * mi)
        };
        candidates.push((TheoremTag::ThreeGon, value));
    }
    if m == n + 1 {
        candidates.push((TheoremTag::Consecutive, PiRational::new(1, mi)));
    }

    let Some(&(tag, value)) = candidates.first() else {
        return Ok(ClosedFormAnswer { n: orig_n, m: orig_m, theorem: None, value: None });
    };
    for &(other_tag, other) in &candidates[1..] {
        assert_eq!(
            value,
            other,
            "overlapping closed forms disagree on ({n}, {m}): {tag:?} vs {other_tag:?}"
        );
    }
    Ok(ClosedFormAnswer { n: orig_n, m: orig_m, theorem: Some(tag), value: Some(value) })
}

/// The constant `d_GH(S¹, P_m) = π/m`. The circle is a continuous space, so
/// this value is recorded rather than computed; everything else in the crate
/// stays within finite spaces.
pub fn circle_distance(m: usize) -> Result<PiRational> {
    if m < 2 {
        return Err(GhError::PolygonOrder(m));
    }
    Ok(PiRational::new(1, m as i64))
}

/// The explicit correspondence between `P_n` and `P_{pn}` that pairs vertex
/// `u_i` with the run `v_{pi−k}, k = 0..p−1` (1-based; returned pairs are
/// 0-based indices). Its distortion is exactly `2(p−1)π/(pn)`, which yields
/// the divisible-case upper bound.
pub fn divisible_correspondence(n: usize, p: usize) -> Result<Correspondence> {
    if n < 2 {
        return Err(GhError::PolygonOrder(n));
    }
    if p < 1 {
        return Err(GhError::ArgRange { name: "p", value: p as i64, range: "p >= 1".into() });
    }
    let mut pairs = Vec::with_capacity(n * p);
    for i in 1..=n {
        for k in 0..p {
            pairs.push((i - 1, p * i - k - 1));
        }
    }
    Correspondence::new(pairs)
}

/// The index-space discrepancy
/// `S = | min(|i−j|, n−|i−j|) − min(|i−j+(k−l)/p|, n−|i−j+(k−l)/p|) |`
/// that controls the distortion of [`divisible_correspondence`]; it never
/// exceeds `|k−l|/p`. Arguments follow the 1-based vertex indexing
/// (`i, j` in `1..=n`) with offsets `k, l` in `0..p`. Computed in integer
/// arithmetic scaled by `p`, so the returned value is exact.
pub fn lemma_gap(n: usize, p: usize, i: usize, j: usize, k: usize, l: usize) -> Result<f64> {
    if n < 2 {
        return Err(GhError::PolygonOrder(n));
    }
    if p < 1 {
        return Err(GhError::ArgRange { name: "p", value: p as i64, range: "p >= 1".into() });
    }
    if i < 1 || i > n {
        return Err(GhError::ArgRange { name: "i", value: i as i64, range: format!("1..={n}") });
    }
    if j < 1 || j > n {
        return Err(GhError::ArgRange { name: "j", value: j as i64, range: format!("1..={n}") });
    }
    if k >= p {
        return Err(GhError::ArgRange { name: "k", value: k as i64, range: format!("0..={}", p - 1) });
    }
    if l >= p {
        return Err(GhError::ArgRange { name: "l", value: l as i64, range: format!("0..={}", p - 1) });
    }
    let (ni, pi) = (n as i64, p as i64);
    let d = i as i64 - j as i64;
    // Everything in units of 1/p.
    let a = pi * d.abs().min(ni - d.abs());
    let shifted = (pi * d + (k as i64 - l as i64)).abs();
    let b = shifted.min(ni * pi - shifted);
    Ok((a - b).abs() as f64 / p as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::{distortion, distortion_exact};
    use crate::space::regular_polygon;

    #[test]
    fn divisible_pairs() {
        let a = closed_form(4, 12).unwrap();
        assert_eq!(a.theorem, Some(TheoremTag::Divisible));
        assert_eq!(a.value.unwrap(), PiRational::new(1, 6));

        let a = closed_form(2, 2).unwrap();
        assert_eq!(a.value.unwrap(), PiRational::ZERO);
    }

    #[test]
    fn order_is_normalized() {
        let a = closed_form(12, 4).unwrap();
        assert_eq!(a.value.unwrap(), PiRational::new(1, 6));
        assert_eq!((a.n, a.m), (12, 4));
    }

    #[test]
    fn two_gon_and_three_gon_remainders() {
        // (3, 5): remainder 2, π/3 − 2π/15 = π/5.
        let a = closed_form(3, 5).unwrap();
        assert_eq!(a.theorem, Some(TheoremTag::ThreeGon));
        assert_eq!(a.value.unwrap(), PiRational::new(1, 5));

        let a = closed_form(2, 7).unwrap();
        assert_eq!(a.value.unwrap(), PiRational::new(1, 2) - PiRational::new(1, 14));

        let a = closed_form(2, 8).unwrap();
        assert_eq!(a.value.unwrap(), PiRational::new(3, 8));
    }

    #[test]
    fn consecutive_orders_and_uncovered_pairs() {
        let a = closed_form(4, 5).unwrap();
        assert_eq!(a.theorem, Some(TheoremTag::Consecutive));
        assert_eq!(a.value.unwrap(), PiRational::new(1, 5));

        let a = closed_form(5, 7).unwrap();
        assert!(!a.is_applicable());
        assert_eq!(a.value, None);

        assert!(closed_form(1, 5).is_err());
    }

    #[test]
    fn circle_constants() {
        assert_eq!(circle_distance(2).unwrap(), PiRational::new(1, 2));
        assert_eq!(circle_distance(4).unwrap(), PiRational::new(1, 4));
        assert_eq!(circle_distance(1000).unwrap(), PiRational::new(1, 1000));
        assert!(circle_distance(1).is_err());
    }

    #[test]
    fn divisible_correspondence_small_cases() {
        // p = 1 is the identity pairing.
        let r = divisible_correspondence(4, 1).unwrap();
        assert_eq!(r.pairs(), &[(0, 0), (1, 1), (2, 2), (3, 3)]);
        let p4 = regular_polygon(4).unwrap();
        assert_eq!(distortion(&r, &p4, &p4).unwrap(), 0.0);

        // (n, p) = (2, 2): u1 ↔ {v1, v2}, u2 ↔ {v3, v4}; distortion π/2.
        let r = divisible_correspondence(2, 2).unwrap();
        assert_eq!(r.pairs(), &[(0, 0), (0, 1), (1, 2), (1, 3)]);
        let p2 = regular_polygon(2).unwrap();
        let exact = distortion_exact(&r, &p2, &p4).unwrap().unwrap();
        assert_eq!(exact, PiRational::new(1, 2));

        // (n, p) = (3, 2) against P_6: distortion exactly π/3.
        let r = divisible_correspondence(3, 2).unwrap();
        let p3 = regular_polygon(3).unwrap();
        let p6 = regular_polygon(6).unwrap();
        let exact = distortion_exact(&r, &p3, &p6).unwrap().unwrap();
        assert_eq!(exact, PiRational::new(1, 3));
    }

    #[test]
    fn gap_matches_hand_computed_cases() {
        // i = j reduces to |k−l|/p.
        assert_eq!(lemma_gap(5, 4, 2, 2, 3, 1).unwrap(), 2.0 / 4.0);
        // k = l gives zero.
        assert_eq!(lemma_gap(7, 3, 4, 6, 2, 2).unwrap(), 0.0);
        // Direct evaluation: |min(1,2) − min(1.5, 1.5)| = 0.5.
        assert_eq!(lemma_gap(3, 2, 2, 1, 1, 0).unwrap(), 0.5);
    }

    #[test]
    fn gap_rejects_out_of_range_indices() {
        assert!(matches!(lemma_gap(3, 2, 0, 1, 0, 0), Err(GhError::ArgRange { name: "i", .. })));
        assert!(matches!(lemma_gap(3, 2, 1, 4, 0, 0), Err(GhError::ArgRange { name: "j", .. })));
        assert!(matches!(lemma_gap(3, 2, 1, 1, 2, 0), Err(GhError::ArgRange { name: "k", .. })));
        assert!(matches!(lemma_gap(3, 1, 1, 1, 0, 0), Ok(v) if v == 0.0));
    }
}
