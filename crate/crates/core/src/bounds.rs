//! ASPL equality and truncated inclusion–exclusion bounds for graphs of
//! diameter 3, the Moore bound and the ASPL gap.
//!
//! With `S(t) = Σ_{m=1}^{t} (−1)^{m−1} T(m)` and `P = n(n−1)`, the
//! truncated value is `3 − 2(|E| + S(t))/P`. It is an upper bound on the
//! ASPL for even `t`, a lower bound for odd `t`, and exact once `t`
//! reaches the last non-zero `T(m)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::distance::{distance_summary, Diameter, DistanceSummary};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::motifs::CommonNeighborProfile;
use crate::scalar::Scalar;

/// `L = 3 − d(d+1)/(n−1)`.
pub fn moore_bound<S: Scalar>(order: usize, degree: usize) -> S {
    assert!(order >= 2, "Moore bound needs at least two nodes");
    let (n, d) = (order as i128, degree as i128);
    S::from_ratio(3 * (n - 1) - d * (d + 1), n - 1)
}

/// `(aspl − L)/L`.
pub fn aspl_gap<S: Scalar>(aspl: S, order: usize, degree: usize) -> S {
    let l: S = moore_bound(order, degree);
    (aspl - l.clone()) / l
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Upper,
    Lower,
}

impl Direction {
    pub fn for_truncation(t: usize) -> Self {
        if t.is_multiple_of(2) {
            Direction::Upper
        } else {
            Direction::Lower
        }
    }
}

/// Truncated value at order `t`, as an exact integer ratio.
fn truncated_ratio(p: &CommonNeighborProfile, t: usize) -> Result<(i128, i128)> {
    let n = p.order() as i128;
    let pairs = n * (n - 1);
    let s = p.alternating_sum(t)?;
    let covered = (p.edge_count() as i128)
        .checked_add(s)
        .and_then(|x| x.checked_mul(2))
        .ok_or(Error::Overflow("ASPL bound"))?;
    Ok((3 * pairs - covered, pairs))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bound<S> {
    pub t: usize,
    pub value: S,
    pub direction: Direction,
}

/// Truncated bound of order `t ≥ 1`. Only a valid bound for diameter-3
/// graphs; that is not checked here.
pub fn aspl_bound<S: Scalar>(g: &Graph, t: usize) -> Result<Bound<S>> {
    bound_from_profile(&CommonNeighborProfile::new(g), t)
}

pub fn bound_from_profile<S: Scalar>(p: &CommonNeighborProfile, t: usize) -> Result<Bound<S>> {
    assert!(t >= 1, "truncation order must be at least 1");
    assert!(p.order() >= 2, "bounds need at least two nodes");
    let (num, den) = truncated_ratio(p, t)?;
    Ok(Bound {
        t,
        value: S::from_ratio(num, den),
        direction: Direction::for_truncation(t),
    })
}

/// Exact ASPL from the full inclusion–exclusion series; requires diameter 3.
pub fn aspl_equality<S: Scalar>(g: &Graph) -> Result<S> {
    let summary = distance_summary(g);
    require_diameter3(&summary)?;
    equality_from_profile(&CommonNeighborProfile::new(g))
}

/// The equality value without checking the diameter.
pub fn equality_from_profile<S: Scalar>(p: &CommonNeighborProfile) -> Result<S> {
    let (num, den) = truncated_ratio(p, p.m_max().max(1))?;
    Ok(S::from_ratio(num, den))
}

fn require_diameter3(summary: &DistanceSummary) -> Result<()> {
    match summary.diameter {
        Diameter::Finite(3) => Ok(()),
        other => Err(Error::DiameterMismatch {
            found: other.to_string(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry<S> {
    pub value: S,
    pub direction: Direction,
    /// `(bound − ASPL)/ASPL` against the BFS value, when it is finite.
    pub relative_error: Option<S>,
}

/// Bounds, equality and gap for one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport<S> {
    pub n: usize,
    /// Common degree; `None` for irregular graphs (Moore bound and gap
    /// are then inapplicable).
    pub d: Option<usize>,
    pub t_values: BTreeMap<usize, u128>,
    pub bounds: BTreeMap<usize, BoundEntry<S>>,
    /// Equality value; `None` unless the diameter is 3.
    pub equality_aspl: Option<S>,
    pub exact_aspl: Option<S>,
    pub diameter: Diameter,
    pub diameter_verified: bool,
    pub moore: Option<S>,
    pub aspl_gap: Option<S>,
}

impl<S: Scalar> BoundsReport<S> {
    pub fn new(g: &Graph, t_max: usize) -> Result<Self> {
        let summary = distance_summary(g);
        let profile = CommonNeighborProfile::new(g);
        Self::from_parts(g, &summary, &profile, t_max)
    }

    pub fn from_parts(
        g: &Graph,
        summary: &DistanceSummary,
        profile: &CommonNeighborProfile,
        t_max: usize,
    ) -> Result<Self> {
        let n = g.order();
        let exact: Option<S> = summary.aspl();
        let diameter_verified = require_diameter3(summary).is_ok();

        let mut t_values = BTreeMap::new();
        for m in 1..=profile.m_max().max(t_max) {
            t_values.insert(m, profile.t_of_m(m)?);
        }
        let mut bounds = BTreeMap::new();
        for t in 1..=t_max {
            let b: Bound<S> = bound_from_profile(profile, t)?;
            let relative_error = exact.clone().map(|a| (b.value.clone() - a.clone()) / a);
            bounds.insert(
                t,
                BoundEntry {
                    value: b.value,
                    direction: b.direction,
                    relative_error,
                },
            );
        }
        let equality_aspl = if diameter_verified {
            Some(equality_from_profile(profile)?)
        } else {
            None
        };
        let d = g.regular_degree();
        let moore = d.map(|d| moore_bound::<S>(n, d));
        let aspl_gap = match (d, exact.clone()) {
            (Some(d), Some(a)) => Some(aspl_gap(a, n, d)),
            _ => None,
        };
        Ok(BoundsReport {
            n,
            d,
            t_values,
            bounds,
            equality_aspl,
            exact_aspl: exact,
            diameter: summary.diameter,
            diameter_verified,
            moore,
            aspl_gap,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, e).unwrap()
    }

    #[test]
    fn moore_values() {
        assert_eq!(moore_bound::<Rational>(13, 3), Rational::from_integer(2));
        let round4 = |x: f64| (x * 1e4).round() / 1e4;
        assert_eq!(round4(moore_bound::<f64>(10_000, 60)), 2.6340);
        assert_eq!(round4(moore_bound::<f64>(4096, 64)), 1.9841);
    }

    #[test]
    fn gap_values() {
        assert_eq!(aspl_gap::<f64>(moore_bound(100, 5), 100, 5), 0.0);
        let g = aspl_gap(2.6901f64, 10_000, 60);
        assert!((g - 21.31e-3).abs() < 0.005e-3, "{g}");
        let g = aspl_gap(2.3951f64, 4096, 60);
        assert!((g - 13.72e-2).abs() < 0.005e-2, "{g}");
    }

    #[test]
    fn c7_all_bounds_exact() {
        let c7 = Graph::new_base_regular(7, 2).unwrap();
        let two = Rational::from_integer(2);
        for t in 1..=3 {
            let b: Bound<Rational> = aspl_bound(&c7, t).unwrap();
            assert_eq!(b.value, two);
        }
        assert_eq!(aspl_equality::<Rational>(&c7).unwrap(), two);
        assert_eq!(
            aspl_bound::<f64>(&c7, 2).unwrap().direction,
            Direction::Upper
        );
        assert_eq!(
            aspl_bound::<f64>(&c7, 3).unwrap().direction,
            Direction::Lower
        );
    }

    #[test]
    fn first_bound_is_moore() {
        let g = crate::graph::random_regular(60, 7, 3).unwrap();
        let b: Bound<Rational> = aspl_bound(&g, 1).unwrap();
        assert_eq!(b.value, moore_bound::<Rational>(60, 7));
    }

    #[test]
    fn second_bound_matches_triangle_square_form() {
        let g = crate::graph::random_regular(60, 7, 3).unwrap();
        let p = CommonNeighborProfile::new(&g);
        let (tri, sq) = (p.triangles().unwrap() as i128, p.squares().unwrap() as i128);
        let expected = moore_bound::<Rational>(60, 7) + Rational::new(6 * tri + 4 * sq, 60 * 59);
        assert_eq!(aspl_bound::<Rational>(&g, 2).unwrap().value, expected);
    }

    #[test]
    fn petersen_is_rejected() {
        assert!(matches!(
            aspl_equality::<f64>(&petersen()),
            Err(Error::DiameterMismatch { .. })
        ));
        let r = BoundsReport::<f64>::new(&petersen(), 3).unwrap();
        assert!(!r.diameter_verified);
        assert_eq!(r.equality_aspl, None);
        assert_eq!(r.diameter, Diameter::Finite(2));
    }

    #[test]
    fn report_c7() {
        let r = BoundsReport::<f64>::new(&Graph::new_base_regular(7, 2).unwrap(), 3).unwrap();
        assert!(r.diameter_verified);
        assert_eq!(r.equality_aspl, Some(2.0));
        for t in 1..=3 {
            assert_eq!(r.bounds[&t].value, 2.0);
            assert_eq!(r.bounds[&t].relative_error, Some(0.0));
        }
        assert_eq!(r.t_values[&1], 14);
        let json = serde_json::to_value(&r).unwrap();
        for key in [
            "n",
            "d",
            "t_values",
            "equality_aspl",
            "bounds",
            "moore",
            "aspl_gap",
            "diameter_verified",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
    }
}
