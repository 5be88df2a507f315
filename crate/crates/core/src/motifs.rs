//! Triangle, square and k-multiple motif counts, and the inclusion–exclusion
//! terms `T(m)`, all derived from common-neighbour counts.
//!
//! For a pair `{i,j}` let `c_ij = |N(i) ∩ N(j)|`. Then
//!
//! * `△ = (1/3) Σ_{edges} c_ij`, `□ = (1/2) Σ_{pairs} C(c_ij, 2)`;
//! * for `k ≥ 2`, `△⁽ᵏ⁾ = Σ_{edges} C(c_ij, k)` and
//!   `□⁽ᵏ⁾ = Σ_{pairs} C(c_ij, k+1)` (the sharing pair is unique);
//! * `T(m) = Σ_{pairs} [C(c_ij, m) + A_ij · C(c_ij, m−1)]`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Node};

/// Histograms of common-neighbour counts over all pairs and over edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonNeighborProfile {
    order: usize,
    edge_count: u64,
    /// `pairs[c]`: unordered pairs with exactly `c ≥ 1` common neighbours.
    pairs: Vec<u64>,
    /// `edges[c]`: edges whose endpoints share exactly `c ≥ 0` neighbours.
    edges: Vec<u64>,
}

impl CommonNeighborProfile {
    /// `O(n d²)` time, `O(n)` scratch space.
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut count = vec![0u32; n];
        let mut touched: Vec<Node> = Vec::new();
        let mut pairs = vec![0u64; 1];
        let mut edges = vec![0u64; 1];
        for i in 0..n as Node {
            for &x in g.neighbors(i) {
                for &y in g.neighbors(x) {
                    if y > i {
                        if count[y as usize] == 0 {
                            touched.push(y);
                        }
                        count[y as usize] += 1;
                    }
                }
            }
            for &y in &touched {
                let c = std::mem::take(&mut count[y as usize]) as usize;
                if c >= pairs.len() {
                    pairs.resize(c + 1, 0);
                }
                pairs[c] += 1;
                if g.has_edge(i, y) {
                    if c >= edges.len() {
                        edges.resize(c + 1, 0);
                    }
                    edges[c] += 1;
                }
            }
            touched.clear();
        }
        let with_common: u64 = edges.iter().sum();
        edges[0] = g.edge_count() as u64 - with_common;
        CommonNeighborProfile {
            order: n,
            edge_count: g.edge_count() as u64,
            pairs,
            edges,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    /// Largest common-neighbour count over all pairs.
    pub fn max_common(&self) -> usize {
        self.pairs.iter().rposition(|&x| x > 0).unwrap_or(0)
    }

    /// Largest `m` with possibly non-zero `T(m)`.
    pub fn m_max(&self) -> usize {
        if self.edge_count == 0 && self.max_common() == 0 {
            0
        } else {
            1 + self.max_common()
        }
    }

    fn weighted(hist: &[u64], k: usize) -> Result<u128> {
        hist.iter().enumerate().try_fold(0u128, |acc, (c, &cnt)| {
            let term = binomial(c as u64, k as u64)
                .and_then(|b| b.checked_mul(cnt as u128))
                .ok_or(Error::Overflow("motif count"))?;
            acc.checked_add(term).ok_or(Error::Overflow("motif count"))
        })
    }

    pub fn triangles(&self) -> Result<u128> {
        Ok(Self::weighted(&self.edges, 1)? / 3)
    }

    pub fn squares(&self) -> Result<u128> {
        Ok(Self::weighted(&self.pairs, 2)? / 2)
    }

    /// `△⁽ᵏ⁾` for `k ≥ 1`.
    pub fn k_triangles(&self, k: usize) -> Result<u128> {
        assert!(k >= 1, "multiplicity must be at least 1");
        if k == 1 {
            self.triangles()
        } else {
            Self::weighted(&self.edges, k)
        }
    }

    /// `□⁽ᵏ⁾` for `k ≥ 1`.
    pub fn k_squares(&self, k: usize) -> Result<u128> {
        assert!(k >= 1, "multiplicity must be at least 1");
        if k == 1 {
            self.squares()
        } else {
            Self::weighted(&self.pairs, k + 1)
        }
    }

    /// `3△ + 2□`.
    pub fn evaluation(&self) -> Result<u128> {
        self.t_of_m(2)
    }

    /// `T(m)` for `m ≥ 1`.
    pub fn t_of_m(&self, m: usize) -> Result<u128> {
        assert!(m >= 1, "T(m) is defined for m >= 1");
        let direct = Self::weighted(&self.pairs, m)?;
        let through_edge = Self::weighted(&self.edges, m - 1)?;
        direct
            .checked_add(through_edge)
            .ok_or(Error::Overflow("T(m)"))
    }

    /// `Σ_{m=1}^{t} (−1)^{m−1} T(m)`.
    pub fn alternating_sum(&self, t: usize) -> Result<i128> {
        (1..=t).try_fold(0i128, |acc, m| {
            let term = i128::try_from(self.t_of_m(m)?).map_err(|_| Error::Overflow("T(m)"))?;
            let next = if m % 2 == 1 {
                acc.checked_add(term)
            } else {
                acc.checked_sub(term)
            };
            next.ok_or(Error::Overflow("alternating sum"))
        })
    }

    /// The full alternating sum, which equals `n₁ + n₂`.
    pub fn full_alternating_sum(&self) -> Result<i128> {
        self.alternating_sum(self.m_max())
    }
}

/// `C(n, k)` with overflow checking; `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Triangle, square and k-multiple counts for `k = 1..=k_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MotifCounts {
    pub triangles: u128,
    pub squares: u128,
    pub k_triangles: BTreeMap<usize, u128>,
    pub k_squares: BTreeMap<usize, u128>,
}

impl MotifCounts {
    pub fn from_profile(p: &CommonNeighborProfile, k_max: usize) -> Result<Self> {
        let mut k_triangles = BTreeMap::new();
        let mut k_squares = BTreeMap::new();
        for k in 1..=k_max {
            k_triangles.insert(k, p.k_triangles(k)?);
            k_squares.insert(k, p.k_squares(k)?);
        }
        Ok(MotifCounts {
            triangles: p.triangles()?,
            squares: p.squares()?,
            k_triangles,
            k_squares,
        })
    }
}

pub fn count_triangles(g: &Graph) -> Result<u128> {
    CommonNeighborProfile::new(g).triangles()
}

pub fn count_squares(g: &Graph) -> Result<u128> {
    CommonNeighborProfile::new(g).squares()
}

/// `(△⁽ᵏ⁾, □⁽ᵏ⁾)`.
pub fn count_k_multiple(g: &Graph, k: usize) -> Result<(u128, u128)> {
    let p = CommonNeighborProfile::new(g);
    Ok((p.k_triangles(k)?, p.k_squares(k)?))
}

pub fn t_of_m(g: &Graph, m: usize) -> Result<u128> {
    CommonNeighborProfile::new(g).t_of_m(m)
}

/// `g = 3△ + 2□` recomputed from scratch.
pub fn evaluation(g: &Graph) -> Result<i64> {
    let v = CommonNeighborProfile::new(g).evaluation()?;
    i64::try_from(v).map_err(|_| Error::Overflow("evaluation"))
}
