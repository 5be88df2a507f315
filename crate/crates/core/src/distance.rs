//! Exact hop distances, ASPL and diameter via breadth-first search.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::graph::{Graph, Node};
use crate::scalar::Scalar;

/// Marks nodes not reachable from the BFS source.
pub const UNREACHABLE: u16 = u16::MAX;

/// Distances from `source` to every node; [`UNREACHABLE`] where no path exists.
pub fn bfs_distances(g: &Graph, source: Node) -> Vec<u16> {
    assert!((source as usize) < g.order(), "source out of range");
    let mut dist = vec![UNREACHABLE; g.order()];
    let mut queue = Vec::with_capacity(g.order());
    bfs_into(g, source, &mut dist, &mut queue, false);
    dist
}

/// BFS filling `dist` (which must be all [`UNREACHABLE`]). With `stop_early`
/// the search ends as soon as every node has been labelled, leaving the
/// labels exact but the remaining queue unexpanded. Returns the number of
/// labelled nodes.
fn bfs_into(
    g: &Graph,
    source: Node,
    dist: &mut [u16],
    queue: &mut Vec<Node>,
    stop_early: bool,
) -> usize {
    let n = g.order();
    queue.clear();
    dist[source as usize] = 0;
    queue.push(source);
    let mut head = 0;
    while head < queue.len() {
        if stop_early && queue.len() == n {
            break;
        }
        let v = queue[head];
        head += 1;
        let next = dist[v as usize] + 1;
        for &w in g.neighbors(v) {
            let slot = &mut dist[w as usize];
            if *slot == UNREACHABLE {
                *slot = next;
                queue.push(w);
            }
        }
    }
    queue.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u32(*d),
            Diameter::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// Pair counts by distance over all `n(n−1)/2` unordered pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceSummary {
    pub order: usize,
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
    /// Pairs at finite distance four or more.
    pub farther: u64,
    pub unreachable: u64,
    /// Sum of all finite pair distances.
    pub distance_sum: u64,
    pub diameter: Diameter,
}

impl DistanceSummary {
    pub fn pairs(&self) -> u64 {
        let n = self.order as u64;
        n * n.saturating_sub(1) / 2
    }

    pub fn unreachable_or_farther(&self) -> u64 {
        self.farther + self.unreachable
    }

    pub fn is_connected(&self) -> bool {
        self.unreachable == 0
    }

    /// Exact ASPL as `distance_sum / pairs`; `None` for disconnected graphs
    /// (infinite ASPL) or fewer than two nodes.
    pub fn aspl<S: Scalar>(&self) -> Option<S> {
        if !self.is_connected() || self.pairs() == 0 {
            return None;
        }
        Some(S::from_ratio(
            self.distance_sum as i128,
            self.pairs() as i128,
        ))
    }

    pub fn aspl_f64(&self) -> f64 {
        self.aspl::<f64>().unwrap_or(f64::INFINITY)
    }
}

struct Tally {
    dist: Vec<u16>,
    queue: Vec<Node>,
    by_distance: Vec<u64>,
    unreachable: u64,
}

impl Tally {
    fn new(n: usize) -> Self {
        Tally {
            dist: vec![UNREACHABLE; n],
            queue: Vec::with_capacity(n),
            by_distance: Vec::new(),
            unreachable: 0,
        }
    }

    fn add_source(mut self, g: &Graph, source: Node) -> Self {
        let reached = bfs_into(g, source, &mut self.dist, &mut self.queue, true);
        for &v in &self.queue {
            let d = self.dist[v as usize] as usize;
            if d >= self.by_distance.len() {
                self.by_distance.resize(d + 1, 0);
            }
            self.by_distance[d] += 1;
            self.dist[v as usize] = UNREACHABLE;
        }
        self.unreachable += (g.order() - reached) as u64;
        self
    }

    fn merge(mut self, other: Tally) -> Self {
        if other.by_distance.len() > self.by_distance.len() {
            self.by_distance.resize(other.by_distance.len(), 0);
        }
        for (acc, x) in self.by_distance.iter_mut().zip(other.by_distance) {
            *acc += x;
        }
        self.unreachable += other.unreachable;
        self
    }
}

/// All-pairs distance statistics; one BFS per source, run in parallel.
pub fn distance_summary(g: &Graph) -> DistanceSummary {
    let n = g.order();
    let tally = (0..n as Node)
        .into_par_iter()
        .fold(|| Tally::new(n), |t, s| t.add_source(g, s))
        .reduce(|| Tally::new(n), Tally::merge);

    // every unordered pair was seen from both ends
    let half: Vec<u64> = tally.by_distance.iter().map(|c| c / 2).collect();
    let at = |k: usize| half.get(k).copied().unwrap_or(0);
    let unreachable = tally.unreachable / 2;
    let distance_sum = half.iter().enumerate().map(|(k, c)| k as u64 * c).sum();
    let max_finite = half
        .iter()
        .rposition(|&c| c > 0)
        .filter(|&k| k > 0)
        .unwrap_or(0);
    let diameter = if unreachable > 0 {
        Diameter::Infinite
    } else {
        Diameter::Finite(max_finite as u32)
    };
    DistanceSummary {
        order: n,
        n1: at(1),
        n2: at(2),
        n3: at(3),
        farther: half.iter().skip(4).sum(),
        unreachable,
        distance_sum,
        diameter,
    }
}

pub fn diameter(g: &Graph) -> Diameter {
    distance_summary(g).diameter
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn cycle(n: usize) -> Graph {
        Graph::new_base_regular(n, 2).unwrap()
    }

    #[test]
    fn bfs_on_c7() {
        assert_eq!(bfs_distances(&cycle(7), 0), vec![0, 1, 2, 3, 3, 2, 1]);
    }

    #[test]
    fn bfs_on_k4() {
        let k4 = Graph::new_base_regular(4, 3).unwrap();
        assert_eq!(bfs_distances(&k4, 0), vec![0, 1, 1, 1]);
    }

    #[test]
    fn summary_c7() {
        let s = distance_summary(&cycle(7));
        assert_eq!((s.n1, s.n2, s.n3), (7, 7, 7));
        assert_eq!(s.unreachable_or_farther(), 0);
        assert_eq!(s.diameter, Diameter::Finite(3));
        assert_eq!(s.aspl::<Ratio<i128>>(), Some(Ratio::from_integer(2)));
        assert_eq!(s.aspl_f64(), 2.0);
    }

    #[test]
    fn summary_k4() {
        let s = distance_summary(&Graph::new_base_regular(4, 3).unwrap());
        assert_eq!(s.n1, 6);
        assert_eq!(s.aspl_f64(), 1.0);
        assert_eq!(s.diameter, Diameter::Finite(1));
    }

    #[test]
    fn summary_long_cycle_counts_farther() {
        let s = distance_summary(&cycle(10));
        assert_eq!(s.farther, 15);
        assert_eq!(s.diameter, Diameter::Finite(5));
        assert_eq!(s.n1 + s.n2 + s.n3 + s.unreachable_or_farther(), s.pairs());
    }

    #[test]
    fn disconnected_graph_has_no_aspl() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let s = distance_summary(&g);
        assert_eq!(s.unreachable, 9);
        assert_eq!(s.diameter, Diameter::Infinite);
        assert_eq!(s.aspl::<f64>(), None);
        assert!(s.aspl_f64().is_infinite());
        assert_eq!(bfs_distances(&g, 0)[4], UNREACHABLE);
    }
}
