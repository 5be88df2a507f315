//! Simple undirected graphs with dense node ids, plus regular-graph generation.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::switch::{propose_switch, SwitchMove, DEFAULT_MAX_ATTEMPTS};

pub type Node = u32;

/// Largest supported order. Keeps the membership bit matrix at most 512 MiB
/// and lets distances fit in `u16`.
pub const MAX_ORDER: usize = u16::MAX as usize;

/// Undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: Node,
    pub v: Node,
}

impl Edge {
    pub fn new(a: Node, b: Node) -> Self {
        debug_assert_ne!(a, b, "self-loop");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Square bit matrix giving O(1) edge membership.
#[derive(Clone, PartialEq, Eq)]
struct BitMatrix {
    order: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(order: usize) -> Self {
        let words_per_row = order.div_ceil(64);
        BitMatrix {
            order,
            words_per_row,
            bits: vec![0; words_per_row * order],
        }
    }

    #[inline]
    fn slot(&self, i: Node, j: Node) -> (usize, u64) {
        let (i, j) = (i as usize, j as usize);
        (i * self.words_per_row + j / 64, 1u64 << (j % 64))
    }

    #[inline]
    fn get(&self, i: Node, j: Node) -> bool {
        let (w, m) = self.slot(i, j);
        self.bits[w] & m != 0
    }

    #[inline]
    fn set(&mut self, i: Node, j: Node, on: bool) {
        for (x, y) in [(i, j), (j, i)] {
            let (w, m) = self.slot(x, y);
            if on {
                self.bits[w] |= m;
            } else {
                self.bits[w] &= !m;
            }
        }
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix({}x{})", self.order, self.order)
    }
}

/// Mutable simple undirected graph on nodes `0..order`.
///
/// Adjacency lists, the edge list and the membership matrix are kept
/// mutually consistent by every public operation. Graphs built by
/// [`Graph::new_base_regular`] or [`randomize`] are regular and switches
/// preserve every node degree; graphs read from files may be irregular,
/// see [`Graph::regular_degree`].
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<Node>>,
    edges: Vec<Edge>,
    matrix: BitMatrix,
}

impl PartialEq for Graph {
    /// Equal edge sets on the same node set.
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.matrix == other.matrix
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an explicit edge list, rejecting self-loops,
    /// duplicates and out-of-range endpoints.
    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (Node, Node)>) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for (a, b) in edges {
            if a as usize >= order || b as usize >= order {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{a},{b}}} out of range for order {order}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at node {a}")));
            }
            if g.has_edge(a, b) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {}",
                    Edge::new(a, b)
                )));
            }
            g.link(a, b);
            g.edges.push(Edge::new(a, b));
        }
        Ok(g)
    }

    fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::TooLarge {
                order,
                cap: MAX_ORDER,
                what: "graphs",
            });
        }
        Ok(Graph {
            adj: vec![Vec::new(); order],
            edges: Vec::new(),
            matrix: BitMatrix::new(order),
        })
    }

    /// Deterministic circulant `d`-regular graph: node `i` is joined to
    /// `i ± 1, …, i ± ⌊d/2⌋ (mod n)` and, for odd `d`, to `i + n/2`.
    pub fn new_base_regular(order: usize, degree: usize) -> Result<Self> {
        check_feasible(order, degree)?;
        let n = order;
        let mut edges = Vec::with_capacity(n * degree / 2);
        for offset in 1..=degree / 2 {
            for i in 0..n {
                edges.push((i as Node, ((i + offset) % n) as Node));
            }
        }
        if degree % 2 == 1 {
            for i in 0..n / 2 {
                edges.push((i as Node, (i + n / 2) as Node));
            }
        }
        Graph::from_edges(n, edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    #[inline]
    pub fn neighbors(&self, v: Node) -> &[Node] {
        &self.adj[v as usize]
    }

    #[inline]
    pub fn degree(&self, v: Node) -> usize {
        self.adj[v as usize].len()
    }

    #[inline]
    pub fn has_edge(&self, a: Node, b: Node) -> bool {
        self.matrix.get(a, b)
    }

    /// Common degree if every node has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == first).then_some(first)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Replaces `{a,b}`, `{c,d}` by `{a,c}`, `{b,d}`. The move must be valid
    /// for this graph (see [`SwitchMove::is_valid`]).
    pub fn apply_switch(&mut self, mv: &SwitchMove) {
        debug_assert!(mv.is_valid(self), "invalid switch {mv:?}");
        let (a, b, c, d) = mv.nodes();
        self.unlink(a, b);
        self.unlink(c, d);
        self.link(a, c);
        self.link(b, d);
        self.commit_switch(mv);
    }

    /// Edge-list bookkeeping for a switch whose links were already changed.
    pub(crate) fn commit_switch(&mut self, mv: &SwitchMove) {
        let (a, b, c, d) = mv.nodes();
        self.edges[mv.first] = Edge::new(a, c);
        self.edges[mv.second] = Edge::new(b, d);
        debug_assert!(self.check_switched_nodes(mv));
    }

    pub(crate) fn link(&mut self, a: Node, b: Node) {
        debug_assert!(!self.has_edge(a, b));
        self.adj[a as usize].push(b);
        self.adj[b as usize].push(a);
        self.matrix.set(a, b, true);
    }

    pub(crate) fn unlink(&mut self, a: Node, b: Node) {
        debug_assert!(self.has_edge(a, b));
        remove_neighbor(&mut self.adj[a as usize], b);
        remove_neighbor(&mut self.adj[b as usize], a);
        self.matrix.set(a, b, false);
    }

    fn check_switched_nodes(&self, mv: &SwitchMove) -> bool {
        let (a, b, c, d) = mv.nodes();
        let e1 = self.edges[mv.first];
        let e2 = self.edges[mv.second];
        self.has_edge(a, c)
            && self.has_edge(b, d)
            && !self.has_edge(a, b)
            && !self.has_edge(c, d)
            && e1 == Edge::new(a, c)
            && e2 == Edge::new(b, d)
    }

    /// Full consistency check of adjacency, edge list and membership.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.order();
        let mut seen = BitMatrix::new(n);
        for e in &self.edges {
            if e.u >= e.v || e.v as usize >= n {
                return Err(Error::InvalidGraph(format!("malformed edge {e}")));
            }
            if seen.get(e.u, e.v) {
                return Err(Error::InvalidGraph(format!("duplicate edge {e}")));
            }
            seen.set(e.u, e.v, true);
        }
        if seen != self.matrix {
            return Err(Error::InvalidGraph(
                "membership disagrees with edge list".into(),
            ));
        }
        let mut degree_sum = 0;
        for (v, nbrs) in self.adj.iter().enumerate() {
            degree_sum += nbrs.len();
            for &w in nbrs {
                if !self.matrix.get(v as Node, w) {
                    return Err(Error::InvalidGraph(format!(
                        "adjacency of {v} lists {w} but no such edge"
                    )));
                }
            }
        }
        if degree_sum != 2 * self.edges.len() {
            return Err(Error::InvalidGraph(
                "adjacency disagrees with edge list".into(),
            ));
        }
        Ok(())
    }
}

fn remove_neighbor(list: &mut Vec<Node>, x: Node) {
    let pos = list.iter().position(|&y| y == x).expect("neighbor present");
    list.swap_remove(pos);
}

/// Checks that a `degree`-regular graph of order `order` can exist and be
/// built by [`Graph::new_base_regular`].
pub fn check_feasible(order: usize, degree: usize) -> Result<()> {
    let fail = |reason| {
        Err(Error::Infeasible {
            order,
            degree,
            reason,
        })
    };
    if degree < 2 {
        return fail("degree must be at least 2");
    }
    if order <= degree {
        return fail("order must exceed the degree");
    }
    if order * degree % 2 == 1 {
        return fail("order times degree must be even");
    }
    if order > MAX_ORDER {
        return Err(Error::TooLarge {
            order,
            cap: MAX_ORDER,
            what: "graphs",
        });
    }
    Ok(())
}

/// Default number of randomizing switches: ten per edge.
pub fn default_rounds(g: &Graph) -> usize {
    10 * g.edge_count()
}

/// Applies `rounds` uniformly random valid switches, seeded by `seed`.
///
/// Stops early if the graph admits no valid switch at all (for example K4),
/// returning the graph unchanged from that point.
pub fn randomize(mut g: Graph, rounds: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..rounds {
        match propose_switch(&g, &mut rng, DEFAULT_MAX_ATTEMPTS) {
            Ok(mv) => g.apply_switch(&mv),
            Err(_) => break,
        }
    }
    g
}

/// Circulant base graph randomized with the default number of rounds.
pub fn random_regular(order: usize, degree: usize, seed: u64) -> Result<Graph> {
    let g = Graph::new_base_regular(order, degree)?;
    let rounds = default_rounds(&g);
    Ok(randomize(g, rounds, seed))
}
