//! Brute-force subgraph counting, used to validate the closed forms in
//! [`crate::motifs`].
//!
//! A pattern is embedded into the graph in every possible way by
//! backtracking; the distinct edge sets of the images are the subgraphs
//! isomorphic to the pattern.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, Node};
use crate::motifs::MotifCounts;

/// Default order cap for [`brute_force_motifs`].
pub const DEFAULT_MAX_ORDER: usize = 64;

/// Small pattern graph given by its edge list on nodes `0..order`.
#[derive(Debug, Clone)]
pub struct Pattern {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Pattern {
    /// `k`-multiple triangle: edge `{0,1}` plus `k` nodes adjacent to both.
    pub fn multiple_triangle(k: usize) -> Self {
        let mut edges = vec![(0, 1)];
        for v in 2..k + 2 {
            edges.push((0, v));
            edges.push((v, 1));
        }
        Pattern {
            order: k + 2,
            edges,
        }
    }

    /// `k`-multiple square: nodes `0`, `1` and `k+1` nodes adjacent to both.
    pub fn multiple_square(k: usize) -> Self {
        let mut edges = Vec::new();
        for v in 2..k + 3 {
            edges.push((0, v));
            edges.push((v, 1));
        }
        Pattern {
            order: k + 3,
            edges,
        }
    }

    /// Counts subgraphs of `g` isomorphic to this pattern.
    pub fn count_in(&self, g: &Graph) -> u128 {
        let order = self.visit_order();
        let mut earlier_neighbors = vec![Vec::new(); self.order];
        for (pos, &p) in order.iter().enumerate() {
            for &q in &order[..pos] {
                if self.adjacent(p, q) {
                    earlier_neighbors[p].push(q);
                }
            }
        }
        let mut search = Search {
            g,
            pattern: self,
            order: &order,
            earlier_neighbors: &earlier_neighbors,
            image: vec![Node::MAX; self.order],
            used: vec![false; g.order()],
            found: HashSet::new(),
        };
        search.extend(0);
        search.found.len() as u128
    }

    fn adjacent(&self, p: usize, q: usize) -> bool {
        self.edges
            .iter()
            .any(|&(x, y)| (x, y) == (p, q) || (y, x) == (p, q))
    }

    /// Placement order: repeatedly the unplaced node with most placed
    /// neighbours (ties: higher degree, then lower id), so every node after
    /// the first is constrained by an earlier one.
    fn visit_order(&self) -> Vec<usize> {
        let degree = |p: usize| (0..self.order).filter(|&q| self.adjacent(p, q)).count();
        let mut placed = vec![false; self.order];
        let mut order = Vec::with_capacity(self.order);
        while order.len() < self.order {
            let next = (0..self.order)
                .filter(|&p| !placed[p])
                .max_by_key(|&p| {
                    let links = order.iter().filter(|&&q| self.adjacent(p, q)).count();
                    (links, degree(p), std::cmp::Reverse(p))
                })
                .expect("unplaced node");
            placed[next] = true;
            order.push(next);
        }
        order
    }
}

struct Search<'a> {
    g: &'a Graph,
    pattern: &'a Pattern,
    order: &'a [usize],
    earlier_neighbors: &'a [Vec<usize>],
    image: Vec<Node>,
    used: Vec<bool>,
    found: HashSet<Vec<(Node, Node)>>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) {
        if depth == self.order.len() {
            let mut edges: Vec<(Node, Node)> = self
                .pattern
                .edges
                .iter()
                .map(|&(p, q)| {
                    let (a, b) = (self.image[p], self.image[q]);
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            self.found.insert(edges);
            return;
        }
        let p = self.order[depth];
        let candidates: Vec<Node> = match self.earlier_neighbors[p].first() {
            Some(&q) => self.g.neighbors(self.image[q]).to_vec(),
            None => (0..self.g.order() as Node).collect(),
        };
        for v in candidates {
            if self.used[v as usize] {
                continue;
            }
            let fits = self.earlier_neighbors[p]
                .iter()
                .all(|&q| self.g.has_edge(v, self.image[q]));
            if !fits {
                continue;
            }
            self.used[v as usize] = true;
            self.image[p] = v;
            self.extend(depth + 1);
            self.used[v as usize] = false;
        }
    }
}

/// Motif counts for `k = 1..=k_max` by explicit subgraph enumeration.
pub fn brute_force_motifs(g: &Graph, k_max: usize) -> Result<MotifCounts> {
    brute_force_motifs_with_cap(g, k_max, DEFAULT_MAX_ORDER)
}

pub fn brute_force_motifs_with_cap(
    g: &Graph,
    k_max: usize,
    max_order: usize,
) -> Result<MotifCounts> {
    if g.order() > max_order {
        return Err(Error::TooLarge {
            order: g.order(),
            cap: max_order,
            what: "brute-force motif counting",
        });
    }
    let mut k_triangles = BTreeMap::new();
    let mut k_squares = BTreeMap::new();
    for k in 1..=k_max.max(1) {
        k_triangles.insert(k, Pattern::multiple_triangle(k).count_in(g));
        k_squares.insert(k, Pattern::multiple_square(k).count_in(g));
    }
    let triangles = k_triangles[&1];
    let squares = k_squares[&1];
    k_triangles.retain(|&k, _| k <= k_max);
    k_squares.retain(|&k, _| k <= k_max);
    Ok(MotifCounts {
        triangles,
        squares,
        k_triangles,
        k_squares,
    })
}
