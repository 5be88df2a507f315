//! Path-count tables for constant-time evaluation of switch moves.
//!
//! `t1[i][j]` is the adjacency indicator, `t2[i][j]` the number of `i`-`j`
//! paths of length 2 and `t3[i][j]` the number of simple `i`-`j` paths of
//! length 3 (four distinct nodes). Diagonal entries of `t2`/`t3` are not
//! maintained.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Node};
use crate::switch::SwitchMove;

/// Default order cap: three `i32` tables of 12 000² entries take ~1.7 GB.
pub const DEFAULT_MAX_ORDER: usize = 12_000;

/// Change of triangle count, square count and `g = 3△ + 2□` under a switch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SwitchDelta {
    pub d_triangle: i64,
    pub d_square: i64,
    pub d_g: i64,
}

impl SwitchDelta {
    fn new(d_triangle: i64, d_square: i64) -> Self {
        SwitchDelta {
            d_triangle,
            d_square,
            d_g: 3 * d_triangle + 2 * d_square,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct PathTables {
    order: usize,
    t1: Vec<i32>,
    t2: Vec<i32>,
    t3: Vec<i32>,
}

impl std::fmt::Debug for PathTables {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PathTables(order={})", self.order)
    }
}

impl PathTables {
    pub fn build(g: &Graph) -> Result<Self> {
        Self::build_with_cap(g, DEFAULT_MAX_ORDER)
    }

    /// Builds the tables by enumerating every simple path of length ≤ 3
    /// from every node; `O(n d³)`.
    pub fn build_with_cap(g: &Graph, max_order: usize) -> Result<Self> {
        let n = g.order();
        if n > max_order {
            return Err(Error::TooLarge {
                order: n,
                cap: max_order,
                what: "path tables",
            });
        }
        let mut t = PathTables {
            order: n,
            t1: vec![0; n * n],
            t2: vec![0; n * n],
            t3: vec![0; n * n],
        };
        for i in 0..n as Node {
            let row = i as usize * n;
            for &x in g.neighbors(i) {
                t.t1[row + x as usize] = 1;
                for &y in g.neighbors(x) {
                    if y == i {
                        continue;
                    }
                    t.t2[row + y as usize] += 1;
                    for &z in g.neighbors(y) {
                        if z != x && z != i {
                            t.t3[row + z as usize] += 1;
                        }
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn idx(&self, i: Node, j: Node) -> usize {
        i as usize * self.order + j as usize
    }

    #[inline]
    pub fn t1(&self, i: Node, j: Node) -> i32 {
        self.t1[self.idx(i, j)]
    }

    #[inline]
    pub fn t2(&self, i: Node, j: Node) -> i32 {
        debug_assert_ne!(i, j, "t2 diagonal is not maintained");
        self.t2[self.idx(i, j)]
    }

    #[inline]
    pub fn t3(&self, i: Node, j: Node) -> i32 {
        debug_assert_ne!(i, j, "t3 diagonal is not maintained");
        self.t3[self.idx(i, j)]
    }

    /// Contribution of an edge to `g`: `3·(triangles through it) +
    /// 2·(squares through it)`, i.e. `3·t2 + 2·t3` at its endpoints.
    #[inline]
    pub fn edge_key(&self, a: Node, b: Node) -> i64 {
        3 * self.t2(a, b) as i64 + 2 * self.t3(a, b) as i64
    }

    /// `O(1)` change in triangles, squares and `g` if `mv` were applied.
    #[inline]
    pub fn delta_eval(&self, mv: &SwitchMove) -> SwitchDelta {
        debug_assert!(mv.has_distinct_nodes());
        let (a, b, c, d) = mv.nodes();
        debug_assert!(self.t1(a, b) == 1 && self.t1(c, d) == 1);
        debug_assert!(self.t1(a, c) == 0 && self.t1(b, d) == 0);

        let t1_ad = self.t1(a, d) as i64;
        let t1_bc = self.t1(b, c) as i64;
        let d_triangle = -(self.t2(a, b) as i64) - self.t2(c, d) as i64
            + self.t2(a, c) as i64
            + self.t2(b, d) as i64
            - 2 * (t1_ad + t1_bc);
        let d_square = -(self.t3(a, b) as i64) - self.t3(c, d) as i64
            + self.t3(a, c) as i64
            + self.t3(b, d) as i64
            - 2 * (self.t2(a, d) as i64 + self.t2(b, c) as i64 - t1_ad * t1_bc);
        SwitchDelta::new(d_triangle, d_square)
    }

    /// Applies `mv` to `g` and updates the tables in `O(d²)`: the two
    /// removals, then the two additions, each as a single-edge update
    /// against the current intermediate graph.
    pub fn apply_switch(&mut self, g: &mut Graph, mv: &SwitchMove) {
        debug_assert!(mv.is_valid(g));
        let (a, b, c, d) = mv.nodes();
        self.remove_edge(g, a, b);
        self.remove_edge(g, c, d);
        self.add_edge(g, a, c);
        self.add_edge(g, b, d);
        g.commit_switch(mv);
    }

    fn remove_edge(&mut self, g: &mut Graph, a: Node, b: Node) {
        self.paths_through(g, a, b, -1);
        g.unlink(a, b);
        self.set_t1(a, b, 0);
    }

    fn add_edge(&mut self, g: &mut Graph, a: Node, b: Node) {
        g.link(a, b);
        self.set_t1(a, b, 1);
        self.paths_through(g, a, b, 1);
    }

    fn set_t1(&mut self, a: Node, b: Node, value: i32) {
        let (ab, ba) = (self.idx(a, b), self.idx(b, a));
        self.t1[ab] = value;
        self.t1[ba] = value;
    }

    #[inline]
    fn bump(table: &mut [i32], n: usize, i: Node, j: Node, by: i32) {
        table[i as usize * n + j as usize] += by;
        table[j as usize * n + i as usize] += by;
    }

    /// Adds `by` to every t2/t3 entry for paths of length 2 and 3 that use
    /// the edge `{a,b}`, which must be present in `g`.
    fn paths_through(&mut self, g: &Graph, a: Node, b: Node, by: i32) {
        let n = self.order;
        // length 2: a-b-y and b-a-x
        for &y in g.neighbors(b) {
            if y != a {
                Self::bump(&mut self.t2, n, a, y, by);
            }
        }
        for &x in g.neighbors(a) {
            if x != b {
                Self::bump(&mut self.t2, n, b, x, by);
            }
        }
        // length 3 with {a,b} in the middle: x-a-b-y
        for &x in g.neighbors(a) {
            if x == b {
                continue;
            }
            for &y in g.neighbors(b) {
                if y != a && y != x {
                    Self::bump(&mut self.t3, n, x, y, by);
                }
            }
        }
        // length 3 with {a,b} at an end: a-b-y-z and b-a-x-z
        for (s, t) in [(a, b), (b, a)] {
            for &y in g.neighbors(t) {
                if y == s {
                    continue;
                }
                for &z in g.neighbors(y) {
                    if z != t && z != s {
                        Self::bump(&mut self.t3, n, s, z, by);
                    }
                }
            }
        }
    }

    /// `g = 3△ + 2□` from the tables: `t2` over edges counts each
    /// triangle three times and `t3` over edges each square four times.
    pub fn objective(&self, g: &Graph) -> i64 {
        let (tri3, sq4) = g.edges().iter().fold((0i64, 0i64), |(t, s), e| {
            (t + self.t2(e.u, e.v) as i64, s + self.t3(e.u, e.v) as i64)
        });
        tri3 + sq4 / 2
    }

    /// Whether off-diagonal entries agree with `other`.
    pub fn same_entries(&self, other: &PathTables) -> bool {
        if self.order != other.order || self.t1 != other.t1 {
            return false;
        }
        let n = self.order;
        (0..n).all(|i| {
            (0..n).all(|j| {
                i == j
                    || (self.t2[i * n + j] == other.t2[i * n + j]
                        && self.t3[i * n + j] == other.t3[i * n + j])
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::switch::Rewire;

    fn two_triangles() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn c7_entries() {
        let t = PathTables::build(&Graph::new_base_regular(7, 2).unwrap()).unwrap();
        assert_eq!(t.t2(0, 2), 1);
        assert_eq!(t.t2(0, 1), 0);
        assert_eq!(t.t3(0, 3), 1);
        assert_eq!(t.t3(0, 1), 0);
        assert_eq!(t.t1(0, 1), 1);
        assert_eq!(t.t1(0, 2), 0);
    }

    #[test]
    fn k4_entries() {
        let t = PathTables::build(&Graph::new_base_regular(4, 3).unwrap()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert_eq!((t.t2(i, j), t.t3(i, j)), (2, 2));
                }
            }
        }
    }

    #[test]
    fn c6_two_antipodal_paths() {
        let t = PathTables::build(&Graph::new_base_regular(6, 2).unwrap()).unwrap();
        assert_eq!(t.t3(0, 3), 2);
    }

    #[test]
    fn two_triangles_move() {
        let mut g = two_triangles();
        let mut t = PathTables::build(&g).unwrap();
        assert_eq!(t.objective(&g), 6);
        // slot 0 = {0,1}, slot 3 = {3,4}
        let mv = SwitchMove::on_edges(&g, 0, 3, Rewire::AcBd);
        assert_eq!(mv.added(), [crate::Edge::new(0, 3), crate::Edge::new(1, 4)]);
        let delta = t.delta_eval(&mv);
        assert_eq!(
            delta,
            SwitchDelta {
                d_triangle: -2,
                d_square: 0,
                d_g: -6
            }
        );
        t.apply_switch(&mut g, &mv);
        // 0-2-1 survives the switch
        assert_eq!(t.t2(0, 1), 1);
        assert_eq!(t.t2(0, 4), 0);
        assert_eq!(t.t1(0, 3), 1);
        assert_eq!(t.objective(&g), 0);
        assert!(t.same_entries(&PathTables::build(&g).unwrap()));
    }

    #[test]
    fn apply_then_inverse_restores_tables() {
        let mut g = Graph::new_base_regular(6, 2).unwrap();
        let start = PathTables::build(&g).unwrap();
        let mut t = start.clone();
        // C6 built as slots {0,1},{1,2},{2,3},...; remove {0,1},{2,3}, add {0,2},{1,3}
        let mv = SwitchMove::on_edges(&g, 0, 2, Rewire::AcBd);
        assert!(mv.is_valid(&g));
        let fwd = t.delta_eval(&mv);
        t.apply_switch(&mut g, &mv);
        let back = t.delta_eval(&mv.inverse());
        assert_eq!(fwd.d_g + back.d_g, 0);
        t.apply_switch(&mut g, &mv.inverse());
        assert!(t.same_entries(&start));
    }

    #[test]
    fn size_guard() {
        let g = Graph::new_base_regular(20, 4).unwrap();
        assert!(matches!(
            PathTables::build_with_cap(&g, 10),
            Err(Error::TooLarge { .. })
        ));
    }
}
