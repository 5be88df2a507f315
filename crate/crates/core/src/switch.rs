//! The switch move: two edges are removed and their four endpoints rewired
//! so that every node keeps its degree.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Node};

/// Default number of rejected proposals before giving up.
pub const DEFAULT_MAX_ATTEMPTS: usize = 10_000;

/// Which pair of new edges replaces `({a,b}, {c,d})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rewire {
    /// Add `{a,c}` and `{b,d}`.
    AcBd,
    /// Add `{a,d}` and `{b,c}`.
    AdBc,
}

impl Rewire {
    pub const BOTH: [Rewire; 2] = [Rewire::AcBd, Rewire::AdBc];
}

/// A switch in canonical orientation: removes `{a,b}` (edge slot `first`)
/// and `{c,d}` (edge slot `second`), adds `{a,c}` into slot `first` and
/// `{b,d}` into slot `second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SwitchMove {
    pub first: usize,
    pub second: usize,
    a: Node,
    b: Node,
    c: Node,
    d: Node,
}

impl SwitchMove {
    /// Move on the edges stored at slots `first` and `second` of `g`.
    /// Not validated.
    pub fn on_edges(g: &Graph, first: usize, second: usize, rewire: Rewire) -> Self {
        let Edge { u: a, v: b } = g.edge(first);
        let Edge { u: c, v: d } = g.edge(second);
        let (c, d) = match rewire {
            Rewire::AcBd => (c, d),
            Rewire::AdBc => (d, c),
        };
        SwitchMove {
            first,
            second,
            a,
            b,
            c,
            d,
        }
    }

    /// `(a, b, c, d)` with removed `{a,b}`, `{c,d}` and added `{a,c}`, `{b,d}`.
    #[inline]
    pub fn nodes(&self) -> (Node, Node, Node, Node) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn removed(&self) -> [Edge; 2] {
        [Edge::new(self.a, self.b), Edge::new(self.c, self.d)]
    }

    pub fn added(&self) -> [Edge; 2] {
        [Edge::new(self.a, self.c), Edge::new(self.b, self.d)]
    }

    /// The move undoing this one once applied.
    pub fn inverse(&self) -> Self {
        SwitchMove {
            first: self.first,
            second: self.second,
            a: self.a,
            b: self.c,
            c: self.b,
            d: self.d,
        }
    }

    #[inline]
    pub fn has_distinct_nodes(&self) -> bool {
        let (a, b, c, d) = self.nodes();
        a != c && a != d && b != c && b != d
    }

    /// Four distinct endpoints, removed edges present in their slots, added
    /// edges absent.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let (a, b, c, d) = self.nodes();
        self.first != self.second
            && self.first < g.edge_count()
            && self.second < g.edge_count()
            && self.has_distinct_nodes()
            && g.edge(self.first) == Edge::new(a, b)
            && g.edge(self.second) == Edge::new(c, d)
            && !g.has_edge(a, c)
            && !g.has_edge(b, d)
    }
}

/// Draws a uniformly random valid switch, resampling invalid candidates up
/// to `max_attempts` times.
pub fn propose_switch<R: Rng + ?Sized>(
    g: &Graph,
    rng: &mut R,
    max_attempts: usize,
) -> Result<SwitchMove> {
    let m = g.edge_count();
    if m < 2 {
        return Err(Error::Saturated { attempts: 0 });
    }
    for _ in 0..max_attempts {
        let first = rng.gen_range(0..m);
        let mut second = rng.gen_range(0..m - 1);
        if second >= first {
            second += 1;
        }
        let rewire = if rng.gen_bool(0.5) {
            Rewire::AcBd
        } else {
            Rewire::AdBc
        };
        let mv = SwitchMove::on_edges(g, first, second, rewire);
        if mv.has_distinct_nodes() {
            let (a, b, c, d) = mv.nodes();
            if !g.has_edge(a, c) && !g.has_edge(b, d) {
                return Ok(mv);
            }
        }
    }
    Err(Error::Saturated {
        attempts: max_attempts,
    })
}
