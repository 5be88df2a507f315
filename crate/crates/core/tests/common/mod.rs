#![allow(dead_code)]

use aspl_core::{distance_summary, random_regular, Diameter, Graph, Node};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph, possibly irregular and disconnected.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n as Node {
        for j in i + 1..n as Node {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random feasible `(n, d)` with `n ≤ max_n` and a randomized regular graph.
pub fn random_regular_small(max_n: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let n = rng.gen_range(8..=max_n);
        let d = rng.gen_range(2..=(n - 1).min(16));
        if n * d % 2 == 0 {
            return random_regular(n, d, rng.gen()).unwrap();
        }
    }
}

/// Random regular graph of diameter exactly 3 with `n ≤ max_n`; `(n, d)`
/// is drawn from the range where random graphs usually have diameter 3.
pub fn random_diameter3(max_n: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let n = rng.gen_range(10..=max_n);
        let lo = ((n as f64).cbrt().ceil() as usize).max(3);
        let hi = ((n as f64).sqrt().floor() as usize).max(lo);
        let d = rng.gen_range(lo..=hi);
        if n * d % 2 == 1 || d >= n {
            continue;
        }
        let g = random_regular(n, d, rng.gen()).unwrap();
        if distance_summary(&g).diameter == Diameter::Finite(3) {
            return g;
        }
    }
}

pub fn cycle(n: usize) -> Graph {
    Graph::new_base_regular(n, 2).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..n as Node {
        for j in i + 1..n as Node {
            e.push((i, j));
        }
    }
    Graph::from_edges(n, e).unwrap()
}

pub fn k23() -> Graph {
    Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, e).unwrap()
}

pub fn named_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("K4", complete(4)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("C7", cycle(7)),
        ("C8", cycle(8)),
        ("K2,3", k23()),
        ("Petersen", petersen()),
        ("K6", complete(6)),
    ]
}

/// `Σ_{m}(−1)^{m−1} T(m)` straight from the subset definition: for each
/// pair `{i,j}` and each `m`-subset `K` of `W = (V∖{i,j}) ∪ {0}`, count 1
/// when every witness in `K` holds (`0`: `{i,j}` is an edge; `k`: `i-k-j`
/// is a path). Returns `T(1..=n-1)`.
pub fn t_by_subsets(g: &Graph) -> Vec<u128> {
    let n = g.order();
    let mut t = vec![0u128; n.max(1)];
    for i in 0..n as Node {
        for j in i + 1..n as Node {
            // witnesses: index 0 is the direct edge, then the other nodes
            let mut w: Vec<bool> = vec![g.has_edge(i, j)];
            for k in 0..n as Node {
                if k != i && k != j {
                    w.push(g.has_edge(i, k) && g.has_edge(k, j));
                }
            }
            let size = w.len();
            for mask in 1u64..(1 << size) {
                let all = (0..size).filter(|b| mask >> b & 1 == 1).all(|b| w[b]);
                if all {
                    t[mask.count_ones() as usize] += 1;
                }
            }
        }
    }
    t
}

/// `3△ + 2□` by enumerating triples and 4-cycles directly.
pub fn evaluation_by_enumeration(g: &Graph) -> i64 {
    let n = g.order() as Node;
    let e = |a, b| g.has_edge(a, b);
    let mut tri = 0i64;
    let mut sq = 0i64;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if e(a, b) && e(b, c) && e(a, c) {
                    tri += 1;
                }
                for d in c + 1..n {
                    // the three 4-cycles on {a,b,c,d}
                    for [w, x, y, z] in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                        if e(w, x) && e(x, y) && e(y, z) && e(z, w) {
                            sq += 1;
                        }
                    }
                }
            }
        }
    }
    3 * tri + 2 * sq
}
