//! Iterative first improvement with periodic edge sorting.
//!
//! Edges are sorted by descending `3△_e + 2□_e` and pairs are scanned as
//! `(e₁,e₂), (e₁,e₃), …, (e₁,e_m), (e₂,e₃), …`. For each pair both
//! rewirings are tried, `{a,c},{b,d}` first; the first strictly improving
//! one is applied and the scan continues with the next pair. Every
//! `sort_interval` replacements the edges are re-sorted and the scan
//! restarts from the front. A complete scan without a replacement means a
//! local optimum.

use std::cmp::Reverse;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::Result;
use crate::search::{PhaseReport, SearchState, StopReason, Trajectory};
use crate::switch::{Rewire, SwitchMove};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IfiConfig {
    pub sort_interval: u64,
    pub max_evaluations: Option<u64>,
    pub time_limit_secs: Option<f64>,
    /// Recount `g` from scratch every this many replacements.
    pub recount_every: Option<u64>,
    pub trajectory_stride: u64,
    /// Progress log interval in evaluations.
    pub log_every: Option<u64>,
}

impl Default for IfiConfig {
    fn default() -> Self {
        IfiConfig {
            sort_interval: 50,
            max_evaluations: None,
            time_limit_secs: None,
            recount_every: None,
            trajectory_stride: 0,
            log_every: None,
        }
    }
}

/// Scan position and sort bookkeeping.
#[derive(Debug, Clone)]
pub struct IfiState {
    /// Edge slots ordered by descending sort key.
    pub sorted_edges: Vec<usize>,
    pub replacements_since_sort: u64,
    pub pair_cursor: (usize, usize),
}

impl IfiState {
    fn sorted(state: &SearchState) -> Self {
        let g = state.graph();
        let keys: Vec<i64> = g
            .edges()
            .iter()
            .map(|e| state.tables().edge_key(e.u, e.v))
            .collect();
        let mut sorted_edges: Vec<usize> = (0..g.edge_count()).collect();
        // stable: ties keep slot order
        sorted_edges.sort_by_key(|&s| Reverse(keys[s]));
        IfiState {
            sorted_edges,
            replacements_since_sort: 0,
            pair_cursor: (0, 1),
        }
    }

    /// Moves to the next pair; `false` once the scan is complete.
    fn advance(&mut self) -> bool {
        let m = self.sorted_edges.len();
        let (p, q) = &mut self.pair_cursor;
        *q += 1;
        if *q >= m {
            *p += 1;
            *q = *p + 1;
        }
        *q < m
    }
}

const TIME_CHECK_MASK: u64 = 0xFFF;

pub fn ifi_run(state: &mut SearchState, cfg: &IfiConfig) -> Result<PhaseReport> {
    let start = Instant::now();
    let deadline = cfg
        .time_limit_secs
        .map(|s| start + Duration::from_secs_f64(s));
    let initial_g = state.g();
    let mut evaluations = 0u64;
    let mut replacements = 0u64;
    let mut trajectory = Trajectory::new(cfg.trajectory_stride, 0, initial_g);
    let sort_interval = cfg.sort_interval.max(1);

    let mut scan = IfiState::sorted(state);
    let mut improved_this_scan = false;
    let mut in_range = scan.sorted_edges.len() >= 2;

    let stop = 'search: loop {
        if !in_range {
            if !improved_this_scan {
                break StopReason::LocalOptimum;
            }
            scan = IfiState::sorted(state);
            improved_this_scan = false;
            in_range = true;
            continue;
        }
        let (p, q) = scan.pair_cursor;
        let (first, second) = (scan.sorted_edges[p], scan.sorted_edges[q]);
        for rewire in Rewire::BOTH {
            let mv = SwitchMove::on_edges(state.graph(), first, second, rewire);
            if !mv.has_distinct_nodes() {
                break;
            }
            let (a, b, c, d) = mv.nodes();
            let t = state.tables();
            if t.t1(a, c) != 0 || t.t1(b, d) != 0 {
                continue;
            }
            if cfg.max_evaluations.is_some_and(|cap| evaluations >= cap) {
                break 'search StopReason::EvaluationBudget;
            }
            if evaluations & TIME_CHECK_MASK == 0 && deadline.is_some_and(|d| Instant::now() >= d) {
                break 'search StopReason::TimeLimit;
            }
            evaluations += 1;
            if cfg
                .log_every
                .is_some_and(|every| evaluations.is_multiple_of(every))
            {
                log::info!(
                    "ifi: evaluations={evaluations} replacements={replacements} g={}",
                    state.g()
                );
            }
            let delta = state.evaluate(&mv);
            if delta.d_g < 0 {
                state.apply(&mv, delta);
                replacements += 1;
                scan.replacements_since_sort += 1;
                improved_this_scan = true;
                trajectory.record(evaluations, state.g());
                if cfg
                    .recount_every
                    .is_some_and(|every| replacements.is_multiple_of(every))
                {
                    state.check_objective()?;
                }
                break;
            }
        }
        if scan.replacements_since_sort >= sort_interval {
            scan = IfiState::sorted(state);
            improved_this_scan = false;
            in_range = scan.sorted_edges.len() >= 2;
            continue;
        }
        in_range = scan.advance();
    };

    if cfg.recount_every.is_some() {
        state.check_objective()?;
    }
    Ok(PhaseReport {
        algorithm: "ifi",
        initial_g,
        final_g: state.g(),
        replacements,
        evaluations,
        stop,
        trajectory: trajectory.finish(evaluations, state.g()),
        final_temperature: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn zero_objective_needs_no_work() {
        let mut s = SearchState::new(Graph::new_base_regular(7, 2).unwrap()).unwrap();
        let r = ifi_run(&mut s, &IfiConfig::default()).unwrap();
        assert_eq!(r.replacements, 0);
        assert_eq!(r.stop, StopReason::LocalOptimum);
        assert_eq!(r.final_g, 0);
    }

    #[test]
    fn two_triangles_become_a_hexagon() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let mut s = SearchState::new(g).unwrap();
        assert_eq!(s.g(), 6);
        let cfg = IfiConfig {
            recount_every: Some(1),
            ..IfiConfig::default()
        };
        let r = ifi_run(&mut s, &cfg).unwrap();
        assert_eq!(r.final_g, 0);
        assert_eq!(r.replacements, 1);
        assert_eq!(r.stop, StopReason::LocalOptimum);
        let summary = crate::distance::distance_summary(s.graph());
        assert!(summary.is_connected());
        assert_eq!(s.graph().regular_degree(), Some(2));
    }

    #[test]
    fn complete_graph_is_a_local_optimum() {
        let mut s = SearchState::new(Graph::new_base_regular(4, 3).unwrap()).unwrap();
        let r = ifi_run(&mut s, &IfiConfig::default()).unwrap();
        assert_eq!((r.evaluations, r.replacements), (0, 0));
        assert_eq!(r.stop, StopReason::LocalOptimum);
    }

    #[test]
    fn monotone_and_consistent() {
        let g = crate::graph::random_regular(120, 8, 5).unwrap();
        let mut s = SearchState::new(g).unwrap();
        let cfg = IfiConfig {
            recount_every: Some(7),
            sort_interval: 5,
            ..IfiConfig::default()
        };
        let r = ifi_run(&mut s, &cfg).unwrap();
        assert!(r.final_g < r.initial_g);
        assert_eq!(r.trajectory.len() as u64, r.replacements + 1);
        assert!(r.trajectory.windows(2).all(|w| w[1].best_g < w[0].best_g));
        assert_eq!(r.stop, StopReason::LocalOptimum);
        s.graph().check_invariants().unwrap();
        assert_eq!(s.graph().regular_degree(), Some(8));
    }

    #[test]
    fn evaluation_budget_is_respected() {
        let g = crate::graph::random_regular(100, 6, 1).unwrap();
        let mut s = SearchState::new(g).unwrap();
        let cfg = IfiConfig {
            max_evaluations: Some(1000),
            ..IfiConfig::default()
        };
        let r = ifi_run(&mut s, &cfg).unwrap();
        assert_eq!(r.evaluations, 1000);
        assert_eq!(r.stop, StopReason::EvaluationBudget);
    }
}
