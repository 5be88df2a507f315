//! State shared by the local-search optimizers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::motifs::evaluation;
use crate::switch::SwitchMove;
use crate::tables::{PathTables, SwitchDelta};

/// A graph, its path tables and its current `g = 3△ + 2□`.
///
/// One optimizer owns a state exclusively; states are `Send` and may move
/// between threads between steps.
#[derive(Debug, Clone)]
pub struct SearchState {
    graph: Graph,
    tables: PathTables,
    g: i64,
}

impl SearchState {
    pub fn new(graph: Graph) -> Result<Self> {
        let tables = PathTables::build(&graph)?;
        let g = tables.objective(&graph);
        Ok(SearchState { graph, tables, g })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tables(&self) -> &PathTables {
        &self.tables
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Current value of `3△ + 2□`.
    pub fn g(&self) -> i64 {
        self.g
    }

    #[inline]
    pub fn evaluate(&self, mv: &SwitchMove) -> SwitchDelta {
        self.tables.delta_eval(mv)
    }

    pub fn apply(&mut self, mv: &SwitchMove, delta: SwitchDelta) {
        self.tables.apply_switch(&mut self.graph, mv);
        self.g += delta.d_g;
    }

    /// Replaces the graph, rebuilding the tables.
    pub fn reset(&mut self, graph: Graph) -> Result<()> {
        *self = SearchState::new(graph)?;
        Ok(())
    }

    /// Compares the tracked `g` with a from-scratch recount.
    pub fn check_objective(&self) -> Result<()> {
        let fresh = evaluation(&self.graph)?;
        if fresh != self.g {
            return Err(Error::Invariant(format!(
                "tracked g = {} but recount gives {fresh}",
                self.g
            )));
        }
        if let Some(d) = self.graph.regular_degree() {
            debug_assert_eq!(self.graph.edge_count() * 2, self.graph.order() * d);
        }
        Ok(())
    }
}

/// Why an optimizer phase stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    LocalOptimum,
    EvaluationBudget,
    TimeLimit,
    /// No valid switch could be proposed.
    Saturated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrajectoryPoint {
    pub evaluations: u64,
    pub best_g: i64,
}

/// Records improvements of the best `g`, thinned to at most one point per
/// `stride` evaluations (`0` keeps every improvement).
#[derive(Debug, Clone)]
pub(crate) struct Trajectory {
    stride: u64,
    points: Vec<TrajectoryPoint>,
}

impl Trajectory {
    pub(crate) fn new(stride: u64, evaluations: u64, g: i64) -> Self {
        Trajectory {
            stride,
            points: vec![TrajectoryPoint {
                evaluations,
                best_g: g,
            }],
        }
    }

    pub(crate) fn record(&mut self, evaluations: u64, best_g: i64) {
        let last = self.points.last().expect("non-empty");
        if self.stride == 0 || evaluations >= last.evaluations + self.stride {
            self.points.push(TrajectoryPoint {
                evaluations,
                best_g,
            });
        }
    }

    pub(crate) fn finish(mut self, evaluations: u64, best_g: i64) -> Vec<TrajectoryPoint> {
        let last = *self.points.last().expect("non-empty");
        if last.best_g != best_g {
            self.points.push(TrajectoryPoint {
                evaluations,
                best_g,
            });
        }
        self.points
    }
}

/// Summary of one optimizer phase.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseReport {
    pub algorithm: &'static str,
    pub initial_g: i64,
    pub final_g: i64,
    /// Moves applied to the current graph.
    pub replacements: u64,
    /// Neighbourhoods evaluated.
    pub evaluations: u64,
    pub stop: StopReason,
    pub trajectory: Vec<TrajectoryPoint>,
    /// Temperature at the last evaluation (annealing only).
    pub final_temperature: Option<f64>,
}
