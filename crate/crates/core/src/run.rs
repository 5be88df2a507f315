//! End-to-end optimizer runs and their JSON reports.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::anneal::{sa_run, SaConfig};
use crate::bounds::{aspl_gap, moore_bound};
use crate::distance::{distance_summary, Diameter, DistanceSummary};
use crate::error::Result;
use crate::graph::Graph;
use crate::ifi::{ifi_run, IfiConfig};
use crate::motifs::CommonNeighborProfile;
use crate::search::{PhaseReport, SearchState};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Ifi,
    Sa,
    /// Annealing followed by first improvement on its result.
    Pipeline,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    pub seed: u64,
    pub ifi: IfiConfig,
    pub sa: SaConfig,
    /// Include wall-clock time in the report (makes reports
    /// non-reproducible byte for byte).
    pub record_wall_time: bool,
}

impl RunConfig {
    pub fn new(algorithm: Algorithm, seed: u64) -> Self {
        RunConfig {
            algorithm,
            seed,
            ifi: IfiConfig::default(),
            sa: SaConfig::default(),
            record_wall_time: false,
        }
    }
}

/// Exact quality measures of one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub d: Option<usize>,
    /// `3△ + 2□`.
    pub g: i64,
    pub triangles: u128,
    pub squares: u128,
    pub aspl: Option<f64>,
    /// ASPL as an exact `numerator/denominator` string.
    pub aspl_exact: Option<String>,
    pub diameter: Diameter,
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
    pub moore: Option<f64>,
    pub aspl_gap: Option<f64>,
}

impl GraphStats {
    pub fn new(g: &Graph) -> Result<Self> {
        let summary = distance_summary(g);
        Self::with_summary(g, &summary)
    }

    pub fn with_summary(g: &Graph, summary: &DistanceSummary) -> Result<Self> {
        let profile = CommonNeighborProfile::new(g);
        let n = g.order();
        let d = g.regular_degree().filter(|_| n >= 2);
        let exact: Option<Rational> = summary.aspl();
        let aspl = summary.aspl::<f64>();
        let moore = d.map(|d| moore_bound::<f64>(n, d));
        if let (Some(a), Some(l), Diameter::Finite(3)) = (aspl, moore, summary.diameter) {
            debug_assert!(a >= l - 1e-12, "ASPL {a} below Moore bound {l}");
        }
        Ok(GraphStats {
            n,
            d,
            g: i64::try_from(profile.evaluation()?)
                .map_err(|_| crate::Error::Overflow("evaluation"))?,
            triangles: profile.triangles()?,
            squares: profile.squares()?,
            aspl,
            aspl_exact: exact.map(|r| format!("{}/{}", r.numer(), r.denom())),
            diameter: summary.diameter,
            n1: summary.n1,
            n2: summary.n2,
            n3: summary.n3,
            moore,
            aspl_gap: d.zip(aspl).map(|(d, a)| aspl_gap(a, n, d)),
        })
    }

    pub fn is_diameter3(&self) -> bool {
        self.diameter == Diameter::Finite(3)
    }
}

/// True iff the BFS diameter is exactly 3.
pub fn verify_diameter3(g: &Graph) -> bool {
    distance_summary(g).diameter == Diameter::Finite(3)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub seed: u64,
    pub config: RunConfig,
    pub initial: GraphStats,
    #[serde(rename = "final")]
    pub final_stats: GraphStats,
    pub initial_diameter3: bool,
    pub final_diameter3: bool,
    pub phases: Vec<PhaseReport>,
    pub wall_time_ms: Option<u64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Seed of the annealing random stream for a run seed.
fn anneal_seed(seed: u64) -> u64 {
    seed ^ 0x5A5A_1F1F_D00D_F00D
}

/// Optimizes `graph` as configured and returns the resulting graph with a
/// report. Identical inputs give identical outputs (apart from the
/// optional wall time).
pub fn optimize(graph: Graph, cfg: &RunConfig) -> Result<(Graph, RunReport)> {
    let start = Instant::now();
    let initial = GraphStats::new(&graph)?;
    let mut state = SearchState::new(graph)?;
    let mut phases = Vec::new();
    if matches!(cfg.algorithm, Algorithm::Sa | Algorithm::Pipeline) {
        let mut rng = ChaCha8Rng::seed_from_u64(anneal_seed(cfg.seed));
        phases.push(sa_run(&mut state, &cfg.sa, &mut rng)?);
    }
    if matches!(cfg.algorithm, Algorithm::Ifi | Algorithm::Pipeline) {
        phases.push(ifi_run(&mut state, &cfg.ifi)?);
    }
    let graph = state.into_graph();
    let final_stats = GraphStats::new(&graph)?;
    let report = RunReport {
        seed: cfg.seed,
        config: cfg.clone(),
        initial_diameter3: initial.is_diameter3(),
        final_diameter3: final_stats.is_diameter3(),
        initial,
        final_stats,
        phases,
        wall_time_ms: cfg
            .record_wall_time
            .then(|| start.elapsed().as_millis() as u64),
    };
    Ok((graph, report))
}
