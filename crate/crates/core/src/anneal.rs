//! Simulated annealing over random switches with the logarithmic schedule
//! `T(k) = c / ln(k + 1)`, where `k ≥ 1` counts evaluated neighbourhoods.

use std::time::{Duration, Instant};

use num_traits::Float;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::search::{PhaseReport, SearchState, StopReason, Trajectory};
use crate::switch::{propose_switch, DEFAULT_MAX_ATTEMPTS};

/// Default schedule constant `c`.
pub const DEFAULT_SCHEDULE_C: f64 = 11.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogSchedule<F> {
    pub c: F,
}

impl<F: Float> LogSchedule<F> {
    pub fn new(c: F) -> Self {
        assert!(c > F::zero(), "schedule constant must be positive");
        LogSchedule { c }
    }

    /// Temperature after `k ≥ 1` evaluations; strictly decreasing in `k`.
    pub fn temperature(&self, k: u64) -> F {
        assert!(k >= 1, "schedule is evaluated from k = 1");
        let k1 = F::from(k).expect("k representable") + F::one();
        self.c / k1.ln()
    }
}

/// Metropolis rule: always accept `delta_g ≤ 0`, otherwise accept with
/// probability `exp(−delta_g / temperature)`.
pub fn sa_acceptance<F: Float, R: Rng + ?Sized>(delta_g: i64, temperature: F, rng: &mut R) -> bool {
    debug_assert!(temperature > F::zero());
    if delta_g <= 0 {
        return true;
    }
    let delta = F::from(delta_g).expect("delta representable");
    let p = (-delta / temperature).exp().to_f64().unwrap_or(0.0);
    rng.gen::<f64>() < p
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SaConfig {
    pub schedule_c: f64,
    pub max_steps: u64,
    pub time_limit_secs: Option<f64>,
    pub max_attempts: usize,
    /// Recount `g` from scratch every this many accepted moves.
    pub recount_every: Option<u64>,
    pub trajectory_stride: u64,
    pub log_every: Option<u64>,
}

impl Default for SaConfig {
    fn default() -> Self {
        SaConfig {
            schedule_c: DEFAULT_SCHEDULE_C,
            max_steps: 1_000_000,
            time_limit_secs: None,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
            recount_every: None,
            trajectory_stride: 0,
            log_every: None,
        }
    }
}

/// Annealing bookkeeping. The best graph is copied lazily: only when a
/// move is about to leave a best state that has not been saved yet, which
/// yields the same result as copying on every strict improvement.
#[derive(Debug, Clone)]
pub struct AnnealState<F> {
    pub k: u64,
    pub temperature: F,
    pub current_g: i64,
    pub best_g: i64,
    best_edges: Option<Vec<Edge>>,
    best_is_current: bool,
}

impl<F: Float> AnnealState<F> {
    fn new(g: i64, schedule: &LogSchedule<F>) -> Self {
        AnnealState {
            k: 0,
            temperature: schedule.temperature(1),
            current_g: g,
            best_g: g,
            best_edges: None,
            best_is_current: true,
        }
    }
}

const TIME_CHECK_MASK: u64 = 0xFFF;

/// Runs annealing on `state` and leaves it holding the best graph seen.
pub fn sa_run<R: Rng + ?Sized>(
    state: &mut SearchState,
    cfg: &SaConfig,
    rng: &mut R,
) -> Result<PhaseReport> {
    let start = Instant::now();
    let deadline = cfg
        .time_limit_secs
        .map(|s| start + Duration::from_secs_f64(s));
    let schedule = LogSchedule::new(cfg.schedule_c);
    let initial_g = state.g();
    let mut anneal = AnnealState::new(initial_g, &schedule);
    let mut replacements = 0u64;
    let mut trajectory = Trajectory::new(cfg.trajectory_stride, 0, initial_g);

    let stop = loop {
        if anneal.k >= cfg.max_steps {
            break StopReason::EvaluationBudget;
        }
        if anneal.k & TIME_CHECK_MASK == 0 && deadline.is_some_and(|d| Instant::now() >= d) {
            break StopReason::TimeLimit;
        }
        let mv = match propose_switch(state.graph(), rng, cfg.max_attempts) {
            Ok(mv) => mv,
            Err(Error::Saturated { .. }) => break StopReason::Saturated,
            Err(e) => return Err(e),
        };
        anneal.k += 1;
        anneal.temperature = schedule.temperature(anneal.k);
        let delta = state.evaluate(&mv);
        if !sa_acceptance(delta.d_g, anneal.temperature, rng) {
            continue;
        }
        if delta.d_g >= 0 && anneal.best_is_current && anneal.current_g == anneal.best_g {
            anneal.best_edges = Some(state.graph().edges().to_vec());
        }
        state.apply(&mv, delta);
        replacements += 1;
        anneal.current_g = state.g();
        anneal.best_is_current = false;
        if anneal.current_g < anneal.best_g {
            anneal.best_g = anneal.current_g;
            anneal.best_is_current = true;
            trajectory.record(anneal.k, anneal.best_g);
        }
        if cfg
            .recount_every
            .is_some_and(|every| replacements.is_multiple_of(every))
        {
            state.check_objective()?;
        }
        if cfg
            .log_every
            .is_some_and(|every| anneal.k.is_multiple_of(every))
        {
            log::info!(
                "sa: k={} T={:.4} current_g={} best_g={}",
                anneal.k,
                anneal.temperature,
                anneal.current_g,
                anneal.best_g
            );
        }
        debug_assert!(anneal.best_g <= anneal.current_g);
    };

    if !anneal.best_is_current {
        let edges = anneal
            .best_edges
            .take()
            .expect("a best graph was saved before leaving it");
        let order = state.graph().order();
        let best = Graph::from_edges(order, edges.iter().map(|e| (e.u, e.v)))?;
        state.reset(best)?;
    }
    if cfg.recount_every.is_some() {
        state.check_objective()?;
    }
    debug_assert_eq!(state.g(), anneal.best_g);

    Ok(PhaseReport {
        algorithm: "sa",
        initial_g,
        final_g: state.g(),
        replacements,
        evaluations: anneal.k,
        stop,
        trajectory: trajectory.finish(anneal.k, anneal.best_g),
        final_temperature: (anneal.k > 0).then_some(anneal.temperature),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn schedule_values() {
        let s = LogSchedule::new(11.0f64);
        assert!((s.temperature(1) - 11.0 / 2f64.ln()).abs() < 1e-12);
        assert!((s.temperature(1) - 15.87).abs() < 0.01);
        let mut prev = s.temperature(1);
        for k in 2..1000 {
            let t = s.temperature(k);
            assert!(t < prev);
            prev = t;
        }
        let s32 = LogSchedule::new(11.0f32);
        assert!((s32.temperature(1) - 15.869_6).abs() < 1e-3);
    }

    #[test]
    fn acceptance_rule() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..1000 {
            assert!(sa_acceptance(0, 1e-9f64, &mut rng));
            assert!(sa_acceptance(-5, 0.5f64, &mut rng));
        }
        // vanishing temperature rejects any increase
        assert!((0..1000).all(|_| !sa_acceptance(1, 1e-6f64, &mut rng)));
    }

    #[test]
    fn zero_steps_is_identity() {
        let g = crate::graph::random_regular(50, 4, 2).unwrap();
        let mut s = SearchState::new(g.clone()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let cfg = SaConfig {
            max_steps: 0,
            ..SaConfig::default()
        };
        let r = sa_run(&mut s, &cfg, &mut rng).unwrap();
        assert_eq!(r.evaluations, 0);
        assert_eq!(s.graph().edges(), g.edges());
    }

    #[test]
    fn returns_best_seen_graph() {
        let g = crate::graph::random_regular(80, 6, 3).unwrap();
        let mut s = SearchState::new(g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let cfg = SaConfig {
            max_steps: 20_000,
            recount_every: Some(97),
            ..SaConfig::default()
        };
        let r = sa_run(&mut s, &cfg, &mut rng).unwrap();
        assert!(r.final_g <= r.initial_g);
        assert!(r.trajectory.windows(2).all(|w| w[1].best_g < w[0].best_g));
        assert_eq!(r.trajectory.last().unwrap().best_g, r.final_g);
        assert_eq!(crate::motifs::evaluation(s.graph()).unwrap(), r.final_g);
        assert_eq!(s.graph().regular_degree(), Some(6));
    }

    #[test]
    fn cold_schedule_never_worsens() {
        let g = crate::graph::random_regular(80, 6, 3).unwrap();
        let mut s = SearchState::new(g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let cfg = SaConfig {
            schedule_c: 1e-9,
            max_steps: 5_000,
            ..SaConfig::default()
        };
        let r = sa_run(&mut s, &cfg, &mut rng).unwrap();
        assert!(r.final_g < r.initial_g);
    }
}
