//! Seeded random walks through Reidemeister moves.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::axioms::{check_step, AxiomReport};
use super::{apply, apply_kind, available_moves, insertion_sites, Applied, MoveFilter, MoveKind};
use crate::code::serialize_raw;
use crate::colouring::{require_colourable, TwoColouring};
use crate::diagram::{GaussDiagram, Sign};
use crate::error::Result;
use crate::parity::{naive_parity, project, two_colour_parity};
use crate::report::{report, WritheProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkConfig {
    pub steps: usize,
    pub seed: u64,
    /// Soft bound on the chord count; insertions thin out as it is approached.
    pub max_chords: usize,
}

/// A reproducible random walk. Each step either inserts (R1 or R2, with a
/// probability that falls linearly to zero at the chord bound) or picks
/// uniformly among the available R1/R2 deletions and R3 moves.
pub struct RandomWalk {
    current: GaussDiagram,
    rng: ChaCha8Rng,
    max_chords: usize,
}

impl RandomWalk {
    pub fn new(start: GaussDiagram, seed: u64, max_chords: usize) -> Self {
        RandomWalk {
            current: start,
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_chords: max_chords.max(1),
        }
    }

    pub fn current(&self) -> &GaussDiagram {
        &self.current
    }

    fn sign(&mut self) -> Sign {
        if self.rng.gen() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn random_insertion(&mut self, allow_r2: bool) -> MoveKind {
        let sites = insertion_sites(&self.current);
        let site = *sites.choose(&mut self.rng).expect("every component has a gap");
        if allow_r2 && self.rng.gen() {
            let other = *sites.choose(&mut self.rng).expect("every component has a gap");
            let (first, second) = if site <= other { (site, other) } else { (other, site) };
            MoveKind::R2Insert {
                first,
                second,
                first_over: self.rng.gen(),
                parallel: self.rng.gen(),
                sign: self.sign(),
            }
        } else {
            MoveKind::R1Insert {
                site,
                sign: self.sign(),
                over_first: self.rng.gen(),
            }
        }
    }

    /// Performs one move. If nothing reduces the diagram and it is already at
    /// the bound, an R1 insertion goes over it.
    pub fn step(&mut self) -> Applied {
        let k = self.current.chords().len();
        let p_insert = if k >= self.max_chords {
            0.0
        } else {
            (self.max_chords - k) as f64 / self.max_chords as f64
        };
        let reducing = available_moves(&self.current, MoveFilter::REDUCING);
        let applied = if reducing.is_empty() || self.rng.gen_bool(p_insert) {
            let kind = self.random_insertion(k + 2 <= self.max_chords);
            apply_kind(&self.current, kind)
        } else {
            let site = reducing.choose(&mut self.rng).expect("non-empty");
            apply(&self.current, site)
        }
        .expect("moves generated for the current diagram apply");
        self.current = applied.diagram.clone();
        applied
    }
}

/// The trajectory `[d, d1, ..., d_steps]`, each one move from its predecessor.
pub fn random_walk(d: &GaussDiagram, steps: usize, seed: u64, max_chords: usize) -> Vec<GaussDiagram> {
    let mut walk = RandomWalk::new(d.clone(), seed, max_chords);
    let mut out = Vec::with_capacity(steps + 1);
    out.push(d.clone());
    for _ in 0..steps {
        out.push(walk.step().diagram);
    }
    out
}

/// First step at which an invariant differed from the starting diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drift {
    pub step: usize,
    pub field: &'static str,
    pub diagram: String,
}

#[derive(Debug, Clone)]
pub struct TrialReport {
    pub seed: u64,
    /// Starting Gauss code, labels as the recorded moves use them.
    pub start: String,
    /// The moves performed, replayable with [`super::apply_move`] from `start`.
    pub moves: Vec<MoveKind>,
    pub two_colour: AxiomReport,
    pub naive: AxiomReport,
    pub drift: Option<Drift>,
    /// Projections (base colouring) taken along the trajectory, and how many
    /// of them came out with a degenerate component.
    pub projections: usize,
    pub degenerate_projections: usize,
    pub max_chords_seen: usize,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.two_colour.passed() && self.naive.passed() && self.drift.is_none()
    }
}

fn drift_field(a: &WritheProfile, b: &WritheProfile) -> Option<&'static str> {
    if a.j2 != b.j2 {
        Some("j2")
    } else if a.j2_self != b.j2_self {
        Some("j2_self")
    } else if a.naive != b.naive {
        Some("naive")
    } else if a.lk != b.lk {
        Some("lk")
    } else if a.ip_self != b.ip_self {
        Some("ip_self")
    } else {
        None
    }
}

/// One fuzz trajectory: checks the parity axioms at every move, strong for
/// the 2-colour parity and weak for the naive parity, and that the invariants
/// never move.
pub fn fuzz_trial(start: &GaussDiagram, cfg: &WalkConfig) -> Result<TrialReport> {
    require_colourable(start)?;
    let initial = report(start);
    let mut walk = RandomWalk::new(start.clone(), cfg.seed, cfg.max_chords);
    let naive = |d: &GaussDiagram, _: &TwoColouring| Ok(naive_parity(d));
    let base = TwoColouring::base(start.circles().len());
    let mut out = TrialReport {
        seed: cfg.seed,
        start: serialize_raw(start),
        moves: Vec::with_capacity(cfg.steps),
        two_colour: AxiomReport::default(),
        naive: AxiomReport::default(),
        drift: None,
        projections: 0,
        degenerate_projections: 0,
        max_chords_seen: start.chords().len(),
    };
    for step in 0..cfg.steps {
        let before = walk.current().clone();
        let applied = walk.step();
        out.moves.push(applied.kind);
        check_step(step, &before, &applied, &two_colour_parity, true, &mut out.two_colour)?;
        check_step(step, &before, &applied, &naive, false, &mut out.naive)?;

        let d = &applied.diagram;
        out.max_chords_seen = out.max_chords_seen.max(d.chords().len());
        if out.drift.is_none() {
            if let Some(field) = drift_field(&initial, &report(d)) {
                out.drift = Some(Drift {
                    step,
                    field,
                    diagram: serialize_raw(d),
                });
            }
        }
        let projected = project(d, &base)?;
        out.projections += 1;
        if !projected.circles().iter().all(|c| c.len() % 2 == 0) {
            out.degenerate_projections += 1;
        }
        if !out.passed() {
            break;
        }
    }
    Ok(out)
}
