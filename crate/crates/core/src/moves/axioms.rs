//! Empirical check of the parity axioms along random move sequences.

use std::collections::BTreeMap;
use std::fmt;

use super::{Applied, MoveClass, MoveKind, RandomWalk, WalkConfig};
use crate::code::serialize_raw;
use crate::colouring::{generating_set, require_colourable, TwoColouring};
use crate::diagram::GaussDiagram;
use crate::error::Result;
use crate::parity::{two_colour_parity, Parity, ParityAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// Chords not involved in a move keep their parity.
    Untouched,
    /// The chord created or removed by R1 is even.
    R1Even,
    /// The two chords created or removed by R2 have equal parity.
    R2Equal,
    /// An R3 triangle never has exactly one odd chord.
    R3Weak,
    /// An R3 triangle never has three odd chords; checked for strong parities only.
    R3Strong,
    /// R3 does not change the parities of its chords.
    R3Preserved,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Untouched => "axiom 0 (untouched chords)",
            Axiom::R1Even => "axiom 1 (R1 chord even)",
            Axiom::R2Equal => "axiom 2 (R2 pair equal)",
            Axiom::R3Weak => "axiom 3 (R3 single odd chord)",
            Axiom::R3Strong => "strong parity (R3 all odd)",
            Axiom::R3Preserved => "axiom 3 (R3 parities preserved)",
        };
        f.write_str(s)
    }
}

/// A single failing move, enough to replay the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub step: usize,
    /// Gauss code of the diagram before the move, labels as the move uses them.
    pub before: String,
    pub kind: MoveKind,
    pub colouring: String,
    pub axiom: Axiom,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step {}: {} violated by `{}` on `{}` with colouring {}: {}",
            self.step, self.axiom, self.kind, self.before, self.colouring, self.detail
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub steps: usize,
    pub colourings_checked: usize,
    pub moves: BTreeMap<MoveClass, usize>,
    /// Histogram of odd-chord counts over every (R3 move, colouring) pair.
    pub r3_odd_counts: [usize; 4],
    pub violation: Option<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    pub fn merge(&mut self, other: &AxiomReport) {
        self.steps += other.steps;
        self.colourings_checked += other.colourings_checked;
        for (k, v) in &other.moves {
            *self.moves.entry(*k).or_default() += v;
        }
        for (a, b) in self.r3_odd_counts.iter_mut().zip(other.r3_odd_counts) {
            *a += b;
        }
        if self.violation.is_none() {
            self.violation = other.violation.clone();
        }
    }
}

pub type ParityFn<'a> = &'a dyn Fn(&GaussDiagram, &TwoColouring) -> Result<ParityAssignment>;

fn parity_of(p: &ParityAssignment, label: u32) -> Parity {
    p.get(label)
        .unwrap_or_else(|| panic!("parity scheme left chord {label} unassigned"))
}

/// Checks one move under every generating-set colouring of `before`, each
/// transported across the move. Records the first failure in `report`.
pub(crate) fn check_step(
    step: usize,
    before: &GaussDiagram,
    applied: &Applied,
    parity: ParityFn<'_>,
    strong: bool,
    report: &mut AxiomReport,
) -> Result<()> {
    report.steps += 1;
    *report.moves.entry(applied.kind.class()).or_default() += 1;
    if report.violation.is_some() {
        return Ok(());
    }
    let after = &applied.diagram;
    let untouched = applied.untouched();
    for c in generating_set(before.circles().len()).iter() {
        report.colourings_checked += 1;
        let p = parity(before, c)?;
        let q = parity(after, &applied.transport(c))?;
        let fail = |axiom: Axiom, detail: String| Violation {
            step,
            before: serialize_raw(before),
            kind: applied.kind,
            colouring: c.to_string(),
            axiom,
            detail,
        };

        if let Some(&l) = untouched.iter().find(|&&l| parity_of(&p, l) != parity_of(&q, l)) {
            report.violation = Some(fail(Axiom::Untouched, format!("chord {l} changed parity")));
            return Ok(());
        }
        let broken = match applied.kind {
            MoveKind::R1Delete { chord } => {
                (parity_of(&p, chord).is_odd()).then(|| fail(Axiom::R1Even, format!("removed chord {chord} is odd")))
            }
            MoveKind::R1Insert { .. } => {
                let l = applied.inserted[0];
                (parity_of(&q, l).is_odd()).then(|| fail(Axiom::R1Even, format!("inserted chord {l} is odd")))
            }
            MoveKind::R2Delete { chords: [a, b] } => (parity_of(&p, a) != parity_of(&p, b))
                .then(|| fail(Axiom::R2Equal, format!("removed chords {a}, {b} differ"))),
            MoveKind::R2Insert { .. } => {
                let (a, b) = (applied.inserted[0], applied.inserted[1]);
                (parity_of(&q, a) != parity_of(&q, b))
                    .then(|| fail(Axiom::R2Equal, format!("inserted chords {a}, {b} differ")))
            }
            MoveKind::R3 { .. } => {
                let odd = applied.involved.iter().filter(|&&l| parity_of(&p, l).is_odd()).count();
                report.r3_odd_counts[odd] += 1;
                if odd == 3 && strong {
                    Some(fail(Axiom::R3Strong, "all three chords odd".into()))
                } else if odd == 1 {
                    Some(fail(Axiom::R3Weak, "exactly one chord odd".into()))
                } else {
                    applied
                        .involved
                        .iter()
                        .find(|&&l| parity_of(&p, l) != parity_of(&q, l))
                        .map(|l| fail(Axiom::R3Preserved, format!("chord {l} changed parity")))
                }
            }
        };
        if broken.is_some() {
            report.violation = broken;
            return Ok(());
        }
    }
    Ok(())
}

/// Walks `cfg.steps` random moves from `d`, checking that the 2-colour parity
/// is a strong parity.
pub fn verify_parity_axioms(d: &GaussDiagram, cfg: &WalkConfig) -> Result<AxiomReport> {
    verify_parity_axioms_with(d, cfg, &two_colour_parity, true)
}

/// As [`verify_parity_axioms`] for an arbitrary parity scheme; all-odd R3
/// triangles are rejected only when `strong` is set. Stops at the first
/// violation.
pub fn verify_parity_axioms_with(
    d: &GaussDiagram,
    cfg: &WalkConfig,
    parity: ParityFn<'_>,
    strong: bool,
) -> Result<AxiomReport> {
    require_colourable(d)?;
    let mut walk = RandomWalk::new(d.clone(), cfg.seed, cfg.max_chords);
    let mut report = AxiomReport::default();
    for step in 0..cfg.steps {
        let before = walk.current().clone();
        let applied = walk.step();
        check_step(step, &before, &applied, parity, strong, &mut report)?;
        if report.violation.is_some() {
            break;
        }
    }
    Ok(report)
}
