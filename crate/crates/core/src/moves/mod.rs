//! Classical Reidemeister moves on Gauss diagrams.
//!
//! Virtual and detour moves do not change a Gauss diagram, so only R1, R2 and
//! R3 are represented. Surviving chords keep their labels across every move;
//! inserted chords get fresh labels above the current maximum.

mod axioms;
pub mod catalogue;
mod walk;

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::colouring::TwoColouring;
use crate::diagram::{Chord, GaussDiagram, Role, Sign, Slot, Token};
use crate::error::{Error, Result};

pub use axioms::{verify_parity_axioms, verify_parity_axioms_with, Axiom, AxiomReport, ParityFn, Violation};
pub use catalogue::{R3Pattern, R3_CATALOGUE};
pub use walk::{fuzz_trial, random_walk, Drift, RandomWalk, TrialReport, WalkConfig};

/// A gap between consecutive endpoints of a component; `gap` is the index of
/// the endpoint the insertion goes in front of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    pub component: usize,
    pub gap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// Adds a kink: two adjacent endpoints of a new chord.
    R1Insert {
        site: Site,
        sign: Sign,
        over_first: bool,
    },
    R1Delete {
        chord: u32,
    },
    /// Adds a bigon between the strands at `first` and `second`. The first
    /// strand meets chord A then chord B; the second meets them in the same
    /// order when `parallel`, reversed otherwise. Chord A has `sign`, chord B
    /// the opposite. When both sites coincide the first strand comes first.
    R2Insert {
        first: Site,
        second: Site,
        first_over: bool,
        parallel: bool,
        sign: Sign,
    },
    R2Delete {
        chords: [u32; 2],
    },
    /// Swaps the endpoint order on each of the three strands of a triangle.
    R3 {
        top_middle: u32,
        top_bottom: u32,
        middle_bottom: u32,
    },
}

impl MoveKind {
    pub fn class(&self) -> MoveClass {
        match self {
            MoveKind::R1Insert { .. } => MoveClass::R1Insert,
            MoveKind::R1Delete { .. } => MoveClass::R1Delete,
            MoveKind::R2Insert { .. } => MoveClass::R2Insert,
            MoveKind::R2Delete { .. } => MoveClass::R2Delete,
            MoveKind::R3 { .. } => MoveClass::R3,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |s: &Sign| s.as_char();
        match self {
            MoveKind::R1Insert {
                site,
                sign: s,
                over_first,
            } => write!(
                f,
                "R1+ component={} gap={} sign={} first={}",
                site.component,
                site.gap,
                sign(s),
                if *over_first { 'O' } else { 'U' }
            ),
            MoveKind::R1Delete { chord } => write!(f, "R1- chord={chord}"),
            MoveKind::R2Insert {
                first,
                second,
                first_over,
                parallel,
                sign: s,
            } => write!(
                f,
                "R2+ first={}:{} second={}:{} first={} {} sign={}",
                first.component,
                first.gap,
                second.component,
                second.gap,
                if *first_over { 'O' } else { 'U' },
                if *parallel { "parallel" } else { "antiparallel" },
                sign(s)
            ),
            MoveKind::R2Delete { chords } => write!(f, "R2- chords={},{}", chords[0], chords[1]),
            MoveKind::R3 {
                top_middle,
                top_bottom,
                middle_bottom,
            } => {
                write!(f, "R3 chords={top_middle},{top_bottom},{middle_bottom}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveClass {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
}

/// Which move classes to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveFilter {
    pub r1_insert: bool,
    pub r1_delete: bool,
    pub r2_insert: bool,
    pub r2_delete: bool,
    pub r3: bool,
}

impl MoveFilter {
    pub const ALL: MoveFilter = MoveFilter {
        r1_insert: true,
        r1_delete: true,
        r2_insert: true,
        r2_delete: true,
        r3: true,
    };

    /// Moves that do not add chords.
    pub const REDUCING: MoveFilter = MoveFilter {
        r1_insert: false,
        r1_delete: true,
        r2_insert: false,
        r2_delete: true,
        r3: true,
    };
}

/// A move validated against one particular diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MoveSite {
    kind: MoveKind,
    fingerprint: u64,
}

impl MoveSite {
    /// Validates `kind` against `d`.
    pub fn locate(d: &GaussDiagram, kind: MoveKind) -> Result<MoveSite> {
        if !is_valid(d, &kind) {
            return Err(Error::InvalidMove(kind.to_string()));
        }
        Ok(MoveSite {
            kind,
            fingerprint: fingerprint(d),
        })
    }

    pub fn kind(&self) -> &MoveKind {
        &self.kind
    }
}

fn fingerprint(d: &GaussDiagram) -> u64 {
    let mut h = DefaultHasher::new();
    d.hash(&mut h);
    h.finish()
}

/// Result of applying a move.
#[derive(Debug, Clone)]
pub struct Applied {
    pub diagram: GaussDiagram,
    pub kind: MoveKind,
    /// Labels of chords created by the move.
    pub inserted: Vec<u32>,
    /// Labels of chords removed by the move.
    pub removed: Vec<u32>,
    /// Labels of the R3 triangle, which survive but are involved.
    pub involved: Vec<u32>,
    /// `position_map[i][p]` is the new position of old endpoint `p` on component `i`.
    position_map: Vec<Vec<Option<usize>>>,
}

impl Applied {
    /// Labels present on both sides and not touched by the move.
    pub fn untouched(&self) -> Vec<u32> {
        self.diagram
            .chords()
            .iter()
            .map(|c| c.label)
            .filter(|l| !self.inserted.contains(l) && !self.involved.contains(l))
            .collect()
    }

    /// Carries a colouring of the old diagram to the new one so that every
    /// surviving endpoint keeps its incoming colour.
    pub fn transport(&self, c: &TwoColouring) -> TwoColouring {
        let bits = self
            .position_map
            .iter()
            .enumerate()
            .map(|(i, map)| {
                let anchor = map.iter().enumerate().find_map(|(p, q)| q.map(|q| (p, q)));
                match anchor {
                    Some((p, q)) => c.bit(i) ^ (p % 2 == 1) ^ (q % 2 == 1),
                    None => c.bit(i),
                }
            })
            .collect();
        TwoColouring::new(bits)
    }
}

fn component_gaps(len: usize) -> usize {
    len.max(1)
}

fn next(d: &GaussDiagram, s: Slot) -> Slot {
    let len = d.circles()[s.component].len();
    Slot {
        component: s.component,
        position: (s.position + 1) % len,
    }
}

fn prev(d: &GaussDiagram, s: Slot) -> Slot {
    let len = d.circles()[s.component].len();
    Slot {
        component: s.component,
        position: (s.position + len - 1) % len,
    }
}

/// Whether `x` is immediately followed by `y`, and whether `y` is immediately
/// followed by `x`. Both hold when the circle carries only these two endpoints.
fn adjacency(d: &GaussDiagram, x: Slot, y: Slot) -> (bool, bool) {
    if x.component != y.component || x == y {
        return (false, false);
    }
    (next(d, x) == y, next(d, y) == x)
}

fn chord(d: &GaussDiagram, label: u32) -> Option<&Chord> {
    d.chord_by_label(label)
}

fn r1_deletable(c: &Chord, d: &GaussDiagram) -> bool {
    let (a, b) = adjacency(d, c.over, c.under);
    a || b
}

fn r2_deletable(a: &Chord, b: &Chord, d: &GaussDiagram) -> bool {
    if a.label == b.label || a.sign == b.sign {
        return false;
    }
    let over = adjacency(d, a.over, b.over);
    let under = adjacency(d, a.under, b.under);
    (over.0 || over.1) && (under.0 || under.1)
}

fn order_choices(adj: (bool, bool)) -> Vec<bool> {
    let mut v = Vec::with_capacity(2);
    if adj.0 {
        v.push(true);
    }
    if adj.1 {
        v.push(false);
    }
    v
}

fn r3_admissible(d: &GaussDiagram, tm: &Chord, tb: &Chord, mb: &Chord) -> bool {
    if tm.label == tb.label || tm.label == mb.label || tb.label == mb.label {
        return false;
    }
    let ts = order_choices(adjacency(d, tm.over, tb.over));
    let ms = order_choices(adjacency(d, tm.under, mb.over));
    let bs = order_choices(adjacency(d, tb.under, mb.under));
    let positive = [
        tm.sign == Sign::Positive,
        tb.sign == Sign::Positive,
        mb.sign == Sign::Positive,
    ];
    ts.iter().any(|&t| {
        ms.iter().any(|&m| {
            bs.iter().any(|&b| {
                catalogue::is_admissible(&R3Pattern {
                    top_meets_middle_first: t,
                    middle_meets_top_first: m,
                    bottom_meets_top_first: b,
                    positive,
                })
            })
        })
    })
}

fn site_in_range(d: &GaussDiagram, s: Site) -> bool {
    s.component < d.circles().len() && s.gap < component_gaps(d.circles()[s.component].len())
}

fn is_valid(d: &GaussDiagram, kind: &MoveKind) -> bool {
    match *kind {
        MoveKind::R1Insert { site, .. } => site_in_range(d, site),
        MoveKind::R2Insert { first, second, .. } => {
            site_in_range(d, first) && site_in_range(d, second) && first <= second
        }
        MoveKind::R1Delete { chord: l } => chord(d, l).is_some_and(|c| r1_deletable(c, d)),
        MoveKind::R2Delete { chords: [a, b] } => match (chord(d, a), chord(d, b)) {
            (Some(a), Some(b)) => r2_deletable(a, b, d),
            _ => false,
        },
        MoveKind::R3 {
            top_middle,
            top_bottom,
            middle_bottom,
        } => match (chord(d, top_middle), chord(d, top_bottom), chord(d, middle_bottom)) {
            (Some(tm), Some(tb), Some(mb)) => r3_admissible(d, tm, tb, mb),
            _ => false,
        },
    }
}

fn insertion_sites(d: &GaussDiagram) -> Vec<Site> {
    d.circles()
        .iter()
        .enumerate()
        .flat_map(|(component, c)| (0..component_gaps(c.len())).map(move |gap| Site { component, gap }))
        .collect()
}

const SIGNS: [Sign; 2] = [Sign::Positive, Sign::Negative];

/// Every valid move of the requested classes, in a deterministic order.
pub fn available_moves(d: &GaussDiagram, filter: MoveFilter) -> Vec<MoveSite> {
    let fp = fingerprint(d);
    let mut kinds = Vec::new();
    let sites = insertion_sites(d);

    if filter.r1_insert {
        for &site in &sites {
            for sign in SIGNS {
                for over_first in [true, false] {
                    kinds.push(MoveKind::R1Insert { site, sign, over_first });
                }
            }
        }
    }
    if filter.r1_delete {
        for c in d.chords().iter().filter(|c| r1_deletable(c, d)) {
            kinds.push(MoveKind::R1Delete { chord: c.label });
        }
    }
    if filter.r2_insert {
        for (i, &first) in sites.iter().enumerate() {
            for &second in &sites[i..] {
                for first_over in [true, false] {
                    for parallel in [true, false] {
                        for sign in SIGNS {
                            kinds.push(MoveKind::R2Insert {
                                first,
                                second,
                                first_over,
                                parallel,
                                sign,
                            });
                        }
                    }
                }
            }
        }
    }
    if filter.r2_delete {
        kinds.extend(r2_deletions(d));
    }
    if filter.r3 {
        kinds.extend(r3_sites(d));
    }
    kinds
        .into_iter()
        .map(|kind| MoveSite { kind, fingerprint: fp })
        .collect()
}

fn r2_deletions(d: &GaussDiagram) -> Vec<MoveKind> {
    let mut found = BTreeSet::new();
    for a in d.chords() {
        for s in [prev(d, a.over), next(d, a.over)] {
            if s == a.over {
                continue;
            }
            let e = d.endpoint(s);
            let b = &d.chords()[e.chord];
            if e.role == Role::Over && r2_deletable(a, b, d) {
                found.insert([a.label.min(b.label), a.label.max(b.label)]);
            }
        }
    }
    found.into_iter().map(|chords| MoveKind::R2Delete { chords }).collect()
}

fn r3_sites(d: &GaussDiagram) -> Vec<MoveKind> {
    let mut found = BTreeSet::new();
    for tm in d.chords() {
        for s in [prev(d, tm.over), next(d, tm.over)] {
            let e = d.endpoint(s);
            if s == tm.over || e.role != Role::Over {
                continue;
            }
            let tb = &d.chords()[e.chord];
            for u in [prev(d, tm.under), next(d, tm.under)] {
                let f = d.endpoint(u);
                if u == tm.under || f.role != Role::Over {
                    continue;
                }
                let mb = &d.chords()[f.chord];
                if r3_admissible(d, tm, tb, mb) {
                    found.insert((tm.label, tb.label, mb.label));
                }
            }
        }
    }
    found
        .into_iter()
        .map(|(top_middle, top_bottom, middle_bottom)| MoveKind::R3 {
            top_middle,
            top_bottom,
            middle_bottom,
        })
        .collect()
}

type Tagged = Vec<Vec<(Token, Option<usize>)>>;

fn tagged_words(d: &GaussDiagram) -> Tagged {
    d.words()
        .into_iter()
        .map(|w| w.into_iter().enumerate().map(|(p, t)| (t, Some(p))).collect())
        .collect()
}

fn finish(
    d: &GaussDiagram,
    kind: MoveKind,
    words: Tagged,
    inserted: Vec<u32>,
    removed: Vec<u32>,
    involved: Vec<u32>,
) -> Result<Applied> {
    let mut position_map: Vec<Vec<Option<usize>>> = d.circles().iter().map(|c| vec![None; c.len()]).collect();
    for (i, w) in words.iter().enumerate() {
        for (q, (_, old)) in w.iter().enumerate() {
            if let Some(p) = old {
                position_map[i][*p] = Some(q);
            }
        }
    }
    let plain: Vec<Vec<Token>> = words
        .into_iter()
        .map(|w| w.into_iter().map(|(t, _)| t).collect())
        .collect();
    Ok(Applied {
        diagram: GaussDiagram::from_words(&plain)?,
        kind,
        inserted,
        removed,
        involved,
        position_map,
    })
}

/// Applies a move located on exactly this diagram.
pub fn apply(d: &GaussDiagram, site: &MoveSite) -> Result<Applied> {
    if site.fingerprint != fingerprint(d) {
        return Err(Error::StaleSite);
    }
    apply_kind(d, site.kind)
}

/// Applies `kind`, validating it first.
pub fn apply_move(d: &GaussDiagram, kind: MoveKind) -> Result<Applied> {
    let site = MoveSite::locate(d, kind)?;
    apply(d, &site)
}

fn apply_kind(d: &GaussDiagram, kind: MoveKind) -> Result<Applied> {
    let mut words = tagged_words(d);
    let fresh = d.max_label() + 1;
    match kind {
        MoveKind::R1Insert { site, sign, over_first } => {
            let (r0, r1) = if over_first {
                (Role::Over, Role::Under)
            } else {
                (Role::Under, Role::Over)
            };
            let w = &mut words[site.component];
            w.insert(site.gap, (Token::new(fresh, r1, sign), None));
            w.insert(site.gap, (Token::new(fresh, r0, sign), None));
            finish(d, kind, words, vec![fresh], vec![], vec![])
        }
        MoveKind::R2Insert {
            first,
            second,
            first_over,
            parallel,
            sign,
        } => {
            let (a, b) = (fresh, fresh + 1);
            let (r0, r1) = if first_over {
                (Role::Over, Role::Under)
            } else {
                (Role::Under, Role::Over)
            };
            let sa = sign;
            let sb = sign.negate();
            let first_pair = vec![(Token::new(a, r0, sa), None), (Token::new(b, r0, sb), None)];
            let second_pair = if parallel {
                vec![(Token::new(a, r1, sa), None), (Token::new(b, r1, sb), None)]
            } else {
                vec![(Token::new(b, r1, sb), None), (Token::new(a, r1, sa), None)]
            };
            if first == second {
                let w = &mut words[first.component];
                let both: Vec<_> = first_pair.into_iter().chain(second_pair).collect();
                w.splice(first.gap..first.gap, both);
            } else {
                // later site first so earlier gap indices stay valid
                let w = &mut words[second.component];
                w.splice(second.gap..second.gap, second_pair);
                let w = &mut words[first.component];
                w.splice(first.gap..first.gap, first_pair);
            }
            finish(d, kind, words, vec![a, b], vec![], vec![])
        }
        MoveKind::R1Delete { chord } => {
            for w in &mut words {
                w.retain(|(t, _)| t.label != chord);
            }
            finish(d, kind, words, vec![], vec![chord], vec![])
        }
        MoveKind::R2Delete { chords } => {
            for w in &mut words {
                w.retain(|(t, _)| !chords.contains(&t.label));
            }
            finish(d, kind, words, vec![], chords.to_vec(), vec![])
        }
        MoveKind::R3 {
            top_middle,
            top_bottom,
            middle_bottom,
        } => {
            let c = |l| d.chord_by_label(l).ok_or(Error::UnknownChord(l));
            let (tm, tb, mb) = (c(top_middle)?, c(top_bottom)?, c(middle_bottom)?);
            for (x, y) in [(tm.over, tb.over), (tm.under, mb.over), (tb.under, mb.under)] {
                debug_assert_eq!(x.component, y.component);
                let w = &mut words[x.component];
                // tokens trade places; slot tags stay put since no position shifts
                let (tx, ty) = (w[x.position].0, w[y.position].0);
                w[x.position].0 = ty;
                w[y.position].0 = tx;
            }
            finish(
                d,
                kind,
                words,
                vec![],
                vec![],
                vec![top_middle, top_bottom, middle_bottom],
            )
        }
    }
}
