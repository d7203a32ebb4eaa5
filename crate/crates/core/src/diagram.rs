//! Gauss diagrams of virtual links.
//!
//! A diagram is a list of core circles, one per link component. Each circle is
//! stored as a linear word of chord endpoints read from an explicit basepoint.
//! Virtual crossings leave no trace in a Gauss diagram, so a diagram is fully
//! described by its words.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub(crate) fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// Whether an endpoint is the over-passing or under-passing visit of its crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn swap(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }

    pub(crate) fn as_char(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

/// A location on a core circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub component: usize,
    pub position: usize,
}

/// One letter of a Gauss word: a visit to chord `label` in the given role.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Token {
    pub label: u32,
    pub role: Role,
    pub sign: Sign,
}

impl Token {
    pub fn new(label: u32, role: Role, sign: Sign) -> Self {
        Token { label, role, sign }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.role.as_char(), self.label, self.sign.as_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Endpoint {
    /// Index into [`GaussDiagram::chords`].
    pub chord: usize,
    pub role: Role,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chord {
    pub label: u32,
    pub sign: Sign,
    pub over: Slot,
    pub under: Slot,
}

impl Chord {
    pub fn is_self(&self) -> bool {
        self.over.component == self.under.component
    }

    pub fn is_mixed(&self) -> bool {
        !self.is_self()
    }

    pub fn endpoints(&self) -> (Slot, Slot) {
        (self.over, self.under)
    }
}

/// Read-only view of the chord layout shared by decorated and simple diagrams.
///
/// Parity rules only look at where chord endpoints sit, so they are written
/// against this trait.
pub trait ChordLayout {
    fn component_count(&self) -> usize;
    fn component_len(&self, component: usize) -> usize;
    fn chord_count(&self) -> usize;
    fn chord_label(&self, chord: usize) -> u32;
    fn chord_slots(&self, chord: usize) -> (Slot, Slot);

    /// Components carrying an odd number of endpoints.
    fn degenerate_components(&self) -> Vec<usize> {
        (0..self.component_count())
            .filter(|&i| self.component_len(i) % 2 == 1)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    circles: Vec<Vec<Endpoint>>,
    chords: Vec<Chord>,
}

impl GaussDiagram {
    /// Builds a diagram from Gauss words, one per component.
    ///
    /// Every label must occur exactly twice, once as `Over` and once as `Under`,
    /// with the same sign. Chords are indexed in first-appearance order.
    pub fn from_words(words: &[Vec<Token>]) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::Syntax {
                line: 0,
                token: String::new(),
                reason: "a link needs at least one component".into(),
            });
        }
        struct Partial {
            sign: Sign,
            over: Option<Slot>,
            under: Option<Slot>,
        }
        let mut index: BTreeMap<u32, usize> = BTreeMap::new();
        let mut partial: Vec<(u32, Partial)> = Vec::new();
        let mut circles = Vec::with_capacity(words.len());
        for (component, word) in words.iter().enumerate() {
            let mut circle = Vec::with_capacity(word.len());
            for (position, tok) in word.iter().enumerate() {
                let slot = Slot { component, position };
                let chord = *index.entry(tok.label).or_insert_with(|| {
                    partial.push((
                        tok.label,
                        Partial {
                            sign: tok.sign,
                            over: None,
                            under: None,
                        },
                    ));
                    partial.len() - 1
                });
                let entry = &mut partial[chord].1;
                if entry.sign != tok.sign {
                    return Err(Error::Label {
                        label: tok.label,
                        reason: "the two occurrences carry different signs".into(),
                    });
                }
                let seat = match tok.role {
                    Role::Over => &mut entry.over,
                    Role::Under => &mut entry.under,
                };
                if seat.is_some() {
                    return Err(Error::Label {
                        label: tok.label,
                        reason: format!("used more than once as {}", tok.role.as_char()),
                    });
                }
                *seat = Some(slot);
                circle.push(Endpoint { chord, role: tok.role });
            }
            circles.push(circle);
        }
        let chords = partial
            .into_iter()
            .map(|(label, p)| match (p.over, p.under) {
                (Some(over), Some(under)) => Ok(Chord {
                    label,
                    sign: p.sign,
                    over,
                    under,
                }),
                (None, _) => Err(Error::Label {
                    label,
                    reason: "never used as O".into(),
                }),
                (_, None) => Err(Error::Label {
                    label,
                    reason: "never used as U".into(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GaussDiagram { circles, chords })
    }

    /// The unlink diagram with `n` crossing-free components.
    pub fn unlink(n: usize) -> Self {
        GaussDiagram {
            circles: vec![Vec::new(); n.max(1)],
            chords: Vec::new(),
        }
    }

    pub fn circles(&self) -> &[Vec<Endpoint>] {
        &self.circles
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn chord_index(&self, label: u32) -> Option<usize> {
        self.chords.iter().position(|c| c.label == label)
    }

    pub fn chord_by_label(&self, label: u32) -> Option<&Chord> {
        self.chords.iter().find(|c| c.label == label)
    }

    pub fn endpoint(&self, slot: Slot) -> Endpoint {
        self.circles[slot.component][slot.position]
    }

    pub fn token(&self, slot: Slot) -> Token {
        let e = self.endpoint(slot);
        let c = &self.chords[e.chord];
        Token::new(c.label, e.role, c.sign)
    }

    pub fn words(&self) -> Vec<Vec<Token>> {
        self.circles
            .iter()
            .map(|circle| {
                circle
                    .iter()
                    .map(|e| {
                        let c = &self.chords[e.chord];
                        Token::new(c.label, e.role, c.sign)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn max_label(&self) -> u32 {
        self.chords.iter().map(|c| c.label).max().unwrap_or(0)
    }

    pub fn is_knot(&self) -> bool {
        self.circles.len() == 1
    }

    pub fn negative_count(&self) -> usize {
        self.chords.iter().filter(|c| c.sign == Sign::Negative).count()
    }

    /// Relabels chords 1..k in first-appearance order.
    pub fn canonical(&self) -> GaussDiagram {
        let chords = self
            .chords
            .iter()
            .enumerate()
            .map(|(i, c)| Chord {
                label: i as u32 + 1,
                ..*c
            })
            .collect();
        GaussDiagram {
            circles: self.circles.clone(),
            chords,
        }
    }

    pub fn same_up_to_relabeling(&self, other: &GaussDiagram) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn transform(&self, kind: TransformKind) -> Result<GaussDiagram> {
        let mut words = self.words();
        match kind {
            TransformKind::VerticalMirror => {
                for t in words.iter_mut().flatten() {
                    t.role = t.role.swap();
                    t.sign = t.sign.negate();
                }
            }
            TransformKind::CrossingChange(label) => {
                if self.chord_by_label(label).is_none() {
                    return Err(Error::UnknownChord(label));
                }
                for t in words.iter_mut().flatten().filter(|t| t.label == label) {
                    t.role = t.role.swap();
                    t.sign = t.sign.negate();
                }
            }
            TransformKind::ReverseComponent(i) => {
                if i >= words.len() {
                    return Err(Error::Index {
                        what: "component",
                        value: i,
                        bound: words.len(),
                    });
                }
                let flipped: Vec<u32> = self
                    .chords
                    .iter()
                    .filter(|c| c.is_mixed() && (c.over.component == i || c.under.component == i))
                    .map(|c| c.label)
                    .collect();
                words[i].reverse();
                for t in words.iter_mut().flatten() {
                    if flipped.contains(&t.label) {
                        t.sign = t.sign.negate();
                    }
                }
            }
            TransformKind::ReverseAll => {
                for w in &mut words {
                    w.reverse();
                }
            }
            TransformKind::HorizontalMirror => {
                for w in &mut words {
                    w.reverse();
                    for t in w.iter_mut() {
                        t.sign = t.sign.negate();
                    }
                }
            }
        }
        GaussDiagram::from_words(&words)
    }

    /// Drops signs and over/under decorations.
    pub fn forget(&self) -> SimpleGaussDiagram {
        SimpleGaussDiagram {
            circles: self
                .circles
                .iter()
                .map(|c| c.iter().map(|e| e.chord).collect())
                .collect(),
            chords: self
                .chords
                .iter()
                .map(|c| SimpleChord {
                    label: c.label,
                    ends: (c.over.min(c.under), c.over.max(c.under)),
                })
                .collect(),
        }
    }

    /// Moves the basepoint of `component` forward by `offset` endpoints.
    pub fn rotate_basepoint(&self, component: usize, offset: i64) -> Result<GaussDiagram> {
        if component >= self.circles.len() {
            return Err(Error::Index {
                what: "component",
                value: component,
                bound: self.circles.len(),
            });
        }
        let mut words = self.words();
        let w = &mut words[component];
        if !w.is_empty() {
            let k = offset.rem_euclid(w.len() as i64) as usize;
            w.rotate_left(k);
        }
        GaussDiagram::from_words(&words)
    }

    /// Removes the given chords, compacting positions. Components are kept even
    /// when they lose every endpoint.
    pub fn delete_chords(&self, labels: &[u32]) -> GaussDiagram {
        let words: Vec<Vec<Token>> = self
            .words()
            .into_iter()
            .map(|w| w.into_iter().filter(|t| !labels.contains(&t.label)).collect())
            .collect();
        GaussDiagram::from_words(&words).expect("deleting whole chords keeps a diagram valid")
    }
}

impl ChordLayout for GaussDiagram {
    fn component_count(&self) -> usize {
        self.circles.len()
    }

    fn component_len(&self, component: usize) -> usize {
        self.circles[component].len()
    }

    fn chord_count(&self) -> usize {
        self.chords.len()
    }

    fn chord_label(&self, chord: usize) -> u32 {
        self.chords[chord].label
    }

    fn chord_slots(&self, chord: usize) -> (Slot, Slot) {
        self.chords[chord].endpoints()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleChord {
    pub label: u32,
    /// Endpoints in slot order.
    pub ends: (Slot, Slot),
}

/// A Gauss diagram with crossing decorations forgotten.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGaussDiagram {
    circles: Vec<Vec<usize>>,
    chords: Vec<SimpleChord>,
}

impl SimpleGaussDiagram {
    pub fn circles(&self) -> &[Vec<usize>] {
        &self.circles
    }

    pub fn chords(&self) -> &[SimpleChord] {
        &self.chords
    }
}

impl ChordLayout for SimpleGaussDiagram {
    fn component_count(&self) -> usize {
        self.circles.len()
    }

    fn component_len(&self, component: usize) -> usize {
        self.circles[component].len()
    }

    fn chord_count(&self) -> usize {
        self.chords.len()
    }

    fn chord_label(&self, chord: usize) -> u32 {
        self.chords[chord].label
    }

    fn chord_slots(&self, chord: usize) -> (Slot, Slot) {
        self.chords[chord].ends
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    /// Crossing change at every chord.
    VerticalMirror,
    /// Reflection in the plane: every word reversed, every sign negated.
    HorizontalMirror,
    ReverseComponent(usize),
    ReverseAll,
    /// Crossing change at the chord with this label.
    CrossingChange(u32),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(label: u32, role: Role, sign: Sign) -> Token {
        Token::new(label, role, sign)
    }

    #[test]
    fn duplicate_over_is_rejected() {
        let words = vec![vec![t(1, Role::Over, Sign::Positive), t(1, Role::Over, Sign::Positive)]];
        assert!(matches!(
            GaussDiagram::from_words(&words),
            Err(Error::Label { label: 1, .. })
        ));
    }

    #[test]
    fn missing_under_is_rejected() {
        let words = vec![vec![t(3, Role::Over, Sign::Negative)]];
        assert!(matches!(
            GaussDiagram::from_words(&words),
            Err(Error::Label { label: 3, .. })
        ));
    }

    #[test]
    fn slots_agree_with_circles() {
        let words = vec![
            vec![t(7, Role::Over, Sign::Positive), t(2, Role::Under, Sign::Negative)],
            vec![t(2, Role::Over, Sign::Negative), t(7, Role::Under, Sign::Positive)],
        ];
        let d = GaussDiagram::from_words(&words).unwrap();
        for (i, c) in d.chords().iter().enumerate() {
            assert_eq!(
                d.endpoint(c.over),
                Endpoint {
                    chord: i,
                    role: Role::Over
                }
            );
            assert_eq!(
                d.endpoint(c.under),
                Endpoint {
                    chord: i,
                    role: Role::Under
                }
            );
        }
        assert_eq!(d.chords()[0].label, 7);
        assert!(d.chords().iter().all(Chord::is_mixed));
    }

    #[test]
    fn unknown_chord_and_component_errors() {
        let d = GaussDiagram::unlink(1);
        assert_eq!(
            d.transform(TransformKind::CrossingChange(4)),
            Err(Error::UnknownChord(4))
        );
        assert!(matches!(
            d.transform(TransformKind::ReverseComponent(1)),
            Err(Error::Index { .. })
        ));
        assert!(matches!(d.rotate_basepoint(2, 1), Err(Error::Index { .. })));
    }

    #[test]
    fn delete_keeps_empty_components() {
        let words = vec![
            vec![t(1, Role::Over, Sign::Positive)],
            vec![t(1, Role::Under, Sign::Positive)],
        ];
        let d = GaussDiagram::from_words(&words).unwrap().delete_chords(&[1]);
        assert_eq!(d.circles().len(), 2);
        assert_eq!(d.chords().len(), 0);
    }
}
