//! 2-colourings of Gauss diagrams.
//!
//! Colours alternate at every chord endpoint, so a colouring is pinned down by
//! the colour of the interval holding each component's basepoint. Red is 0 and
//! green is 1.

use std::fmt;
use std::str::FromStr;

use crate::diagram::ChordLayout;
use crate::error::{Error, Result};

/// One starting colour per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoColouring {
    bits: Vec<bool>,
}

impl TwoColouring {
    pub fn new(bits: Vec<bool>) -> Self {
        TwoColouring { bits }
    }

    /// The all-red colouring, used as the base of the generating set.
    pub fn base(n: usize) -> Self {
        TwoColouring { bits: vec![false; n] }
    }

    /// Colouring whose bit `i` is bit `i` of `mask` (component 0 is the leftmost
    /// character when printed).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        TwoColouring {
            bits: (0..n).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn bit(&self, component: usize) -> bool {
        self.bits[component]
    }

    /// Flips the colouring on the given components.
    pub fn dualize(&self, components: &[usize]) -> Result<TwoColouring> {
        let mut bits = self.bits.clone();
        for &i in components {
            let b = bits.get_mut(i).ok_or(Error::Index {
                what: "component",
                value: i,
                bound: self.bits.len(),
            })?;
            *b = !*b;
        }
        Ok(TwoColouring { bits })
    }

    pub fn global_dual(&self) -> TwoColouring {
        TwoColouring {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub(crate) fn check_against<L: ChordLayout + ?Sized>(&self, d: &L) -> Result<()> {
        if self.bits.len() != d.component_count() {
            return Err(Error::ColouringLength {
                expected: d.component_count(),
                got: self.bits.len(),
            });
        }
        require_colourable(d)
    }
}

impl fmt::Display for TwoColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for TwoColouring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Syntax {
                    line: 0,
                    token: s.to_string(),
                    reason: "colourings are strings of 0 and 1".into(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.is_empty() {
            return Err(Error::Syntax {
                line: 0,
                token: String::new(),
                reason: "empty colouring".into(),
            });
        }
        Ok(TwoColouring { bits })
    }
}

/// Errors with the degenerate components if there are any.
pub fn require_colourable<L: ChordLayout + ?Sized>(d: &L) -> Result<()> {
    let degenerate = d.degenerate_components();
    if degenerate.is_empty() {
        Ok(())
    } else {
        Err(Error::NotTwoColourable(degenerate))
    }
}

pub fn degenerate_components<L: ChordLayout + ?Sized>(d: &L) -> Vec<usize> {
    d.degenerate_components()
}

/// Every 2-colouring of `d`, ordered by their bit strings; empty when some
/// component is degenerate.
pub fn colourings<L: ChordLayout + ?Sized>(d: &L) -> Vec<TwoColouring> {
    if !d.degenerate_components().is_empty() {
        return Vec::new();
    }
    let n = d.component_count();
    let mut all: Vec<TwoColouring> = (0..1u64 << n).map(|m| TwoColouring::from_mask(n, m)).collect();
    all.sort();
    all
}

/// Colour of the interval entering endpoint `position` of `component`.
pub fn incoming_colour<L: ChordLayout + ?Sized>(
    d: &L,
    c: &TwoColouring,
    component: usize,
    position: usize,
) -> Result<bool> {
    c.check_against(d)?;
    if component >= d.component_count() {
        return Err(Error::Index {
            what: "component",
            value: component,
            bound: d.component_count(),
        });
    }
    if position >= d.component_len(component) {
        return Err(Error::Index {
            what: "position",
            value: position,
            bound: d.component_len(component),
        });
    }
    Ok(c.bit(component) ^ (position % 2 == 1))
}

/// One colouring from each globally dual pair, relative to the all-red base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    members: Vec<TwoColouring>,
}

impl GeneratingSet {
    pub fn members(&self) -> &[TwoColouring] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TwoColouring> {
        self.members.iter()
    }
}

impl<'a> IntoIterator for &'a GeneratingSet {
    type Item = &'a TwoColouring;
    type IntoIter = std::slice::Iter<'a, TwoColouring>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// The weight-layered generating set: every vector of weight below n/2, plus
/// for even n the half of the middle layer that precedes its complement in
/// dictionary order. Sorted by weight, then dictionary order.
///
/// Panics if `n == 0`.
pub fn generating_set(n: usize) -> GeneratingSet {
    assert!(n >= 1, "a link has at least one component");
    assert!(n < 64, "generating sets are indexed by u64 masks");
    let mut members: Vec<TwoColouring> = (0..1u64 << n)
        .map(|m| TwoColouring::from_mask(n, m))
        .filter(|v| {
            let w = v.weight();
            2 * w < n || (2 * w == n && !v.bit(0))
        })
        .collect();
    members.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));
    GeneratingSet { members }
}
