//! Parity assignments on chords.

use std::collections::BTreeMap;

use crate::colouring::{require_colourable, TwoColouring};
use crate::diagram::{ChordLayout, GaussDiagram, SimpleGaussDiagram};
use crate::error::{Error, Result};
use crate::invariants::linking_matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_odd(odd: bool) -> Parity {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scheme {
    TwoColour(TwoColouring),
    Gaussian,
    Naive,
    ImParkSelf,
}

/// Chord label to parity, tagged with the scheme that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityAssignment {
    pub scheme: Scheme,
    values: BTreeMap<u32, Parity>,
}

impl ParityAssignment {
    pub fn new(scheme: Scheme, values: BTreeMap<u32, Parity>) -> Self {
        ParityAssignment { scheme, values }
    }

    pub fn get(&self, label: u32) -> Option<Parity> {
        self.values.get(&label).copied()
    }

    pub fn values(&self) -> &BTreeMap<u32, Parity> {
        &self.values
    }

    pub fn odd_labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.values.iter().filter(|(_, p)| p.is_odd()).map(|(&l, _)| l)
    }

    pub fn is_all_even(&self) -> bool {
        self.values.values().all(|p| !p.is_odd())
    }

    /// Same values under another scheme tag.
    pub fn same_values(&self, other: &ParityAssignment) -> bool {
        self.values == other.values
    }
}

fn collect<L: ChordLayout + ?Sized>(
    d: &L,
    scheme: Scheme,
    odd: impl Iterator<Item = (usize, bool)>,
) -> ParityAssignment {
    ParityAssignment {
        scheme,
        values: odd.map(|(k, o)| (d.chord_label(k), Parity::from_odd(o))).collect(),
    }
}

/// Odd iff the intervals entering the two endpoints carry the same colour.
/// Indexed by chord; the caller has validated `c` against `d`.
pub(crate) fn colour_odd_flags<L: ChordLayout + ?Sized>(d: &L, c: &TwoColouring) -> Vec<bool> {
    let colour = |s: crate::diagram::Slot| c.bit(s.component) ^ (s.position % 2 == 1);
    (0..d.chord_count())
        .map(|k| {
            let (a, b) = d.chord_slots(k);
            colour(a) == colour(b)
        })
        .collect()
}

pub fn two_colour_parity(d: &GaussDiagram, c: &TwoColouring) -> Result<ParityAssignment> {
    c.check_against(d)?;
    let odd = colour_odd_flags(d, c);
    Ok(collect(d, Scheme::TwoColour(c.clone()), odd.into_iter().enumerate()))
}

/// The 2-colour parity read off a simple Gauss diagram; decorations play no part.
pub fn free_two_colour_parity(s: &SimpleGaussDiagram, c: &TwoColouring) -> Result<ParityAssignment> {
    c.check_against(s)?;
    let odd = colour_odd_flags(s, c);
    Ok(collect(s, Scheme::TwoColour(c.clone()), odd.into_iter().enumerate()))
}

/// Number of endpoints strictly between the two ends of a self-chord, walking
/// forward from the earlier one.
fn enclosed(a: usize, b: usize) -> usize {
    a.abs_diff(b) - 1
}

pub fn gaussian_parity(d: &GaussDiagram) -> Result<ParityAssignment> {
    if !d.is_knot() {
        return Err(Error::NotAKnot(d.circles().len()));
    }
    let odd = d
        .chords()
        .iter()
        .map(|c| enclosed(c.over.position, c.under.position) % 2 == 1);
    Ok(collect(d, Scheme::Gaussian, odd.enumerate()))
}

/// Self-crossings even, mixed crossings odd.
pub fn naive_parity(d: &GaussDiagram) -> ParityAssignment {
    let odd = d.chords().iter().map(|c| c.is_mixed());
    collect(d, Scheme::Naive, odd.enumerate())
}

/// Errors on the first odd pairwise linking number.
pub(crate) fn require_even_linking(d: &GaussDiagram) -> Result<()> {
    let lk = linking_matrix(d);
    for (i, row) in lk.iter().enumerate() {
        for (j, &v) in row.iter().enumerate().skip(i + 1) {
            if v % 2 != 0 {
                return Err(Error::OddLinkingNumbers { i, j, value: v });
            }
        }
    }
    Ok(())
}

/// Im-Park parity on self-crossings: odd iff the chord encloses an odd number of
/// endpoints on its own circle. Mixed chords are left out of the domain.
pub fn ip_self_parity(d: &GaussDiagram) -> Result<ParityAssignment> {
    require_even_linking(d)?;
    let values = d
        .chords()
        .iter()
        .filter(|c| c.is_self())
        .map(|c| {
            let odd = enclosed(c.over.position, c.under.position) % 2 == 1;
            (c.label, Parity::from_odd(odd))
        })
        .collect();
    Ok(ParityAssignment::new(Scheme::ImParkSelf, values))
}

/// Parity projection: every chord that is odd under `c` becomes virtual, i.e.
/// is deleted from the Gauss diagram. Component count is preserved.
pub fn project(d: &GaussDiagram, c: &TwoColouring) -> Result<GaussDiagram> {
    require_colourable(d)?;
    let p = two_colour_parity(d, c)?;
    let odd: Vec<u32> = p.odd_labels().collect();
    if odd.is_empty() {
        return Ok(d.clone());
    }
    Ok(d.delete_chords(&odd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{parse, serialize};
    use crate::colouring::colourings;

    fn odd_set(p: &ParityAssignment) -> Vec<u32> {
        p.odd_labels().collect()
    }

    #[test]
    fn two_colour_examples() {
        let trefoil = parse("O1+ O2+ U1+ U2+").unwrap();
        for c in colourings(&trefoil) {
            assert_eq!(odd_set(&two_colour_parity(&trefoil, &c).unwrap()), [1, 2]);
        }
        let hopf = parse("O1+ U2+ / O2+ U1+").unwrap();
        assert!(two_colour_parity(&hopf, &"00".parse().unwrap()).unwrap().is_all_even());
        assert_eq!(
            odd_set(&two_colour_parity(&hopf, &"01".parse().unwrap()).unwrap()),
            [1, 2]
        );
    }

    #[test]
    fn two_colour_rejects_bad_input() {
        let vhopf = parse("O1+ / U1+").unwrap();
        assert!(matches!(
            two_colour_parity(&vhopf, &"00".parse().unwrap()),
            Err(Error::NotTwoColourable(_))
        ));
        let hopf = parse("O1+ U2+ / O2+ U1+").unwrap();
        assert!(matches!(
            two_colour_parity(&hopf, &"0".parse().unwrap()),
            Err(Error::ColouringLength { .. })
        ));
    }

    #[test]
    fn gaussian_examples() {
        let trefoil = parse("O1+ O2+ U1+ U2+").unwrap();
        assert_eq!(odd_set(&gaussian_parity(&trefoil).unwrap()), [1, 2]);
        let kink = parse("O1+ U1+").unwrap();
        assert!(gaussian_parity(&kink).unwrap().is_all_even());
        let hopf = parse("O1+ U2+ / O2+ U1+").unwrap();
        assert_eq!(gaussian_parity(&hopf), Err(Error::NotAKnot(2)));
    }

    #[test]
    fn naive_examples() {
        let hopf = parse("O1+ U2+ / O2+ U1+").unwrap();
        assert_eq!(odd_set(&naive_parity(&hopf)), [1, 2]);
        let trefoil = parse("O1+ O2+ U1+ U2+").unwrap();
        assert!(naive_parity(&trefoil).is_all_even());
        let mixed = parse("O1+ O3- U1+ U2- / O2- U3-").unwrap();
        assert_eq!(odd_set(&naive_parity(&mixed)), [2, 3]);
    }

    #[test]
    fn ip_self_examples() {
        let trefoil = parse("O1+ O2+ U1+ U2+").unwrap();
        let ip = ip_self_parity(&trefoil).unwrap();
        assert_eq!(odd_set(&ip), [1, 2]);
        assert!(ip.same_values(&gaussian_parity(&trefoil).unwrap()));
        let hopf = parse("O1+ U2+ / O2+ U1+").unwrap();
        assert!(ip_self_parity(&hopf).unwrap().values().is_empty());
        let vhopf = parse("O1+ / U1+").unwrap();
        assert!(matches!(
            ip_self_parity(&vhopf),
            Err(Error::OddLinkingNumbers { i: 0, j: 1, value: 1 })
        ));
    }

    #[test]
    fn projection_examples() {
        let trefoil = parse("O1+ O2+ U1+ U2+").unwrap();
        for c in colourings(&trefoil) {
            assert_eq!(serialize(&project(&trefoil, &c).unwrap()), "_");
        }
        let hopf = parse("O1+ U2+ / O2+ U1+").unwrap();
        assert_eq!(project(&hopf, &"00".parse().unwrap()).unwrap(), hopf);
        assert_eq!(serialize(&project(&hopf, &"01".parse().unwrap()).unwrap()), "_ / _");
    }

    #[test]
    fn free_parity_examples() {
        let trefoil = parse("O1+ O2+ U1+ U2+").unwrap();
        let c = TwoColouring::base(1);
        assert_eq!(odd_set(&free_two_colour_parity(&trefoil.forget(), &c).unwrap()), [1, 2]);
        let kink = parse("O1+ U1+").unwrap();
        assert!(free_two_colour_parity(&kink.forget(), &c).unwrap().is_all_even());
    }
}
