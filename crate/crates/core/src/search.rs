//! Exhaustive search for a 2-component diagram whose linking matrix vanishes
//! while the 2-colour writhe does not.

use crate::diagram::{GaussDiagram, Role, Sign, Token};
use crate::invariants::{linking_matrix, self_writhe, two_colour_writhe_enum};

/// First hit of [`lk_zero_witness`]: zero linking number, J² = (-2, 2).
pub const LK_ZERO_WITNESS: &str = "U1+ U2+ U3- U4- / O1+ O2+ O4- O3-";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: GaussDiagram,
    pub j2: Vec<i64>,
    /// Diagrams evaluated up to and including the witness.
    pub examined: u64,
}

/// All perfect matchings of `0..2k`, each as `pair[i] = partner of i`, in
/// lexicographic order of the partner of the first free point.
fn matchings(points: usize) -> Vec<Vec<usize>> {
    fn go(m: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = m.iter().position(Option::is_none) else {
            out.push(m.iter().map(|x| x.unwrap()).collect());
            return;
        };
        for j in i + 1..m.len() {
            if m[j].is_none() {
                m[i] = Some(j);
                m[j] = Some(i);
                go(m, out);
                m[i] = None;
                m[j] = None;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![None; points], &mut out);
    out
}

/// Builds the diagram whose endpoints `0..split` lie on the first component
/// and the rest on the second. Chords are labelled in order of their first
/// endpoint; bit `c` of `overs` puts the over endpoint first, bit `c` of
/// `signs` makes the chord positive.
fn assemble(pairing: &[usize], split: usize, overs: u32, signs: u32) -> GaussDiagram {
    let mut label = vec![0u32; pairing.len()];
    let mut tokens = Vec::with_capacity(pairing.len());
    let mut next = 0u32;
    for (i, &j) in pairing.iter().enumerate() {
        let (c, first) = if i < j {
            next += 1;
            label[i] = next;
            (next - 1, true)
        } else {
            (label[j] - 1, false)
        };
        let over_first = overs >> c & 1 == 1;
        let role = if first == over_first { Role::Over } else { Role::Under };
        let sign = if signs >> c & 1 == 1 {
            Sign::Positive
        } else {
            Sign::Negative
        };
        tokens.push(Token::new(c + 1, role, sign));
    }
    let words = vec![tokens[..split].to_vec(), tokens[split..].to_vec()];
    GaussDiagram::from_words(&words).expect("matching gives a valid diagram")
}

/// Every 2-component diagram with `chords` chords and even components, in a
/// fixed order: by first-component length, chord pattern, over/under choice,
/// then signs.
pub fn two_component_diagrams(chords: usize) -> impl Iterator<Item = GaussDiagram> {
    let points = 2 * chords;
    let patterns = matchings(points);
    let masks = 1u32 << chords;
    (0..=points).step_by(2).flat_map(move |split| {
        let patterns = patterns.clone();
        patterns.into_iter().flat_map(move |p| {
            (0..masks).flat_map(move |overs| {
                let p = p.clone();
                (0..masks).map(move |signs| assemble(&p, split, overs, signs))
            })
        })
    })
}

/// Scans chord counts `0..=max_chords` in order and returns the first
/// diagram with zero linking matrix, no odd self-crossing writhe and a
/// nonzero 2-colour writhe. J² is computed by direct enumeration.
pub fn lk_zero_witness(max_chords: usize) -> Option<SearchOutcome> {
    let mut examined = 0u64;
    for k in 0..=max_chords {
        for d in two_component_diagrams(k) {
            examined += 1;
            if linking_matrix(&d).iter().flatten().any(|&x| x != 0) {
                continue;
            }
            if self_writhe(&d).ok() != Some(0) {
                continue;
            }
            let j2 = two_colour_writhe_enum(&d).expect("even components");
            if j2.iter().any(|&x| x != 0) {
                return Some(SearchOutcome {
                    witness: d,
                    j2,
                    examined,
                });
            }
        }
    }
    None
}
