//! Seeded random Gauss diagrams for tests and fuzzing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{GaussDiagram, Role, Sign, Token};

/// A random diagram with `components` components and `chords` chords.
///
/// Endpoints are shuffled and dealt into components. With `even` every
/// component gets an even number of endpoints, so the result is
/// 2-colourable; otherwise the split is arbitrary and components may be empty.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, components: usize, chords: usize, even: bool) -> GaussDiagram {
    assert!(components >= 1, "a diagram needs at least one component");
    let mut tokens = Vec::with_capacity(2 * chords);
    for label in 1..=chords as u32 {
        let sign = if rng.gen() { Sign::Positive } else { Sign::Negative };
        tokens.push(Token::new(label, Role::Over, sign));
        tokens.push(Token::new(label, Role::Under, sign));
    }
    tokens.shuffle(rng);

    let mut lengths = vec![0usize; components];
    if even {
        for _ in 0..chords {
            lengths[rng.gen_range(0..components)] += 2;
        }
    } else {
        for _ in 0..2 * chords {
            lengths[rng.gen_range(0..components)] += 1;
        }
    }
    let mut rest = tokens.as_slice();
    let words: Vec<Vec<Token>> = lengths
        .into_iter()
        .map(|len| {
            let (w, tail) = rest.split_at(len);
            rest = tail;
            w.to_vec()
        })
        .collect();
    GaussDiagram::from_words(&words).expect("every label placed once as O and once as U")
}

/// A random knot diagram with `chords` chords.
pub fn random_knot<R: Rng + ?Sized>(rng: &mut R, chords: usize) -> GaussDiagram {
    random_diagram(rng, 1, chords, true)
}
