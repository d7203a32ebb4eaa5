#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vparity::random::random_diagram;
use vparity::{GaussDiagram, TwoColouring};

pub fn seeded(seed: u64, n: usize, k: usize, even: bool) -> GaussDiagram {
    random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), n, k, even)
}

/// Colourings found by trying every colour assignment on the intervals of
/// each circle and keeping those that alternate at every endpoint. A circle
/// with `len` endpoints has `max(len, 1)` intervals; interval `p` ends at
/// endpoint `p`, and interval 0 holds the basepoint.
pub fn interval_colourings(d: &GaussDiagram) -> Vec<TwoColouring> {
    let per_circle: Vec<Vec<bool>> = d
        .circles()
        .iter()
        .map(|c| {
            let len = c.len();
            let arcs = len.max(1);
            let mut starts = Vec::new();
            for mask in 0u64..1 << arcs {
                let colour = |a: usize| mask >> a & 1 == 1;
                // the endpoint p separates interval p from interval p + 1
                if (0..len).all(|p| colour(p) != colour((p + 1) % arcs)) {
                    starts.push(colour(0));
                }
            }
            starts
        })
        .collect();
    let mut out = vec![Vec::new()];
    for options in &per_circle {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<bool>| {
                options.iter().map(move |&b| {
                    let mut v = prefix.clone();
                    v.push(b);
                    v
                })
            })
            .collect();
    }
    let mut out: Vec<TwoColouring> = out.into_iter().map(TwoColouring::new).collect();
    out.sort();
    out
}
