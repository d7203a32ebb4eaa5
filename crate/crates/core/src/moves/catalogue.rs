//! Admissible local patterns for the third Reidemeister move.
//!
//! Label the strands of the triangle top (over both others), middle and
//! bottom (under both others). Each strand carries two adjacent endpoints.
//! A pattern records, for each strand, which chord it meets first, and the
//! signs of the three chords. The table lists every combination realised by
//! three oriented straight lines in the plane. It is closed under reversing
//! all three orders, which is what the move does.

/// One row of the catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct R3Pattern {
    /// The top strand meets the top/middle chord before the top/bottom chord.
    pub top_meets_middle_first: bool,
    /// The middle strand meets the top/middle chord before the middle/bottom chord.
    pub middle_meets_top_first: bool,
    /// The bottom strand meets the top/bottom chord before the middle/bottom chord.
    pub bottom_meets_top_first: bool,
    /// Signs (positive = true) of the top/middle, top/bottom, middle/bottom chords.
    pub positive: [bool; 3],
}

const fn row(t: bool, m: bool, b: bool, s_tm: bool, s_tb: bool, s_mb: bool) -> R3Pattern {
    R3Pattern {
        top_meets_middle_first: t,
        middle_meets_top_first: m,
        bottom_meets_top_first: b,
        positive: [s_tm, s_tb, s_mb],
    }
}

const F: bool = false;
const T: bool = true;

pub const R3_CATALOGUE: [R3Pattern; 16] = [
    row(F, F, F, F, F, F),
    row(F, F, F, T, T, T),
    row(F, F, T, F, T, T),
    row(F, F, T, T, F, F),
    row(F, T, F, F, T, F),
    row(F, T, F, T, F, T),
    row(F, T, T, F, F, T),
    row(F, T, T, T, T, F),
    row(T, F, F, F, F, T),
    row(T, F, F, T, T, F),
    row(T, F, T, F, T, F),
    row(T, F, T, T, F, T),
    row(T, T, F, F, T, T),
    row(T, T, F, T, F, F),
    row(T, T, T, F, F, F),
    row(T, T, T, T, T, T),
];

pub fn is_admissible(p: &R3Pattern) -> bool {
    R3_CATALOGUE.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn cross(a: (f64, f64), b: (f64, f64)) -> f64 {
        a.0 * b.1 - a.1 * b.0
    }

    /// Parameter along line (p, d) of its intersection with line (q, e).
    fn meet(p: (f64, f64), d: (f64, f64), q: (f64, f64), e: (f64, f64)) -> f64 {
        cross((q.0 - p.0, q.1 - p.1), e) / cross(d, e)
    }

    /// Rebuilds the table from random line arrangements; sign of a crossing is
    /// the sign of (over direction × under direction).
    #[test]
    fn catalogue_matches_planar_triangles() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut seen = BTreeSet::new();
        let mut pt = || (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        for _ in 0..20_000 {
            let (tp, td, mp, md, bp, bd) = (pt(), pt(), pt(), pt(), pt(), pt());
            if [cross(td, md), cross(td, bd), cross(md, bd)]
                .iter()
                .any(|x| x.abs() < 1e-6)
            {
                continue;
            }
            let t = meet(tp, td, mp, md) < meet(tp, td, bp, bd);
            let m = meet(mp, md, tp, td) < meet(mp, md, bp, bd);
            let b = meet(bp, bd, tp, td) < meet(bp, bd, mp, md);
            seen.insert(row(
                t,
                m,
                b,
                cross(td, md) > 0.0,
                cross(td, bd) > 0.0,
                cross(md, bd) > 0.0,
            ));
        }
        let table: BTreeSet<R3Pattern> = R3_CATALOGUE.iter().copied().collect();
        assert_eq!(seen, table);
    }

    #[test]
    fn closed_under_the_move() {
        for p in &R3_CATALOGUE {
            let q = R3Pattern {
                top_meets_middle_first: !p.top_meets_middle_first,
                middle_meets_top_first: !p.middle_meets_top_first,
                bottom_meets_top_first: !p.bottom_meets_top_first,
                ..*p
            };
            assert!(is_admissible(&q));
        }
    }
}
