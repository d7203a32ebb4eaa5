//! Writhe-type invariants.

use crate::colouring::{generating_set, require_colourable, TwoColouring};
use crate::diagram::{GaussDiagram, Sign};
use crate::error::{Error, Result};
use crate::parity::{colour_odd_flags, ip_self_parity};

/// Component count above which [`two_colour_writhe_fast`] refuses to run; the
/// output alone has 2^(n-1) entries.
pub const DEFAULT_COMPONENT_CAP: usize = 20;

/// Signed count of the chords that are odd under `c`.
pub fn writhe(d: &GaussDiagram, c: &TwoColouring) -> Result<i64> {
    c.check_against(d)?;
    Ok(writhe_unchecked(d, c))
}

fn writhe_unchecked(d: &GaussDiagram, c: &TwoColouring) -> i64 {
    colour_odd_flags(d, c)
        .into_iter()
        .zip(d.chords())
        .filter(|(odd, _)| *odd)
        .map(|(_, ch)| ch.sign.value())
        .sum()
}

/// J² by direct evaluation of every generating-set colouring. Sorted ascending.
pub fn two_colour_writhe_enum(d: &GaussDiagram) -> Result<Vec<i64>> {
    require_colourable(d)?;
    let mut j2: Vec<i64> = generating_set(d.circles().len())
        .iter()
        .map(|c| writhe_unchecked(d, c))
        .collect();
    j2.sort_unstable();
    Ok(j2)
}

/// Writhes of the base colouring and of its one- and two-component duals,
/// gathered in a single pass over the chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTables {
    pub base: i64,
    /// `single[i]` is the writhe after dualizing component `i`.
    pub single: Vec<i64>,
    /// `pair[i][j]` is the writhe after dualizing components `i` and `j` (`i != j`).
    pub pair: Vec<Vec<i64>>,
}

impl DualTables {
    pub fn new(d: &GaussDiagram) -> Result<Self> {
        require_colourable(d)?;
        let n = d.circles().len();
        let base_colouring = TwoColouring::base(n);
        let odd = colour_odd_flags(d, &base_colouring);

        let mut base = 0;
        // Σ(C^i ∩ even) - Σ(C^i ∩ odd)
        let mut flip = vec![0i64; n];
        // Σ(C^i ∩ C^j ∩ odd) - Σ(C^i ∩ C^j ∩ even)
        let mut shared = vec![vec![0i64; n]; n];
        for (chord, &is_odd) in d.chords().iter().zip(&odd) {
            let s = chord.sign.value();
            if is_odd {
                base += s;
            }
            if chord.is_mixed() {
                let (i, j) = (chord.over.component, chord.under.component);
                let delta = if is_odd { -s } else { s };
                flip[i] += delta;
                flip[j] += delta;
                shared[i][j] -= delta;
                shared[j][i] -= delta;
            }
        }

        let single: Vec<i64> = flip.iter().map(|f| base + f).collect();
        let mut pair = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    pair[i][j] = single[i] + single[j] + 2 * shared[i][j] - base;
                }
            }
        }
        Ok(DualTables { base, single, pair })
    }

    /// Writhe of the colouring obtained by dualizing the base on `support`.
    ///
    /// Weights 0, 1 and 2 are table lookups; heavier supports use
    /// `Σ_{k<l} J_{p_k p_l} - (m-2) Σ_s J_{p_s} + (m-1)(m-2)/2 J_base`.
    pub fn writhe_of_support(&self, support: &[usize]) -> i64 {
        match *support {
            [] => self.base,
            [i] => self.single[i],
            [i, j] => self.pair[i][j],
            _ => {
                let m = support.len() as i64;
                let mut pairs = 0;
                for (k, &p) in support.iter().enumerate() {
                    for &q in &support[k + 1..] {
                        pairs += self.pair[p][q];
                    }
                }
                let singles: i64 = support.iter().map(|&p| self.single[p]).sum();
                pairs - (m - 2) * singles + (m - 1) * (m - 2) / 2 * self.base
            }
        }
    }

    pub fn writhe_of(&self, c: &TwoColouring) -> i64 {
        let support: Vec<usize> = (0..c.len()).filter(|&i| c.bit(i)).collect();
        self.writhe_of_support(&support)
    }
}

/// J² from the dual tables; quadratic crossing-level work.
pub fn two_colour_writhe_fast(d: &GaussDiagram) -> Result<Vec<i64>> {
    two_colour_writhe_fast_capped(d, Some(DEFAULT_COMPONENT_CAP))
}

/// As [`two_colour_writhe_fast`] with an explicit component cap (`None` lifts it).
pub fn two_colour_writhe_fast_capped(d: &GaussDiagram, cap: Option<usize>) -> Result<Vec<i64>> {
    let n = d.circles().len();
    if let Some(cap) = cap {
        if n > cap {
            return Err(Error::TooManyComponents { components: n, cap });
        }
    }
    let tables = DualTables::new(d)?;
    let mut j2: Vec<i64> = generating_set(n).iter().map(|c| tables.writhe_of(c)).collect();
    j2.sort_unstable();
    Ok(j2)
}

/// Signed count of odd self-crossings; the same for every colouring.
pub fn self_writhe(d: &GaussDiagram) -> Result<i64> {
    require_colourable(d)?;
    let odd = colour_odd_flags(d, &TwoColouring::base(d.circles().len()));
    Ok(d.chords()
        .iter()
        .zip(odd)
        .filter(|(c, odd)| c.is_self() && *odd)
        .map(|(c, _)| c.sign.value())
        .sum())
}

pub fn naive_writhe(d: &GaussDiagram) -> i64 {
    d.chords().iter().filter(|c| c.is_mixed()).map(|c| c.sign.value()).sum()
}

/// `lk[i][j]` is the signed count of crossings between components i and j,
/// without the classical factor of one half.
pub fn linking_matrix(d: &GaussDiagram) -> Vec<Vec<i64>> {
    let n = d.circles().len();
    let mut lk = vec![vec![0; n]; n];
    for c in d.chords().iter().filter(|c| c.is_mixed()) {
        let (i, j) = (c.over.component, c.under.component);
        lk[i][j] += c.sign.value();
        lk[j][i] += c.sign.value();
    }
    lk
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IpWrithe {
    pub self_writhe: i64,
    /// IP writhe if every mixed crossing is IP-even, and if every one is IP-odd.
    pub candidates: [i64; 2],
}

pub fn ip_self_writhe(d: &GaussDiagram) -> Result<IpWrithe> {
    let p = ip_self_parity(d)?;
    let self_writhe: i64 = p
        .odd_labels()
        .map(|l| d.chord_by_label(l).expect("label from d").sign.value())
        .sum();
    Ok(IpWrithe {
        self_writhe,
        candidates: [self_writhe, self_writhe + naive_writhe(d)],
    })
}

/// Height `m - n_-` of the alternately coloured smoothing attached to `c`,
/// where `m` counts 1-resolutions: positive odd and negative even crossings.
pub fn smoothing_height(d: &GaussDiagram, c: &TwoColouring) -> Result<i64> {
    c.check_against(d)?;
    let odd = colour_odd_flags(d, c);
    let ones = d
        .chords()
        .iter()
        .zip(odd)
        .filter(|(ch, odd)| matches!((ch.sign, *odd), (Sign::Positive, true) | (Sign::Negative, false)))
        .count() as i64;
    Ok(ones - d.negative_count() as i64)
}

/// A colouring under which every chord is even, if one exists.
///
/// Self-chords have a fixed parity; a mixed chord between components i and j
/// at positions p and q is even iff `b_i ^ b_j = 1 ^ p ^ q (mod 2)`. The
/// constraints are solved with a parity union-find.
pub fn chequerboard_colouring(d: &GaussDiagram) -> Result<Option<TwoColouring>> {
    require_colourable(d)?;
    let n = d.circles().len();
    let mut parent: Vec<usize> = (0..n).collect();
    // offset[i] = b_i ^ b_parent[i]
    let mut offset = vec![false; n];

    fn find(parent: &mut [usize], offset: &mut [bool], i: usize) -> (usize, bool) {
        if parent[i] == i {
            return (i, false);
        }
        let (root, up) = find(parent, offset, parent[i]);
        offset[i] ^= up;
        parent[i] = root;
        (root, offset[i])
    }

    for c in d.chords() {
        let (p, q) = (c.over.position % 2 == 1, c.under.position % 2 == 1);
        if c.is_self() {
            if p == q {
                return Ok(None);
            }
            continue;
        }
        let want = !(p ^ q);
        let (ri, oi) = find(&mut parent, &mut offset, c.over.component);
        let (rj, oj) = find(&mut parent, &mut offset, c.under.component);
        if ri == rj {
            if oi ^ oj != want {
                return Ok(None);
            }
        } else {
            parent[ri] = rj;
            offset[ri] = oi ^ oj ^ want;
        }
    }
    let bits = (0..n).map(|i| find(&mut parent, &mut offset, i).1).collect();
    Ok(Some(TwoColouring::new(bits)))
}
