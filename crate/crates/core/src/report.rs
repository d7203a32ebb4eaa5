//! Aggregated invariant profile and obstruction flags.

use serde::Serialize;

use crate::diagram::GaussDiagram;
use crate::error::Error;
use crate::invariants::{
    chequerboard_colouring, ip_self_writhe, linking_matrix, naive_writhe, self_writhe, two_colour_writhe_enum,
    two_colour_writhe_fast_capped, DEFAULT_COMPONENT_CAP,
};

/// How J² is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum J2Method {
    #[default]
    Fast,
    /// Direct enumeration over the generating set.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub method: J2Method,
    /// Component cap for the fast path; `None` lifts it.
    pub component_cap: Option<usize>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            method: J2Method::Fast,
            component_cap: Some(DEFAULT_COMPONENT_CAP),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flags {
    /// Some colouring makes every chord of this diagram even.
    pub chequerboard_certified: bool,
    /// J² has a nonzero entry.
    pub slice_obstructed: Option<bool>,
    /// J² differs from its negation as a multiset.
    pub amphichiral_obstructed: Option<bool>,
    /// 0 is not an entry of J².
    pub cb_concordance_obstructed: Option<bool>,
    /// Every component has zero signed mixed-crossing sum with the rest.
    pub compatible: bool,
}

/// Every invariant of one diagram. Fields that need a 2-colouring are `None`
/// on diagrams with degenerate components; IP fields are `None` when some
/// pairwise linking number is odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WritheProfile {
    pub components: usize,
    pub chords: usize,
    pub two_colourable: bool,
    pub j2: Option<Vec<i64>>,
    pub j2_self: Option<i64>,
    pub naive: i64,
    pub ip_self: Option<i64>,
    pub ip_candidates: Option<[i64; 2]>,
    pub lk: Vec<Vec<i64>>,
    pub flags: Flags,
}

pub fn report(d: &GaussDiagram) -> WritheProfile {
    report_with(d, ReportOptions::default())
}

pub fn report_with(d: &GaussDiagram, opts: ReportOptions) -> WritheProfile {
    let lk = linking_matrix(d);
    let naive = naive_writhe(d);
    let compatible = lk.iter().all(|row| row.iter().sum::<i64>() == 0);
    let two_colourable = d.circles().iter().all(|c| c.len() % 2 == 0);

    let j2 = if two_colourable {
        match opts.method {
            J2Method::Fast => two_colour_writhe_fast_capped(d, opts.component_cap),
            J2Method::Oracle => two_colour_writhe_enum(d),
        }
        .ok()
    } else {
        None
    };
    let j2_self = self_writhe(d).ok();
    let ip = match ip_self_writhe(d) {
        Ok(ip) => Some(ip),
        Err(Error::OddLinkingNumbers { .. }) => None,
        Err(e) => unreachable!("ip_self_writhe only fails on odd linking numbers: {e}"),
    };
    let chequerboard_certified = matches!(chequerboard_colouring(d), Ok(Some(_)));

    let flags = Flags {
        chequerboard_certified,
        slice_obstructed: j2.as_ref().map(|j| j.iter().any(|&x| x != 0)),
        amphichiral_obstructed: j2.as_ref().map(|j| {
            let mut neg: Vec<i64> = j.iter().map(|x| -x).collect();
            neg.sort_unstable();
            &neg != j
        }),
        cb_concordance_obstructed: j2.as_ref().map(|j| !j.contains(&0)),
        compatible,
    };

    WritheProfile {
        components: d.circles().len(),
        chords: d.chords().len(),
        two_colourable,
        j2,
        j2_self,
        naive,
        ip_self: ip.map(|ip| ip.self_writhe),
        ip_candidates: ip.map(|ip| ip.candidates),
        lk,
        flags,
    }
}
