//! Parity invariants of virtual links.
//!
//! Diagrams are Gauss diagrams given as Gauss codes. The 2-colour parity
//! assigns even/odd to each crossing from a proper 2-colouring of the arcs;
//! its signed odd-crossing counts over a generating set of colourings form
//! the 2-colour writhe J².
//!
//! ```
//! use vparity::{parse, report};
//!
//! let trefoil = parse("O1+ O2+ U1+ U2+").unwrap();
//! assert_eq!(report(&trefoil).j2, Some(vec![2]));
//! ```

pub mod code;
pub mod colouring;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod moves;
pub mod parity;
pub mod random;
pub mod report;
pub mod search;

pub use code::{parse, serialize, serialize_raw};
pub use colouring::{colourings, generating_set, incoming_colour, GeneratingSet, TwoColouring};
pub use diagram::{
    Chord, ChordLayout, Endpoint, GaussDiagram, Role, Sign, SimpleChord, SimpleGaussDiagram, Slot, Token, TransformKind,
};
pub use error::{Error, Result};
pub use invariants::{
    chequerboard_colouring, ip_self_writhe, linking_matrix, naive_writhe, self_writhe, smoothing_height,
    two_colour_writhe_enum, two_colour_writhe_fast, two_colour_writhe_fast_capped, writhe, DualTables, IpWrithe,
    DEFAULT_COMPONENT_CAP,
};
pub use parity::{
    free_two_colour_parity, gaussian_parity, ip_self_parity, naive_parity, project, two_colour_parity, Parity,
    ParityAssignment, Scheme,
};
pub use report::{report, report_with, Flags, J2Method, ReportOptions, WritheProfile};
