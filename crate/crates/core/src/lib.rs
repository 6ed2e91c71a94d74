//! Ramsey and star-critical Ramsey numbers for a red star `K_{1,n}` versus a blue
//! star-plus-an-edge `K_{1,m}+e`.
//!
//! The crate provides the extremal colorings ([`constructions`]), detectors for
//! both targets ([`detectors`]), an exhaustive arrowing oracle ([`search`]), the
//! closed forms ([`formulas`]) and a text format for colorings ([`io`]).

pub mod coloring;
pub mod constructions;
pub mod detectors;
pub mod error;
pub mod formulas;
pub mod io;
pub mod search;

pub use coloring::{HostSpec, TwoColoring, Vertex};
pub use constructions::{CirculantSpec, Construction};
pub use detectors::{is_good_coloring, TargetPair};
pub use error::{ColoringError, ConstructionError, DocumentError, FormulaError, SearchError, TargetError};
pub use formulas::{classify, r_formula, r_star_formula, CaseTag};
pub use search::{SearchConfig, SearchOutcome, Verdict};
