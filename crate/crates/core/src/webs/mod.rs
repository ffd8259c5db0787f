//! Trivalent web calculus realised inside the strand calculus by cabling.
//!
//! Every web edge carries the three-dimensional object `V(2)`, modelled as a
//! doubled strand clasped by the second Jones–Wenzl projector; every
//! trivalent vertex becomes the unique turnback-free planar connector of its
//! three doubled legs. Expanding each clasp (`p_2 = id - δ^{-1} e`) turns a
//! web with `E` edges into a sum of `2^E` crossingless diagrams, which the
//! Temperley–Lieb engine evaluates directly.

mod cable;
mod web;

pub use cable::{cable, end_space_v2v2, solve_abc, CabledElement, WebConstants};
pub use web::{WebDiagram, WebEnd};

use core::fmt;

/// Errors from web encoding and the constant solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WebError {
    /// A vertex whose three slots are not used exactly once each.
    Valence { vertex: usize },
    /// A boundary position missing or used twice.
    BadBoundary,
    /// The cabled diagram produced a crossing matching: the web encoding was
    /// not planar.
    NotPlanarWeb,
    /// The linear system for the braiding expansion degenerated (impossible
    /// at generic `q`; reported rather than trusted).
    SingularSystem,
}

impl fmt::Display for WebError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WebError::Valence { vertex } => {
                write!(f, "vertex {vertex} does not have exactly three attached edge ends")
            }
            WebError::BadBoundary => write!(f, "boundary positions must each be used exactly once"),
            WebError::NotPlanarWeb => write!(f, "web encoding is not planar"),
            WebError::SingularSystem => {
                write!(f, "endomorphism basis degenerated; braiding expansion not solvable")
            }
        }
    }
}
