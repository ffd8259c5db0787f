//! Kauffman bracket evaluation of framed tangle and link diagrams.
//!
//! Diagrams are encoded by arc incidence: each crossing names its four
//! incident arcs counterclockwise, plus the choice of over-strand. The
//! evaluator resolves every crossing into its two planar smoothings with
//! weights `A` and `A^-1`, so a diagram with `k` crossings becomes a sum of
//! `2^k` crossingless diagrams, each evaluated in the Temperley–Lieb
//! category. The result is invariant under Reidemeister moves II and III;
//! a positive R1 kink multiplies by `-A^3` (the diagrams are framed).

mod diagram;
mod resolve;
mod twist;

pub use diagram::{braid_to_tangle, ArcId, Crossing, LinkDiagram, TangleDiagram};
pub use resolve::{bracket_value, derive_crossing_expansion, resolve, CrossingExpansion};
pub use twist::{twisted_bracket, DefectMarking};

use core::fmt;

/// Errors from diagram encoding and evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketError {
    /// An arc id that does not occur exactly twice across crossings and
    /// boundary positions.
    MalformedIncidence { arc: ArcId, occurrences: usize },
    /// A smoothing state produced a non-planar boundary matching: the input
    /// encoding was not a planar diagram.
    NonPlanarState,
    /// A braid letter referencing a strand outside `1..strands`.
    BadBraidLetter { letter: i32, strands: u32 },
    /// Stacking tangles whose middle boundaries disagree.
    BoundaryMismatch { top_of_first: usize, bottom_of_second: usize },
    /// A defect character that is not a square root of unity in `Q(A)`.
    BadCharacter,
    /// A defect intersection referencing an arc the diagram does not have.
    UnknownArc { arc: ArcId },
    /// A link component meeting the defect circle an odd number of times;
    /// closed curves in a ball always intersect evenly.
    OddIntersectionParity { arc: ArcId },
}

impl fmt::Display for BracketError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketError::MalformedIncidence { arc, occurrences } => {
                write!(f, "arc {arc} occurs {occurrences} times; every arc must occur exactly twice")
            }
            BracketError::NonPlanarState => {
                write!(f, "smoothing produced a crossing matching; diagram encoding is not planar")
            }
            BracketError::BadBraidLetter { letter, strands } => {
                write!(f, "braid letter {letter} out of range for {strands} strands")
            }
            BracketError::BoundaryMismatch { top_of_first, bottom_of_second } => {
                write!(f, "cannot stack: {top_of_first} top strands onto {bottom_of_second} bottom strands")
            }
            BracketError::BadCharacter => {
                write!(f, "defect character must square to 1 in Q(A)")
            }
            BracketError::UnknownArc { arc } => write!(f, "defect references unknown arc {arc}"),
            BracketError::OddIntersectionParity { arc } => write!(
                f,
                "component through arc {arc} meets the defect an odd number of times"
            ),
        }
    }
}
