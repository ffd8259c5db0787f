//! The Temperley–Lieb category over `Q(A)`.
//!
//! Objects are natural numbers (marked points on a line); morphisms from `m`
//! to `n` are `Q(A)`-linear combinations of planar matchings of `m` bottom
//! and `n` top points. Composition stacks diagrams and converts each closed
//! loop into the scalar `δ = -A^2 - A^-2`; the sign comes from the
//! skew-symmetric self-pairing of the defining two-dimensional
//! representation, and makes `δ` the quantum dimension of that object.

mod element;
mod jw;
mod matching;

pub use element::TlElement;
pub use jw::{jones_wenzl, JwProjector};
pub use matching::{basis, catalan, Point, PlanarMatching};

pub(crate) use element::DegreeTwoGraph;

use crate::exactalg::{LaurentPoly, Rat, RatFunc};
use core::fmt;

/// Value of a closed loop: `δ = -A^2 - A^-2`.
pub fn loop_value() -> RatFunc {
    RatFunc::from_poly(LaurentPoly::from_terms([
        (2, -Rat::from_integer(1.into())),
        (-2, -Rat::from_integer(1.into())),
    ]))
}

/// The quantum integer `[k] = (A^{2k} - A^{-2k})/(A^2 - A^-2)`, expanded as
/// the Laurent polynomial `A^{2(k-1)} + A^{2(k-3)} + ... + A^{-2(k-1)}`.
pub fn quantum_int(k: u32) -> RatFunc {
    let one = Rat::from_integer(1.into());
    RatFunc::from_poly(LaurentPoly::from_terms(
        (0..k).map(|i| (2 * (k as i64 - 1) - 4 * i as i64, one.clone())),
    ))
}

/// Markov trace of the identity-free loop count: `(-1)^n [n+1]`, the quantum
/// dimension of the `n`-th Jones–Wenzl image.
pub fn quantum_dim(n: u32) -> RatFunc {
    let d = quantum_int(n + 1);
    if n % 2 == 1 {
        -&d
    } else {
        d
    }
}

/// Errors from diagram-algebra operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TlError {
    /// Composition with mismatched middle boundary counts.
    BoundaryMismatch { top_of_first: u32, bottom_of_second: u32 },
    /// A pairing that is not a perfect matching of the boundary points.
    BadPairing,
    /// A pairing with crossing chords.
    NotPlanar,
    /// Trace closure of a non-square element.
    NotSquare { bottom: u32, top: u32 },
}

impl fmt::Display for TlError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TlError::BoundaryMismatch { top_of_first, bottom_of_second } => write!(
                f,
                "boundary mismatch: cannot glue {top_of_first} strands onto {bottom_of_second}"
            ),
            TlError::BadPairing => write!(f, "pairing is not a perfect matching of the boundary"),
            TlError::NotPlanar => write!(f, "pairing has crossing chords"),
            TlError::NotSquare { bottom, top } => {
                write!(f, "trace closure needs equal boundary counts, got {bottom} and {top}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_value_has_the_skew_sign() {
        assert_eq!(loop_value().to_string(), "-A^2 - A^-2");
    }

    #[test]
    fn quantum_integers_small_cases() {
        assert!(quantum_int(0).is_zero());
        assert!(quantum_int(1).is_one());
        assert_eq!(quantum_int(2).to_string(), "A^2 + A^-2");
        // [2]^2 = [1] + [3]
        let lhs = &quantum_int(2) * &quantum_int(2);
        let rhs = &quantum_int(1) + &quantum_int(3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn quantum_dim_one_is_delta() {
        assert_eq!(quantum_dim(1), loop_value());
    }
}
