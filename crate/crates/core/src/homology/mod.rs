//! Chain-complex homology with integral and finite coefficients, a registry
//! of product 3-manifolds with labelled bases, cycle bookkeeping, and the
//! intersection pairing.
//!
//! Finite-coefficient homology is computed along two independent routes —
//! universal coefficients on top of integral Smith normal form, and a direct
//! reduction of the mod-`N` complex — and the two are compared on every
//! call. Registry manifolds are built from explicit product cell structures
//! rather than hard-coded homology, so the whole pipeline stays testable
//! against closed forms.

mod complex;
mod compute;
mod cycles;
mod registry;

pub use complex::ChainComplex;
pub use compute::{homology, picard, HomologyGroup, PicardInfo};
pub use cycles::{homologous, CycleOne, TwoChainWitness};
pub use registry::{
    intersection_pairing, registry, H1Generator, KunnethTag, Manifold, RegistryName,
};

use alloc::string::String;
use core::fmt;

/// Errors from complex validation and homology operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyError {
    /// Boundary matrices whose shapes do not match the cell counts.
    Shape { degree: usize },
    /// `d_k ∘ d_{k+1} != 0`; names the failing composition.
    BoundaryComposition { degree: usize },
    /// An unknown registry manifold name.
    UnknownManifold(String),
    /// Genus or dimension parameter out of range.
    BadParameter(String),
    /// Cycles over different moduli, or a modulus below 2.
    ModulusMismatch { left: u64, right: u64 },
    /// A chain failing the cycle condition, with the offending 0-cell.
    NotACycle { zero_cell: usize },
    /// A chain referencing a cell the complex does not have.
    UnknownCell { degree: usize, cell: usize },
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::Shape { degree } => {
                write!(f, "boundary matrix d{degree} has inconsistent dimensions")
            }
            HomologyError::BoundaryComposition { degree } => {
                write!(f, "d{degree} . d{} is nonzero", degree + 1)
            }
            HomologyError::UnknownManifold(name) => write!(f, "unknown manifold '{name}'"),
            HomologyError::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            HomologyError::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            HomologyError::NotACycle { zero_cell } => {
                write!(f, "chain is not a cycle: degrees do not balance at 0-cell {zero_cell}")
            }
            HomologyError::UnknownCell { degree, cell } => {
                write!(f, "chain references missing {degree}-cell {cell}")
            }
        }
    }
}
