//! Exact computational engine for skein-theoretic dimension counting.
//!
//! Everything here is computed over the rational function field `Q(A)` in the
//! Kauffman variable `A` (with `q = A^2`), or over arbitrary-precision
//! integers. There is no floating point anywhere: a generic quantum parameter
//! is modelled by working in the function field itself, so every identity the
//! crate checks is checked exactly.
//!
//! The main layers, bottom up:
//!
//! - [`exactalg`] — Laurent polynomials, rational functions, big-integer
//!   matrices, Smith normal form, and Gaussian elimination over `Q(A)`.
//! - [`tlcat`] — the Temperley–Lieb category: planar matchings, diagram
//!   composition with loop evaluation, Jones–Wenzl projectors, Markov trace.
//! - [`bracket`] — Kauffman bracket evaluation of tangle and link diagrams,
//!   including defect-twisted evaluation.
//! - [`webs`] — the trivalent-web calculus obtained by cabling strands with
//!   the second Jones–Wenzl projector, and the braiding expansion constants
//!   in `End(V(2) ⊗ V(2))`.
//! - [`homology`] — chain complexes, homology with integral and finite
//!   coefficients, a registry of product 3-manifolds, and the intersection
//!   pairing.
//! - [`grading`] — central characters of type-A irreducibles and the degree
//!   map from labelled skeins to 1-cycles.
//! - [`dims`] — arithmetic functions and closed-form skein-module dimension
//!   tables for `(SL_2, Σ_g × S^1)` and `(SL_N, T^3)`.
//! - [`duality`] — executable dimension-equality checks for Langlands dual
//!   pairs `(SL_N, PGL_N)`.
//! - [`cocenter`] — a window-truncated cocenter estimator for twisted lattice
//!   algebras, used as an exploratory oracle next to the dimension tables.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bracket;
pub mod cocenter;
pub mod dims;
pub mod duality;
pub mod exactalg;
pub mod grading;
pub mod homology;
pub mod tlcat;
pub mod webs;
