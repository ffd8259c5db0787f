//! Jones–Wenzl projectors via the Wenzl recursion.

use crate::exactalg::RatFunc;

use super::element::TlElement;
use super::{quantum_dim, TlError};

/// The `n`-th Jones–Wenzl projector: the unique idempotent of `TL_n` killed
/// by every cup-cap generator. Realises the `n`-th irreducible inside the
/// `n`-th tensor power of the defining representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JwProjector {
    n: u32,
    element: TlElement,
}

impl JwProjector {
    pub fn strands(&self) -> u32 {
        self.n
    }

    pub fn element(&self) -> &TlElement {
        &self.element
    }

    pub fn into_element(self) -> TlElement {
        self.element
    }

    /// `p . p == p`
    pub fn is_idempotent(&self) -> bool {
        self.element.compose(&self.element).expect("square element") == self.element
    }

    /// `e_i . p == 0` and `p . e_i == 0` for every generator.
    pub fn is_killed_by_cup_caps(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| {
            let e = TlElement::cup_cap(self.n, i);
            e.compose(&self.element).expect("square element").is_zero()
                && self.element.compose(&e).expect("square element").is_zero()
        })
    }

    /// Markov trace of the projector.
    pub fn closure(&self) -> Result<RatFunc, TlError> {
        self.element.closure()
    }
}

/// Wenzl recursion:
/// `p_1 = id`, `p_{k+1} = p_k ⊗ id - (Δ_{k-1}/Δ_k) (p_k ⊗ id) e_k (p_k ⊗ id)`
/// where `Δ_k = (-1)^k [k+1]` is the trace of `p_k`. The denominators `Δ_k`
/// are nonzero in `Q(A)`, so the recursion never degenerates at generic `q`.
pub fn jones_wenzl(n: u32) -> JwProjector {
    let mut p = TlElement::identity(n.min(1));
    for k in 1..n {
        let wide = p.tensor(&TlElement::identity(1)); // p_k ⊗ id in TL_{k+1}
        let e = TlElement::cup_cap(k + 1, k - 1);
        let mid = wide
            .compose(&e)
            .and_then(|x| x.compose(&wide))
            .expect("boundary counts agree in the recursion");
        let ratio = &quantum_dim(k - 1) / &quantum_dim(k);
        p = &wide - &mid.scaled(&ratio);
    }
    JwProjector { n, element: p }
}
