//! Cabling webs into the strand calculus and solving the braiding expansion.

use alloc::vec;
use alloc::vec::Vec;

use crate::bracket::{braid_to_tangle, resolve};
use crate::exactalg::{QaMatrix, RatFunc};
use crate::tlcat::{basis, jones_wenzl, loop_value, DegreeTwoGraph, PlanarMatching, TlElement};

use super::web::{WebDiagram, WebEnd};
use super::WebError;

/// A cabled web: an element of the strand calculus on doubled boundary
/// points, fixed under pre- and post-composition with the doubling clasps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CabledElement {
    element: TlElement,
}

impl CabledElement {
    pub fn element(&self) -> &TlElement {
        &self.element
    }

    pub fn into_element(self) -> TlElement {
        self.element
    }

    /// Scalar value of a closed cabled web (no boundary).
    pub fn scalar(&self) -> Option<RatFunc> {
        if self.element.bottom_count() != 0 || self.element.top_count() != 0 {
            return None;
        }
        let empty = PlanarMatching::from_pairs(0, 0, &[]).expect("empty matching");
        Some(self.element.coeff(&empty))
    }
}

/// Evaluates a web in the doubled strand calculus. Each edge contributes its
/// clasp expansion `id - δ^{-1} e` (one clasp per edge); each free circle
/// contributes the closed clasped circle, i.e. the quantum dimension of the
/// doubled object.
pub fn cable(w: &WebDiagram) -> Result<CabledElement, WebError> {
    let edges = w.edges();
    let e_count = edges.len();
    assert!(e_count <= 20, "cabling expands 2^{e_count} clasp states");

    let m = 2 * w.bottom_count();
    let n = 2 * w.top_count();
    let delta = loop_value();
    let neg_delta_inv = -&delta.recip().expect("delta is nonzero");

    // strand-end node ids: 4 per edge, (edge, end, side) -> 4e + 2*end + side
    let node = |e: usize, end: usize, side: usize| 4 * e + 2 * end + side;
    let total_nodes = 4 * e_count;

    // vertex connectors: for slots s0, s1, s2 counterclockwise, join
    // (s_k, L) to (s_{k+1}, R), where L/R are taken looking into the edge
    // from its attachment; boundary ends map straight to doubled points
    let mut vertex_slots: Vec<[(usize, usize); 3]> = vec![[(usize::MAX, 0); 3]; w.vertex_count()];
    for (ei, &(a, b)) in edges.iter().enumerate() {
        for (end, attach) in [(0usize, a), (1usize, b)] {
            if let WebEnd::Vertex { vertex, slot } = attach {
                vertex_slots[vertex][slot as usize] = (ei, end);
            }
        }
    }

    // boundary mapping for path endpoints: bottom i -> points 2i (L), 2i+1 (R);
    // top j -> points 2j+1 (L), 2j (R), i.e. left/right reverse on the top edge
    let boundary_point = |attach: WebEnd, side: usize| -> Option<u32> {
        match attach {
            WebEnd::Bottom(i) => Some(2 * i + side as u32),
            WebEnd::Top(j) => Some(m + 2 * j + (1 - side as u32)),
            WebEnd::Vertex { .. } => None,
        }
    };

    let mut out = TlElement::zero(m, n);
    for state in 0u32..1 << e_count {
        let mut graph = DegreeTwoGraph::new(total_nodes);
        let mut coeff = RatFunc::one();
        for ei in 0..e_count {
            if (state >> ei) & 1 == 0 {
                // identity insert: a strand leaving one end on its right
                // arrives at the other end on its left
                graph.add_edge(node(ei, 0, 0), node(ei, 1, 1));
                graph.add_edge(node(ei, 0, 1), node(ei, 1, 0));
            } else {
                // turnback insert from the clasp expansion
                graph.add_edge(node(ei, 0, 0), node(ei, 0, 1));
                graph.add_edge(node(ei, 1, 0), node(ei, 1, 1));
                coeff *= &neg_delta_inv;
            }
        }
        for slots in &vertex_slots {
            for k in 0..3 {
                let (e1, end1) = slots[k];
                let (e2, end2) = slots[(k + 1) % 3];
                graph.add_edge(node(e1, end1, 0), node(e2, end2, 1));
            }
        }

        let (endpoints, loops) = graph.path_endpoints();
        for _ in 0..loops {
            coeff *= &delta;
        }

        // translate strand-end endpoints to boundary points
        let to_boundary = |p: usize| -> u32 {
            let (e, rest) = (p / 4, p % 4);
            let (end, side) = (rest / 2, rest % 2);
            let attach = if end == 0 { edges[e].0 } else { edges[e].1 };
            boundary_point(attach, side).expect("path endpoints lie on the boundary")
        };
        let pairs: Vec<(u32, u32)> = endpoints
            .iter()
            .map(|&(x, y)| {
                let (x, y) = (to_boundary(x), to_boundary(y));
                (x.min(y), x.max(y))
            })
            .collect();
        let matching =
            PlanarMatching::from_encoded(m, n, pairs).map_err(|_| WebError::NotPlanarWeb)?;
        out = &out + &TlElement::from_scaled_matching(matching, coeff);
    }

    // free circles: closed clasped loops, each worth the doubled quantum dim
    if w.closed_circles() > 0 {
        let circle_value = jones_wenzl(2).closure().expect("square projector");
        let mut scale = RatFunc::one();
        for _ in 0..w.closed_circles() {
            scale *= &circle_value;
        }
        out = out.scaled(&scale);
    }

    Ok(CabledElement { element: out })
}

/// The doubling clasp on both boundary groups: `p_2 ⊗ p_2` in the
/// four-strand algebra.
pub fn double_clasp() -> TlElement {
    let p2 = jones_wenzl(2).into_element();
    p2.tensor(&p2)
}

/// The three-element basis of the doubled endomorphism space: identity,
/// vertex pair, cup-cap, all clasped. Linear independence over `Q(A)` is
/// checked by exact rank computation in the matching basis.
pub fn end_space_v2v2() -> Result<[CabledElement; 3], WebError> {
    let id = cable(&WebDiagram::double_identity())?;
    let h = cable(&WebDiagram::h_vertical())?;
    let u = cable(&WebDiagram::cup_cap())?;
    let rank = coordinate_matrix(&[&id, &h, &u]).rank();
    if rank != 3 {
        return Err(WebError::SingularSystem);
    }
    Ok([id, h, u])
}

/// Coordinates of cabled elements in the four-strand matching basis, one row
/// per element.
pub fn coordinate_matrix(elements: &[&CabledElement]) -> QaMatrix {
    let b = basis(4, 4);
    QaMatrix::from_rows(
        elements
            .iter()
            .map(|e| b.iter().map(|m| e.element().coeff(m)).collect())
            .collect(),
    )
}

/// Braiding expansion of the doubled strands and related data.
#[derive(Clone, Debug)]
pub struct WebConstants {
    /// Coefficient of the clasped identity.
    pub a: RatFunc,
    /// Coefficient of the vertex pair.
    pub b: RatFunc,
    /// Coefficient of the clasped cup-cap.
    pub c: RatFunc,
    /// The clasped doubled braiding itself.
    pub braiding: CabledElement,
    /// Coordinates of the quarter-turned vertex pair in the same basis.
    pub rotated_h: [RatFunc; 3],
}

/// Expands the braiding of two doubled strands in the endomorphism basis:
/// `braiding = a·id + b·H + c·U` with an exactly zero residual. The doubled
/// positive crossing is the four-crossing cable of a single crossing,
/// clasped on both sides.
pub fn solve_abc() -> Result<WebConstants, WebError> {
    let [id, h, u] = end_space_v2v2()?;

    // 2-cable of one positive crossing: strands (1,2) cross over (3,4)
    let cabled_crossing =
        braid_to_tangle(&[2, 1, 3, 2], 4).expect("valid braid word");
    let raw = resolve(&cabled_crossing).expect("well-formed diagram");
    let clasp = double_clasp();
    let clasped = clasp
        .compose(&raw)
        .and_then(|x| x.compose(&clasp))
        .expect("boundary counts agree");
    let braiding = CabledElement { element: clasped };

    let coords = solve_in_basis(&braiding, [&id, &h, &u])?;

    // exact residual check: re-substitute and compare
    let recombined = &(&id.element().scaled(&coords[0])
        + &h.element().scaled(&coords[1]))
        + &u.element().scaled(&coords[2]);
    if &recombined != braiding.element() {
        return Err(WebError::SingularSystem);
    }

    let h_rot = cable(&WebDiagram::h_horizontal())?;
    let rotated_h = solve_in_basis(&h_rot, [&id, &h, &u])?;

    let [a, b, c] = coords;
    Ok(WebConstants { a, b, c, braiding, rotated_h })
}

/// Expresses a cabled element in a three-element basis by exact linear solve.
fn solve_in_basis(
    target: &CabledElement,
    basis_elems: [&CabledElement; 3],
) -> Result<[RatFunc; 3], WebError> {
    let b = basis(4, 4);
    let mat = QaMatrix::from_rows(
        b.iter()
            .map(|m| basis_elems.iter().map(|e| e.element().coeff(m)).collect())
            .collect(),
    );
    let rhs: Vec<RatFunc> = b.iter().map(|m| target.element().coeff(m)).collect();
    let x = mat.solve(&rhs).ok_or(WebError::SingularSystem)?;
    Ok([x[0].clone(), x[1].clone(), x[2].clone()])
}
