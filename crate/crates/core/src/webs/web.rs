//! Combinatorial webs: trivalent graphs in the cylinder.

use alloc::vec::Vec;

use super::WebError;

/// Attachment point of one end of a web edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WebEnd {
    /// Slot `0..3` of a trivalent vertex, listed counterclockwise.
    Vertex { vertex: usize, slot: u8 },
    /// Position on the bottom boundary, left to right.
    Bottom(u32),
    /// Position on the top boundary, left to right.
    Top(u32),
}

/// A trivalent graph in the cylinder with ordered boundary points. Every
/// edge implicitly carries the doubled, clasped strand; `closed_circles`
/// counts free circle components (edges with no attachment data).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebDiagram {
    vertex_count: usize,
    edges: Vec<(WebEnd, WebEnd)>,
    closed_circles: u32,
    bottom_count: u32,
    top_count: u32,
}

impl WebDiagram {
    pub fn new(
        vertex_count: usize,
        edges: Vec<(WebEnd, WebEnd)>,
        closed_circles: u32,
        bottom_count: u32,
        top_count: u32,
    ) -> Result<Self, WebError> {
        let w = WebDiagram { vertex_count, edges, closed_circles, bottom_count, top_count };
        w.validate()?;
        Ok(w)
    }

    fn validate(&self) -> Result<(), WebError> {
        let mut slot_used = alloc::vec![[false; 3]; self.vertex_count];
        let mut bottom_used = alloc::vec![false; self.bottom_count as usize];
        let mut top_used = alloc::vec![false; self.top_count as usize];
        for &(a, b) in &self.edges {
            for end in [a, b] {
                match end {
                    WebEnd::Vertex { vertex, slot } => {
                        if vertex >= self.vertex_count || slot > 2 {
                            return Err(WebError::Valence { vertex });
                        }
                        if slot_used[vertex][slot as usize] {
                            return Err(WebError::Valence { vertex });
                        }
                        slot_used[vertex][slot as usize] = true;
                    }
                    WebEnd::Bottom(i) => {
                        if i >= self.bottom_count || bottom_used[i as usize] {
                            return Err(WebError::BadBoundary);
                        }
                        bottom_used[i as usize] = true;
                    }
                    WebEnd::Top(j) => {
                        if j >= self.top_count || top_used[j as usize] {
                            return Err(WebError::BadBoundary);
                        }
                        top_used[j as usize] = true;
                    }
                }
            }
        }
        if let Some(vertex) = slot_used.iter().position(|s| s.iter().any(|u| !u)) {
            return Err(WebError::Valence { vertex });
        }
        if bottom_used.iter().any(|u| !u) || top_used.iter().any(|u| !u) {
            return Err(WebError::BadBoundary);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(WebEnd, WebEnd)] {
        &self.edges
    }

    pub fn closed_circles(&self) -> u32 {
        self.closed_circles
    }

    pub fn bottom_count(&self) -> u32 {
        self.bottom_count
    }

    pub fn top_count(&self) -> u32 {
        self.top_count
    }

    /// A single strand from bottom to top.
    pub fn single_strand() -> Self {
        WebDiagram::new(0, alloc::vec![(WebEnd::Bottom(0), WebEnd::Top(0))], 0, 1, 1)
            .expect("well-formed")
    }

    /// A free circle.
    pub fn circle() -> Self {
        WebDiagram::new(0, Vec::new(), 1, 0, 0).expect("well-formed")
    }

    /// Two vertices joined by three parallel edges.
    pub fn theta() -> Self {
        // lower vertex v0 sees the legs counterclockwise as (right, middle,
        // left); upper vertex v1 as (left, middle, right)
        let v0 = |slot| WebEnd::Vertex { vertex: 0, slot };
        let v1 = |slot| WebEnd::Vertex { vertex: 1, slot };
        WebDiagram::new(
            2,
            alloc::vec![
                (v0(2), v1(0)), // left edge
                (v0(1), v1(1)), // middle edge
                (v0(0), v1(2)), // right edge
            ],
            0,
            0,
            0,
        )
        .expect("well-formed")
    }

    /// The vertical vertex pair in `End(V(2) ⊗ V(2))`: two bottom legs into
    /// a lower vertex, an internal edge up, two top legs out of the upper
    /// vertex.
    pub fn h_vertical() -> Self {
        let v0 = |slot| WebEnd::Vertex { vertex: 0, slot };
        let v1 = |slot| WebEnd::Vertex { vertex: 1, slot };
        WebDiagram::new(
            2,
            alloc::vec![
                (WebEnd::Bottom(0), v0(0)), // down-left leg
                (WebEnd::Bottom(1), v0(1)), // down-right leg
                (v0(2), v1(0)),             // internal edge (up at v0, down at v1)
                (WebEnd::Top(1), v1(1)),    // up-right leg
                (WebEnd::Top(0), v1(2)),    // up-left leg
            ],
            0,
            2,
            2,
        )
        .expect("well-formed")
    }

    /// The same vertex pair rotated a quarter turn: internal edge horizontal,
    /// one bottom and one top leg at each vertex.
    pub fn h_horizontal() -> Self {
        let v0 = |slot| WebEnd::Vertex { vertex: 0, slot };
        let v1 = |slot| WebEnd::Vertex { vertex: 1, slot };
        WebDiagram::new(
            2,
            alloc::vec![
                (v0(0), v1(1)),             // internal edge, pointing right at v0
                (WebEnd::Top(0), v0(1)),    // up leg of the left vertex
                (WebEnd::Bottom(0), v0(2)), // down leg of the left vertex
                (WebEnd::Top(1), v1(0)),    // up leg of the right vertex
                (WebEnd::Bottom(1), v1(2)), // down leg of the right vertex
            ],
            0,
            2,
            2,
        )
        .expect("well-formed")
    }

    /// Both doubled strands straight through.
    pub fn double_identity() -> Self {
        WebDiagram::new(
            0,
            alloc::vec![
                (WebEnd::Bottom(0), WebEnd::Top(0)),
                (WebEnd::Bottom(1), WebEnd::Top(1)),
            ],
            0,
            2,
            2,
        )
        .expect("well-formed")
    }

    /// Clasped cup-cap: the two bottom legs joined, the two top legs joined.
    pub fn cup_cap() -> Self {
        WebDiagram::new(
            0,
            alloc::vec![
                (WebEnd::Bottom(0), WebEnd::Bottom(1)),
                (WebEnd::Top(0), WebEnd::Top(1)),
            ],
            0,
            2,
            2,
        )
        .expect("well-formed")
    }

    /// Rotates each vertex's slot labels by one step; an isotopy of the
    /// embedded web, so cabling must be unchanged.
    pub fn with_rotated_vertex_slots(&self, vertex: usize, steps: u8) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let rot = |e: WebEnd| match e {
                    WebEnd::Vertex { vertex: v, slot } if v == vertex => {
                        WebEnd::Vertex { vertex: v, slot: (slot + steps) % 3 }
                    }
                    other => other,
                };
                (rot(a), rot(b))
            })
            .collect();
        WebDiagram {
            vertex_count: self.vertex_count,
            edges,
            closed_circles: self.closed_circles,
            bottom_count: self.bottom_count,
            top_count: self.top_count,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valence_is_checked() {
        // a vertex with only two attached ends
        let v = |slot| WebEnd::Vertex { vertex: 0, slot };
        let r = WebDiagram::new(1, alloc::vec![(v(0), v(1))], 0, 0, 0);
        assert!(matches!(r, Err(WebError::Valence { vertex: 0 })));
    }

    #[test]
    fn boundary_positions_are_checked() {
        let r = WebDiagram::new(
            0,
            alloc::vec![(WebEnd::Bottom(0), WebEnd::Bottom(0))],
            0,
            1,
            0,
        );
        assert!(matches!(r, Err(WebError::BadBoundary)));
    }

    #[test]
    fn builders_are_well_formed() {
        WebDiagram::single_strand();
        WebDiagram::circle();
        WebDiagram::theta();
        WebDiagram::h_vertical();
        WebDiagram::h_horizontal();
        WebDiagram::double_identity();
        WebDiagram::cup_cap();
    }
}
