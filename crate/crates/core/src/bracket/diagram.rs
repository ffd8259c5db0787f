//! Arc-incidence encodings of tangle and link diagrams.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::BracketError;

pub type ArcId = u32;

/// One crossing of a diagram. `arcs` lists the four incident arc ends
/// counterclockwise around the crossing. The strand through slots `(0, 2)`
/// crosses the strand through slots `(1, 3)`; `positive` selects which
/// smoothing carries the weight `A` (slots `(0,3)(1,2)` when positive,
/// `(0,1)(2,3)` when negative), i.e. it records the handedness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub arcs: [ArcId; 4],
    pub positive: bool,
}

/// A tangle diagram in a cylinder: crossings plus ordered boundary arcs on
/// the bottom and top edges. `free_loops` counts crossing-free circle
/// components, which carry no arc ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleDiagram {
    crossings: Vec<Crossing>,
    bottom: Vec<ArcId>,
    top: Vec<ArcId>,
    free_loops: u32,
}

impl TangleDiagram {
    pub fn new(
        crossings: Vec<Crossing>,
        bottom: Vec<ArcId>,
        top: Vec<ArcId>,
    ) -> Result<Self, BracketError> {
        Self::with_free_loops(crossings, bottom, top, 0)
    }

    pub fn with_free_loops(
        crossings: Vec<Crossing>,
        bottom: Vec<ArcId>,
        top: Vec<ArcId>,
        free_loops: u32,
    ) -> Result<Self, BracketError> {
        let t = TangleDiagram { crossings, bottom, top, free_loops };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<(), BracketError> {
        let mut count: BTreeMap<ArcId, usize> = BTreeMap::new();
        for c in &self.crossings {
            for &a in &c.arcs {
                *count.entry(a).or_insert(0) += 1;
            }
        }
        for &a in self.bottom.iter().chain(self.top.iter()) {
            *count.entry(a).or_insert(0) += 1;
        }
        for (&arc, &occurrences) in &count {
            if occurrences != 2 {
                return Err(BracketError::MalformedIncidence { arc, occurrences });
            }
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn bottom(&self) -> &[ArcId] {
        &self.bottom
    }

    pub fn top(&self) -> &[ArcId] {
        &self.top
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn is_closed(&self) -> bool {
        self.bottom.is_empty() && self.top.is_empty()
    }

    /// All arc ids present in the diagram.
    pub fn arcs(&self) -> Vec<ArcId> {
        let mut set: Vec<ArcId> = self
            .crossings
            .iter()
            .flat_map(|c| c.arcs.iter().copied())
            .chain(self.bottom.iter().copied())
            .chain(self.top.iter().copied())
            .collect();
        set.sort_unstable();
        set.dedup();
        set
    }

    /// Stacks `self` below `other`, gluing `self`'s top arcs to `other`'s
    /// bottom arcs position by position. Arc ids of `other` are shifted to
    /// stay disjoint before the glue identifications are applied.
    pub fn stack(&self, other: &TangleDiagram) -> Result<TangleDiagram, BracketError> {
        if self.top.len() != other.bottom.len() {
            return Err(BracketError::BoundaryMismatch {
                top_of_first: self.top.len(),
                bottom_of_second: other.bottom.len(),
            });
        }
        let shift = self.arcs().iter().max().map_or(0, |m| m + 1);
        let mut uf = UnionFind::default();
        let mut extra_loops = 0;
        for (&t, &b) in self.top.iter().zip(other.bottom.iter()) {
            if !uf.union(t, b + shift) {
                extra_loops += 1; // the glued pair was already one strand
            }
        }
        let mut crossings: Vec<Crossing> = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            arcs: c.arcs.map(|a| a + shift),
            positive: c.positive,
        }));
        for c in &mut crossings {
            c.arcs = c.arcs.map(|a| uf.find(a));
        }
        let bottom = self.bottom.iter().map(|&a| uf.find(a)).collect();
        let top = other.top.iter().map(|&a| uf.find(a + shift)).collect();
        TangleDiagram::with_free_loops(
            crossings,
            bottom,
            top,
            self.free_loops + other.free_loops + extra_loops,
        )
    }

    /// Trace closure: joins top arc `i` to bottom arc `i` around the side.
    pub fn trace_closure(&self) -> Result<LinkDiagram, BracketError> {
        assert_eq!(self.bottom.len(), self.top.len(), "trace closure of non-square tangle");
        let mut uf = UnionFind::default();
        let mut extra_loops = 0;
        for (&b, &t) in self.bottom.iter().zip(self.top.iter()) {
            if !uf.union(b, t) {
                extra_loops += 1;
            }
        }
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing { arcs: c.arcs.map(|a| uf.find(a)), positive: c.positive })
            .collect();
        let t = TangleDiagram::with_free_loops(
            crossings,
            Vec::new(),
            Vec::new(),
            self.free_loops + extra_loops,
        )?;
        Ok(LinkDiagram(t))
    }

    /// A single positive kink on one strand: resolves to `-A^3` times the
    /// identity strand.
    pub fn positive_kink() -> TangleDiagram {
        TangleDiagram::new(
            alloc::vec![Crossing { arcs: [0, 1, 1, 2], positive: true }],
            alloc::vec![0],
            alloc::vec![2],
        )
        .expect("kink gadget is well-formed")
    }

    /// Mirror kink; resolves to `-A^-3` times the identity strand.
    pub fn negative_kink() -> TangleDiagram {
        TangleDiagram::new(
            alloc::vec![Crossing { arcs: [0, 1, 1, 2], positive: false }],
            alloc::vec![0],
            alloc::vec![2],
        )
        .expect("kink gadget is well-formed")
    }

    /// Connected components of the underlying curves: arcs joined through
    /// crossings (slots 0-2 and slots 1-3 continue the same strand). Returns
    /// a representative arc for each arc id.
    pub fn strand_components(&self) -> BTreeMap<ArcId, ArcId> {
        let mut uf = UnionFind::default();
        for a in self.arcs() {
            uf.find(a);
        }
        for c in &self.crossings {
            uf.union(c.arcs[0], c.arcs[2]);
            uf.union(c.arcs[1], c.arcs[3]);
        }
        self.arcs().into_iter().map(|a| (a, uf.find(a))).collect()
    }
}

/// A closed diagram: a tangle with empty boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram(TangleDiagram);

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>) -> Result<Self, BracketError> {
        Ok(LinkDiagram(TangleDiagram::new(crossings, Vec::new(), Vec::new())?))
    }

    pub fn with_free_loops(crossings: Vec<Crossing>, free_loops: u32) -> Result<Self, BracketError> {
        Ok(LinkDiagram(TangleDiagram::with_free_loops(
            crossings,
            Vec::new(),
            Vec::new(),
            free_loops,
        )?))
    }

    /// The crossingless unknot.
    pub fn unknot() -> Self {
        LinkDiagram::with_free_loops(Vec::new(), 1).expect("no arcs to validate")
    }

    /// A crossingless `k`-component unlink.
    pub fn unlink(k: u32) -> Self {
        LinkDiagram::with_free_loops(Vec::new(), k).expect("no arcs to validate")
    }

    /// The standard two-crossing Hopf link diagram.
    pub fn hopf() -> Self {
        LinkDiagram::new(alloc::vec![
            Crossing { arcs: [0, 2, 1, 3], positive: true },
            Crossing { arcs: [1, 3, 0, 2], positive: true },
        ])
        .expect("hopf diagram is well-formed")
    }

    pub fn diagram(&self) -> &TangleDiagram {
        &self.0
    }
}

/// Converts a braid word to a tangle diagram. Letters are `±i` for
/// `1 <= i < strands`; the sign selects the crossing handedness, arranged so
/// that a positive letter resolves to `A·id + A^-1·(cup-cap)`.
pub fn braid_to_tangle(word: &[i32], strands: u32) -> Result<TangleDiagram, BracketError> {
    let mut next_arc: ArcId = strands;
    let mut current: Vec<ArcId> = (0..strands).collect();
    let bottom = current.clone();
    let mut crossings = Vec::with_capacity(word.len());
    for &letter in word {
        let i = letter.unsigned_abs();
        if letter == 0 || i >= strands {
            return Err(BracketError::BadBraidLetter { letter, strands });
        }
        let p = (i - 1) as usize;
        let u = current[p];
        let v = current[p + 1];
        let w = next_arc; // new top-left
        let x = next_arc + 1; // new top-right
        next_arc += 2;
        // counterclockwise from bottom-left: SW=u, SE=v, NE=x, NW=w
        crossings.push(Crossing { arcs: [u, v, x, w], positive: letter > 0 });
        current[p] = w;
        current[p + 1] = x;
    }
    TangleDiagram::new(crossings, bottom, current)
}

/// Small union-find over arc ids.
#[derive(Default)]
struct UnionFind {
    parent: BTreeMap<ArcId, ArcId>,
}

impl UnionFind {
    fn find(&mut self, a: ArcId) -> ArcId {
        let p = *self.parent.entry(a).or_insert(a);
        if p == a {
            return a;
        }
        let root = self.find(p);
        self.parent.insert(a, root);
        root
    }

    /// Returns `false` if the two ids were already in one class.
    fn union(&mut self, a: ArcId, b: ArcId) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent.insert(rb.max(ra), ra.min(rb));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn arc_incidence_is_validated() {
        // arc 5 occurs once
        let r = TangleDiagram::new(
            vec![Crossing { arcs: [0, 1, 1, 5], positive: true }],
            vec![0],
            vec![2],
        );
        assert!(matches!(r, Err(BracketError::MalformedIncidence { .. })));
    }

    #[test]
    fn braid_word_produces_valid_diagram() {
        let t = braid_to_tangle(&[1, -2, 1], 3).unwrap();
        assert_eq!(t.crossings().len(), 3);
        assert_eq!(t.bottom().len(), 3);
        assert_eq!(t.top().len(), 3);
        assert!(braid_to_tangle(&[3], 3).is_err());
        assert!(braid_to_tangle(&[0], 3).is_err());
    }

    #[test]
    fn trace_closure_of_empty_braid_is_unlink() {
        let t = braid_to_tangle(&[], 2).unwrap();
        let l = t.trace_closure().unwrap();
        assert_eq!(l.diagram().free_loops(), 2);
        assert!(l.diagram().crossings().is_empty());
    }

    #[test]
    fn stack_glues_and_detects_mismatch() {
        let a = braid_to_tangle(&[1], 2).unwrap();
        let b = braid_to_tangle(&[1], 3).unwrap();
        assert!(matches!(a.stack(&b), Err(BracketError::BoundaryMismatch { .. })));
        let c = a.stack(&a).unwrap();
        assert_eq!(c.crossings().len(), 2);
        assert_eq!(c.bottom().len(), 2);
    }

    #[test]
    fn hopf_strands_form_two_components() {
        let l = LinkDiagram::hopf();
        let comp = l.diagram().strand_components();
        let roots: alloc::collections::BTreeSet<ArcId> = comp.values().copied().collect();
        assert_eq!(roots.len(), 2);
    }
}
