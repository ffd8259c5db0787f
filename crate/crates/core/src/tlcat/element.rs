//! Linear combinations of planar matchings and the diagram-algebra
//! operations on them.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::exactalg::RatFunc;

use super::matching::PlanarMatching;
use super::{loop_value, TlError};

/// A morphism of the Temperley–Lieb category: a `Q(A)`-linear combination of
/// planar matchings sharing the same boundary counts. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlElement {
    bottom: u32,
    top: u32,
    terms: BTreeMap<PlanarMatching, RatFunc>,
}

impl TlElement {
    pub fn zero(bottom: u32, top: u32) -> Self {
        TlElement { bottom, top, terms: BTreeMap::new() }
    }

    pub fn from_matching(m: PlanarMatching) -> Self {
        Self::from_scaled_matching(m, RatFunc::one())
    }

    pub fn from_scaled_matching(m: PlanarMatching, c: RatFunc) -> Self {
        let mut e = Self::zero(m.bottom_count(), m.top_count());
        e.add_term(m, c);
        e
    }

    pub fn identity(n: u32) -> Self {
        Self::from_matching(PlanarMatching::identity(n))
    }

    /// The cup-cap generator `e_i` of `TL_n` (0-indexed strand pair `i, i+1`).
    pub fn cup_cap(n: u32, i: u32) -> Self {
        Self::from_matching(PlanarMatching::cup_cap(n, i))
    }

    pub fn bottom_count(&self) -> u32 {
        self.bottom
    }

    pub fn top_count(&self) -> u32 {
        self.top
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarMatching, &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PlanarMatching) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    fn add_term(&mut self, m: PlanarMatching, c: RatFunc) {
        debug_assert_eq!(m.bottom_count(), self.bottom);
        debug_assert_eq!(m.top_count(), self.top);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scaled(&self, s: &RatFunc) -> Self {
        if s.is_zero() {
            return Self::zero(self.bottom, self.top);
        }
        TlElement {
            bottom: self.bottom,
            top: self.top,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Stacks `self` below `other`, gluing `self`'s top boundary to
    /// `other`'s bottom boundary. Closed loops formed in the middle each
    /// contribute a factor of `δ`.
    pub fn compose(&self, other: &TlElement) -> Result<TlElement, TlError> {
        if self.top != other.bottom {
            return Err(TlError::BoundaryMismatch {
                top_of_first: self.top,
                bottom_of_second: other.bottom,
            });
        }
        let delta = loop_value();
        let mut out = TlElement::zero(self.bottom, other.top);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let (glued, loops) = glue(m1, m2, self.bottom, self.top, other.top);
                let mut coeff = c1 * c2;
                for _ in 0..loops {
                    coeff *= &delta;
                }
                out.add_term(glued, coeff);
            }
        }
        Ok(out)
    }

    /// Horizontal juxtaposition, bilinear over `Q(A)`.
    pub fn tensor(&self, other: &TlElement) -> TlElement {
        let bottom = self.bottom + other.bottom;
        let top = self.top + other.top;
        let mut out = TlElement::zero(bottom, top);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                // re-encode: self keeps bottom slots 0..b1, other shifts by b1;
                // top slots concatenate after all bottoms
                let remap1 = |p: u32| -> u32 {
                    if p < self.bottom {
                        p
                    } else {
                        bottom + (p - self.bottom)
                    }
                };
                let remap2 = |p: u32| -> u32 {
                    if p < other.bottom {
                        self.bottom + p
                    } else {
                        bottom + self.top + (p - other.bottom)
                    }
                };
                let mut pairs: Vec<(u32, u32)> = Vec::new();
                for &(a, b) in m1.encoded_pairs() {
                    let (x, y) = (remap1(a), remap1(b));
                    pairs.push((x.min(y), x.max(y)));
                }
                for &(a, b) in m2.encoded_pairs() {
                    let (x, y) = (remap2(a), remap2(b));
                    pairs.push((x.min(y), x.max(y)));
                }
                let glued = PlanarMatching::from_encoded(bottom, top, pairs)
                    .expect("juxtaposition of planar matchings is planar");
                out.add_term(glued, c1 * c2);
            }
        }
        out
    }

    /// Markov trace: joins top point `i` to bottom point `i` around the side
    /// and evaluates each resulting loop to `δ`.
    pub fn closure(&self) -> Result<RatFunc, TlError> {
        if self.bottom != self.top {
            return Err(TlError::NotSquare { bottom: self.bottom, top: self.top });
        }
        let n = self.bottom as usize;
        let delta = loop_value();
        let mut total = RatFunc::zero();
        for (m, c) in &self.terms {
            // nodes 0..n bottom, n..2n top; matching pairs plus closure arcs
            let mut graph = DegreeTwoGraph::new(2 * n);
            for &(a, b) in m.encoded_pairs() {
                graph.add_edge(a as usize, b as usize);
            }
            for i in 0..n {
                graph.add_edge(i, n + i);
            }
            let loops = graph.count_cycles();
            let mut term = c.clone();
            for _ in 0..loops {
                term *= &delta;
            }
            total += &term;
        }
        Ok(total)
    }

    /// Half-turn rotation; for square elements this is the diagram antipode.
    pub fn rotate180(&self) -> TlElement {
        TlElement {
            bottom: self.top,
            top: self.bottom,
            terms: self.terms.iter().map(|(m, c)| (m.rotate180(), c.clone())).collect(),
        }
    }

    /// Multi-line rendering: one `coefficient  diagram` row per term.
    pub fn pretty(&self) -> String {
        use alloc::format;
        if self.is_zero() {
            return format!("0  [{} -> {}]", self.bottom, self.top);
        }
        let mut rows: Vec<String> = Vec::new();
        for (m, c) in &self.terms {
            rows.push(format!("{}  {}", c, m));
        }
        rows.join("\n")
    }
}

/// A multigraph in which every vertex either has degree 1 (boundary) or 2
/// (interior). Walks follow edges, not neighbour values, so parallel edges
/// between the same pair of nodes are handled correctly.
pub(crate) struct DegreeTwoGraph {
    /// per node: (neighbour, edge id)
    adj: Vec<Vec<(usize, usize)>>,
    edge_count: usize,
}

impl DegreeTwoGraph {
    pub(crate) fn new(nodes: usize) -> Self {
        DegreeTwoGraph { adj: vec![Vec::new(); nodes], edge_count: 0 }
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        let id = self.edge_count;
        self.edge_count += 1;
        self.adj[a].push((b, id));
        self.adj[b].push((a, id));
    }

    /// Follows the path starting at degree-1 node `start`; returns the far
    /// endpoint and marks traversed edges in `used`.
    fn walk_path(&self, start: usize, used: &mut [bool]) -> usize {
        let (mut cur, mut via) = self.adj[start][0];
        used[self.adj[start][0].1] = true;
        while self.adj[cur].len() == 2 {
            let (next, e) = self.adj[cur]
                .iter()
                .copied()
                .find(|&(_, e)| e != via)
                .expect("interior node has a second edge");
            used[e] = true;
            via = e;
            cur = next;
        }
        cur
    }

    /// Endpoint pairs of all open paths, walking from each degree-1 node.
    pub(crate) fn path_endpoints(&self) -> (Vec<(usize, usize)>, usize) {
        let mut used = vec![false; self.edge_count];
        let mut pairs = Vec::new();
        for start in 0..self.adj.len() {
            if self.adj[start].len() == 1 && !used[self.adj[start][0].1] {
                let end = self.walk_path(start, &mut used);
                pairs.push((start, end));
            }
        }
        // remaining edges lie on closed cycles
        let mut cycles = 0;
        for e0 in 0..self.edge_count {
            if used[e0] {
                continue;
            }
            cycles += 1;
            // find the edge's node and walk the cycle
            let start = self
                .adj
                .iter()
                .position(|nbrs| nbrs.iter().any(|&(_, e)| e == e0))
                .expect("edge has endpoints");
            used[e0] = true;
            let (mut cur, mut via) = *self.adj[start]
                .iter()
                .find(|&&(_, e)| e == e0)
                .expect("edge incident to start");
            while cur != start {
                let (next, e) = self.adj[cur]
                    .iter()
                    .copied()
                    .find(|&(_, e)| e != via)
                    .expect("cycle node has a second edge");
                used[e] = true;
                via = e;
                cur = next;
            }
        }
        (pairs, cycles)
    }

    /// Number of cycles when every vertex has degree exactly 2.
    pub(crate) fn count_cycles(&self) -> usize {
        debug_assert!(self.adj.iter().all(|n| n.len() == 2 || n.is_empty()));
        self.path_endpoints().1
    }
}

/// Glues matching `m1: a -> b` under `m2: b -> c`; returns the composed
/// matching on `(a, c)` and the number of closed loops formed.
fn glue(
    m1: &PlanarMatching,
    m2: &PlanarMatching,
    a: u32,
    b: u32,
    c: u32,
) -> (PlanarMatching, usize) {
    // node ids: 0..a bottom, a..a+b middle, a+b..a+b+c top
    let total = (a + b + c) as usize;
    let mut graph = DegreeTwoGraph::new(total);
    for &(x, y) in m1.encoded_pairs() {
        // m1 endpoints are already bottom `0..a`, top `a..a+b` = middle
        graph.add_edge(x as usize, y as usize);
    }
    for &(x, y) in m2.encoded_pairs() {
        // m2 bottom j -> middle a+j; m2 top j -> a+b+j
        let map = |p: u32| if p < b { a + p } else { a + b + (p - b) };
        graph.add_edge(map(x) as usize, map(y) as usize);
    }

    let (endpoint_pairs, loops) = graph.path_endpoints();
    // re-encode: bottom keeps its id, top a+b+j -> a+j
    let enc = |p: usize| if (p as u32) < a { p as u32 } else { p as u32 - b };
    let pairs = endpoint_pairs
        .iter()
        .map(|&(x, y)| {
            let (x, y) = (enc(x), enc(y));
            (x.min(y), x.max(y))
        })
        .collect();

    let glued = PlanarMatching::from_encoded(a, c, pairs)
        .expect("composition of planar matchings is planar");
    (glued, loops)
}

impl Add for &TlElement {
    type Output = TlElement;
    fn add(self, rhs: &TlElement) -> TlElement {
        assert_eq!(self.bottom, rhs.bottom);
        assert_eq!(self.top, rhs.top);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TlElement {
    type Output = TlElement;
    fn sub(self, rhs: &TlElement) -> TlElement {
        self + &(-rhs)
    }
}

impl Neg for &TlElement {
    type Output = TlElement;
    fn neg(self) -> TlElement {
        TlElement {
            bottom: self.bottom,
            top: self.top,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for TlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}
