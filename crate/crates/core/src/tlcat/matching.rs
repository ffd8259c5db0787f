//! Planar matchings: the diagram basis of Temperley–Lieb morphism spaces.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::TlError;

/// A boundary point of a rectangle diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Point {
    Bottom(u32),
    Top(u32),
}

/// A perfect non-crossing matching of `bottom + top` marked points on the
/// boundary of a rectangle, with `bottom` points on the lower edge and `top`
/// on the upper edge, both numbered left to right.
///
/// Stored canonically: each pair `(a, b)` has `a < b` in the endpoint
/// encoding (`bottom i -> i`, `top j -> bottom_count + j`) and pairs are
/// sorted, so equal matchings are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    bottom: u32,
    top: u32,
    pairs: Vec<(u32, u32)>,
}

impl PlanarMatching {
    /// Builds and validates a matching from `(Point, Point)` pairs.
    pub fn from_pairs(
        bottom: u32,
        top: u32,
        pairs: &[(Point, Point)],
    ) -> Result<Self, TlError> {
        let encode = |p: Point| -> Option<u32> {
            match p {
                Point::Bottom(i) if i < bottom => Some(i),
                Point::Top(j) if j < top => Some(bottom + j),
                _ => None,
            }
        };
        let mut enc = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            let (x, y) = match (encode(a), encode(b)) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(TlError::BadPairing),
            };
            enc.push((x.min(y), x.max(y)));
        }
        Self::from_encoded(bottom, top, enc)
    }

    pub(crate) fn from_encoded(
        bottom: u32,
        top: u32,
        mut pairs: Vec<(u32, u32)>,
    ) -> Result<Self, TlError> {
        let total = bottom + top;
        if total % 2 != 0 || pairs.len() as u32 * 2 != total {
            return Err(TlError::BadPairing);
        }
        pairs.sort_unstable();
        let mut seen = vec![false; total as usize];
        for &(a, b) in &pairs {
            if a == b || b >= total || seen[a as usize] || seen[b as usize] {
                return Err(TlError::BadPairing);
            }
            seen[a as usize] = true;
            seen[b as usize] = true;
        }
        let m = PlanarMatching { bottom, top, pairs };
        if !m.is_planar() {
            return Err(TlError::NotPlanar);
        }
        Ok(m)
    }

    /// Circular position of an endpoint: walking the rectangle boundary,
    /// bottom points left to right then top points right to left.
    fn circ(&self, p: u32) -> u32 {
        if p < self.bottom {
            p
        } else {
            self.bottom + self.top - 1 - (p - self.bottom)
        }
    }

    fn is_planar(&self) -> bool {
        let chords: Vec<(u32, u32)> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.circ(a), self.circ(b));
                (x.min(y), x.max(y))
            })
            .collect();
        for (i, &(a, b)) in chords.iter().enumerate() {
            for &(c, d) in &chords[i + 1..] {
                let c_in = a < c && c < b;
                let d_in = a < d && d < b;
                if c_in != d_in {
                    return false;
                }
            }
        }
        true
    }

    pub fn bottom_count(&self) -> u32 {
        self.bottom
    }

    pub fn top_count(&self) -> u32 {
        self.top
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.pairs.iter().map(|&(a, b)| (self.decode(a), self.decode(b)))
    }

    fn decode(&self, p: u32) -> Point {
        if p < self.bottom {
            Point::Bottom(p)
        } else {
            Point::Top(p - self.bottom)
        }
    }

    pub(crate) fn encoded_pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// The identity matching on `n` strands.
    pub fn identity(n: u32) -> Self {
        PlanarMatching {
            bottom: n,
            top: n,
            pairs: (0..n).map(|i| (i, n + i)).collect(),
        }
    }

    /// The cup-cap diagram `e_i` in `TL_n`: strands `i` and `i+1` turn back.
    pub fn cup_cap(n: u32, i: u32) -> Self {
        assert!(i + 1 < n, "cup-cap index out of range");
        let mut pairs: Vec<(u32, u32)> = (0..n)
            .filter(|&k| k != i && k != i + 1)
            .map(|k| (k, n + k))
            .collect();
        pairs.push((i, i + 1));
        pairs.push((n + i, n + i + 1));
        pairs.sort_unstable();
        PlanarMatching { bottom: n, top: n, pairs }
    }

    /// The single cup: no bottom points, two top points joined.
    pub fn cup() -> Self {
        PlanarMatching { bottom: 0, top: 2, pairs: vec![(0, 1)] }
    }

    /// The single cap: two bottom points joined, no top points.
    pub fn cap() -> Self {
        PlanarMatching { bottom: 2, top: 0, pairs: vec![(0, 1)] }
    }

    /// Rotation by a half turn: bottom and top swap, each reversed.
    pub fn rotate180(&self) -> Self {
        // old bottom i becomes new top (bottom-1-i); old top j becomes new
        // bottom (top-1-j); in the new encoding new bottom comes first
        let map = |p: u32| -> u32 {
            if p < self.bottom {
                self.top + (self.bottom - 1 - p)
            } else {
                self.top - 1 - (p - self.bottom)
            }
        };
        let pairs = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map(a), map(b));
                (x.min(y), x.max(y))
            })
            .collect();
        let mut out = PlanarMatching { bottom: self.top, top: self.bottom, pairs };
        out.pairs.sort_unstable();
        debug_assert!(out.is_planar());
        out
    }
}

impl fmt::Display for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |p: Point| -> String {
            use alloc::format;
            match p {
                Point::Bottom(i) => format!("b{i}"),
                Point::Top(j) => format!("t{j}"),
            }
        };
        for (a, b) in self.pairs() {
            write!(f, "({}-{})", name(a), name(b))?;
        }
        Ok(())
    }
}

/// All planar matchings of `m` bottom and `n` top points; empty when `m + n`
/// is odd. The count is the Catalan number `C((m+n)/2)`.
pub fn basis(m: u32, n: u32) -> Vec<PlanarMatching> {
    let total = m + n;
    if total % 2 != 0 {
        return Vec::new();
    }
    // enumerate non-crossing matchings in circular coordinates
    let circ_points: Vec<u32> = (0..total).collect();
    let out = enumerate_noncrossing(&circ_points);
    out.into_iter()
        .map(|pairs| {
            // map circular coordinates back to endpoint encoding
            let decode = |w: u32| -> u32 {
                if w < m {
                    w
                } else {
                    m + (total - 1 - w) // top j at circular m + (n-1-j)
                }
            };
            let enc: Vec<(u32, u32)> = pairs
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (decode(a), decode(b));
                    (x.min(y), x.max(y))
                })
                .collect();
            PlanarMatching::from_encoded(m, n, enc).expect("non-crossing enumeration is planar")
        })
        .collect()
}

/// Non-crossing perfect matchings of a point sequence: the first point pairs
/// with a point at odd offset, and the two sides recurse independently.
fn enumerate_noncrossing(points: &[u32]) -> Vec<Vec<(u32, u32)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let first = points[0];
    let mut out = Vec::new();
    for k in (1..points.len()).step_by(2) {
        let partner = points[k];
        for inside in enumerate_noncrossing(&points[1..k]) {
            for outside in enumerate_noncrossing(&points[k + 1..]) {
                let mut m = Vec::with_capacity(points.len() / 2);
                m.push((first, partner));
                m.extend_from_slice(&inside);
                m.extend_from_slice(&outside);
                out.push(m);
            }
        }
    }
    out
}

/// Catalan numbers by the additive recurrence, as an independent counting
/// oracle for the basis enumeration.
pub fn catalan(n: u32) -> u64 {
    let n = n as usize;
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for i in 1..=n {
        for j in 0..i {
            c[i] += c[j] * c[i - 1 - j];
        }
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_counts_are_catalan() {
        assert_eq!(basis(2, 2).len(), 2);
        assert_eq!(basis(3, 3).len(), 5);
        assert_eq!(basis(1, 2).len(), 0); // parity
        assert_eq!(basis(0, 4).len(), 2);
        for k in 0..=6u32 {
            assert_eq!(basis(k, k).len() as u64, catalan(k), "k = {k}");
        }
        // mixed boundaries still count by total arcs
        assert_eq!(basis(2, 4).len() as u64, catalan(3));
    }

    #[test]
    fn basis_matchings_are_distinct_and_planar() {
        let b = basis(4, 4);
        for (i, m) in b.iter().enumerate() {
            assert!(m.is_planar());
            for m2 in &b[i + 1..] {
                assert_ne!(m, m2);
            }
        }
    }

    #[test]
    fn crossing_pairing_is_rejected() {
        // b0-t1 and b1-t0 cross
        let r = PlanarMatching::from_pairs(
            2,
            2,
            &[(Point::Bottom(0), Point::Top(1)), (Point::Bottom(1), Point::Top(0))],
        );
        assert_eq!(r, Err(TlError::NotPlanar));
    }

    #[test]
    fn nested_cups_are_planar() {
        // t0-t3 over t1-t2 is fine
        let r = PlanarMatching::from_pairs(
            0,
            4,
            &[(Point::Top(0), Point::Top(3)), (Point::Top(1), Point::Top(2))],
        );
        assert!(r.is_ok());
    }

    #[test]
    fn incomplete_pairing_is_rejected() {
        let r = PlanarMatching::from_pairs(2, 2, &[(Point::Bottom(0), Point::Bottom(1))]);
        assert_eq!(r, Err(TlError::BadPairing));
    }

    #[test]
    fn rotate180_is_an_involution() {
        for m in basis(2, 4) {
            let r = m.rotate180();
            assert_eq!(r.bottom_count(), 4);
            assert_eq!(r.top_count(), 2);
            assert_eq!(r.rotate180(), m);
        }
    }

    #[test]
    fn display_is_readable() {
        let id2 = PlanarMatching::identity(2);
        assert_eq!(id2.to_string(), "(b0-t0)(b1-t1)");
    }
}
