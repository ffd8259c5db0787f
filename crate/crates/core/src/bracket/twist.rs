//! Defect-twisted bracket evaluation.
//!
//! A defect is a closed curve in the plane, disjoint from all crossings and
//! transverse to the link arcs, carrying a character value. Each signed
//! passage of a strand through the defect multiplies the evaluation by the
//! character (or its inverse). Because smoothings happen away from the
//! defect, the total factor is a single scalar determined by the signed
//! intersection count; isotoping the defect without crossing strands leaves
//! the value unchanged.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::exactalg::RatFunc;

use super::diagram::{ArcId, LinkDiagram};
use super::resolve::bracket_value;
use super::BracketError;

/// A defect circle: signed transversal intersections against named arcs,
/// plus the character value picked up per positive passage. Over `Q(A)` the
/// only roots of unity are `±1`, matching the order-2 centre relevant here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectMarking {
    intersections: Vec<(ArcId, i8)>,
    chi: RatFunc,
}

impl DefectMarking {
    pub fn new(intersections: Vec<(ArcId, i8)>, chi: RatFunc) -> Result<Self, BracketError> {
        if !(&chi * &chi).is_one() {
            return Err(BracketError::BadCharacter);
        }
        if intersections.iter().any(|&(_, s)| s != 1 && s != -1) {
            return Err(BracketError::BadCharacter);
        }
        Ok(DefectMarking { intersections, chi })
    }

    pub fn trivial() -> Self {
        DefectMarking { intersections: Vec::new(), chi: RatFunc::one() }
    }

    pub fn intersections(&self) -> &[(ArcId, i8)] {
        &self.intersections
    }

    pub fn chi(&self) -> &RatFunc {
        &self.chi
    }
}

/// Bracket of a closed diagram with a defect circle inserted.
///
/// Validates that every component of the link meets the defect an even
/// number of times (two closed curves in a ball always intersect with even
/// parity); a violation means the marking does not describe a genuine
/// transverse circle.
pub fn twisted_bracket(l: &LinkDiagram, d: &DefectMarking) -> Result<RatFunc, BracketError> {
    let components = l.diagram().strand_components();
    let mut per_component: BTreeMap<ArcId, usize> = BTreeMap::new();
    for &(arc, _) in d.intersections() {
        let Some(&root) = components.get(&arc) else {
            return Err(BracketError::UnknownArc { arc });
        };
        *per_component.entry(root).or_insert(0) += 1;
    }
    for (&root, &count) in &per_component {
        if count % 2 != 0 {
            return Err(BracketError::OddIntersectionParity { arc: root });
        }
    }

    let signed_total: i64 = d.intersections().iter().map(|&(_, s)| s as i64).sum();
    let base = bracket_value(l)?;
    // chi squares to one, so only the parity of the signed count matters
    let factor = if signed_total.rem_euclid(2) == 0 { RatFunc::one() } else { d.chi().clone() };
    Ok(&base * &factor)
}
