//! State-sum resolution of diagrams into the Temperley–Lieb category.

use alloc::vec::Vec;

use crate::exactalg::RatFunc;
use crate::tlcat::{loop_value, PlanarMatching, TlElement};

use super::diagram::{LinkDiagram, TangleDiagram};
use super::BracketError;

/// The braiding expansion `crossing = α·id + β·(cup-cap)` together with the
/// loop value it forces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingExpansion {
    pub alpha: RatFunc,
    pub beta: RatFunc,
    pub delta: RatFunc,
}

/// Solves the two Reidemeister-II coefficient equations
///
/// ```text
/// α β = 1,        α² + β² + α β δ = 0
/// ```
///
/// under the convention `α = A`. The first forces `β = A^-1`; the second then
/// yields the loop value `δ = -(α² + β²)/(αβ) = -A² - A^-2` as a consistency
/// output, which must agree with the Temperley–Lieb loop scalar.
pub fn derive_crossing_expansion() -> CrossingExpansion {
    let alpha = RatFunc::var();
    let beta = alpha.recip().expect("A is nonzero");
    let num = &(&alpha * &alpha) + &(&beta * &beta);
    let delta = -&(&num / &(&alpha * &beta));
    CrossingExpansion { alpha, beta, delta }
}

/// Reshetikhin–Turaev style evaluation: sums over all crossing smoothings.
/// Each state contributes `A^(#A-smoothings - #B-smoothings) δ^(#loops)`
/// times the crossingless boundary matching it leaves behind.
pub fn resolve(t: &TangleDiagram) -> Result<TlElement, BracketError> {
    let m = t.bottom().len() as u32;
    let n = t.top().len() as u32;
    let crossings = t.crossings();
    let k = crossings.len();
    assert!(k <= 24, "state sum over 2^{k} smoothings is not sensible");

    // node layout: 4 per crossing, then bottom positions, then top positions
    let base_bottom = 4 * k;
    let base_top = base_bottom + m as usize;
    let total_nodes = base_top + n as usize;

    // occurrences of each arc id, in a fixed scan order
    let mut occ: alloc::collections::BTreeMap<u32, Vec<usize>> = Default::default();
    for (ci, c) in crossings.iter().enumerate() {
        for (s, &a) in c.arcs.iter().enumerate() {
            occ.entry(a).or_default().push(4 * ci + s);
        }
    }
    for (i, &a) in t.bottom().iter().enumerate() {
        occ.entry(a).or_default().push(base_bottom + i);
    }
    for (j, &a) in t.top().iter().enumerate() {
        occ.entry(a).or_default().push(base_top + j);
    }
    let arc_edges: Vec<(usize, usize)> = occ
        .values()
        .map(|nodes| {
            debug_assert_eq!(nodes.len(), 2);
            (nodes[0], nodes[1])
        })
        .collect();

    let delta = loop_value();
    let mut out = TlElement::zero(m, n);
    for state in 0u32..1 << k {
        let mut graph = crate::tlcat::DegreeTwoGraph::new(total_nodes);
        for &(a, b) in &arc_edges {
            graph.add_edge(a, b);
        }
        let mut weight_exp: i64 = 0;
        for (ci, c) in crossings.iter().enumerate() {
            let a_smoothing = (state >> ci) & 1 == 0;
            weight_exp += if a_smoothing { 1 } else { -1 };
            // positive: A-smoothing joins slots (0,3)(1,2); B joins (0,1)(2,3)
            let join_diag = a_smoothing == c.positive;
            let pairs: [(usize, usize); 2] =
                if join_diag { [(0, 3), (1, 2)] } else { [(0, 1), (2, 3)] };
            for (s1, s2) in pairs {
                graph.add_edge(4 * ci + s1, 4 * ci + s2);
            }
        }
        let (endpoints, loops) = graph.path_endpoints();
        let enc = |p: usize| -> u32 {
            debug_assert!(p >= base_bottom);
            if p < base_top {
                (p - base_bottom) as u32
            } else {
                m + (p - base_top) as u32
            }
        };
        let pairs: Vec<(u32, u32)> = endpoints
            .iter()
            .map(|&(x, y)| {
                let (x, y) = (enc(x), enc(y));
                (x.min(y), x.max(y))
            })
            .collect();
        let matching = PlanarMatching::from_encoded(m, n, pairs)
            .map_err(|_| BracketError::NonPlanarState)?;
        let mut coeff = RatFunc::var_pow(weight_exp);
        for _ in 0..loops + t.free_loops() as usize {
            coeff *= &delta;
        }
        out = &out + &TlElement::from_scaled_matching(matching, coeff);
    }
    Ok(out)
}

/// Bracket value of a closed diagram, normalised so the empty link is `1`
/// and the crossingless unknot is `δ`.
pub fn bracket_value(l: &LinkDiagram) -> Result<RatFunc, BracketError> {
    let e = resolve(l.diagram())?;
    let empty = PlanarMatching::from_pairs(0, 0, &[]).expect("empty matching");
    Ok(e.coeff(&empty))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::braid_to_tangle;
    use crate::tlcat::Point;
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn delta() -> RatFunc {
        loop_value()
    }

    #[test]
    fn expansion_constants() {
        let e = derive_crossing_expansion();
        assert_eq!(e.alpha, RatFunc::var());
        assert_eq!(e.beta, RatFunc::var_pow(-1));
        assert_eq!(e.delta, delta());
        assert!((&e.alpha * &e.beta).is_one());
    }

    #[test]
    fn expansion_satisfies_r2_in_the_diagram_algebra() {
        // (α id + β U)(β id + α U) = id given the loop value
        let e = derive_crossing_expansion();
        let id = TlElement::identity(2);
        let u = TlElement::cup_cap(2, 0);
        let pos = &id.scaled(&e.alpha) + &u.scaled(&e.beta);
        let neg = &id.scaled(&e.beta) + &u.scaled(&e.alpha);
        assert_eq!(pos.compose(&neg).unwrap(), id);
    }

    #[test]
    fn zero_crossing_tangle_resolves_to_identity() {
        let t = braid_to_tangle(&[], 2).unwrap();
        assert_eq!(resolve(&t).unwrap(), TlElement::identity(2));
    }

    #[test]
    fn single_positive_crossing_expands() {
        let t = braid_to_tangle(&[1], 2).unwrap();
        let expected = &TlElement::identity(2).scaled(&RatFunc::var())
            + &TlElement::cup_cap(2, 0).scaled(&RatFunc::var_pow(-1));
        assert_eq!(resolve(&t).unwrap(), expected);
    }

    #[test]
    fn reidemeister_three_on_tangles() {
        let lhs = braid_to_tangle(&[1, 2, 1], 3).unwrap();
        let rhs = braid_to_tangle(&[2, 1, 2], 3).unwrap();
        assert_eq!(resolve(&lhs).unwrap(), resolve(&rhs).unwrap());
    }

    #[test]
    fn resolve_respects_stacking() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..10 {
            let strands = rng.gen_range(2..=4);
            let w1: Vec<i32> = (0..rng.gen_range(0..4))
                .map(|_| {
                    let i = rng.gen_range(1..strands) as i32;
                    if rng.gen_bool(0.5) {
                        i
                    } else {
                        -i
                    }
                })
                .collect();
            let w2: Vec<i32> = (0..rng.gen_range(0..4))
                .map(|_| {
                    let i = rng.gen_range(1..strands) as i32;
                    if rng.gen_bool(0.5) {
                        i
                    } else {
                        -i
                    }
                })
                .collect();
            let t1 = braid_to_tangle(&w1, strands).unwrap();
            let t2 = braid_to_tangle(&w2, strands).unwrap();
            let stacked = resolve(&t1.stack(&t2).unwrap()).unwrap();
            let composed = resolve(&t1).unwrap().compose(&resolve(&t2).unwrap()).unwrap();
            assert_eq!(stacked, composed);
        }
    }

    #[test]
    fn kink_factors() {
        let pos = resolve(&TangleDiagram::positive_kink()).unwrap();
        let neg = resolve(&TangleDiagram::negative_kink()).unwrap();
        // -A^3 and -A^-3 times the identity strand
        assert_eq!(pos, TlElement::identity(1).scaled(&-&RatFunc::var_pow(3)));
        assert_eq!(neg, TlElement::identity(1).scaled(&-&RatFunc::var_pow(-3)));
    }

    #[test]
    fn unknot_and_unlinks() {
        assert_eq!(bracket_value(&LinkDiagram::unknot()).unwrap(), delta());
        assert_eq!(bracket_value(&LinkDiagram::unlink(2)).unwrap(), &delta() * &delta());
        // closure of a single positive letter: unknot with one positive kink
        let l = braid_to_tangle(&[1], 2).unwrap().trace_closure().unwrap();
        let expected = &-&RatFunc::var_pow(3) * &delta();
        assert_eq!(bracket_value(&l).unwrap(), expected);
    }

    #[test]
    fn hopf_link_value() {
        // brute force over all four states gives (-A^4 - A^-4) δ
        let v = bracket_value(&LinkDiagram::hopf()).unwrap();
        let expected = &-&(&RatFunc::var_pow(4) + &RatFunc::var_pow(-4)) * &delta();
        assert_eq!(v, expected);
    }

    #[test]
    fn nonplanar_encoding_is_reported() {
        // a 2-2 "crossing" wired so the smoothing would have to cross:
        // bottom [a, b], top [c, d] with a-d and b-c through a virtual-style
        // incidence produces a crossing matching in at least one state
        let t = TangleDiagram::new(
            vec![super::super::Crossing { arcs: [0, 2, 1, 3], positive: true }],
            vec![0, 1],
            vec![2, 3],
        )
        .unwrap();
        assert_eq!(resolve(&t), Err(BracketError::NonPlanarState));
    }

    #[test]
    fn resolved_matching_points_line_up() {
        // sanity: the identity braid maps bottom i to top i, not reversed
        let t = braid_to_tangle(&[], 3).unwrap();
        let e = resolve(&t).unwrap();
        let (m, _) = e.terms().next().unwrap();
        let pairs: Vec<_> = m.pairs().collect();
        assert!(pairs.contains(&(Point::Bottom(0), Point::Top(0))));
        assert!(pairs.contains(&(Point::Bottom(2), Point::Top(2))));
    }
}
