//! Homology groups from Smith normal form, with a dual-route finite
//! coefficient computation.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactalg::{snf, IntMatrix};

use super::complex::ChainComplex;

/// An abelian group in invariant-factor form: `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_s`
/// with `t_1 | t_2 | ... | t_s`, all `t_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn trivial() -> Self {
        HomologyGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    /// Builds the canonical invariant-factor form from any multiset of
    /// cyclic orders (entries `<= 1` are dropped).
    pub fn from_cyclic_orders(orders: impl IntoIterator<Item = BigInt>) -> Self {
        Self::from_cyclic_with_rank(0, orders)
    }

    pub fn from_cyclic_with_rank(
        rank: usize,
        orders: impl IntoIterator<Item = BigInt>,
    ) -> Self {
        // split each order into prime powers, then re-pack so factor j is
        // the product of the j-th largest power of each prime
        let mut by_prime: alloc::collections::BTreeMap<BigInt, Vec<u32>> = Default::default();
        for o in orders {
            let mut o = o.abs();
            if o <= BigInt::one() {
                continue;
            }
            let mut p = BigInt::from(2);
            while &p * &p <= o {
                if o.mod_floor(&p).is_zero() {
                    let mut e = 0;
                    while o.mod_floor(&p).is_zero() {
                        o /= &p;
                        e += 1;
                    }
                    by_prime.entry(p.clone()).or_default().push(e);
                }
                p += 1;
            }
            if o > BigInt::one() {
                by_prime.entry(o).or_default().push(1);
            }
        }
        let depth = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![BigInt::one(); depth];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a)); // descending
            for (j, e) in exps.into_iter().enumerate() {
                let mut pe = BigInt::one();
                for _ in 0..e {
                    pe *= &p;
                }
                factors[j] *= pe;
            }
        }
        factors.reverse(); // ascending divisibility
        HomologyGroup { rank, torsion: factors }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().and_then(|o| o.to_u64())
    }
}

impl core::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.rank > 0 {
            if self.rank == 1 {
                write!(f, "Z")?;
            } else {
                write!(f, "Z^{}", self.rank)?;
            }
            first = false;
        }
        for t in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "Z/{t}")?;
            first = false;
        }
        Ok(())
    }
}

/// Homology of `c` in degree `k`. `modulus == 0` computes integral homology;
/// `modulus == N >= 2` computes homology with `Z/N` coefficients, along two
/// independent routes that must agree:
///
/// 1. universal coefficients assembled from the integral answer, and
/// 2. direct reduction of the mod-`N` complex via an integer lattice model.
pub fn homology(c: &ChainComplex, k: usize, modulus: u64) -> HomologyGroup {
    if modulus == 0 {
        return integral_homology(c, k);
    }
    assert!(modulus >= 2, "modulus must be 0 (integral) or at least 2");
    let uct = finite_via_universal_coefficients(c, k, modulus);
    let direct = finite_via_direct_reduction(c, k, modulus);
    assert_eq!(
        uct, direct,
        "universal-coefficient and direct mod-{modulus} routes disagree in degree {k}"
    );
    direct
}

fn integral_homology(c: &ChainComplex, k: usize) -> HomologyGroup {
    let dk = c.boundary(k);
    let dk1 = c.boundary(k + 1);
    let rank_dk = snf(&dk).rank();
    let s = snf(&dk1);
    let rank = c.cell_count(k) - rank_dk - s.rank();
    let torsion: Vec<BigInt> =
        s.invariant_factors.iter().filter(|f| **f > BigInt::one()).cloned().collect();
    HomologyGroup { rank, torsion }
}

fn finite_via_universal_coefficients(c: &ChainComplex, k: usize, n: u64) -> HomologyGroup {
    let n = BigInt::from(n);
    let hk = integral_homology(c, k);
    let mut orders: Vec<BigInt> = vec![n.clone(); hk.rank];
    for t in &hk.torsion {
        orders.push(t.gcd(&n));
    }
    if k >= 1 {
        // Tor(H_{k-1}, Z/N): one Z/gcd(t, N) per torsion factor below
        let below = integral_homology(c, k - 1);
        for t in &below.torsion {
            orders.push(t.gcd(&n));
        }
    }
    HomologyGroup::from_cyclic_orders(orders)
}

/// Direct route: the cycles of the mod-`N` complex lift to the integer
/// lattice `{x : d_k x ≡ 0 (mod N)}`; quotient by `im d_{k+1} + N C_k`
/// expressed in a basis of that lattice.
fn finite_via_direct_reduction(c: &ChainComplex, k: usize, n: u64) -> HomologyGroup {
    let n_big = BigInt::from(n);
    let ck = c.cell_count(k);
    if ck == 0 {
        return HomologyGroup::trivial();
    }
    let dk = c.boundary(k);
    let dk1 = c.boundary(k + 1);

    // lattice basis: columns of R * diag(N / gcd(s_i, N))
    let s = snf(&dk);
    let mut scale = vec![BigInt::one(); ck];
    for (i, f) in s.invariant_factors.iter().enumerate() {
        scale[i] = &n_big / f.gcd(&n_big);
    }
    let mut basis = IntMatrix::zero(ck, ck);
    for i in 0..ck {
        for j in 0..ck {
            basis.set(i, j, s.right.get(i, j) * &scale[j]);
        }
    }

    // generators of im d_{k+1} + N C_k
    let gens_cols = dk1.cols() + ck;
    let mut gens = IntMatrix::zero(ck, gens_cols);
    for i in 0..ck {
        for j in 0..dk1.cols() {
            gens.set(i, j, dk1.get(i, j).clone());
        }
        gens.set(i, dk1.cols() + i, n_big.clone());
    }

    // express the generators in the lattice basis; entries must be integral
    let m = solve_integral(&basis, &gens)
        .expect("relation generators lie inside the cycle lattice");
    let orders = snf(&m).invariant_factors;
    HomologyGroup::from_cyclic_orders(orders)
}

/// Solves `a * x = b` exactly for integer matrices with `a` square and
/// invertible over the rationals; returns `None` if any entry of the
/// solution is non-integral.
fn solve_integral(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    let nn = a.rows();
    assert_eq!(a.cols(), nn);
    assert_eq!(b.rows(), nn);
    // rational Gaussian elimination on the augmented matrix
    let mut work: Vec<Vec<BigRational>> = (0..nn)
        .map(|i| {
            (0..nn + b.cols())
                .map(|j| {
                    let v = if j < nn { a.get(i, j).clone() } else { b.get(i, j - nn).clone() };
                    BigRational::from_integer(v)
                })
                .collect()
        })
        .collect();
    let mut row = 0;
    for col in 0..nn {
        let p = (row..nn).find(|&i| !work[i][col].is_zero())?;
        work.swap(row, p);
        let inv = work[row][col].clone().recip();
        for j in col..nn + b.cols() {
            work[row][j] = &work[row][j] * &inv;
        }
        for i in 0..nn {
            if i != row && !work[i][col].is_zero() {
                let f = work[i][col].clone();
                for j in col..nn + b.cols() {
                    work[i][j] = &work[i][j] - &(&f * &work[row][j]);
                }
            }
        }
        row += 1;
    }
    let mut out = IntMatrix::zero(nn, b.cols());
    for i in 0..nn {
        for j in 0..b.cols() {
            let v = &work[i][nn + j];
            if !v.is_integer() {
                return None;
            }
            out.set(i, j, v.to_integer());
        }
    }
    Some(out)
}

/// The two homotopy invariants of the groupoid of 1-cycles and bounding
/// 2-chains: classes of objects and automorphisms of any object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardInfo {
    /// `H_1(M, Z/N)`: isomorphism classes of 1-cycles.
    pub pi0: HomologyGroup,
    /// `H_2(M, Z/N)`: automorphisms of any object.
    pub pi1: HomologyGroup,
    /// Whether `|pi1| = |H_1(M, Z/N)|`, the cardinality form of the duality
    /// `H_2(M, A) ≅ H_1(M, A^∨)`; holds for closed oriented manifolds.
    pub self_dual_cardinality: bool,
}

/// Computes both invariants of the 1-cycle groupoid over `Z/N`.
pub fn picard(c: &ChainComplex, n: u64) -> PicardInfo {
    assert!(n >= 2);
    let pi0 = homology(c, 1, n);
    let pi1 = homology(c, 2, n);
    let self_dual_cardinality = pi0.order() == pi1.order();
    PicardInfo { pi0, pi1, self_dual_cardinality }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lens_like() -> ChainComplex {
        // one cell per degree, 2-cell attached with degree 2: H1 = Z/2
        ChainComplex::new(
            vec![1, 1, 1, 1],
            vec![
                IntMatrix::zero(1, 1),
                IntMatrix::from_rows(&[vec![2]]),
                IntMatrix::zero(1, 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn invariant_factor_packing() {
        // Z/2 + Z/4 + Z/3 = Z/2 + Z/12
        let g = HomologyGroup::from_cyclic_orders([2, 4, 3].map(BigInt::from));
        assert_eq!(g.torsion, vec![BigInt::from(2), BigInt::from(12)]);
        // Z/6 + Z/4 = Z/2 + Z/12
        let h = HomologyGroup::from_cyclic_orders([6, 4].map(BigInt::from));
        assert_eq!(h.torsion, vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn torus_homology_all_degrees() {
        let t2 = ChainComplex::circle().product(&ChainComplex::circle());
        assert_eq!(homology(&t2, 0, 0), HomologyGroup::free(1));
        assert_eq!(homology(&t2, 1, 0), HomologyGroup::free(2));
        assert_eq!(homology(&t2, 2, 0), HomologyGroup::free(1));
    }

    #[test]
    fn subdivision_does_not_change_homology() {
        let a = ChainComplex::circle().product(&ChainComplex::circle());
        let b = ChainComplex::circle().product(&ChainComplex::circle_subdivided());
        let c = ChainComplex::circle_subdivided().product(&ChainComplex::circle_subdivided());
        for k in 0..=2 {
            assert_eq!(homology(&a, k, 0), homology(&b, k, 0), "degree {k}");
            assert_eq!(homology(&a, k, 0), homology(&c, k, 0), "degree {k}");
        }
        for n in [2u64, 3, 4, 6] {
            for k in 0..=2 {
                assert_eq!(homology(&a, k, n), homology(&b, k, n), "mod {n} degree {k}");
            }
        }
    }

    #[test]
    fn lens_like_torsion_and_finite_coefficients() {
        let l = lens_like();
        assert_eq!(
            homology(&l, 1, 0),
            HomologyGroup { rank: 0, torsion: vec![BigInt::from(2)] }
        );
        assert_eq!(homology(&l, 2, 0), HomologyGroup::trivial());
        // mod 2: H1 = Z/2 and H2 = Z/2 (Tor term)
        assert_eq!(homology(&l, 1, 2).order(), Some(BigInt::from(2)));
        assert_eq!(homology(&l, 2, 2).order(), Some(BigInt::from(2)));
        // mod 3: both trivial
        assert!(homology(&l, 1, 3).is_trivial());
        assert!(homology(&l, 2, 3).is_trivial());
        // mod 4 and 6: gcd behaviour
        assert_eq!(homology(&l, 1, 4).order(), Some(BigInt::from(2)));
        assert_eq!(homology(&l, 1, 6).order(), Some(BigInt::from(2)));
    }

    #[test]
    fn picard_duality_cardinality_on_closed_manifolds() {
        let l = lens_like();
        for n in 2..=8 {
            let p = picard(&l, n);
            assert!(p.self_dual_cardinality, "n = {n}");
        }
    }

    #[test]
    fn connected_complex_has_rank_one_h0() {
        let x = ChainComplex::surface(2).product(&ChainComplex::circle());
        assert_eq!(homology(&x, 0, 0), HomologyGroup::free(1));
    }
}
