//! Simplicial 1-cycles with finite coefficients and the bounding-2-chain
//! search.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exactalg::snf;

use super::complex::ChainComplex;
use super::HomologyError;

/// A 1-chain over `Z/N` whose boundary vanishes: at every 0-cell the
/// incoming and outgoing weights balance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleOne {
    modulus: u64,
    chain: BTreeMap<usize, u64>,
}

impl CycleOne {
    /// Validates the cycle condition against the complex; the error names
    /// the first 0-cell where the weights fail to balance.
    pub fn new(
        c: &ChainComplex,
        modulus: u64,
        chain: BTreeMap<usize, u64>,
    ) -> Result<Self, HomologyError> {
        if modulus < 2 {
            return Err(HomologyError::ModulusMismatch { left: modulus, right: 2 });
        }
        for &cell in chain.keys() {
            if cell >= c.cell_count(1) {
                return Err(HomologyError::UnknownCell { degree: 1, cell });
            }
        }
        let cycle = CycleOne { modulus, chain };
        cycle.check_boundary(c)?;
        Ok(cycle)
    }

    pub fn zero(modulus: u64) -> Self {
        CycleOne { modulus, chain: BTreeMap::new() }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coefficient(&self, cell: usize) -> u64 {
        self.chain.get(&cell).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (&usize, &u64)> {
        self.chain.iter()
    }

    fn check_boundary(&self, c: &ChainComplex) -> Result<(), HomologyError> {
        let d1 = c.boundary(1);
        let n = BigInt::from(self.modulus);
        for v in 0..c.cell_count(0) {
            let mut acc = BigInt::zero();
            for (&e, &w) in &self.chain {
                acc += d1.get(v, e) * BigInt::from(w);
            }
            if !acc.mod_floor(&n).is_zero() {
                return Err(HomologyError::NotACycle { zero_cell: v });
            }
        }
        Ok(())
    }

    /// `self - other` as a plain vector over `Z/N`.
    fn difference(&self, other: &CycleOne, len: usize) -> Vec<u64> {
        let n = self.modulus;
        let mut out = vec![0u64; len];
        for (&e, &w) in &self.chain {
            out[e] = (out[e] + w) % n;
        }
        for (&e, &w) in &other.chain {
            out[e] = (out[e] + n - (w % n)) % n;
        }
        out
    }
}

/// A 2-chain `η` with `d η = γ' - γ` over `Z/N`.
pub type TwoChainWitness = BTreeMap<usize, u64>;

/// Decides whether two cycles are homologous by solving `d_2 η = γ' - γ`
/// over `Z/N`, and produces the witness 2-chain when one exists.
pub fn homologous(
    c: &ChainComplex,
    gamma: &CycleOne,
    gamma_prime: &CycleOne,
) -> Result<Option<TwoChainWitness>, HomologyError> {
    if gamma.modulus() != gamma_prime.modulus() {
        return Err(HomologyError::ModulusMismatch {
            left: gamma.modulus(),
            right: gamma_prime.modulus(),
        });
    }
    let n = gamma.modulus();
    let n_big = BigInt::from(n);
    let target = gamma_prime.difference(gamma, c.cell_count(1));

    // L d2 R = D; solve D z = L target (mod N) coordinate by coordinate
    let d2 = c.boundary(2);
    let s = snf(&d2);
    let lt: Vec<BigInt> = s
        .left
        .mul_vec(&target.iter().map(|&w| BigInt::from(w)).collect::<Vec<_>>())
        .into_iter()
        .map(|v| v.mod_floor(&n_big))
        .collect();

    let rank = s.rank();
    let mut z = vec![BigInt::zero(); c.cell_count(2)];
    for (i, c_i) in lt.iter().enumerate() {
        if i < rank {
            let s_i = &s.invariant_factors[i];
            let g = s_i.gcd(&n_big);
            if !c_i.mod_floor(&g).is_zero() {
                return Ok(None);
            }
            // s_i z ≡ c_i (mod N)  <=>  (s_i/g) z ≡ c_i/g (mod N/g)
            let m = &n_big / &g;
            let a = (s_i / &g).mod_floor(&m);
            let b = (c_i / &g).mod_floor(&m);
            let inv = mod_inverse(&a, &m).expect("s_i/g is a unit mod N/g");
            z[i] = (b * inv).mod_floor(&m);
        } else if !c_i.is_zero() {
            return Ok(None);
        }
    }

    let eta: Vec<BigInt> =
        s.right.mul_vec(&z).into_iter().map(|v| v.mod_floor(&n_big)).collect();

    // verify d2 eta = target mod N
    let check = d2.mul_vec(&eta);
    for (i, v) in check.iter().enumerate() {
        assert!(
            (v - BigInt::from(target[i])).mod_floor(&n_big).is_zero(),
            "witness verification failed"
        );
    }

    let witness: TwoChainWitness = eta
        .into_iter()
        .enumerate()
        .filter_map(|(i, v)| {
            let w = v.mod_floor(&n_big).to_u64().expect("reduced mod N");
            (w != 0).then_some((i, w))
        })
        .collect();
    Ok(Some(witness))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_zero() {
        return None;
    }
    let e = a.extended_gcd(m);
    if e.gcd != BigInt::from(1) {
        return None;
    }
    Some(e.x.mod_floor(m))
}
