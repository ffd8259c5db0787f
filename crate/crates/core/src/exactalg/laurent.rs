//! Laurent polynomials in one variable with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Rat = BigRational;

/// A finitely supported map `exponent -> coefficient`, i.e. an element of
/// `Q[A, A^-1]`. Zero coefficients are never stored, so structural equality
/// is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, Rat::one())
    }

    /// The variable `A` itself.
    pub fn var() -> Self {
        Self::monomial(1, Rat::one())
    }

    pub fn monomial(exp: i64, coeff: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, Rat::from_integer(BigInt::from(n)))
    }

    /// Builds from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.coeffs.remove(&exp);
                }
            }
            None => {
                self.coeffs.insert(exp, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// Lowest exponent with nonzero coefficient. `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient. `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient of the highest-degree term; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rat {
        match self.max_exp() {
            Some(e) => self.coeff(e),
            None => Rat::zero(),
        }
    }

    /// Multiplies by `A^k`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a rational point. Negative exponents require a nonzero point.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let mut acc = Rat::zero();
        for (e, c) in &self.coeffs {
            if *e < 0 && x.is_zero() {
                return None;
            }
            let mut p = Rat::one();
            for _ in 0..e.unsigned_abs() {
                p *= x;
            }
            if *e < 0 {
                p = p.recip();
            }
            acc += c * p;
        }
        Some(acc)
    }

    /// Rewrites in the variable `q = A^2`: succeeds iff every exponent is even.
    pub fn halve_exponents(&self) -> Option<LaurentPoly> {
        if self.coeffs.keys().any(|e| e % 2 != 0) {
            return None;
        }
        Some(LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e / 2, c.clone())).collect(),
        })
    }

    /// True if every exponent is `>= 0`, i.e. this is an ordinary polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    /// Polynomial degree; requires an ordinary polynomial. Zero has degree `None`.
    fn degree(&self) -> Option<i64> {
        debug_assert!(self.is_polynomial());
        self.max_exp()
    }

    /// Euclidean division for ordinary polynomials: `self = q * d + r` with
    /// `deg r < deg d`. Panics if `d` is zero or either side is not a polynomial.
    pub fn div_rem(&self, d: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        assert!(self.is_polynomial() && d.is_polynomial());
        let dd = d.degree().unwrap();
        let dl = d.leading_coeff();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() && rem.degree().unwrap() >= dd {
            let e = rem.degree().unwrap() - dd;
            let c = rem.leading_coeff() / &dl;
            let t = LaurentPoly::monomial(e, c);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        (quot, rem)
    }

    /// Exact polynomial division; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &LaurentPoly) -> LaurentPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd of two ordinary polynomials (Euclidean algorithm).
    /// `gcd(0, 0) = 0`; otherwise the result is monic.
    pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        if x.is_zero() {
            x
        } else {
            let lc = x.leading_coeff();
            x.scaled(&lc.recip())
        }
    }

    /// Renders with an arbitrary variable name, highest exponent first.
    pub fn to_string_with_var(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit_coeff = abs.is_one() && *e != 0;
            if !unit_coeff {
                let _ = write!(out, "{abs}");
            }
            if *e != 0 {
                if !unit_coeff {
                    out.push('*');
                }
                if *e == 1 {
                    let _ = write!(out, "{var}");
                } else {
                    let _ = write!(out, "{var}^{e}");
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with_var("A"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c.clone());
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

/// Collects a `Vec` of tl-style coefficient columns; convenience for tests.
impl FromIterator<(i64, Rat)> for LaurentPoly {
    fn from_iter<I: IntoIterator<Item = (i64, Rat)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let a = LaurentPoly::from_terms([(2, rat(1)), (0, rat(3))]);
        let b = LaurentPoly::from_terms([(2, rat(-1)), (0, rat(-3))]);
        let s = &a + &b;
        assert!(s.is_zero());
        assert_eq!(s.terms().count(), 0);
    }

    #[test]
    fn multiplication_expands() {
        // (A + A^-1)(A - A^-1) = A^2 - A^-2
        let p = LaurentPoly::from_terms([(1, rat(1)), (-1, rat(1))]);
        let q = LaurentPoly::from_terms([(1, rat(1)), (-1, rat(-1))]);
        let expected = LaurentPoly::from_terms([(2, rat(1)), (-2, rat(-1))]);
        assert_eq!(&p * &q, expected);
    }

    #[test]
    fn div_rem_roundtrip() {
        // A^2 - 1 = (A - 1)(A + 1)
        let n = LaurentPoly::from_terms([(2, rat(1)), (0, rat(-1))]);
        let d = LaurentPoly::from_terms([(1, rat(1)), (0, rat(-1))]);
        let (q, r) = n.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, LaurentPoly::from_terms([(1, rat(1)), (0, rat(1))]));
    }

    #[test]
    fn gcd_is_monic() {
        // gcd(2A^2 - 2, 4A - 4) = A - 1
        let a = LaurentPoly::from_terms([(2, rat(2)), (0, rat(-2))]);
        let b = LaurentPoly::from_terms([(1, rat(4)), (0, rat(-4))]);
        let g = LaurentPoly::poly_gcd(&a, &b);
        assert_eq!(g, LaurentPoly::from_terms([(1, rat(1)), (0, rat(-1))]));
    }

    #[test]
    fn display_reads_naturally() {
        let p = LaurentPoly::from_terms([(3, rat(-1)), (0, rat(2)), (-2, rat(1))]);
        assert_eq!(p.to_string(), "-A^3 + 2 + A^-2");
    }
}
