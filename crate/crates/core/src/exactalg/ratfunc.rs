//! Rational functions in the Kauffman variable over the rationals.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::{LaurentPoly, Rat};
use super::ExactAlgError;

/// Arithmetic operation selector for [`RatFunc::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element of `Q(A)`, stored in a canonical reduced form:
///
/// - numerator and denominator share no polynomial factor;
/// - the denominator is an ordinary polynomial with nonzero constant term
///   (every power of `A` is carried by the numerator);
/// - the denominator is monic, so its leading coefficient is `1`.
///
/// Equal values therefore have identical representations, and `==` is value
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() };
        }
        let vn = num.min_exp().unwrap();
        let vd = den.min_exp().unwrap();
        let p = num.shifted(-vn);
        let q = den.shifted(-vd);
        let g = LaurentPoly::poly_gcd(&p, &q);
        let p = p.div_exact(&g);
        let q = q.div_exact(&g);
        let lc = q.leading_coeff();
        let inv = lc.recip();
        RatFunc {
            num: p.scaled(&inv).shifted(vn - vd),
            den: q.scaled(&inv),
        }
    }

    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ExactAlgError> {
        if den.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::from_poly(LaurentPoly::monomial(0, r))
    }

    /// The generator `A`.
    pub fn var() -> Self {
        Self::from_poly(LaurentPoly::var())
    }

    /// `A^k` for any integer `k`.
    pub fn var_pow(k: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(k, Rat::one()))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True if the denominator is `1`, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn arith(a: &RatFunc, b: &RatFunc, op: ArithOp) -> Result<RatFunc, ExactAlgError> {
        match op {
            ArithOp::Add => Ok(a + b),
            ArithOp::Sub => Ok(a - b),
            ArithOp::Mul => Ok(a * b),
            ArithOp::Div => a.checked_div(b),
        }
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, ExactAlgError> {
        if rhs.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn recip(&self) -> Result<RatFunc, ExactAlgError> {
        RatFunc::one().checked_div(self)
    }

    pub fn pow(&self, n: u32) -> RatFunc {
        let mut acc = RatFunc::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a rational point; `None` if the denominator (or a
    /// negative power of `A` in the numerator) vanishes there.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x)?;
        if d == Rat::from_integer(BigInt::from(0)) {
            return None;
        }
        let n = self.num.eval(x)?;
        Some(n / d)
    }

    /// Rewrites in `q = A^2` when all exponents are even: returns the
    /// numerator/denominator pair as polynomials in `q`.
    pub fn in_q(&self) -> Option<(LaurentPoly, LaurentPoly)> {
        Some((self.num.halve_exponents()?, self.den.halve_exponents()?))
    }

    pub fn to_string_with_var(&self, var: &str) -> String {
        use alloc::format;
        if self.den.is_one() {
            self.num.to_string_with_var(var)
        } else {
            format!(
                "({})/({})",
                self.num.to_string_with_var(var),
                self.den.to_string_with_var(var)
            )
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with_var("A"))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Total division operator for call sites where the divisor is structurally
/// nonzero (quantum integers at generic `q`, detected pivots, ...). Panics on
/// zero; fallible callers use [`RatFunc::checked_div`].
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = &*self * rhs;
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}
