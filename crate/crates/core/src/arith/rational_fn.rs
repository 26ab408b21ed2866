use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::{LaurentQT, QTExponent, Rational, Substitution};
use crate::error::Result;

/// Quotient of two [`LaurentQT`] values.
///
/// Normalized so that neither side carries a superfluous monomial factor
/// (lowest exponents are `≥ 0` on both sides and `0` on at least one side,
/// per variable) and the denominator's leading coefficient is `1`. No
/// polynomial gcd is taken; equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalQT {
    num: LaurentQT,
    den: LaurentQT,
}

impl RationalQT {
    pub fn new(num: LaurentQT, den: LaurentQT) -> Self {
        assert!(!den.is_zero(), "RationalQT with zero denominator");
        if num.is_zero() {
            return RationalQT { num, den: LaurentQT::one() };
        }
        let (nq, nt) = (num.min_q().unwrap(), num.min_t().unwrap());
        let (dq, dt) = (den.min_q().unwrap(), den.min_t().unwrap());
        let zero = Ratio::from_integer(0);
        // residual monomial q^(nq-dq) t^(nt-dt) goes to whichever side keeps exponents >= 0
        let rq = nq - dq;
        let rt = nt - dt;
        let num_shift = QTExponent::new(-nq + if rq > zero { rq } else { zero }, -nt + rt.max(0));
        let den_shift = QTExponent::new(-dq + if rq < zero { -rq } else { zero }, -dt + (-rt).max(0));
        let num = num.shift(num_shift);
        let den = den.shift(den_shift);
        let lead = den.leading_coeff().unwrap().clone();
        if lead.is_one() {
            RationalQT { num, den }
        } else {
            let inv = lead.recip();
            RationalQT { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_laurent(p: LaurentQT) -> Self {
        Self::new(p, LaurentQT::one())
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentQT::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentQT::one())
    }

    pub fn numer(&self) -> &LaurentQT {
        &self.num
    }

    pub fn denom(&self) -> &LaurentQT {
        &self.den
    }

    pub fn into_parts(self) -> (LaurentQT, LaurentQT) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(p)` when the value is a Laurent polynomial.
    pub fn as_laurent(&self) -> Option<LaurentQT> {
        self.num.div_exact(&self.den)
    }

    /// Integer `q`-exponents and integer coefficients on both sides.
    pub fn is_integral(&self) -> bool {
        self.num.has_integral_q_exponents()
            && self.den.has_integral_q_exponents()
            && self.num.has_integer_coefficients()
            && self.den.has_integer_coefficients()
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::new(self.num.pow(k), self.den.pow(k))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn substitute(&self, s: Substitution) -> Result<Self> {
        Ok(Self::new(self.num.substitute(s)?, self.den.substitute(s)?))
    }

    pub fn eval_f64(&self, q: f64, t: f64) -> f64 {
        self.num.eval_f64(q, t) / self.den.eval_f64(q, t)
    }
}

impl PartialEq for RationalQT {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalQT {}

impl Add for &RationalQT {
    type Output = RationalQT;
    fn add(self, rhs: &RationalQT) -> RationalQT {
        if self.den == rhs.den {
            return RationalQT::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalQT::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Sub for &RationalQT {
    type Output = RationalQT;
    fn sub(self, rhs: &RationalQT) -> RationalQT {
        self + &(-rhs)
    }
}

impl Neg for &RationalQT {
    type Output = RationalQT;
    fn neg(self) -> RationalQT {
        RationalQT { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalQT {
    type Output = RationalQT;
    fn mul(self, rhs: &RationalQT) -> RationalQT {
        RationalQT::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalQT {
    type Output = RationalQT;
    fn div(self, rhs: &RationalQT) -> RationalQT {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalQT::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalQT> for RationalQT {
            type Output = RationalQT;
            fn $m(self, rhs: RationalQT) -> RationalQT {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalQT {
    type Output = RationalQT;
    fn neg(self) -> RationalQT {
        -&self
    }
}

impl Zero for RationalQT {
    fn zero() -> Self {
        RationalQT::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Display for RationalQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_times_z_is_t_bracket() {
        let z = RationalQT::from_laurent(LaurentQT::q_bracket(1));
        let delta = RationalQT::new(LaurentQT::t_bracket(1), LaurentQT::q_bracket(1));
        let prod = &z * &delta;
        assert_eq!(prod, RationalQT::from_laurent(LaurentQT::t_bracket(1)));
        assert_eq!(prod.as_laurent().unwrap(), LaurentQT::t_bracket(1));
    }

    #[test]
    fn normalization_moves_monomials() {
        let r = RationalQT::new(LaurentQT::qt(3, -1), LaurentQT::qt(1, 2).scale(&crate::arith::int(2)));
        assert!(r.denom().is_one() || r.denom().len() == 1);
        assert_eq!(r.as_laurent().unwrap(), LaurentQT::qt(2, -3).scale(&crate::arith::rat(1, 2)));
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let a = RationalQT::new(LaurentQT::q_bracket(2), LaurentQT::q_bracket(1));
        let b = RationalQT::from_laurent(&LaurentQT::qt(1, 0) + &LaurentQT::qt(-1, 0));
        assert_eq!(a, b);
        assert_ne!(a, RationalQT::one());
    }
}
