//! Exact arithmetic: rationals, sparse Laurent polynomials in `q` and `t`
//! (with fractional `q`-exponents), univariate Laurent polynomials, rational
//! functions and the truncated-series engine behind limits at 1.

mod json;
mod laurent;
mod rational_fn;
mod series;
mod uni;

pub use json::JsonTerm;
pub use laurent::{LaurentQT, QTExponent, Substitution, QMap, TMap};
pub use rational_fn::RationalQT;
pub use series::{expand_series, limit_at_one, Limit, SeriesExpansion, TruncSeries};
pub use uni::{UniLaurent, UniRational};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// The two formal variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
}

impl Var {
    pub fn name(self) -> char {
        match self {
            Var::Q => 'q',
            Var::T => 't',
        }
    }

    pub fn other(self) -> Var {
        match self {
            Var::Q => Var::T,
            Var::T => Var::Q,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `a` or `a/b`.
pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn fmt_exp(e: Ratio<i64>) -> String {
    if e.is_integer() {
        e.numer().to_string()
    } else {
        format!("{}/{}", e.numer(), e.denom())
    }
}

/// Generalized binomial coefficients `C(e, 0..=order)` for rational `e`.
pub(crate) fn binomials(e: Ratio<i64>, order: usize) -> Vec<Rational> {
    let e = Rational::new(BigInt::from(*e.numer()), BigInt::from(*e.denom()));
    let mut out = Vec::with_capacity(order + 1);
    let mut c = Rational::one();
    out.push(c.clone());
    for k in 1..=order {
        c = c * (&e - int(k as i64 - 1)) / int(k as i64);
        out.push(c.clone());
    }
    out
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Huge numerators/denominators: scale down via bit lengths.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

pub(crate) fn lcm_i64(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

/// `(-1)^e` for an integer exponent.
pub(crate) fn sign_pow(e: i64) -> Rational {
    if e.is_odd() {
        -Rational::one()
    } else {
        Rational::one()
    }
}

pub(crate) fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

