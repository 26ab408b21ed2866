use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::{fmt_exp, fmt_rational, lcm_i64, rational_to_f64, Rational, Var};

/// Laurent polynomial in one variable, exponents in `(1/ram)·ℤ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniLaurent {
    var: Var,
    ram: i64,
    terms: BTreeMap<i64, Rational>,
}

impl UniLaurent {
    pub fn zero(var: Var) -> Self {
        UniLaurent { var, ram: 1, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_scaled(var, 1, [(0, c)])
    }

    pub fn monomial(var: Var, e: Ratio<i64>, c: Rational) -> Self {
        Self::from_scaled(var, *e.denom(), [(*e.numer(), c)])
    }

    /// `x^e`
    pub fn x_pow(var: Var, e: i64) -> Self {
        Self::from_scaled(var, 1, [(e, Rational::one())])
    }

    /// `x^d - x^-d`
    pub fn bracket(var: Var, d: i64) -> Self {
        Self::from_scaled(var, 1, [(d, Rational::one()), (-d, -Rational::one())])
    }

    /// `x^d + x^-d`
    pub fn sym(var: Var, d: i64) -> Self {
        Self::from_scaled(var, 1, [(d, Rational::one()), (-d, Rational::one())])
    }

    pub fn from_int_coeffs(var: Var, terms: &[(i64, i64)]) -> Self {
        Self::from_scaled(var, 1, terms.iter().map(|&(e, c)| (e, Rational::from_integer(c.into()))))
    }

    /// From `(ram * exponent, coeff)` pairs.
    pub(crate) fn from_scaled<I: IntoIterator<Item = (i64, Rational)>>(
        var: Var,
        ram: i64,
        terms: I,
    ) -> Self {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        Self::normalized(var, ram, map)
    }

    fn normalized(var: Var, ram: i64, mut terms: BTreeMap<i64, Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        if terms.is_empty() {
            return Self::zero(var);
        }
        let g = terms.keys().fold(ram, |g, &a| g.gcd(&a));
        if g > 1 {
            terms = terms.into_iter().map(|(a, c)| (a / g, c)).collect();
        }
        UniLaurent { var, ram: ram / g, terms }
    }

    fn rekeyed(&self, ram: i64) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        let f = ram / self.ram;
        self.terms.iter().map(move |(&a, c)| (a * f, c))
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn ram(&self) -> i64 {
        self.ram
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Ratio<i64>, &Rational)> + '_ {
        let r = self.ram;
        self.terms.iter().map(move |(&a, c)| (Ratio::new(a, r), c))
    }

    pub fn coeff(&self, e: Ratio<i64>) -> Rational {
        if self.ram % e.denom() != 0 {
            return Rational::zero();
        }
        self.terms
            .get(&(e.numer() * (self.ram / e.denom())))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeff_int(&self, e: i64) -> Rational {
        self.coeff(Ratio::from_integer(e))
    }

    pub fn min_exp(&self) -> Option<Ratio<i64>> {
        self.terms.keys().next().map(|&a| Ratio::new(a, self.ram))
    }

    pub fn max_exp(&self) -> Option<Ratio<i64>> {
        self.terms.keys().next_back().map(|&a| Ratio::new(a, self.ram))
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// A single term `c·x^e`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn has_integral_exponents(&self) -> bool {
        self.ram == 1
    }

    pub fn with_var(&self, var: Var) -> Self {
        UniLaurent { var, ..self.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalized(self.var, self.ram, self.terms.iter().map(|(k, v)| (*k, v * c)).collect())
    }

    /// `x -> x^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "x -> x^0 is not a substitution");
        Self::normalized(self.var, self.ram, self.terms.iter().map(|(a, c)| (a * k, c.clone())).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&a, c)| rational_to_f64(c) * x.powf(a as f64 / self.ram as f64))
            .sum()
    }

    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// `(shift, dense)` with `self = x^shift · Σ dense[i] x^i`, in units of `1/ram`.
    fn to_dense(&self, ram: i64) -> (i64, Vec<Rational>) {
        let keyed: Vec<_> = self.rekeyed(ram).collect();
        let lo = keyed.first().map(|p| p.0).unwrap_or(0);
        let hi = keyed.last().map(|p| p.0).unwrap_or(0);
        let mut dense = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (a, c) in keyed {
            dense[(a - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    fn from_dense(var: Var, ram: i64, shift: i64, dense: &[Rational]) -> Self {
        Self::from_scaled(
            var,
            ram,
            dense.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (shift + i as i64, c.clone())),
        )
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &UniLaurent) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.var));
        }
        let ram = lcm_i64(self.ram, d.ram);
        let (sa, a) = self.to_dense(ram);
        let (sb, b) = d.to_dense(ram);
        let (quot, rem) = dense_div_rem(&a, &b);
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.var, ram, sa - sb, &quot))
    }

    /// Monic greatest common divisor, with no power of `x` factored in.
    pub fn gcd(&self, other: &UniLaurent) -> Self {
        let ram = lcm_i64(self.ram, other.ram);
        let (_, a) = self.to_dense(ram);
        let (_, b) = other.to_dense(ram);
        let g = dense_gcd(a, b);
        Self::from_dense(self.var, ram, 0, &g)
    }
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut rem);
    trim(&mut b);
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + b.len() - 1] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
        }
        quot[i] = c;
    }
    trim(&mut rem);
    (quot, rem)
}

fn dense_gcd(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = dense_div_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c /= &lead;
        }
    }
    a
}

impl Add for &UniLaurent {
    type Output = UniLaurent;
    fn add(self, rhs: &UniLaurent) -> UniLaurent {
        let ram = lcm_i64(self.ram, rhs.ram);
        UniLaurent::from_scaled(
            self.var,
            ram,
            self.rekeyed(ram).chain(rhs.rekeyed(ram)).map(|(a, c)| (a, c.clone())),
        )
    }
}

impl Sub for &UniLaurent {
    type Output = UniLaurent;
    fn sub(self, rhs: &UniLaurent) -> UniLaurent {
        self + &(-rhs)
    }
}

impl Neg for &UniLaurent {
    type Output = UniLaurent;
    fn neg(self) -> UniLaurent {
        UniLaurent { var: self.var, ram: self.ram, terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Mul for &UniLaurent {
    type Output = UniLaurent;
    fn mul(self, rhs: &UniLaurent) -> UniLaurent {
        let ram = lcm_i64(self.ram, rhs.ram);
        let mut acc: BTreeMap<i64, Rational> = BTreeMap::new();
        for (a1, c1) in self.rekeyed(ram) {
            for (a2, c2) in rhs.rekeyed(ram) {
                *acc.entry(a1 + a2).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        UniLaurent::normalized(self.var, ram, acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<UniLaurent> for UniLaurent {
            type Output = UniLaurent;
            fn $m(self, rhs: UniLaurent) -> UniLaurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&UniLaurent> for UniLaurent {
            type Output = UniLaurent;
            fn $m(self, rhs: &UniLaurent) -> UniLaurent {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniLaurent {
    type Output = UniLaurent;
    fn neg(self) -> UniLaurent {
        -&self
    }
}

/// Canonical text: `c*x^e` terms in ascending exponent order.
impl fmt::Display for UniLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let c_str = if i == 0 {
                fmt_rational(c)
            } else if c.is_negative() {
                write!(f, " - ")?;
                fmt_rational(&-c)
            } else {
                write!(f, " + ")?;
                fmt_rational(c)
            };
            write!(f, "{}*{}^{}", c_str, self.var, fmt_exp(e))?;
        }
        Ok(())
    }
}

/// Reduced quotient of two univariate Laurent polynomials.
///
/// The denominator is monic with lowest exponent 0 and shares no factor with
/// the numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniRational {
    num: UniLaurent,
    den: UniLaurent,
}

impl UniRational {
    pub fn new(num: UniLaurent, den: UniLaurent) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let var = num.var();
        if num.is_zero() {
            return UniRational { num, den: UniLaurent::one(var) };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        // Move the monomial part of the denominator into the numerator and make it monic.
        let lo = den.min_exp().unwrap();
        let lead = den.leading_coeff().unwrap().clone();
        let shift = UniLaurent::monomial(var, -lo, Rational::one());
        den = (&den * &shift).scale(&lead.recip());
        num = (&num * &shift).scale(&lead.recip());
        UniRational { num, den }
    }

    pub fn numer(&self) -> &UniLaurent {
        &self.num
    }

    pub fn denom(&self) -> &UniLaurent {
        &self.den
    }

    /// `Some(p)` when the denominator is `1`.
    pub fn as_laurent(&self) -> Option<&UniLaurent> {
        if self.den.is_monomial() && self.den.min_exp() == Some(Ratio::from_integer(0)) {
            Some(&self.num)
        } else {
            None
        }
    }
}

impl fmt::Display for UniRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn exact_bracket_division() {
        let q = Var::Q;
        let num = UniLaurent::bracket(q, 2);
        let den = UniLaurent::bracket(q, 1);
        let quot = num.div_exact(&den).unwrap();
        assert_eq!(quot, UniLaurent::sym(q, 1));
        assert!(den.div_exact(&num).is_none());
    }

    #[test]
    fn alexander_trefoil_ratio() {
        let q = Var::Q;
        let num = &UniLaurent::bracket(q, 6) * &UniLaurent::bracket(q, 1);
        let den = &UniLaurent::bracket(q, 2) * &UniLaurent::bracket(q, 3);
        let r = num.div_exact(&den).unwrap();
        assert_eq!(r, UniLaurent::from_int_coeffs(q, &[(-2, 1), (0, -1), (2, 1)]));
    }

    #[test]
    fn gcd_reduces_fraction() {
        let q = Var::Q;
        let f = UniRational::new(UniLaurent::bracket(q, 2), UniLaurent::bracket(q, 3));
        // (q^2 - q^-2)/(q^3 - q^-3) = (q^2+1)(q^2-1)q / ((q^2-1)(q^4+q^2+1))
        assert_eq!(f.denom(), &UniLaurent::from_int_coeffs(q, &[(0, 1), (2, 1), (4, 1)]));
        assert_eq!(f.numer(), &UniLaurent::from_int_coeffs(q, &[(1, 1), (3, 1)]));
        assert!(f.as_laurent().is_none());
        let g = UniRational::new(UniLaurent::bracket(q, 2), UniLaurent::bracket(q, 1));
        assert_eq!(g.as_laurent().unwrap(), &UniLaurent::sym(q, 1));
    }

    #[test]
    fn substitute_power_and_fractional() {
        let t = Var::T;
        let p = UniLaurent::from_int_coeffs(t, &[(-1, 2), (3, 1)]);
        assert_eq!(p.substitute_power(-1), UniLaurent::from_int_coeffs(t, &[(1, 2), (-3, 1)]));
        let h = UniLaurent::monomial(Var::Q, Ratio::new(1, 2), int(1));
        assert_eq!(&h * &h, UniLaurent::x_pow(Var::Q, 1));
        assert_eq!(h.to_string(), "1*q^1/2");
    }
}
