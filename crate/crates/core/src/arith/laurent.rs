use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::{fmt_exp, fmt_rational, lcm_i64, rational_to_f64, sign_pow, Rational, UniLaurent, Var};
use crate::error::{Error, Result};

/// Exponent of a monomial `q^q t^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QTExponent {
    pub q: Ratio<i64>,
    pub t: i64,
}

impl QTExponent {
    pub fn new(q: Ratio<i64>, t: i64) -> Self {
        QTExponent { q, t }
    }

    pub fn int(q: i64, t: i64) -> Self {
        QTExponent { q: Ratio::from_integer(q), t }
    }
}

/// Sparse Laurent polynomial in `q` and `t` with exact rational coefficients.
///
/// `q`-exponents are rationals sharing the denominator `ram` (the
/// ramification index); `t`-exponents are integers. Terms are keyed by
/// `(ram * q_exp, t_exp)`, so the map order is the canonical
/// `(q_exp, t_exp)` ascending order. `ram` is always the least common
/// denominator of the stored exponents and zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentQT {
    ram: i64,
    terms: BTreeMap<(i64, i64), Rational>,
}

/// Signed monomial substitution for `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QMap {
    Identity,
    /// `q -> q^-1`
    Inverse,
    /// `q -> -q`
    Neg,
    /// `q -> -q^-1`
    NegInverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TMap {
    Identity,
    /// `t -> t^-1`
    Inverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub q: QMap,
    pub t: TMap,
}

impl Substitution {
    pub const Q_INVERSE: Substitution = Substitution { q: QMap::Inverse, t: TMap::Identity };
    pub const Q_NEG_INVERSE: Substitution = Substitution { q: QMap::NegInverse, t: TMap::Identity };
    /// The mirror map on coefficients: `q -> q^-1`, `t -> t^-1`.
    pub const MIRROR: Substitution = Substitution { q: QMap::Inverse, t: TMap::Inverse };
}

impl LaurentQT {
    pub fn zero() -> Self {
        LaurentQT { ram: 1, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Ratio::from_integer(0), 0, c)
    }

    pub fn monomial(q: Ratio<i64>, t: i64, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let ram = *q.denom();
        let mut terms = BTreeMap::new();
        terms.insert((*q.numer(), t), c);
        LaurentQT { ram, terms }
    }

    /// `q^a t^b` with integer exponents.
    pub fn qt(a: i64, b: i64) -> Self {
        Self::monomial(Ratio::from_integer(a), b, Rational::one())
    }

    pub fn q() -> Self {
        Self::qt(1, 0)
    }

    pub fn t() -> Self {
        Self::qt(0, 1)
    }

    /// `q^d - q^-d`
    pub fn q_bracket(d: i64) -> Self {
        Self::qt(d, 0) - Self::qt(-d, 0)
    }

    /// `t^d - t^-d`
    pub fn t_bracket(d: i64) -> Self {
        Self::qt(0, d) - Self::qt(0, -d)
    }

    /// Builds a polynomial from `(q_exp, t_exp, coeff)` triples with integer data.
    pub fn from_int_terms(terms: &[(i64, i64, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(a, b, c)| (QTExponent::int(a, b), Rational::from_integer(c.into()))),
        )
    }

    pub fn from_terms<I: IntoIterator<Item = (QTExponent, Rational)>>(terms: I) -> Self {
        let items: Vec<(QTExponent, Rational)> = terms.into_iter().collect();
        let ram = items.iter().fold(1i64, |r, (e, _)| lcm_i64(r, *e.q.denom()));
        let mut map: BTreeMap<(i64, i64), Rational> = BTreeMap::new();
        for (e, c) in items {
            let key = (e.q.numer() * (ram / e.q.denom()), e.t);
            *map.entry(key).or_insert_with(Rational::zero) += c;
        }
        Self::normalized(ram, map)
    }

    fn normalized(ram: i64, mut terms: BTreeMap<(i64, i64), Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        if terms.is_empty() {
            return Self::zero();
        }
        let g = terms.keys().fold(ram, |g, &(a, _)| g.gcd(&a));
        if g > 1 {
            terms = terms.into_iter().map(|((a, b), c)| ((a / g, b), c)).collect();
        }
        LaurentQT { ram: ram / g, terms }
    }

    /// Terms re-keyed to the ramification index `ram` (a multiple of `self.ram`).
    fn rekeyed(&self, ram: i64) -> impl Iterator<Item = ((i64, i64), &Rational)> + '_ {
        let f = ram / self.ram;
        self.terms.iter().map(move |(&(a, b), c)| ((a * f, b), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn ram(&self) -> i64 {
        self.ram
    }

    /// Terms in canonical `(q_exp, t_exp)` ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (QTExponent, &Rational)> + '_ {
        let r = self.ram;
        self.terms.iter().map(move |(&(a, b), c)| (QTExponent::new(Ratio::new(a, r), b), c))
    }

    pub fn coeff(&self, e: QTExponent) -> Rational {
        if (self.ram % e.q.denom()) != 0 {
            return Rational::zero();
        }
        let key = (e.q.numer() * (self.ram / e.q.denom()), e.t);
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn has_integral_q_exponents(&self) -> bool {
        self.ram == 1
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Leading coefficient in canonical order (largest `(q, t)` exponent).
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn min_q(&self) -> Option<Ratio<i64>> {
        self.terms.keys().next().map(|&(a, _)| Ratio::new(a, self.ram))
    }

    pub fn max_q(&self) -> Option<Ratio<i64>> {
        self.terms.keys().next_back().map(|&(a, _)| Ratio::new(a, self.ram))
    }

    pub fn min_t(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, b)| b).min()
    }

    pub fn max_t(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// True when no term involves `other`, i.e. the polynomial lives in `var` alone.
    pub fn is_univariate_in(&self, var: Var) -> bool {
        match var {
            Var::Q => self.terms.keys().all(|&(_, b)| b == 0),
            Var::T => self.terms.keys().all(|&(a, _)| a == 0),
        }
    }

    /// Views a polynomial in a single variable as a [`UniLaurent`].
    pub fn to_uni(&self, var: Var) -> Option<UniLaurent> {
        if !self.is_univariate_in(var) {
            return None;
        }
        Some(match var {
            Var::Q => UniLaurent::from_scaled(
                Var::Q,
                self.ram,
                self.terms.iter().map(|(&(a, _), c)| (a, c.clone())),
            ),
            Var::T => UniLaurent::from_scaled(
                Var::T,
                1,
                self.terms.iter().map(|(&(_, b), c)| (b, c.clone())),
            ),
        })
    }

    pub fn from_uni(p: &UniLaurent) -> Self {
        match p.var() {
            Var::Q => Self::from_terms(p.terms().map(|(e, c)| (QTExponent::new(e, 0), c.clone()))),
            Var::T => Self::from_terms(p.terms().map(|(e, c)| {
                debug_assert!(e.is_integer());
                (QTExponent::int(0, e.to_integer()), c.clone())
            })),
        }
    }

    /// Groups terms by the exponent of `var`; each group is a polynomial in the other variable.
    pub fn slices(&self, var: Var) -> BTreeMap<Ratio<i64>, UniLaurent> {
        let mut raw: BTreeMap<Ratio<i64>, Vec<(i64, Rational)>> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            match var {
                Var::Q => raw.entry(Ratio::new(a, self.ram)).or_default().push((b, c.clone())),
                Var::T => raw.entry(Ratio::from_integer(b)).or_default().push((a, c.clone())),
            }
        }
        raw.into_iter()
            .map(|(e, v)| {
                let p = match var {
                    Var::Q => UniLaurent::from_scaled(Var::T, 1, v),
                    Var::T => UniLaurent::from_scaled(Var::Q, self.ram, v),
                };
                (e, p)
            })
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQT {
            ram: self.ram,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `q^q t^t`.
    pub fn shift(&self, e: QTExponent) -> Self {
        let ram = lcm_i64(self.ram, *e.q.denom());
        let dq = e.q.numer() * (ram / e.q.denom());
        let terms = self.rekeyed(ram).map(|((a, b), c)| ((a + dq, b + e.t), c.clone())).collect();
        Self::normalized(ram, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies a signed monomial substitution to the variables.
    ///
    /// Any map sending `q` to `-q^{±1}` multiplies the coefficient of `q^a` by
    /// `(-1)^a`, which is only defined for integer `a`.
    pub fn substitute(&self, s: Substitution) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            let negate_q = matches!(s.q, QMap::Neg | QMap::NegInverse);
            let c = if negate_q {
                if a % self.ram != 0 {
                    return Err(Error::FractionalExponentSign(fmt_exp(Ratio::new(a, self.ram))));
                }
                c * sign_pow(a / self.ram)
            } else {
                c.clone()
            };
            let a = match s.q {
                QMap::Identity | QMap::Neg => a,
                QMap::Inverse | QMap::NegInverse => -a,
            };
            let b = match s.t {
                TMap::Identity => b,
                TMap::Inverse => -b,
            };
            out.insert((a, b), c);
        }
        Ok(Self::normalized(self.ram, out))
    }

    /// Exact quotient by a polynomial in `q` alone, or `None` if it does not divide.
    pub fn div_exact_by_q_poly(&self, d: &UniLaurent) -> Option<Self> {
        assert_eq!(d.var(), Var::Q, "divisor must be a polynomial in q");
        let mut out = Self::zero();
        for (te, slice) in self.slices(Var::T) {
            let quotient = slice.div_exact(d)?;
            out += &Self::from_uni(&quotient).shift(QTExponent::int(0, te.to_integer()));
        }
        Some(out)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// Long division on the lexicographic `(q, t)` order. Quotient terms must
    /// stay above `min(self) - min(d)` in each variable, which bounds the loop.
    pub fn div_exact(&self, d: &LaurentQT) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.len() == 1 {
            let (e, c) = d.terms().next().unwrap();
            return Some(self.shift(QTExponent::new(-e.q, -e.t)).scale(&c.recip()));
        }
        let ram = lcm_i64(self.ram, d.ram);
        let mut rem: BTreeMap<(i64, i64), Rational> = self.rekeyed(ram).map(|(k, c)| (k, c.clone())).collect();
        let div: Vec<((i64, i64), Rational)> = d.rekeyed(ram).map(|(k, c)| (k, c.clone())).collect();
        let (&(dq, dt), dc) = div.last().map(|(k, c)| (k, c)).unwrap();
        let dmin_q = div.first().unwrap().0 .0;
        let dmin_t = div.iter().map(|(k, _)| k.1).min().unwrap();
        let nmin_q = rem.keys().next().unwrap().0;
        let nmin_t = rem.keys().map(|k| k.1).min().unwrap();
        let (qlo, tlo) = (nmin_q - dmin_q, nmin_t - dmin_t);
        let mut quot: BTreeMap<(i64, i64), Rational> = BTreeMap::new();
        while let Some((&(rq, rt), rc)) = rem.iter().next_back() {
            let (a, b) = (rq - dq, rt - dt);
            if a < qlo || b < tlo {
                return None;
            }
            let c = rc / dc;
            for ((kq, kt), kc) in &div {
                let key = (kq + a, kt + b);
                let v = rem.entry(key).or_insert_with(Rational::zero);
                *v -= &c * kc;
                if v.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.insert((a, b), c);
        }
        Some(Self::normalized(ram, quot))
    }

    /// Numerical evaluation (sanity checks only).
    pub fn eval_f64(&self, q: f64, t: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(a, b), c)| {
                rational_to_f64(c) * q.powf(a as f64 / self.ram as f64) * t.powi(b as i32)
            })
            .sum()
    }
}

impl Default for LaurentQT {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_into(ram: i64, acc: &mut BTreeMap<(i64, i64), Rational>, p: &LaurentQT, sign: bool) {
    for (k, c) in p.rekeyed(ram) {
        match acc.entry(k) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                if sign {
                    *o.get_mut() += c;
                } else {
                    *o.get_mut() -= c;
                }
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(if sign { c.clone() } else { -c.clone() });
            }
        }
    }
}

impl AddAssign<&LaurentQT> for LaurentQT {
    fn add_assign(&mut self, rhs: &LaurentQT) {
        let ram = lcm_i64(self.ram, rhs.ram);
        if ram != self.ram {
            let f = ram / self.ram;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|((a, b), c)| ((a * f, b), c))
                .collect();
            self.ram = ram;
        }
        add_into(ram, &mut self.terms, rhs, true);
        *self = Self::normalized(self.ram, std::mem::take(&mut self.terms));
    }
}

impl SubAssign<&LaurentQT> for LaurentQT {
    fn sub_assign(&mut self, rhs: &LaurentQT) {
        *self += &(-rhs);
    }
}

impl Add for &LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &LaurentQT) -> LaurentQT {
        let ram = lcm_i64(self.ram, rhs.ram);
        let mut acc: BTreeMap<(i64, i64), Rational> =
            self.rekeyed(ram).map(|(k, c)| (k, c.clone())).collect();
        add_into(ram, &mut acc, rhs, false);
        LaurentQT::normalized(ram, acc)
    }
}

impl Mul for &LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &LaurentQT) -> LaurentQT {
        if self.is_zero() || rhs.is_zero() {
            return LaurentQT::zero();
        }
        let ram = lcm_i64(self.ram, rhs.ram);
        let lhs: Vec<_> = self.rekeyed(ram).collect();
        let rhs: Vec<_> = rhs.rekeyed(ram).collect();
        let mut acc: BTreeMap<(i64, i64), Rational> = BTreeMap::new();
        for &((a1, b1), c1) in &lhs {
            for &((a2, b2), c2) in &rhs {
                *acc.entry((a1 + a2, b1 + b2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        LaurentQT::normalized(ram, acc)
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT {
            ram: self.ram,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentQT> for LaurentQT {
            type Output = LaurentQT;
            fn $m(self, rhs: LaurentQT) -> LaurentQT {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentQT> for LaurentQT {
            type Output = LaurentQT;
            fn $m(self, rhs: &LaurentQT) -> LaurentQT {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentQT> for &LaurentQT {
            type Output = LaurentQT;
            fn $m(self, rhs: LaurentQT) -> LaurentQT {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        -&self
    }
}

impl std::iter::Sum for LaurentQT {
    fn sum<I: Iterator<Item = LaurentQT>>(iter: I) -> Self {
        iter.fold(LaurentQT::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Canonical text form: `c*q^a*t^b` terms in ascending `(a, b)` order, e.g.
/// `-1*q^-3*t^2 + 2*q^1/2*t^0`; the zero polynomial prints as `0`.
impl fmt::Display for LaurentQT {
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
            write!(f, "{}*q^{}*t^{}", c_str, fmt_exp(e.q), e.t)?;
        }
        Ok(())
    }
}
