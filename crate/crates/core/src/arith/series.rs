use std::fmt;

use num_rational::Ratio;
use num_traits::ToPrimitive;

use super::{binomials, LaurentQT, RationalQT, UniLaurent, UniRational, Var};
use crate::error::{Error, Result};

/// Truncated expansion `f(1 + ε) = Σ_{k ≤ order} coeffs[k] ε^k + O(ε^{order+1})`
/// in one variable, with coefficients polynomials in the other variable.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries {
    variable: Var,
    order: usize,
    coeffs: Vec<UniLaurent>,
}

impl TruncSeries {
    /// Expands `p` around `variable = 1` up to and including `ε^order`.
    pub fn of(p: &LaurentQT, variable: Var, order: usize) -> Self {
        let other = variable.other();
        let mut coeffs = vec![UniLaurent::zero(other); order + 1];
        for (e, slice) in p.slices(variable) {
            for (k, b) in binomials(e, order).iter().enumerate() {
                if !b.is_zero_ref() {
                    coeffs[k] = &coeffs[k] + &slice.scale(b);
                }
            }
        }
        TruncSeries { variable, order, coeffs }
    }

    pub fn variable(&self) -> Var {
        self.variable
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[UniLaurent] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient within the truncation.
    pub fn vanishing_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        assert_eq!(self.variable, other.variable);
        let order = self.order.min(other.order);
        let var = self.variable.other();
        let mut coeffs = vec![UniLaurent::zero(var); order + 1];
        for i in 0..=order {
            for j in 0..=(order - i) {
                if !self.coeffs[i].is_zero() && !other.coeffs[j].is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
                }
            }
        }
        TruncSeries { variable: self.variable, order, coeffs }
    }
}

trait IsZeroRef {
    fn is_zero_ref(&self) -> bool;
}

impl IsZeroRef for super::Rational {
    fn is_zero_ref(&self) -> bool {
        super::is_zero(self)
    }
}

/// Vanishing orders and leading coefficients of numerator and denominator at `variable = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesExpansion {
    pub variable: Var,
    pub num_order: usize,
    pub den_order: usize,
    pub num_lead: UniLaurent,
    pub den_lead: UniLaurent,
}

const START_ORDER: usize = 4;

/// Largest possible vanishing order at 1: the exponent span in units of `1/ram`.
fn order_cap(p: &LaurentQT, variable: Var) -> usize {
    let span = match variable {
        Var::Q => (p.max_q().unwrap() - p.min_q().unwrap()) * Ratio::from_integer(p.ram()),
        Var::T => Ratio::from_integer(p.max_t().unwrap() - p.min_t().unwrap()),
    };
    span.to_integer().to_usize().unwrap_or(0)
}

fn leading_term(p: &LaurentQT, variable: Var) -> Result<(usize, UniLaurent)> {
    if p.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let cap = order_cap(p, variable);
    let mut order = START_ORDER.min(cap);
    loop {
        let s = TruncSeries::of(p, variable, order);
        if let Some(k) = s.vanishing_order() {
            return Ok((k, s.coeffs[k].clone()));
        }
        if order >= cap {
            // a nonzero polynomial cannot vanish beyond its exponent span
            return Err(Error::ZeroFunction);
        }
        order = (order * 2).min(cap);
    }
}

/// Expands numerator and denominator of `f` around `variable = 1` to their
/// first non-vanishing order.
pub fn expand_series(f: &RationalQT, variable: Var) -> Result<SeriesExpansion> {
    let (num_order, num_lead) = leading_term(f.numer(), variable)?;
    let (den_order, den_lead) = leading_term(f.denom(), variable)?;
    Ok(SeriesExpansion { variable, num_order, den_order, num_lead, den_lead })
}

/// Value of a limit at 1: a Laurent polynomial when the leading-coefficient
/// division is exact, a reduced fraction otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum Limit {
    Polynomial(UniLaurent),
    Fraction(UniRational),
}

impl Limit {
    pub fn as_polynomial(&self) -> Option<&UniLaurent> {
        match self {
            Limit::Polynomial(p) => Some(p),
            Limit::Fraction(_) => None,
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        match self {
            Limit::Polynomial(p) => p.eval_f64(x),
            Limit::Fraction(r) => r.numer().eval_f64(x) / r.denom().eval_f64(x),
        }
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limit::Polynomial(p) => write!(f, "{p}"),
            Limit::Fraction(r) => write!(f, "{r}"),
        }
    }
}

/// `lim_{variable -> 1} f`, as a function of the other variable.
pub fn limit_at_one(f: &RationalQT, variable: Var) -> Result<Limit> {
    if f.is_zero() {
        return Ok(Limit::Polynomial(UniLaurent::zero(variable.other())));
    }
    let e = expand_series(f, variable)?;
    if e.num_order < e.den_order {
        return Err(Error::LimitDoesNotExist {
            variable: variable.name(),
            num_order: e.num_order,
            den_order: e.den_order,
        });
    }
    if e.num_order > e.den_order {
        return Ok(Limit::Polynomial(UniLaurent::zero(variable.other())));
    }
    Ok(match e.num_lead.div_exact(&e.den_lead) {
        Some(p) => Limit::Polynomial(p),
        None => Limit::Fraction(UniRational::new(e.num_lead, e.den_lead)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, LaurentQT};

    #[test]
    fn equal_simple_zeros() {
        let f = RationalQT::new(LaurentQT::q_bracket(2), LaurentQT::q_bracket(1));
        let e = expand_series(&f, Var::Q).unwrap();
        assert_eq!((e.num_order, e.den_order), (1, 1));
        assert_eq!(e.num_lead, UniLaurent::constant(Var::T, int(4)));
        assert_eq!(e.den_lead, UniLaurent::constant(Var::T, int(2)));
        let l = limit_at_one(&f, Var::Q).unwrap();
        assert_eq!(l, Limit::Polynomial(UniLaurent::constant(Var::T, int(2))));
    }

    #[test]
    fn order_bookkeeping() {
        let tb = LaurentQT::t_bracket(1);
        // build the ratio without letting normalization cancel anything
        let f = RationalQT::new(&tb * &tb, tb.clone());
        let e = expand_series(&f, Var::T).unwrap();
        assert_eq!((e.num_order, e.den_order), (2, 1));
        assert_eq!(limit_at_one(&f, Var::T).unwrap().as_polynomial().unwrap(), &UniLaurent::zero(Var::Q));
        let g = RationalQT::new(tb.clone(), &tb * &tb);
        assert_eq!(limit_at_one(&g, Var::T).unwrap_err().kind(), "LimitDoesNotExist");
    }

    #[test]
    fn zero_function() {
        let f = RationalQT::new(LaurentQT::zero(), LaurentQT::q_bracket(1));
        assert_eq!(expand_series(&f, Var::Q).unwrap_err(), Error::ZeroFunction);
    }

    #[test]
    fn high_order_zero_needs_doubling() {
        let z = LaurentQT::q_bracket(1);
        let num = z.pow(9);
        let den = &z.pow(9) * &LaurentQT::qt(0, 1);
        let e = expand_series(&RationalQT::new(num.clone(), LaurentQT::one()), Var::Q).unwrap();
        assert_eq!(e.num_order, 9);
        let l = limit_at_one(&RationalQT::new(num, den), Var::Q).unwrap();
        assert_eq!(l, Limit::Polynomial(UniLaurent::x_pow(Var::T, -1)));
    }

    #[test]
    fn truncated_product() {
        let a = TruncSeries::of(&LaurentQT::q_bracket(1), Var::Q, 3);
        let b = TruncSeries::of(&LaurentQT::q_bracket(2), Var::Q, 3);
        let direct = TruncSeries::of(&(&LaurentQT::q_bracket(1) * &LaurentQT::q_bracket(2)), Var::Q, 3);
        assert_eq!(a.mul(&b), direct);
    }
}
