//! Special polynomials `H_A(t) = lim_{q→1} W_A/s*_A` and `Δ_A(q) = lim_{t→1} W_A/s*_A`,
//! the torus-knot Alexander polynomial, and the `Δ_d`-basis presentation.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{limit_at_one, Limit, Rational, RationalQT, UniLaurent, Var};
use crate::error::{Error, Result};
use crate::schur::unknot_value;
use crate::torus::{colored_homfly, Link};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialKind {
    H,
    Delta,
}

impl SpecialKind {
    /// The variable sent to 1.
    pub fn limit_variable(self) -> Var {
        match self {
            SpecialKind::H => Var::Q,
            SpecialKind::Delta => Var::T,
        }
    }
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialKind::H => write!(f, "H"),
            SpecialKind::Delta => write!(f, "Delta"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpecialPolynomial {
    pub kind: SpecialKind,
    /// The surviving variable: `t` for `H`, `q` for `Δ`.
    pub variable: Var,
    pub value: Limit,
    pub source: Link,
}

impl SpecialPolynomial {
    pub fn as_polynomial(&self) -> Option<&UniLaurent> {
        self.value.as_polynomial()
    }
}

impl fmt::Display for SpecialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `W_{\vec A}(L) / Π_α s*_{A^α}`.
pub fn normalized_ratio(link: &Link) -> Result<RationalQT> {
    let w = colored_homfly(link)?.value;
    let unknots = link
        .colors()
        .components()
        .iter()
        .fold(RationalQT::one(), |acc, a| &acc * &unknot_value(a));
    Ok(&w / &unknots)
}

fn special(link: &Link, kind: SpecialKind) -> Result<SpecialPolynomial> {
    let ratio = normalized_ratio(link)?;
    let var = kind.limit_variable();
    Ok(SpecialPolynomial { kind, variable: var.other(), value: limit_at_one(&ratio, var)?, source: link.clone() })
}

/// `H_{\vec A}(L; t)`.
pub fn special_h(link: &Link) -> Result<SpecialPolynomial> {
    special(link, SpecialKind::H)
}

/// `Δ_{\vec A}(L; q)`. For links with more than one component the limit
/// generally does not exist and `LimitDoesNotExist` is returned.
pub fn special_delta(link: &Link) -> Result<SpecialPolynomial> {
    special(link, SpecialKind::Delta)
}

/// `Δ_{T(m,n)}(q^d) = [mnd][d] / ([md][nd])` with `[k] = q^k − q^{−k}`.
pub fn alexander_torus(m: u32, n: i64, d: u32) -> Result<UniLaurent> {
    let g = (m as i64).gcd(&n);
    if g != 1 {
        return Err(Error::NonCoprime { m: m as i64, n, gcd: g });
    }
    if d == 0 || m == 0 || n == 0 {
        return Err(Error::InvalidInput("alexander_torus needs m, n, d nonzero".into()));
    }
    let (m, d) = (m as i64, d as i64);
    let b = |k: i64| UniLaurent::bracket(Var::Q, k);
    let num = &b(m * n * d) * &b(d);
    let den = &b(m * d) * &b(n * d);
    num.div_exact(&den)
        .ok_or_else(|| Error::NotDivisible(format!("[{}][{d}] by [{}][{}]", m * n * d, m * d, n * d)))
}

/// A palindromic Laurent polynomial written as `c_0 + Σ_{d>0} c_d Δ_d`,
/// `Δ_d = q^d + q^{−d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaBasis {
    /// `(d, c_d)` with `d = 0` for the constant, ascending in `d`, nonzero `c_d`.
    pub terms: Vec<(i64, Rational)>,
}

/// Greedy top-degree elimination into the `Δ_d` basis.
pub fn delta_basis(p: &UniLaurent) -> Result<DeltaBasis> {
    if !p.has_integral_exponents() {
        return Err(Error::InvalidInput(format!("{p} has fractional exponents")));
    }
    let var = p.var();
    let mut rest = p.clone();
    let mut terms = Vec::new();
    while let Some(top) = rest.max_exp() {
        let d = top.to_integer();
        let c = rest.coeff_int(d);
        if d < 0 {
            return Err(Error::InvalidInput(format!("{p} is not symmetric under q -> q^-1")));
        }
        let basis = if d == 0 { UniLaurent::one(var) } else { UniLaurent::sym(var, d) };
        rest = &rest - &basis.scale(&c);
        terms.push((d, c));
    }
    terms.reverse();
    Ok(DeltaBasis { terms })
}

impl fmt::Display for DeltaBasis {
    /// LaTeX-style: `8-7\Delta_4-\Delta_6+\Delta_{10}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let one = mag == Rational::from_integer(1.into());
            if *d == 0 {
                write!(f, "{}", fmt_mag(&mag))?;
                continue;
            }
            if !one {
                write!(f, "{}", fmt_mag(&mag))?;
            }
            if *d < 10 {
                write!(f, "\\Delta_{d}")?;
            } else {
                write!(f, "\\Delta_{{{d}}}")?;
            }
        }
        Ok(())
    }
}

fn fmt_mag(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

impl DeltaBasis {
    pub fn to_polynomial(&self, var: Var) -> UniLaurent {
        let mut out = UniLaurent::zero(var);
        for (d, c) in &self.terms {
            let b = if *d == 0 { UniLaurent::one(var) } else { UniLaurent::sym(var, *d) };
            out = &out + &b.scale(c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_zero())
    }
}
