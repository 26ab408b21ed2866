//! Colored HOMFLY invariants `W_{A^1..A^L}` of torus links `T_{mL}^{nL}`.
//!
//! With `N = m Σ|A^α|`, `D_N = Π_{j≤N}(q^j − q^{−j})`, `Q_B = Π_j (q^{B_j} − q^{−B_j})`
//! and `T_B = Π_j (t^{B_j} − t^{−B_j})`, the torus formula
//! `q^{−mnΣk_A} t^{−n(m−1)Σ|A|} Σ_μ C^μ q^{(n/m)k_μ} s*_μ` is regrouped as
//!
//! `W · D_N = prefactor · Σ_{B⊢N} z_B^{-1} F_B(q) (D_N/Q_B)(q) T_B(t)`,
//! `F_B(q) = Σ_μ C^μ χ_μ(C_B) q^{(n/m)k_μ}`,
//!
//! so every product except the last is univariate in `q`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{int, LaurentQT, QTExponent, Rational, RationalQT, UniLaurent, Var};
use crate::characters::character;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition, PartitionVector};
use crate::schur::{bracket_factorial, delta, plethysm_coefficients, reduce_brackets, unknot_value};

/// The torus link `T_{mL}^{nL}`: closure of `(σ_1⋯σ_{mL−1})^{nL}`, whose `L`
/// components are each `(m, n)` torus knots, colored by `colors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusLinkSpec {
    m: u32,
    n: i64,
    components: u32,
    colors: PartitionVector,
}

impl TorusLinkSpec {
    pub fn new(m: u32, n: i64, components: u32, colors: PartitionVector) -> Result<Self> {
        if m == 0 || components == 0 {
            return Err(Error::InvalidInput("torus links need m >= 1 and L >= 1".into()));
        }
        let g = (m as i64).gcd(&n);
        if g != 1 {
            return Err(Error::NonCoprime { m: m as i64, n, gcd: g });
        }
        if colors.len() != components as usize {
            return Err(Error::InvalidInput(format!(
                "{} colors given for {components} components",
                colors.len()
            )));
        }
        Ok(TorusLinkSpec { m, n, components, colors })
    }

    /// The torus knot `T(m, n)` colored by `color`.
    pub fn knot(m: u32, n: i64, color: Partition) -> Result<Self> {
        Self::new(m, n, 1, PartitionVector::single(color))
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn components(&self) -> u32 {
        self.components
    }

    pub fn colors(&self) -> &PartitionVector {
        &self.colors
    }

    pub fn with_colors(&self, colors: PartitionVector) -> Result<Self> {
        Self::new(self.m, self.n, self.components, colors)
    }

    /// Strands of the defining braid.
    pub fn strands(&self) -> u32 {
        self.m * self.components
    }

    /// Total writhe `nL(mL − 1)` of the braid closure.
    pub fn writhe(&self) -> i64 {
        let l = self.components as i64;
        self.n * l * (self.m as i64 * l - 1)
    }

    /// Writhe of each component, `n(m − 1)`.
    pub fn component_writhe(&self) -> i64 {
        self.n * (self.m as i64 - 1)
    }
}

impl fmt::Display for TorusLinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.components as i64;
        write!(f, "T({},{}) {}", self.m as i64 * l, self.n * l, self.colors)
    }
}

/// A link with a colored-invariant engine: the unknot, or a torus link.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Link {
    Unknot { color: Partition },
    Torus(TorusLinkSpec),
}

impl Link {
    pub fn unknot(color: Partition) -> Self {
        Link::Unknot { color }
    }

    pub fn torus(m: u32, n: i64, components: u32, colors: PartitionVector) -> Result<Self> {
        TorusLinkSpec::new(m, n, components, colors).map(Link::Torus)
    }

    pub fn components(&self) -> u32 {
        match self {
            Link::Unknot { .. } => 1,
            Link::Torus(s) => s.components,
        }
    }

    pub fn colors(&self) -> PartitionVector {
        match self {
            Link::Unknot { color } => PartitionVector::single(color.clone()),
            Link::Torus(s) => s.colors.clone(),
        }
    }

    pub fn with_colors(&self, colors: PartitionVector) -> Result<Self> {
        match self {
            Link::Unknot { .. } => {
                if colors.len() != 1 {
                    return Err(Error::InvalidInput("the unknot takes one color".into()));
                }
                Ok(Link::Unknot { color: colors.components()[0].clone() })
            }
            Link::Torus(s) => s.with_colors(colors).map(Link::Torus),
        }
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Link::Unknot { color } => write!(f, "unknot {color}"),
            Link::Torus(s) => write!(f, "{s}"),
        }
    }
}

/// `W_{\vec A}(L; q, t)` together with the link it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredInvariant {
    pub link: Link,
    pub value: RationalQT,
}

/// `τ_μ = q^{k_μ} t^{|μ|}`.
pub fn framing_eigenvalue(mu: &Partition) -> LaurentQT {
    LaurentQT::qt(mu.k_invariant(), mu.size() as i64)
}

/// `W · D_N` for a torus link, with integrality asserted.
fn torus_numerator(spec: &TorusLinkSpec) -> Result<LaurentQT> {
    let m = spec.m;
    let big_n = m * spec.colors.total_size();
    let plethysm = plethysm_coefficients(m, &spec.colors)?;
    let d_n = bracket_factorial(big_n);
    let exp = |mu: &Partition| Ratio::new(spec.n * mu.k_invariant(), m as i64);
    let terms: Vec<LaurentQT> = partitions_of(big_n)
        .par_iter()
        .filter_map(|b| {
            let mut f_b = UniLaurent::zero(Var::Q);
            for (mu, c) in plethysm.terms() {
                let chi = character(mu, b).expect("sizes agree");
                if chi != 0 {
                    f_b = &f_b + &UniLaurent::monomial(Var::Q, exp(mu), int(c * chi));
                }
            }
            if f_b.is_zero() {
                return None;
            }
            let q_b = b.parts().iter().fold(UniLaurent::one(Var::Q), |acc, &p| {
                &acc * &UniLaurent::bracket(Var::Q, p as i64)
            });
            let cofactor = d_n.div_exact(&q_b).expect("Q_B divides D_N");
            let q_part = (&f_b * &cofactor).scale(&Rational::new(1.into(), b.z_factor()));
            let t_part = b.parts().iter().fold(UniLaurent::one(Var::T), |acc, &p| {
                &acc * &UniLaurent::bracket(Var::T, p as i64)
            });
            Some(&LaurentQT::from_uni(&q_part) * &LaurentQT::from_uni(&t_part))
        })
        .collect();
    let sum: LaurentQT = terms.into_iter().sum();
    let k_total: i64 = spec.colors.components().iter().map(Partition::k_invariant).sum();
    let prefactor = QTExponent::int(
        -(m as i64) * spec.n * k_total,
        -spec.n * (m as i64 - 1) * spec.colors.total_size() as i64,
    );
    let num = sum.shift(prefactor);
    if !num.has_integral_q_exponents() {
        return Err(Error::IntegralityViolation(format!("fractional q-exponent in W·D_{big_n} for {spec}")));
    }
    if !num.has_integer_coefficients() {
        return Err(Error::IntegralityViolation(format!("non-integer coefficient in W·D_{big_n} for {spec}")));
    }
    Ok(num)
}

type InvariantCache = RwLock<HashMap<TorusLinkSpec, Arc<RationalQT>>>;

fn invariant_cache() -> &'static InvariantCache {
    static CACHE: OnceLock<InvariantCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn torus_value(spec: &TorusLinkSpec) -> Result<Arc<RationalQT>> {
    if let Some(v) = invariant_cache().read().unwrap().get(spec) {
        return Ok(v.clone());
    }
    let big_n = spec.m * spec.colors.total_size();
    let value = if big_n == 0 {
        RationalQT::one()
    } else {
        reduce_brackets(torus_numerator(spec)?, (1..=big_n as i64).collect())
    };
    let value = Arc::new(value);
    invariant_cache().write().unwrap().insert(spec.clone(), value.clone());
    Ok(value)
}

/// `W_{\vec A}(T_{mL}^{nL}; q, t)`.
pub fn colored_homfly_torus(spec: &TorusLinkSpec) -> Result<ColoredInvariant> {
    Ok(ColoredInvariant { link: Link::Torus(spec.clone()), value: (*torus_value(spec)?).clone() })
}

/// `W` of either kind of link; the unknot goes through `s*_A`.
pub fn colored_homfly(link: &Link) -> Result<ColoredInvariant> {
    match link {
        Link::Unknot { color } => Ok(ColoredInvariant { link: link.clone(), value: unknot_value(color) }),
        Link::Torus(spec) => colored_homfly_torus(spec),
    }
}

/// `W` of a split union of colored knots: the product of the factors.
pub fn colored_homfly_disjoint_union(knots: &[Link]) -> Result<RationalQT> {
    let mut acc = RationalQT::one();
    for k in knots {
        if k.components() != 1 {
            return Err(Error::InvalidInput(format!("{k} is not a knot")));
        }
        acc = &acc * &colored_homfly(k)?.value;
    }
    Ok(acc)
}

/// `(W_{(1)}(T(m,n)), P_{T(m,n)})` with `P = W / δ`.
pub fn uncolored_homfly_torus_knot(m: u32, n: i64) -> Result<(RationalQT, RationalQT)> {
    let spec = TorusLinkSpec::knot(m, n, Partition::row(1))?;
    let w = colored_homfly_torus(&spec)?.value;
    let p = &w / &delta();
    Ok((w, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[u32]) -> RationalQT {
        unknot_value(&p(parts))
    }

    fn mono(a: i64, b: i64) -> RationalQT {
        RationalQT::from_laurent(LaurentQT::qt(a, b))
    }

    fn knot(m: u32, n: i64, color: &[u32]) -> RationalQT {
        colored_homfly_torus(&TorusLinkSpec::knot(m, n, p(color)).unwrap()).unwrap().value
    }

    fn link(m: u32, n: i64, colors: &str) -> RationalQT {
        let colors: PartitionVector = colors.parse().unwrap();
        let l = colors.len() as u32;
        colored_homfly_torus(&TorusLinkSpec::new(m, n, l, colors).unwrap()).unwrap().value
    }

    /// The regrouped sum agrees with the literal `Σ_μ C^μ q^{(n/m)k_μ} s*_μ`.
    fn literal(spec: &TorusLinkSpec) -> RationalQT {
        let m = spec.m as i64;
        let c = plethysm_coefficients(spec.m, &spec.colors).unwrap();
        let mut acc = RationalQT::zero();
        for (mu, coeff) in c.terms() {
            let e = Ratio::new(spec.n * mu.k_invariant(), m);
            let mono = RationalQT::from_laurent(LaurentQT::monomial(e, 0, int(coeff)));
            acc = &acc + &(&mono * &unknot_value(mu));
        }
        let k_total: i64 = spec.colors.components().iter().map(Partition::k_invariant).sum();
        let size = spec.colors.total_size() as i64;
        &acc * &mono(-m * spec.n * k_total, -spec.n * (m - 1) * size)
    }

    #[test]
    fn framing_eigenvalues() {
        assert_eq!(framing_eigenvalue(&p(&[1])), LaurentQT::t());
        assert_eq!(framing_eigenvalue(&p(&[2])), LaurentQT::qt(2, 2));
        assert_eq!(framing_eigenvalue(&p(&[1, 1])), LaurentQT::qt(-2, 2));
    }

    #[test]
    fn rejects_non_coprime() {
        let err = TorusLinkSpec::knot(2, 4, p(&[1])).unwrap_err();
        assert_eq!(err, Error::NonCoprime { m: 2, n: 4, gcd: 2 });
        assert_eq!(TorusLinkSpec::knot(2, 0, p(&[1])).unwrap_err().kind(), "NonCoprime");
    }

    #[test]
    fn regrouped_sum_matches_literal_formula() {
        for (m, n, colors) in [(2, 3, "(1)"), (2, -3, "(2)"), (3, 2, "(1,1)"), (1, 1, "(1);(1)"), (1, 2, "(2);(1)"), (2, 5, "(2,1)")] {
            let colors: PartitionVector = colors.parse().unwrap();
            let l = colors.len() as u32;
            let spec = TorusLinkSpec::new(m, n, l, colors).unwrap();
            assert_eq!(colored_homfly_torus(&spec).unwrap().value, literal(&spec), "{spec}");
        }
    }

    #[test]
    fn trefoil_family_closed_forms() {
        for k in 1..=3i64 {
            let n = 2 * k + 1;
            let w1 = &mono(n, -n) * &s(&[2]) - &mono(-n, -n) * &s(&[1, 1]);
            assert_eq!(knot(2, n, &[1]), w1, "k={k}");
            let w2 = &mono(0, -2 * n)
                * &(&(&mono(2 * n, 0) * &s(&[4]) - &mono(-2 * n, 0) * &s(&[3, 1])) + &(&mono(-4 * n, 0) * &s(&[2, 2])));
            assert_eq!(knot(2, n, &[2]), w2, "k={k}");
            let w11 = &mono(0, -2 * n)
                * &(&(&mono(4 * n, 0) * &s(&[2, 2]) - &mono(2 * n, 0) * &s(&[2, 1, 1]))
                    + &(&mono(-2 * n, 0) * &s(&[1, 1, 1, 1])));
            assert_eq!(knot(2, n, &[1, 1]), w11, "k={k}");
        }
    }

    #[test]
    fn hopf_family_closed_forms() {
        for k in 1..=3i64 {
            let w = &mono(2 * k, 0) * &s(&[2]) + &mono(-2 * k, 0) * &s(&[1, 1]);
            assert_eq!(link(1, k, "(1);(1)"), w);
            let w = &mono(4 * k, 0) * &s(&[3]) + &mono(-2 * k, 0) * &s(&[2, 1]);
            assert_eq!(link(1, k, "(2);(1)"), w);
        }
    }

    #[test]
    fn unknot_paths_agree() {
        for d in 1..=4 {
            for a in partitions_of(d) {
                let via_torus = colored_homfly_torus(&TorusLinkSpec::knot(1, 0, a.clone()).unwrap()).unwrap().value;
                assert_eq!(via_torus, unknot_value(&a));
                // T(2,1) and T(1,5) are unknots too
                assert_eq!(knot(2, 1, a.parts()), unknot_value(&a), "T(2,1) {a}");
                assert_eq!(knot(1, 5, a.parts()), unknot_value(&a), "T(1,5) {a}");
                let dedicated = colored_homfly(&Link::unknot(a.clone())).unwrap().value;
                assert_eq!(dedicated, unknot_value(&a));
            }
        }
    }

    #[test]
    fn torus_knot_symmetry() {
        assert_eq!(knot(2, 3, &[1]), knot(3, 2, &[1]));
        assert_eq!(knot(2, 3, &[2]), knot(3, 2, &[2]));
        assert_eq!(knot(2, 5, &[1, 1]), knot(5, 2, &[1, 1]));
    }

    #[test]
    fn mirror_torus_knot() {
        use crate::arith::Substitution;
        for color in [&[1u32][..], &[2], &[2, 1]] {
            let w = knot(2, 3, color);
            let mirror = knot(2, -3, color);
            assert_eq!(w.substitute(Substitution::MIRROR).unwrap(), mirror);
        }
    }

    #[test]
    fn uncolored_trefoil() {
        // P_{T(2,3)} = (q^2 + q^-2) t^-2 - t^-4 in the q-bracket form of the closed expression
        let (w, pp) = uncolored_homfly_torus_knot(2, 3).unwrap();
        let expected = LaurentQT::from_int_terms(&[(2, -2, 1), (-2, -2, 1), (0, -4, -1)]);
        assert_eq!(pp.as_laurent().unwrap(), expected);
        assert_eq!(w, &delta() * &RationalQT::from_laurent(expected));
        let (_, p32) = uncolored_homfly_torus_knot(3, 2).unwrap();
        assert_eq!(p32, pp);
    }

    #[test]
    fn disjoint_unions() {
        let one = Link::unknot(p(&[1]));
        let two = colored_homfly_disjoint_union(&[one.clone(), one.clone()]).unwrap();
        assert_eq!(two, &delta() * &delta());
        let trefoil = Link::torus(2, 3, 1, "(1)".parse().unwrap()).unwrap();
        let u2 = Link::unknot(p(&[2]));
        let prod = colored_homfly_disjoint_union(&[trefoil.clone(), u2]).unwrap();
        assert_eq!(prod, &knot(2, 3, &[1]) * &s(&[2]));
        assert_eq!(colored_homfly_disjoint_union(std::slice::from_ref(&trefoil)).unwrap(), knot(2, 3, &[1]));
        let hopf = Link::torus(1, 1, 2, "(1);(1)".parse().unwrap()).unwrap();
        assert_eq!(colored_homfly_disjoint_union(&[hopf]).unwrap_err().kind(), "InvalidInput");
    }

    #[test]
    fn integrality_grid() {
        for (m, n) in [(2u32, 3i64), (2, 5), (3, 4)] {
            for d in 1..=4 {
                for a in partitions_of(d) {
                    let spec = TorusLinkSpec::knot(m, n, a).unwrap();
                    let num = torus_numerator(&spec).unwrap();
                    assert!(num.has_integral_q_exponents() && num.has_integer_coefficients());
                }
            }
        }
    }
}
