//! Symmetric functions: the colored unknot `s*_λ(q,t)`, plethysm coefficients
//! of `Π_α s_{A^α}(x^m)` in the Schur basis, and a Jacobi–Trudi expansion in
//! finitely many variables used to cross-check both.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{LaurentQT, Rational, RationalQT, UniLaurent, Var};
use crate::characters::character;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition, PartitionVector};

/// `D_d = Π_{j=1}^d (q^j − q^{−j})`, a common denominator for every `s*_λ` with `|λ| = d`.
pub fn bracket_factorial(d: u32) -> UniLaurent {
    (1..=d as i64).fold(UniLaurent::one(Var::Q), |acc, j| &acc * &UniLaurent::bracket(Var::Q, j))
}

fn t_bracket_product(b: &Partition) -> UniLaurent {
    b.parts()
        .iter()
        .fold(UniLaurent::one(Var::T), |acc, &p| &acc * &UniLaurent::bracket(Var::T, p as i64))
}

fn q_bracket_product(b: &Partition) -> UniLaurent {
    b.parts()
        .iter()
        .fold(UniLaurent::one(Var::Q), |acc, &p| &acc * &UniLaurent::bracket(Var::Q, p as i64))
}

type Cache<K, V> = RwLock<HashMap<K, Arc<V>>>;

fn cached<K, V, F>(cache: &Cache<K, V>, key: K, make: F) -> Arc<V>
where
    K: std::hash::Hash + Eq,
    F: FnOnce() -> V,
{
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let v = Arc::new(make());
    cache.write().unwrap().entry(key).or_insert(v).clone()
}

/// `Π_j [t^{B_j}] · D_{|B|} / Π_j [q^{B_j}]`, a Laurent polynomial.
fn power_sum_numerator(b: &Partition) -> Arc<LaurentQT> {
    static CACHE: OnceLock<Cache<Partition, LaurentQT>> = OnceLock::new();
    cached(CACHE.get_or_init(Default::default), b.clone(), || {
        let q_part = bracket_factorial(b.size())
            .div_exact(&q_bracket_product(b))
            .expect("Π [q^{B_j}] divides D_|B|");
        &LaurentQT::from_uni(&q_part) * &LaurentQT::from_uni(&t_bracket_product(b))
    })
}

/// `s*_λ · D_{|λ|}`. Integer coefficients by the q-hook-length formula.
pub(crate) fn unknot_numerator(lambda: &Partition) -> Arc<LaurentQT> {
    static CACHE: OnceLock<Cache<Partition, LaurentQT>> = OnceLock::new();
    cached(CACHE.get_or_init(Default::default), lambda.clone(), || {
        let d = lambda.size();
        let terms: Vec<LaurentQT> = partitions_of(d)
            .par_iter()
            .filter_map(|b| {
                let chi = character(lambda, b).expect("sizes agree");
                if chi == 0 {
                    return None;
                }
                let w = Rational::new(chi.into(), b.z_factor());
                Some(power_sum_numerator(b).scale(&w))
            })
            .collect();
        terms.into_iter().sum()
    })
}

/// Divides `num / Π_{j ∈ brackets} [q^j]` by whichever brackets divide the numerator,
/// largest first.
pub(crate) fn reduce_brackets(mut num: LaurentQT, mut brackets: Vec<i64>) -> RationalQT {
    if num.is_zero() {
        return RationalQT::zero();
    }
    brackets.sort_unstable_by(|a, b| b.cmp(a));
    let mut kept = Vec::new();
    for j in brackets {
        match num.div_exact_by_q_poly(&UniLaurent::bracket(Var::Q, j)) {
            Some(reduced) => num = reduced,
            None => kept.push(j),
        }
    }
    let den = kept
        .iter()
        .fold(UniLaurent::one(Var::Q), |acc, &j| &acc * &UniLaurent::bracket(Var::Q, j));
    RationalQT::new(num, LaurentQT::from_uni(&den))
}

/// `s*_λ(q,t) = Σ_{B ⊢ |λ|} χ_λ(C_B)/z_B Π_j (t^{B_j} − t^{−B_j})/(q^{B_j} − q^{−B_j})`.
pub fn unknot_value(lambda: &Partition) -> RationalQT {
    if lambda.is_empty() {
        return RationalQT::one();
    }
    reduce_brackets((*unknot_numerator(lambda)).clone(), (1..=lambda.size() as i64).collect())
}

/// `δ = (t − t^{-1})/(q − q^{-1})`.
pub fn delta() -> RationalQT {
    RationalQT::new(LaurentQT::t_bracket(1), LaurentQT::q_bracket(1))
}

/// Integer expansion `Σ_μ c_μ s_μ` at a fixed degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: u32,
    coeffs: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, mu: &Partition) -> i64 {
        self.coeffs.get(mu).copied().unwrap_or(0)
    }

    /// Nonzero terms in reverse lexicographic order of `μ`.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> + '_ {
        self.coeffs.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, c) in self.terms() {
            writeln!(f, "{p}: {c}")?;
        }
        Ok(())
    }
}

fn tuples(sizes: &[u32]) -> Vec<Vec<Partition>> {
    sizes.iter().fold(vec![Vec::new()], |acc, &s| {
        let choices = partitions_of(s);
        acc.into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |b| {
                    let mut next = prefix.clone();
                    next.push(b.clone());
                    next
                })
            })
            .collect()
    })
}

/// `C^μ_{A^1..A^L} = Σ_{B^1..B^L} Π_α χ_{A^α}(C_{B^α})/z_{B^α} · χ_μ(C_{m ∪ B^α})`.
pub fn plethysm_coefficients(m: u32, colors: &PartitionVector) -> Result<SchurExpansion> {
    if m == 0 {
        return Err(Error::InvalidInput("plethysm needs m >= 1".into()));
    }
    let sizes: Vec<u32> = colors.components().iter().map(Partition::size).collect();
    let degree = m * colors.total_size();
    // weight of each cycle type m·∪B^α
    let weights: BTreeMap<Partition, Rational> = tuples(&sizes)
        .into_par_iter()
        .filter_map(|bs| {
            let mut w = Rational::from_integer(1.into());
            for (a, b) in colors.components().iter().zip(&bs) {
                let chi = character(a, b).expect("sizes agree");
                if chi == 0 {
                    return None;
                }
                w *= Rational::new(chi.into(), b.z_factor());
            }
            Some((Partition::union(bs.iter().map(|b| b.scaled(m)).collect::<Vec<_>>().iter()), w))
        })
        .fold(BTreeMap::new, |mut acc: BTreeMap<Partition, Rational>, (nu, w)| {
            *acc.entry(nu).or_insert_with(Rational::zero) += w;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert_with(Rational::zero) += v;
            }
            a
        });
    let coeffs: BTreeMap<Partition, i64> = partitions_of(degree)
        .into_par_iter()
        .filter_map(|mu| {
            let c: Rational = weights
                .iter()
                .map(|(nu, w)| w * Rational::from_integer(character(&mu, nu).unwrap().into()))
                .sum();
            if c.is_zero() {
                return None;
            }
            assert!(c.is_integer(), "non-integral plethysm coefficient {c} at {mu}");
            Some((mu, c.to_integer().to_i64().expect("coefficient fits in i64")))
        })
        .collect();
    Ok(SchurExpansion { degree, coeffs })
}

/// Dense integer polynomial in `x_1..x_N`, keyed by exponent vectors.
pub type MultiPoly = BTreeMap<Vec<u32>, i64>;

fn poly_mul(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_add_scaled(acc: &mut MultiPoly, p: &MultiPoly, s: i64) {
    for (e, c) in p {
        *acc.entry(e.clone()).or_insert(0) += s * c;
    }
    acc.retain(|_, c| *c != 0);
}

fn compositions(k: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=k)
        .flat_map(|first| {
            compositions(k - first, n - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Complete homogeneous `h_k(x_1..x_N)`; `h_0 = 1`, `h_{<0} = 0`.
pub fn complete_homogeneous(k: i64, nvars: usize) -> MultiPoly {
    if k < 0 {
        return MultiPoly::new();
    }
    compositions(k as u32, nvars).into_iter().map(|e| (e, 1)).collect()
}

/// Elementary `e_k(x_1..x_N)`.
pub fn elementary(k: i64, nvars: usize) -> MultiPoly {
    if k < 0 || k as usize > nvars {
        return MultiPoly::new();
    }
    compositions(k as u32, nvars)
        .into_iter()
        .filter(|e| e.iter().all(|&x| x <= 1))
        .map(|e| (e, 1))
        .collect()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting the largest value at `pos` adds len - pos inversions
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

fn determinant(entries: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = entries.len();
    let mut out = MultiPoly::new();
    let one: MultiPoly = [(vec![0; nvars], 1)].into_iter().collect();
    for (perm, sign) in permutations(n) {
        let mut term = one.clone();
        for (i, &j) in perm.iter().enumerate() {
            term = poly_mul(&term, &entries[i][j]);
            if term.is_empty() {
                break;
            }
        }
        poly_add_scaled(&mut out, &term, sign);
    }
    out
}

/// `s_λ(x_1..x_N) = det(h_{λ_i − i + j})`.
pub fn jacobi_trudi_schur(lambda: &Partition, nvars: usize) -> Result<MultiPoly> {
    if nvars < lambda.length() {
        return Err(Error::InvalidInput(format!("{lambda} needs at least {} variables", lambda.length())));
    }
    let l = lambda.parts();
    let entries: Vec<Vec<MultiPoly>> = (0..l.len())
        .map(|i| (0..l.len()).map(|j| complete_homogeneous(l[i] as i64 - i as i64 + j as i64, nvars)).collect())
        .collect();
    Ok(if l.is_empty() { [(vec![0; nvars], 1)].into_iter().collect() } else { determinant(&entries, nvars) })
}

/// `s_λ(x_1..x_N) = det(e_{λ^t_i − i + j})`.
pub fn jacobi_trudi_schur_dual(lambda: &Partition, nvars: usize) -> Result<MultiPoly> {
    if nvars < lambda.length() {
        return Err(Error::InvalidInput(format!("{lambda} needs at least {} variables", lambda.length())));
    }
    let conj = lambda.conjugate();
    let l = conj.parts();
    let entries: Vec<Vec<MultiPoly>> = (0..l.len())
        .map(|i| (0..l.len()).map(|j| elementary(l[i] as i64 - i as i64 + j as i64, nvars)).collect())
        .collect();
    Ok(if l.is_empty() { [(vec![0; nvars], 1)].into_iter().collect() } else { determinant(&entries, nvars) })
}
