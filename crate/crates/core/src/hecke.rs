//! Hecke algebra `H_n` in the positive-permutation-braid basis `{ω_π}` and the
//! Markov trace computing framed HOMFLY brackets `⟨β̂⟩` of closed braids.
//!
//! Permutations are 0-based one-line vectors; right multiplication by the
//! transposition `s_i` swaps positions `i` and `i + 1`. Generator `σ_i`
//! (1-based, as in braid words) acts through `s_{i-1}`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use crate::arith::{LaurentQT, QTExponent, RationalQT, Substitution, UniLaurent, Var};
use crate::error::{Error, Result};
use crate::schur::delta;

pub const DEFAULT_MAX_STRANDS: usize = 8;
pub const DEFAULT_MAX_LENGTH: usize = 64;

/// Size limits for braid input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidLimits {
    pub max_strands: usize,
    pub max_length: usize,
}

impl Default for BraidLimits {
    fn default() -> Self {
        BraidLimits { max_strands: DEFAULT_MAX_STRANDS, max_length: DEFAULT_MAX_LENGTH }
    }
}

/// A signed generator `σ_i^{±1}`, `i` 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        Self::with_limits(strands, letters, BraidLimits::default())
    }

    pub fn with_limits(strands: usize, letters: Vec<Letter>, limits: BraidLimits) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidInput("a braid needs at least one strand".into()));
        }
        if strands > limits.max_strands {
            return Err(Error::BoundExceeded { what: "strands", value: strands, bound: limits.max_strands });
        }
        if letters.len() > limits.max_length {
            return Err(Error::BoundExceeded { what: "word length", value: letters.len(), bound: limits.max_length });
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                let index = if l.positive { l.index as i64 } else { -(l.index as i64) };
                return Err(Error::IndexOutOfRange { index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses `"s1 s2 s1^-1"` or the compact `"1 2 -1"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        Self::parse_with_limits(strands, text, BraidLimits::default())
    }

    pub fn parse_with_limits(strands: usize, text: &str, limits: BraidLimits) -> Result<Self> {
        let letters = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(parse_letter)
            .collect::<Result<Vec<_>>>()?;
        Self::with_limits(strands, letters, limits)
    }

    /// `(σ_1 ⋯ σ_{s−1})^n` on `s` strands, inverted letters for negative `n`.
    pub fn torus(strands: usize, n: i64) -> Result<Self> {
        let mut letters = Vec::new();
        for _ in 0..n.unsigned_abs() {
            for i in 1..strands {
                letters.push(Letter { index: i, positive: n > 0 });
            }
        }
        Self::with_limits(strands, letters, BraidLimits { max_strands: strands.max(1), max_length: usize::MAX })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| if l.positive { 1 } else { -1 }).sum()
    }

    /// Component of each starting strand position, numbered by first appearance.
    pub fn component_labels(&self) -> Vec<usize> {
        let perm = self.permutation();
        let mut label = vec![usize::MAX; self.strands];
        let mut next = 0;
        for start in 0..self.strands {
            if label[start] != usize::MAX {
                continue;
            }
            let mut i = start;
            while label[i] == usize::MAX {
                label[i] = next;
                i = perm[i];
            }
            next += 1;
        }
        label
    }

    pub fn components(&self) -> usize {
        self.component_labels().iter().max().map_or(0, |m| m + 1)
    }

    /// Underlying permutation: strand starting at position `i` ends at `perm[i]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[pos] = starting strand
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &s) in at.iter().enumerate() {
            perm[s] = pos;
        }
        perm
    }

    /// Sum of the crossing signs between strands of the same component.
    pub fn self_writhe(&self) -> i64 {
        let labels = self.component_labels();
        let mut at: Vec<usize> = (0..self.strands).collect();
        let mut w = 0;
        for l in &self.letters {
            let (a, b) = (at[l.index - 1], at[l.index]);
            if labels[a] == labels[b] {
                w += if l.positive { 1 } else { -1 };
            }
            at.swap(l.index - 1, l.index);
        }
        w
    }

    /// Linking number with the sign fixed by `w = w̄ − 2 lk`.
    pub fn linking_number(&self) -> i64 {
        (self.self_writhe() - self.writhe()) / 2
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::InvalidInput("braids on different strand counts".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The same word with one more strand and `σ_{n}^{±1}` appended (Markov stabilization).
    pub fn stabilized(&self, positive: bool) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(Letter { index: self.strands, positive });
        BraidWord { strands: self.strands + 1, letters }
    }
}

fn parse_letter(tok: &str) -> Result<Letter> {
    let bad = || Error::Parse(format!("bad braid letter {tok:?}"));
    if let Some(rest) = tok.strip_prefix(['s', 'σ']) {
        let (idx, pow) = match rest.split_once('^') {
            Some((i, p)) => (i, p.trim_matches(|c| c == '{' || c == '}')),
            None => (rest, "1"),
        };
        let index: usize = idx.parse().map_err(|_| bad())?;
        let positive = match pow {
            "1" | "+1" => true,
            "-1" => false,
            _ => return Err(bad()),
        };
        Ok(Letter { index, positive })
    } else {
        let v: i64 = tok.parse().map_err(|_| bad())?;
        if v == 0 {
            return Err(bad());
        }
        Ok(Letter { index: v.unsigned_abs() as usize, positive: v > 0 })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| if l.positive { format!("s{}", l.index) } else { format!("s{}^-1", l.index) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_letter(s)
    }
}

/// Permutation in one-line notation, 0-based.
pub type Perm = Vec<u8>;

pub fn identity_perm(n: usize) -> Perm {
    (0..n as u8).collect()
}

/// Number of inversions.
pub fn perm_length(p: &[u8]) -> usize {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Perm, rest: &mut Vec<u8>, out: &mut Vec<Perm>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            prefix.push(v);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..n as u8).collect(), &mut out);
    out
}

/// Reduced word `[i_1, .., i_k]` (0-based) with `π = s_{i_1} ⋯ s_{i_k}` acting on positions.
pub fn reduced_word(p: &[u8]) -> Vec<usize> {
    let mut cur = p.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
        cur.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    word
}

/// `Σ_π c_π ω_π` with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Perm, LaurentQT>,
}

fn z() -> LaurentQT {
    LaurentQT::q_bracket(1)
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, terms: BTreeMap::new() }
    }

    /// `ω_id`.
    pub fn identity(n: usize) -> Self {
        Self::basis(identity_perm(n))
    }

    pub fn basis(p: Perm) -> Self {
        let n = p.len();
        let mut terms = BTreeMap::new();
        terms.insert(p, LaurentQT::one());
        HeckeElement { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &LaurentQT)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &[u8]) -> LaurentQT {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, p: Perm, c: &LaurentQT) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentQT) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (p, v) in &self.terms {
            out.terms.insert(p.clone(), v * c);
        }
        out
    }

    /// Right multiplication by `σ_i^{±1}`, `i` 1-based.
    pub fn apply_generator(&self, i: usize, positive: bool) -> Result<HeckeElement> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: if positive { i as i64 } else { -(i as i64) }, strands: self.n });
        }
        Ok(self.apply_position(i - 1, positive))
    }

    /// Right multiplication by `σ^{±1}` at 0-based position `k`.
    fn apply_position(&self, k: usize, positive: bool) -> HeckeElement {
        let z = z();
        let mut out = HeckeElement::zero(self.n);
        for (p, c) in &self.terms {
            let mut swapped = p.clone();
            swapped.swap(k, k + 1);
            let up = p[k] < p[k + 1];
            match (up, positive) {
                (true, true) | (false, false) => out.add_term(swapped, c),
                (false, true) => {
                    out.add_term(p.clone(), &(c * &z));
                    out.add_term(swapped, c);
                }
                (true, false) => {
                    out.add_term(swapped, c);
                    out.add_term(p.clone(), &-(c * &z));
                }
            }
        }
        out
    }

    /// `self · other` in `H_n`.
    pub fn mul(&self, other: &HeckeElement) -> HeckeElement {
        assert_eq!(self.n, other.n);
        let mut out = HeckeElement::zero(self.n);
        for (p, c) in &other.terms {
            let mut acc = self.clone();
            for k in reduced_word(p) {
                acc = acc.apply_position(k, true);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| {
                let perm: Vec<String> = p.iter().map(|v| (v + 1).to_string()).collect();
                format!("({c})*w[{}]", perm.join(""))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn element_of_braid(w: &BraidWord) -> HeckeElement {
    let mut x = HeckeElement::identity(w.strands);
    for l in &w.letters {
        x = x.apply_position(l.index - 1, l.positive);
    }
    x
}

type TraceMemo = RwLock<HashMap<Perm, LaurentQT>>;

fn trace_memo() -> &'static TraceMemo {
    static MEMO: OnceLock<TraceMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `z^n tr_n(ω_π)`, a Laurent polynomial.
fn scaled_trace(p: &[u8]) -> LaurentQT {
    let n = p.len();
    if n == 0 {
        return LaurentQT::one();
    }
    if let Some(v) = trace_memo().read().unwrap().get(p) {
        return v.clone();
    }
    let last = (n - 1) as u8;
    let value = if p[n - 1] == last {
        // closing off a trivial strand contributes zδ = t − t^{-1}
        &LaurentQT::t_bracket(1) * &scaled_trace(&p[..n - 1])
    } else {
        // ω_π = ω_u σ_{n−1} σ_{n−2} ⋯ σ_{j+1}, u = π with its top value moved to the end
        let j = p.iter().position(|&v| v == last).unwrap();
        let mut u: Perm = p.to_vec();
        u.remove(j);
        assert_eq!(
            perm_length(p),
            perm_length(&u) + 1 + (n - 2 - j),
            "ω_π = ω_α σ ω_β must be length additive"
        );
        let mut x = HeckeElement::basis(u);
        for k in (j..n - 2).rev() {
            x = x.apply_position(k, true);
        }
        let inner: LaurentQT = x.terms().map(|(q, c)| c * &scaled_trace(q)).sum();
        &(&LaurentQT::t() * &z()) * &inner
    };
    trace_memo().write().unwrap().insert(p.to_vec(), value.clone());
    value
}

/// Markov trace with `tr(ω_id on 1 strand) = δ` and `tr(x σ_{n−1}) = t·tr(x)` for `x ∈ H_{n−1}`.
pub fn markov_trace(x: &HeckeElement) -> RationalQT {
    let total: LaurentQT = x.terms().map(|(p, c)| c * &scaled_trace(p)).sum();
    RationalQT::new(total, z().pow(x.n as u32))
}

/// Framed bracket `⟨β̂⟩`.
pub fn framed_homfly_of_closure(w: &BraidWord) -> RationalQT {
    markov_trace(&element_of_braid(w))
}

/// `P_L = t^{−w} ⟨L⟩ / δ`.
pub fn homfly_of_closure(w: &BraidWord) -> RationalQT {
    let framed = framed_homfly_of_closure(w);
    &(&framed * &RationalQT::from_laurent(LaurentQT::qt(0, -w.writhe()))) / &delta()
}

/// `a_m = Σ_π q^{l(π)} ω_π`.
pub fn a_element(m: usize) -> HeckeElement {
    weighted_sum(m, &LaurentQT::q())
}

/// `b_m = Σ_π (−q)^{−l(π)} ω_π`.
pub fn b_element(m: usize) -> HeckeElement {
    weighted_sum(m, &-LaurentQT::qt(-1, 0))
}

fn weighted_sum(m: usize, base: &LaurentQT) -> HeckeElement {
    let mut out = HeckeElement::zero(m);
    for p in all_perms(m) {
        let c = base.pow(perm_length(&p) as u32);
        out.terms.insert(p, c);
    }
    out
}

/// `(α_m, β_m)`: `α_m = q^{m(m−1)/2} Π_{i≤m} (q^i − q^{−i})/(q − q^{−1})`, `β_m = α_m|_{q→−q^{−1}}`.
pub fn idempotent_scalars(m: usize) -> (LaurentQT, LaurentQT) {
    let mut prod = UniLaurent::one(Var::Q);
    for i in 1..=m as i64 {
        let ratio = UniLaurent::bracket(Var::Q, i).div_exact(&UniLaurent::bracket(Var::Q, 1)).unwrap();
        prod = &prod * &ratio;
    }
    let alpha = LaurentQT::from_uni(&prod).shift(QTExponent::int((m * m.saturating_sub(1) / 2) as i64, 0));
    let beta = alpha.substitute(Substitution::Q_NEG_INVERSE).expect("integral exponents");
    (alpha, beta)
}
