//! Integer partitions and partition vectors.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition `∅`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("partition parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("partition parts must be weakly decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`, or `∅` for `n = 0`.
    pub fn row(n: u32) -> Self {
        Self::from_parts_unsorted(vec![n])
    }

    /// `(1^n)`
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// The hook `(a|b) = (a+1, 1^b)`.
    pub fn hook(a: u32, b: u32) -> Self {
        let mut parts = vec![a + 1];
        parts.extend(std::iter::repeat_n(1, b as usize));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `l(λ)`
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `z_λ = Π_j j^{m_j} m_j!`, the order of the centralizer of a permutation of cycle type `λ`.
    pub fn z_factor(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut m = 0u32;
            while i < self.0.len() && self.0[i] == part {
                m += 1;
                i += 1;
                z *= part * m;
            }
        }
        z
    }

    /// `k_λ = Σ_j λ_j (λ_j − 2j + 1)`; twice the total content of the diagram.
    pub fn k_invariant(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &p)| {
                let p = p as i64;
                p * (p - 2 * (j as i64 + 1) + 1)
            })
            .sum()
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect())
    }

    /// `Some((a, b))` iff `λ = (a+1, 1^b)`.
    pub fn hook_form(&self) -> Option<(u32, u32)> {
        let (&first, rest) = self.0.split_first()?;
        if rest.iter().all(|&p| p == 1) {
            Some((first - 1, rest.len() as u32))
        } else {
            None
        }
    }

    pub fn is_hook(&self) -> bool {
        self.hook_form().is_some()
    }

    /// Every part multiplied by `m` (the cycle type `mB`).
    pub fn scaled(&self, m: u32) -> Self {
        Partition(self.0.iter().map(|&p| p * m).collect())
    }

    /// All parts of all inputs, sorted decreasingly.
    pub fn union<'a, I: IntoIterator<Item = &'a Partition>>(parts: I) -> Self {
        Self::from_parts_unsorted(parts.into_iter().flat_map(|p| p.0.iter().copied()).collect())
    }

    /// Cells `(row, column)` of the Young diagram, 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i as u32, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "[]");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1,1)`, `[]`, `()` and surrounding whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "[]" || s == "()" || s == "∅" {
            return Ok(Partition::empty());
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected a partition like (3,1,1), got {s:?}")))?;
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad part {p:?} in {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first);
            rec(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A coloring `(A^1, …, A^L)` of the components of a link.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct PartitionVector(Vec<Partition>);

impl PartitionVector {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("a partition vector needs at least one component".into()));
        }
        Ok(PartitionVector(components))
    }

    pub fn single(p: Partition) -> Self {
        PartitionVector(vec![p])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `‖A‖ = Σ_α |A^α|`
    pub fn total_size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    /// `Σ_α k_{A^α}`
    pub fn total_k(&self) -> i64 {
        self.0.iter().map(Partition::k_invariant).sum()
    }

    /// Componentwise conjugate.
    pub fn conjugate(&self) -> Self {
        PartitionVector(self.0.iter().map(Partition::conjugate).collect())
    }
}

impl fmt::Display for PartitionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PartitionVector {
    type Err = Error;

    /// Semicolon-separated partitions, e.g. `(2);(1,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s.split(';').map(str::parse).collect::<Result<Vec<Partition>>>()?;
        PartitionVector::new(parts)
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PartitionVector> for String {
    fn from(p: PartitionVector) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for PartitionVector {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn statistics() {
        assert_eq!(p(&[2, 1, 1]).size(), 4);
        assert_eq!(Partition::empty().length(), 0);
        assert_eq!(p(&[2, 1, 1]).multiplicity(1), 2);
    }

    #[test]
    fn z_factors() {
        assert_eq!(Partition::column(5).z_factor(), BigInt::from(120));
        assert_eq!(p(&[2, 1, 1]).z_factor(), BigInt::from(4));
        assert_eq!(p(&[3]).z_factor(), BigInt::from(3));
        assert_eq!(Partition::empty().z_factor(), BigInt::from(1));
    }

    #[test]
    fn k_values() {
        assert_eq!(p(&[1]).k_invariant(), 0);
        assert_eq!(p(&[2]).k_invariant(), 2);
        assert_eq!(p(&[1, 1]).k_invariant(), -2);
        assert_eq!(p(&[3, 1]).k_invariant(), 4);
        assert_eq!(p(&[2, 2]).k_invariant(), 0);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hooks() {
        assert_eq!(p(&[3, 1, 1]).hook_form(), Some((2, 2)));
        assert_eq!(p(&[2, 2]).hook_form(), None);
        assert_eq!(p(&[1]).hook_form(), Some((0, 0)));
        assert_eq!(Partition::empty().hook_form(), None);
        assert_eq!(Partition::hook(2, 2), p(&[3, 1, 1]));
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    /// Independent count: Euler's pentagonal recurrence.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut k = 1i64;
            let mut sum = 0i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    sum += sign * table[i - g2];
                }
                k += 1;
            }
            table[i] = sum;
        }
        table[n] as u64
    }

    #[test]
    fn enumeration_counts_match_pentagonal_recurrence() {
        assert_eq!(partition_count(10), 42);
        for n in 0..=15u32 {
            let all = partitions_of(n);
            assert_eq!(all.len() as u64, partition_count(n as usize), "n = {n}");
            assert!(all.windows(2).all(|w| w[0] > w[1]), "reverse lexicographic for n = {n}");
            assert!(all.iter().all(|l| l.size() == n));
        }
    }

    #[test]
    fn class_equation() {
        for n in 0..=10u32 {
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            let total: BigInt = partitions_of(n).iter().map(|l| &fact / l.z_factor()).sum();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn k_antisymmetric_under_conjugation() {
        for n in 0..=12 {
            for l in partitions_of(n) {
                assert_eq!(l.k_invariant() + l.conjugate().k_invariant(), 0, "{l}");
            }
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!(p(&[3, 1, 1]).to_string(), "(3,1,1)");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("(3,1,1)".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        let v: PartitionVector = "(2);(1,1)".parse().unwrap();
        assert_eq!(v.components(), &[p(&[2]), p(&[1, 1])]);
        assert_eq!(v.to_string(), "(2);(1,1)");
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u32..8, 0..8).prop_map(Partition::from_parts_unsorted)
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(l in arb_partition()) {
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.conjugate().size(), l.size());
            prop_assert_eq!(l.length() as u32, l.conjugate().parts().first().copied().unwrap_or(0));
        }

        #[test]
        fn k_is_even(l in arb_partition()) {
            prop_assert_eq!(l.k_invariant() % 2, 0);
        }
    }
}
