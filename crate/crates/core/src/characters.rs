//! Irreducible characters `χ_λ(C_μ)` of the symmetric groups.
//!
//! Values come from the Murnaghan–Nakayama rule: strip a rim hook of length
//! `μ_1` from `λ` in every possible way, weight by `(-1)^{height}`, recurse on
//! the remaining cycle type. Rim hooks are located on the beta-set (abacus)
//! of `λ`. Results are memoized process-wide keyed by `(λ, μ)`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use crate::arith::{UniLaurent, Var};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Environment variable bounding [`character_table`] sizes.
pub const MAX_N_ENV: &str = "SKEIN_HOMFLY_MAX_N";
pub const DEFAULT_MAX_N: u32 = 12;

type Memo = RwLock<HashMap<(Partition, Partition), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `χ_λ(C_μ)`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { lambda: lambda.clone(), mu: mu.clone() });
    }
    Ok(mn(lambda, mu.parts()))
}

fn mn(lambda: &Partition, mu: &[u32]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    // single row or column: χ is 1 or the sign character
    if lambda.length() == 1 {
        return 1;
    }
    let key = (lambda.clone(), Partition::from_parts_unsorted(mu.to_vec()));
    if let Some(&v) = memo().read().unwrap().get(&key) {
        return v;
    }
    let len = lambda.length();
    let beta: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (len - 1 - i) as i64)
        .collect();
    let occupied: BTreeSet<i64> = beta.iter().copied().collect();
    let r = r as i64;
    let mut total = 0i64;
    for &b in &beta {
        let target = b - r;
        if target < 0 || occupied.contains(&target) {
            continue;
        }
        let height = occupied.range(target + 1..b).count();
        let mut next: Vec<i64> = beta.iter().map(|&x| if x == b { target } else { x }).collect();
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = next
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (len - 1 - i) as i64) as u32)
            .collect();
        let sub = Partition::from_parts_unsorted(parts);
        let v = mn(&sub, rest);
        total += if height.is_multiple_of(2) { v } else { -v };
    }
    memo().write().unwrap().insert(key, total);
    total
}

/// `χ_λ(C_{(1^n)})`, the dimension of the irreducible representation.
pub fn dimension(lambda: &Partition) -> i64 {
    mn(lambda, Partition::column(lambda.size()).parts())
}

/// Square table of `χ_λ(C_μ)` over `partitions_of(n)` (reverse lexicographic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: u32,
    partitions: Vec<Partition>,
    /// `values[i][j] = χ_{partitions[i]}(C_{partitions[j]})`
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        let i = self.index_of(lambda)?;
        let j = self.index_of(mu)?;
        Some(self.values[i][j])
    }

    fn index_of(&self, p: &Partition) -> Option<usize> {
        // reverse lexicographic order means descending order
        self.partitions.binary_search_by(|x| p.cmp(x)).ok()
    }

    /// `Σ_A χ_A(C_μ) χ_A(C_ν) = δ_{μν} z_μ` for all `μ, ν`.
    pub fn orthogonality_holds(&self) -> bool {
        let k = self.partitions.len();
        (0..k).all(|j1| {
            let z = self.partitions[j1].z_factor();
            (0..k).all(|j2| {
                let s: i128 = (0..k).map(|i| self.values[i][j1] as i128 * self.values[i][j2] as i128).sum();
                if j1 == j2 {
                    num_bigint::BigInt::from(s) == z
                } else {
                    s == 0
                }
            })
        })
    }

    /// CSV with partition-text headers; the first column holds `λ`, the header row `μ`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("\"lambda\\mu\"");
        for p in &self.partitions {
            out.push_str(&format!(",\"{p}\""));
        }
        out.push('\n');
        for (p, row) in self.partitions.iter().zip(&self.values) {
            out.push_str(&format!("\"{p}\""));
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Bound on table size: `SKEIN_HOMFLY_MAX_N` if set and valid, else 12.
pub fn max_table_n() -> u32 {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

type TableCache = RwLock<HashMap<u32, Arc<CharacterTable>>>;

fn table_cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn character_table(n: u32) -> Result<Arc<CharacterTable>> {
    character_table_bounded(n, max_table_n())
}

pub fn character_table_bounded(n: u32, bound: u32) -> Result<Arc<CharacterTable>> {
    if n == 0 || n > bound {
        if n == 0 {
            return Err(Error::InvalidInput("character tables start at n = 1".into()));
        }
        return Err(Error::BoundExceeded { what: "character table n", value: n as usize, bound: bound as usize });
    }
    if let Some(t) = table_cache().read().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let partitions = partitions_of(n);
    let values: Vec<Vec<i64>> = partitions
        .par_iter()
        .map(|l| partitions.iter().map(|m| mn(l, m.parts())).collect())
        .collect();
    let table = Arc::new(CharacterTable { n, partitions, values });
    table_cache().write().unwrap().insert(n, table.clone());
    Ok(table)
}

/// Checks `Σ_A χ_A(C_μ)χ_A(C_ν)/z_μ = δ_{μν}` exactly for all `μ, ν ⊢ n`.
pub fn verify_orthogonality(n: u32) -> Result<bool> {
    Ok(character_table_bounded(n, n.max(max_table_n()))?.orthogonality_holds())
}

/// Both sides of the hook-character identity
/// `Σ_{a+b+1=|B|} χ_{(a|b)}(C_B)(−1)^b u^{a−b} = Π_j (u^{B_j} − u^{−B_j}) / (u − u^{−1})`
/// as Laurent polynomials in `u` (printed as `q`). The right side is an exact division.
pub fn hook_character_sides(b: &Partition) -> Result<(UniLaurent, UniLaurent)> {
    let d = b.size();
    if d == 0 {
        return Err(Error::InvalidInput("hook identity needs |B| >= 1".into()));
    }
    let u = Var::Q;
    let mut lhs = UniLaurent::zero(u);
    for bb in 0..d {
        let a = d - 1 - bb;
        let chi = character(&Partition::hook(a, bb), b)?;
        let sign = if bb % 2 == 0 { chi } else { -chi };
        lhs = &lhs + &UniLaurent::from_int_coeffs(u, &[(a as i64 - bb as i64, sign)]);
    }
    let prod = b
        .parts()
        .iter()
        .fold(UniLaurent::one(u), |acc, &p| &acc * &UniLaurent::bracket(u, p as i64));
    let rhs = prod
        .div_exact(&UniLaurent::bracket(u, 1))
        .expect("u - u^-1 divides every u^k - u^-k");
    Ok((lhs, rhs))
}

pub fn hook_character_identity(b: &Partition) -> Result<bool> {
    let (lhs, rhs) = hook_character_sides(b)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trivial_representation() {
        for d in 1..=6 {
            for mu in partitions_of(d) {
                assert_eq!(character(&Partition::row(d), &mu).unwrap(), 1);
            }
        }
    }

    #[test]
    fn full_cycle_on_hooks() {
        for d in 1..=6 {
            let cycle = Partition::row(d);
            for l in partitions_of(d) {
                let expected = match l.hook_form() {
                    Some((_, b)) => if b % 2 == 0 { 1 } else { -1 },
                    None => 0,
                };
                assert_eq!(character(&l, &cycle).unwrap(), expected, "{l}");
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 2);
        assert_eq!(character(&Partition::empty(), &Partition::empty()).unwrap(), 1);
    }

    #[test]
    fn size_mismatch() {
        let err = character(&p(&[2]), &p(&[1])).unwrap_err();
        assert_eq!(err.kind(), "SizeMismatch");
    }

    #[test]
    fn tables() {
        let t2 = character_table(2).unwrap();
        assert_eq!(t2.rows(), &[vec![1, 1], vec![-1, 1]]);
        let t5 = character_table(5).unwrap();
        assert!(t5.rows()[0].iter().all(|&v| v == 1));
        assert!(character_table(4).unwrap().orthogonality_holds());
        assert_eq!(character_table_bounded(13, 12).unwrap_err().kind(), "BoundExceeded");
    }

    #[test]
    fn corrupted_table_fails_orthogonality() {
        let mut t = (*character_table(4).unwrap()).clone();
        t.values[1][2] += 1;
        assert!(!t.orthogonality_holds());
    }

    #[test]
    fn orthogonality_up_to_8() {
        for n in 1..=8 {
            assert!(verify_orthogonality(n).unwrap(), "n = {n}");
        }
    }

    /// Independent oracle: hook length formula `n! / Π h(x)`.
    fn hook_length_dimension(l: &Partition) -> i64 {
        let conj = l.conjugate();
        let mut prod = 1i64;
        for (i, j) in l.cells() {
            let arm = l.parts()[i as usize] - j - 1;
            let leg = conj.parts()[j as usize] - i - 1;
            prod *= (arm + leg + 1) as i64;
        }
        let fact: i64 = (1..=l.size() as i64).product();
        fact / prod
    }

    #[test]
    fn dimensions_match_hook_length_formula() {
        for n in 1..=8 {
            for l in partitions_of(n) {
                assert_eq!(dimension(&l), hook_length_dimension(&l), "{l}");
            }
        }
    }

    #[test]
    fn conjugate_twists_by_sign() {
        for n in 1..=8 {
            for l in partitions_of(n) {
                for mu in partitions_of(n) {
                    let sign = if (mu.size() as usize - mu.length()).is_multiple_of(2) { 1 } else { -1 };
                    assert_eq!(
                        character(&l.conjugate(), &mu).unwrap(),
                        sign * character(&l, &mu).unwrap(),
                        "{l} at {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn hook_identity_small_cases() {
        let (lhs, rhs) = hook_character_sides(&p(&[1])).unwrap();
        assert_eq!(lhs, UniLaurent::one(Var::Q));
        assert_eq!(rhs, UniLaurent::one(Var::Q));
        let (lhs, rhs) = hook_character_sides(&p(&[2])).unwrap();
        assert_eq!(lhs, UniLaurent::sym(Var::Q, 1));
        assert_eq!(rhs, UniLaurent::sym(Var::Q, 1));
    }

    #[test]
    fn hook_identity_exhaustive_to_8() {
        for n in 1..=8 {
            for b in partitions_of(n) {
                assert!(hook_character_identity(&b).unwrap(), "{b}");
            }
        }
    }

    /// `Σ_μ χ_μ(C_{mB}) χ_μ(C_{(md)}) q^{(n/m) k_μ} = Π_j (q^{mndB_j} − q^{−mndB_j}) / (q^{nd} − q^{−nd})`.
    #[test]
    fn hook_identity_consequence_for_torus_exponents() {
        use num_rational::Ratio;
        for &(m, n) in &[(2i64, 3i64), (3, 2), (2, 5)] {
            for d in 1..=(8 / m) as u32 {
                for b in partitions_of(d) {
                    let mb = b.scaled(m as u32);
                    let cycle = Partition::row(m as u32 * d);
                    let mut lhs = UniLaurent::zero(Var::Q);
                    for mu in partitions_of(m as u32 * d) {
                        let c = character(&mu, &mb).unwrap() * character(&mu, &cycle).unwrap();
                        if c != 0 {
                            let e = Ratio::new(n * mu.k_invariant(), m);
                            lhs = &lhs + &UniLaurent::monomial(Var::Q, e, crate::arith::int(c));
                        }
                    }
                    let nd = n * d as i64;
                    let prod = b.parts().iter().fold(UniLaurent::one(Var::Q), |acc, &bj| {
                        &acc * &UniLaurent::bracket(Var::Q, m * nd * bj as i64)
                    });
                    let rhs = prod.div_exact(&UniLaurent::bracket(Var::Q, nd)).unwrap();
                    assert_eq!(lhs, rhs, "(m,n)=({m},{n}) B={b}");
                }
            }
        }
    }
}
