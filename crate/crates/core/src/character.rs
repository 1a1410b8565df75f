//! Irreducible characters of symmetric groups.
//!
//! Characters are computed by the Murnaghan-Nakayama rule on beta-number
//! (first-column hook length) encodings: removing a border strip of size `r`
//! from a partition is subtracting `r` from one beta number, with sign given
//! by the number of beta numbers jumped over. All values are exact integers.
//!
//! [`CharTable`] bundles the full table for one degree together with
//! dimensions and class sizes; tables for small degrees are memoized
//! process-wide (see [`char_table`] / [`set_table_cache_cap`]).

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{class_size, dim_irrep, factorial, partitions_of, Partition};
use crate::scalar::BigRational;

/// Beta numbers of a partition, padded to `slots` entries:
/// `lambda_i + (slots - 1 - i)`, strictly decreasing.
fn beta_numbers(lambda: &Partition, slots: usize) -> Vec<usize> {
    debug_assert!(slots >= lambda.length());
    let mut beta = Vec::with_capacity(slots);
    for i in 0..slots {
        let part = lambda.parts().get(i).copied().unwrap_or(0);
        beta.push(part + (slots - 1 - i));
    }
    beta
}

fn partition_from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let slots = beta.len();
    let parts: Vec<usize> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (slots - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::from_sorted_unchecked(parts)
}

/// All ways to remove a border strip of size `r` from `lambda`, as
/// `(smaller partition, sign)` pairs. Deterministic order.
fn strip_removals(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    debug_assert!(r >= 1);
    let slots = lambda.length().max(1);
    let beta = beta_numbers(lambda, slots);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        // Strip height = number of beta values strictly between target and b.
        let jumped = beta
            .iter()
            .filter(|&&other| target < other && other < b)
            .count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[i] = target;
        out.push((partition_from_beta(next), sign));
    }
    out
}

/// Murnaghan-Nakayama recursion with memoization on (remaining shape,
/// number of class parts consumed). `class_parts` is fixed per top call.
fn mn_recurse(
    lambda: &Partition,
    class_parts: &[usize],
    consumed: usize,
    memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
) -> BigInt {
    if consumed == class_parts.len() {
        debug_assert!(lambda.is_empty());
        return BigInt::one();
    }
    let key = (lambda.parts().to_vec(), consumed);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let r = class_parts[consumed];
    let mut total = BigInt::zero();
    for (smaller, sign) in strip_removals(lambda, r) {
        let sub = mn_recurse(&smaller, class_parts, consumed + 1, memo);
        if sign > 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// The irreducible character value `chi_lambda(delta)`.
///
/// Errors with [`Error::DegreeMismatch`] unless `lambda` and `delta` are
/// partitions of the same number.
pub fn character(lambda: &Partition, delta: &Partition) -> Result<BigInt> {
    if lambda.degree() != delta.degree() {
        return Err(Error::DegreeMismatch {
            expected: lambda.degree(),
            found: delta.degree(),
            context: "character: row and class must partition the same degree".into(),
        });
    }
    let mut memo = HashMap::new();
    Ok(mn_recurse(lambda, delta.parts(), 0, &mut memo))
}

/// The normalized character `phi_lambda(delta) = |C_delta| chi_lambda(delta)
/// / dim(lambda)`.
pub fn normalized_character(lambda: &Partition, delta: &Partition) -> Result<BigRational> {
    let chi = character(lambda, delta)?;
    Ok(BigRational::new(
        class_size(delta) * chi,
        dim_irrep(lambda),
    ))
}

/// The full character table of `S_d`, plus class data, with rows and columns
/// indexed by partitions of `d` in canonical order.
pub struct CharTable {
    degree: usize,
    parts_list: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    /// `chi[row][col]` with row = irreducible (by partition), col = class.
    chi: Vec<Vec<BigInt>>,
    dims: Vec<BigInt>,
    class_sizes: Vec<BigInt>,
    group_order: BigInt,
}

impl CharTable {
    /// Compute the table for degree `d` from scratch.
    pub fn build(d: usize) -> CharTable {
        let parts_list = partitions_of(d);
        let index: BTreeMap<Partition, usize> = parts_list
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let n = parts_list.len();
        let mut chi = vec![vec![BigInt::zero(); n]; n];
        // One memo per column: the recursion state (shape, consumed) is
        // shared across rows for a fixed class.
        for (col, delta) in parts_list.iter().enumerate() {
            let mut memo = HashMap::new();
            for (row, lambda) in parts_list.iter().enumerate() {
                chi[row][col] = mn_recurse(lambda, delta.parts(), 0, &mut memo);
            }
        }
        let dims = parts_list.iter().map(dim_irrep).collect();
        let class_sizes = parts_list.iter().map(class_size).collect();
        CharTable {
            degree: d,
            parts_list,
            index,
            chi,
            dims,
            class_sizes,
            group_order: factorial(d),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Partitions of the degree in canonical order (row and column labels).
    pub fn partitions(&self) -> &[Partition] {
        &self.parts_list
    }

    pub fn num_classes(&self) -> usize {
        self.parts_list.len()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn chi_at(&self, row: usize, col: usize) -> &BigInt {
        &self.chi[row][col]
    }

    pub fn dim_at(&self, row: usize) -> &BigInt {
        &self.dims[row]
    }

    pub fn class_size_at(&self, col: usize) -> &BigInt {
        &self.class_sizes[col]
    }

    pub fn group_order(&self) -> &BigInt {
        &self.group_order
    }

    pub fn chi(&self, lambda: &Partition, delta: &Partition) -> Result<&BigInt> {
        let row = self.index_of(lambda).ok_or(Error::DegreeMismatch {
            expected: self.degree,
            found: lambda.degree(),
            context: "character table row lookup".into(),
        })?;
        let col = self.index_of(delta).ok_or(Error::DegreeMismatch {
            expected: self.degree,
            found: delta.degree(),
            context: "character table column lookup".into(),
        })?;
        Ok(&self.chi[row][col])
    }

    /// Normalized character by table indices.
    pub fn phi_at(&self, row: usize, col: usize) -> BigRational {
        BigRational::new(
            &self.class_sizes[col] * &self.chi[row][col],
            self.dims[row].clone(),
        )
    }

    /// Row orthogonality: `sum_delta |C_delta| chi_l(delta) chi_m(delta) =
    /// d! [l = m]` for all row pairs. Returns the first violating pair.
    pub fn row_orthogonality_counterexample(&self) -> Option<(Partition, Partition)> {
        let n = self.num_classes();
        for l in 0..n {
            for m in 0..n {
                let mut total = BigInt::zero();
                for col in 0..n {
                    total += &self.class_sizes[col] * &self.chi[l][col] * &self.chi[m][col];
                }
                let expected = if l == m {
                    self.group_order.clone()
                } else {
                    BigInt::zero()
                };
                if total != expected {
                    return Some((self.parts_list[l].clone(), self.parts_list[m].clone()));
                }
            }
        }
        None
    }

    /// Column orthogonality: `sum_lambda chi_l(delta) chi_l(delta') =
    /// (d!/|C_delta|) [delta = delta']`. Returns the first violating pair.
    pub fn column_orthogonality_counterexample(&self) -> Option<(Partition, Partition)> {
        let n = self.num_classes();
        for c1 in 0..n {
            for c2 in 0..n {
                let mut total = BigInt::zero();
                for row in 0..n {
                    total += &self.chi[row][c1] * &self.chi[row][c2];
                }
                let expected = if c1 == c2 {
                    &self.group_order / &self.class_sizes[c1]
                } else {
                    BigInt::zero()
                };
                if total != expected {
                    return Some((self.parts_list[c1].clone(), self.parts_list[c2].clone()));
                }
            }
        }
        None
    }

    pub fn is_orthogonal(&self) -> bool {
        self.row_orthogonality_counterexample().is_none()
            && self.column_orthogonality_counterexample().is_none()
    }
}

static TABLE_CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();
static TABLE_CACHE_CAP: AtomicUsize = AtomicUsize::new(10);

/// Set the largest degree whose table is memoized process-wide. Larger
/// degrees are still computed on demand, just not retained.
pub fn set_table_cache_cap(cap: usize) {
    TABLE_CACHE_CAP.store(cap, Ordering::Relaxed);
}

/// The character table for degree `d`, memoized for `d` up to the cache cap.
pub fn char_table(d: usize) -> Arc<CharTable> {
    let cache = TABLE_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&d) {
        return Arc::clone(hit);
    }
    let table = Arc::new(CharTable::build(d));
    if d <= TABLE_CACHE_CAP.load(Ordering::Relaxed) {
        cache
            .lock()
            .unwrap()
            .entry(d)
            .or_insert_with(|| Arc::clone(&table));
    }
    table
}
