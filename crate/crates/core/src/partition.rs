//! Integer partitions and the combinatorial scalars attached to them.
//!
//! A [`Partition`] is a weakly decreasing list of positive integers. It plays
//! two roles at once: the cycle type of a conjugacy class of the symmetric
//! group S_d, and a Young diagram labelling an irreducible representation.
//! This module provides:
//! - [`Partition`]: the canonical type, with parsing and display
//! - [`partitions_of`]: enumeration in canonical (decreasing lexicographic) order
//! - [`class_size`]: the size |C| of the conjugacy class with that cycle type
//! - [`aut_factor`]: the multiplicity factorial product m_1! m_2! ...
//! - [`dim_irrep`]: the irreducible dimension via the hook length formula

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A partition: weakly decreasing positive integers.
///
/// The empty partition (of degree 0) is valid and unique.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts given in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The empty partition of degree 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition (d). For d = 0 this is the empty partition.
    pub fn row(d: usize) -> Self {
        if d == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![d] }
        }
    }

    /// The one-column partition (1, ..., 1) of degree d.
    pub fn column(d: usize) -> Self {
        Partition { parts: vec![1; d] }
    }

    /// The transposition class (2, 1, ..., 1) of degree d >= 2.
    pub fn transposition(d: usize) -> Self {
        assert!(d >= 2, "transposition class needs degree >= 2");
        let mut parts = vec![1; d - 1];
        parts[0] = 2;
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts, written d.
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, written l.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// d - l, the minimal number of transpositions multiplying to this cycle type.
    pub fn colength(&self) -> usize {
        self.degree() - self.length()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of the part r.
    pub fn multiplicity(&self, r: usize) -> usize {
        self.parts.iter().filter(|&&p| p == r).count()
    }

    /// Concatenation of two partitions (parts merged and re-sorted).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }
}

/// Canonical order: by degree, then decreasing lexicographic on parts.
///
/// Within a fixed degree this is the order of [`partitions_of`]:
/// (3) < (2,1) < (1,1,1).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts comma-separated positive integers, optionally parenthesized,
/// in any order: "(2,1)", "2,1", "1,2" all parse to (2,1). "()" and "" parse
/// to the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let inner = match s.strip_prefix('(') {
            Some(rest) => rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {s:?}")))?,
            None => s,
        };
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {:?}", tok.trim())))
                    .and_then(|p| {
                        if p == 0 {
                            Err(Error::Parse("partition parts must be positive".into()))
                        } else {
                            Ok(p)
                        }
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of d in canonical order (decreasing lexicographic on parts).
///
/// Deterministic across runs; `partitions_of(0)` is `[()]`.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(d, d, &mut current, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted_unchecked(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// |C|, the number of permutations of S_d with this cycle type:
/// d! / (prod_r r^{m_r} m_r!).
pub fn class_size(delta: &Partition) -> BigInt {
    factorial(delta.degree()) / centralizer_order(delta)
}

/// The centralizer order prod_r r^{m_r} m_r!, so that |C| * centralizer = d!.
pub fn centralizer_order(delta: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    let mut run = 1usize;
    for (i, &part) in delta.parts().iter().enumerate() {
        acc *= part;
        if i + 1 < delta.parts().len() && delta.parts()[i + 1] == part {
            run += 1;
        } else {
            acc *= factorial(run);
            run = 1;
        }
    }
    acc
}

/// The multiplicity factorial product m_1(delta)! m_2(delta)! ...
pub fn aut_factor(delta: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    let mut run = 1usize;
    for (i, &part) in delta.parts().iter().enumerate() {
        if i + 1 < delta.parts().len() && delta.parts()[i + 1] == part {
            run += 1;
        } else {
            acc *= factorial(run);
            run = 1;
        }
    }
    acc
}

/// Dimension of the irreducible representation labelled by lambda:
/// d! divided by the product of hook lengths (the count of standard Young
/// tableaux). The empty partition has dimension 1.
pub fn dim_irrep(lambda: &Partition) -> BigInt {
    let parts = lambda.parts();
    let cols = conjugate_parts(parts);
    let mut hooks = BigInt::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = cols[j] - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(lambda.degree()) / hooks
}

/// Column lengths of the Young diagram (the conjugate partition as raw parts).
fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (0..width)
        .map(|j| parts.iter().filter(|&&row| row > j).count())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn enumeration_small_degrees() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p("(3)"), p("(2,1)"), p("(1,1,1)")]);
        assert_eq!(partitions_of(5).len(), 7);
    }

    /// Independent enumeration: weakly decreasing sequences obtained by
    /// filtering all compositions of d (bitmask cut points).
    fn partitions_by_composition_filter(d: usize) -> Vec<Vec<usize>> {
        if d == 0 {
            return vec![vec![]];
        }
        let mut seen = Vec::new();
        for mask in 0..(1u32 << (d - 1)) {
            let mut comp = Vec::new();
            let mut run = 1;
            for bit in 0..(d - 1) {
                if mask & (1 << bit) != 0 {
                    comp.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            comp.push(run);
            if comp.windows(2).all(|w| w[0] >= w[1]) {
                seen.push(comp);
            }
        }
        seen
    }

    #[test]
    fn enumeration_matches_composition_filter() {
        for d in 0..=12 {
            let ours: Vec<Vec<usize>> = partitions_of(d)
                .iter()
                .map(|q| q.parts().to_vec())
                .collect();
            let mut theirs = partitions_by_composition_filter(d);
            theirs.sort();
            let mut sorted_ours = ours.clone();
            sorted_ours.sort();
            assert_eq!(sorted_ours, theirs, "partition set mismatch at d={d}");
            // canonical order is decreasing lexicographic
            let mut expect = ours.clone();
            expect.sort_by(|a, b| b.cmp(a));
            assert_eq!(ours, expect, "canonical order violated at d={d}");
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&p("(1,1,1)")), int(1));
        assert_eq!(class_size(&p("(2,1)")), int(3));
        assert_eq!(class_size(&p("(3)")), int(2));
        assert_eq!(class_size(&Partition::empty()), int(1));
    }

    #[test]
    fn aut_factors() {
        assert_eq!(aut_factor(&p("(2,1)")), int(1));
        assert_eq!(aut_factor(&p("(1,1,1)")), int(6));
        assert_eq!(aut_factor(&p("(2,2)")), int(2));
        assert_eq!(aut_factor(&Partition::empty()), int(1));
    }

    #[test]
    fn irrep_dimensions() {
        for d in 1..=8 {
            assert_eq!(dim_irrep(&Partition::row(d)), int(1));
            assert_eq!(dim_irrep(&Partition::column(d)), int(1));
        }
        assert_eq!(dim_irrep(&p("(2,1)")), int(2));
        assert_eq!(dim_irrep(&p("(3,2)")), int(5));
        assert_eq!(dim_irrep(&p("(4,3,2,1)")), int(768));
        assert_eq!(dim_irrep(&Partition::empty()), int(1));
    }

    #[test]
    fn classes_partition_the_group() {
        for d in 0..=8 {
            let total: BigInt = partitions_of(d).iter().map(class_size).sum();
            assert_eq!(total, factorial(d), "class sizes at d={d}");
        }
    }

    #[test]
    fn burnside_sum_of_squared_dims() {
        for d in 0..=8 {
            let total: BigInt = partitions_of(d)
                .iter()
                .map(|lam| {
                    let dim = dim_irrep(lam);
                    &dim * &dim
                })
                .sum();
            assert_eq!(total, factorial(d), "Burnside at d={d}");
        }
    }

    #[test]
    fn centralizer_identity() {
        // |C| * aut * prod(parts) = d!
        for d in 0..=8 {
            for delta in partitions_of(d) {
                let mut prod = class_size(&delta) * aut_factor(&delta);
                for &part in delta.parts() {
                    prod *= part;
                }
                assert_eq!(prod, factorial(d), "centralizer identity at {delta}");
            }
        }
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(p("(2,1)").to_string(), "(2,1)");
        assert_eq!(p("2,1").to_string(), "(2,1)");
        assert_eq!(p("1,2").to_string(), "(2,1)");
        assert_eq!(p(" ( 3 , 1 ) ").to_string(), "(3,1)");
        assert_eq!(p("()"), Partition::empty());
        assert_eq!(p(""), Partition::empty());
        assert!("(2,0)".parse::<Partition>().is_err());
        assert!("(2,".parse::<Partition>().is_err());
        assert!("(a)".parse::<Partition>().is_err());
    }

    #[test]
    fn canonical_order_before_between_degrees() {
        let mut all: Vec<Partition> = (0..=4).flat_map(partitions_of).collect();
        let sorted = all.clone();
        all.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn class_size_divides_factorial() {
        for d in 1..=8 {
            for delta in partitions_of(d) {
                assert!((factorial(d) % class_size(&delta)).is_zero());
            }
        }
    }
}
