//! Counting branched covers: exact Hurwitz numbers for arbitrary genus.
//!
//! A [`CoverSpec`] fixes the base-surface genus `g`, the sheet count `d`, and
//! the ramification profiles over the marked branch points. The count
//! `mu_g(profiles)` is the number of tuples
//! `(a_1, b_1, ..., a_g, b_g, s_1, ..., s_k)` in `S_d` with each `s_i` in the
//! class of the `i`-th profile and
//! `[a_1,b_1] ... [a_g,b_g] s_1 ... s_k = id`, divided by `d!`.
//!
//! Two independent evaluators are provided: [`hurwitz_number`] sums the
//! normalized-character formula over irreducibles, and [`hurwitz_oracle`]
//! literally counts permutation tuples (with one class solved by inversion
//! rather than enumerated). Agreement between the two is part of the verify
//! suite.

use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive, Zero};

use crate::character::char_table;
use crate::error::{Error, Result};
use crate::partition::{class_size, factorial, partitions_of, Partition};
use crate::perm::{class_members, genus_product_histogram, Perm};
use crate::scalar::BigRational;

/// Default ceiling on the number of composed tuples the enumeration oracle
/// will attempt. Overridable per call and via the CLI.
pub const DEFAULT_ORACLE_BUDGET: u128 = 100_000_000;

/// A branched-cover counting problem: base genus, sheet count, and the
/// ramification profile over each marked point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSpec {
    genus: usize,
    degree: usize,
    profiles: Vec<Partition>,
}

impl CoverSpec {
    /// Validates that the degree is positive and every profile is a
    /// partition of it.
    pub fn new(genus: usize, degree: usize, profiles: Vec<Partition>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Parse("cover degree must be positive".into()));
        }
        for p in &profiles {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: p.degree(),
                    context: "ramification profile".into(),
                });
            }
        }
        Ok(CoverSpec {
            genus,
            degree,
            profiles,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn profiles(&self) -> &[Partition] {
        &self.profiles
    }
}

/// Euler characteristic data of the covering surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusResult {
    /// `2h - 2` for the cover of genus `h` (always even in valid
    /// configurations).
    Euler(i64),
    /// The total colength of the profiles is odd, so no cover exists and the
    /// count is zero.
    ParityFailure,
}

impl GenusResult {
    pub fn euler(self) -> Option<i64> {
        match self {
            GenusResult::Euler(e) => Some(e),
            GenusResult::ParityFailure => None,
        }
    }
}

/// Riemann-Hurwitz bookkeeping: `2h - 2 = (2g - 2) d + sum_i (d - l(p_i))`
/// with simple branching data carried entirely by the profile colengths.
/// Declares a parity failure when the colength sum is odd (the permutation
/// product would be odd, so the count vanishes).
pub fn source_euler(spec: &CoverSpec) -> GenusResult {
    let d = spec.degree as i64;
    let g = spec.genus as i64;
    let colength_sum: i64 = spec.profiles.iter().map(|p| p.colength() as i64).sum();
    if colength_sum % 2 != 0 {
        return GenusResult::ParityFailure;
    }
    GenusResult::Euler((2 * g - 2) * d + colength_sum)
}

/// The Hurwitz number via the character sum
/// `sum_lambda (dim/d!)^(2-2g) prod_i phi_lambda(p_i)`.
pub fn hurwitz_number(spec: &CoverSpec) -> BigRational {
    let t = char_table(spec.degree);
    let exponent = 2i32 - 2 * i32::try_from(spec.genus).expect("genus fits in i32");
    let mut total = BigRational::zero();
    let cols: Vec<usize> = spec
        .profiles
        .iter()
        .map(|p| t.index_of(p).expect("profile validated against degree"))
        .collect();
    for row in 0..t.num_classes() {
        let base = BigRational::new(t.dim_at(row).clone(), t.group_order().clone());
        let mut term = base.pow(exponent);
        for &col in &cols {
            term *= t.phi_at(row, col);
        }
        total += term;
    }
    total
}

/// Number of tuples the enumeration oracle would walk: `(d!)^(2g)` handle
/// pairs times the product of the class sizes of all profiles except the
/// largest (which is solved by inversion instead of enumerated).
pub fn oracle_workload(spec: &CoverSpec) -> BigInt {
    let dfact = factorial(spec.degree);
    let mut est = dfact.pow(2 * spec.genus as u32);
    if !spec.profiles.is_empty() {
        let sizes: Vec<BigInt> = spec.profiles.iter().map(class_size).collect();
        let solved = solved_position(&sizes);
        for (i, s) in sizes.iter().enumerate() {
            if i != solved {
                est *= s;
            }
        }
    }
    est
}

/// First position holding the largest class (deterministic tie-break).
fn solved_position(sizes: &[BigInt]) -> usize {
    let mut best = 0;
    for (i, s) in sizes.iter().enumerate() {
        if s > &sizes[best] {
            best = i;
        }
    }
    best
}

/// Brute-force count with the default budget. See
/// [`hurwitz_oracle_with_budget`].
pub fn hurwitz_oracle(spec: &CoverSpec) -> Result<BigRational> {
    hurwitz_oracle_with_budget(spec, DEFAULT_ORACLE_BUDGET)
}

/// Count permutation tuples directly. The handle part is evaluated once per
/// degree/genus as a product-class histogram; one profile (the largest
/// class) is recovered by inverting the product condition instead of being
/// enumerated. Refuses to start if the workload exceeds `budget`.
pub fn hurwitz_oracle_with_budget(spec: &CoverSpec, budget: u128) -> Result<BigRational> {
    let workload = oracle_workload(spec);
    if workload > BigInt::from(budget) {
        return Err(Error::BudgetExceeded {
            estimated: workload.to_u128().unwrap_or(u128::MAX),
            budget,
        });
    }
    let d = spec.degree;
    let hist = genus_product_histogram(d, spec.genus);
    let dfact = factorial(d);

    if spec.profiles.is_empty() {
        let count = hist.get(&Perm::identity(d)).copied().unwrap_or(0);
        return Ok(BigRational::new(BigInt::from(count), dfact));
    }

    let sizes: Vec<BigInt> = spec.profiles.iter().map(class_size).collect();
    let solved = solved_position(&sizes);
    let solved_type = &spec.profiles[solved];
    let others: Vec<(usize, Vec<Perm>)> = spec
        .profiles
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != solved)
        .map(|(i, p)| (i, class_members(p)))
        .collect();

    let mut total = BigInt::zero();
    // Walk the cartesian product of the enumerated classes by mixed-radix
    // counter so the `k = 1` case (empty product, one empty tuple) is
    // handled uniformly.
    let radices: Vec<usize> = others.iter().map(|(_, c)| c.len()).collect();
    let mut counter = vec![0usize; radices.len()];
    loop {
        // Products of the enumerated factors before and after the solved
        // slot, in profile order.
        let mut before = Perm::identity(d);
        let mut after = Perm::identity(d);
        for (slot, &(orig, _)) in others.iter().enumerate() {
            let sigma = &others[slot].1[counter[slot]];
            if orig < solved {
                before = before.then(sigma);
            } else {
                after = after.then(sigma);
            }
        }
        // Product condition: handles * s_1 ... s_k = id, so for each handle
        // product P the solved factor is (after * P * before)^-1, which has
        // the required cycle type iff after * P * before does.
        for (p, c) in hist.iter() {
            let m = after.then(p).then(&before);
            if &m.cycle_type() == solved_type {
                total += BigInt::from(*c);
            }
        }
        // Advance the mixed-radix counter.
        let mut pos = 0;
        loop {
            if pos == counter.len() {
                return Ok(BigRational::new(total, dfact));
            }
            counter[pos] += 1;
            if counter[pos] < radices[pos] {
                break;
            }
            counter[pos] = 0;
            pos += 1;
        }
    }
}

/// Degeneration identity: cutting the base along a circle that separates
/// the first `split` marked points from the rest, putting genus `g1` on the
/// first side and `g2 = g - g1` on the other, satisfies
///
/// `mu_g(p_1..p_k) = sum_gamma mu_g1(p_1..p_split, gamma)
///     (d!/|C_gamma|) mu_g2(gamma, p_split+1..p_k)`
///
/// for every choice of `g1` (character orthogonality collapses the glued
/// profile sum identically for each genus distribution). Returns whether
/// all `g + 1` distributions agree with the direct count. Errors unless
/// `1 <= split < k`.
pub fn degeneration_check(spec: &CoverSpec, split: usize) -> Result<bool> {
    let k = spec.profiles.len();
    if split == 0 || split >= k {
        return Err(Error::InvalidSplit { split, profiles: k });
    }
    let lhs = hurwitz_number(spec);
    let dfact = factorial(spec.degree);
    for g1 in 0..=spec.genus {
        let g2 = spec.genus - g1;
        let mut rhs = BigRational::zero();
        for gamma in partitions_of(spec.degree) {
            let mut left_profiles = spec.profiles[..split].to_vec();
            left_profiles.push(gamma.clone());
            let mut right_profiles = vec![gamma.clone()];
            right_profiles.extend_from_slice(&spec.profiles[split..]);
            let left = CoverSpec::new(g1, spec.degree, left_profiles)?;
            let right = CoverSpec::new(g2, spec.degree, right_profiles)?;
            let glue = BigRational::new(dfact.clone(), class_size(&gamma));
            rhs += hurwitz_number(&left) * glue * hurwitz_number(&right);
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn spec(g: usize, d: usize, profiles: &[&str]) -> CoverSpec {
        CoverSpec::new(
            g,
            d,
            profiles.iter().map(|s| s.parse().unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn cover_spec_validation() {
        assert!(CoverSpec::new(0, 0, vec![]).is_err());
        let bad = CoverSpec::new(0, 3, vec!["(2)".parse().unwrap()]);
        assert!(matches!(bad, Err(Error::DegreeMismatch { .. })));
        assert!(CoverSpec::new(2, 3, vec![]).is_ok());
    }

    #[test]
    fn euler_characteristic_bookkeeping() {
        // Two simple branch points on the sphere, two sheets: the cover is a
        // sphere, 2h-2 = -2.
        assert_eq!(
            source_euler(&spec(0, 2, &["(2)", "(2)"])),
            GenusResult::Euler(-2)
        );
        // Odd total colength: no cover.
        assert_eq!(
            source_euler(&spec(0, 2, &["(2)"])),
            GenusResult::ParityFailure
        );
        assert_eq!(
            source_euler(&spec(0, 3, &["(2,1)", "(2,1)", "(2,1)"])),
            GenusResult::ParityFailure
        );
        // Unramified double cover of the torus: also a torus.
        assert_eq!(source_euler(&spec(1, 2, &[])), GenusResult::Euler(0));
        // Four simple branch points on the sphere, two sheets: a torus.
        assert_eq!(
            source_euler(&spec(0, 2, &["(2)", "(2)", "(2)", "(2)"])),
            GenusResult::Euler(0)
        );
    }

    #[test]
    fn character_formula_small_values() {
        assert_eq!(hurwitz_number(&spec(0, 2, &["(2)", "(2)"])), rat(1, 2));
        assert_eq!(
            hurwitz_number(&spec(0, 3, &["(2,1)", "(2,1)", "(3)"])),
            rat_int(1)
        );
        assert_eq!(hurwitz_number(&spec(0, 3, &["(2,1)", "(2,1)"])), rat(1, 2));
        // Parity failures vanish through the character sum itself.
        assert_eq!(
            hurwitz_number(&spec(0, 3, &["(2,1)", "(2,1)", "(2,1)"])),
            rat_int(0)
        );
        assert_eq!(hurwitz_number(&spec(1, 2, &["(2)"])), rat_int(0));
        // Unbranched coverings: identity count / d!, i.e. #classes for g=1.
        assert_eq!(hurwitz_number(&spec(1, 1, &[])), rat_int(1));
        assert_eq!(hurwitz_number(&spec(1, 2, &[])), rat_int(2));
        assert_eq!(hurwitz_number(&spec(1, 3, &[])), rat_int(3));
        // Sphere, no branching: 1/d!.
        assert_eq!(hurwitz_number(&spec(0, 3, &[])), rat(1, 6));
    }

    #[test]
    fn oracle_matches_character_formula_exhaustively() {
        for d in 1..=4 {
            let all = partitions_of(d);
            for g in 0..=1 {
                // k = 0.
                let s = CoverSpec::new(g, d, vec![]).unwrap();
                assert_eq!(hurwitz_oracle(&s).unwrap(), hurwitz_number(&s), "{s:?}");
                // k = 1 and k = 2.
                for p1 in &all {
                    let s = CoverSpec::new(g, d, vec![p1.clone()]).unwrap();
                    assert_eq!(hurwitz_oracle(&s).unwrap(), hurwitz_number(&s), "{s:?}");
                    for p2 in &all {
                        let s = CoverSpec::new(g, d, vec![p1.clone(), p2.clone()]).unwrap();
                        assert_eq!(hurwitz_oracle(&s).unwrap(), hurwitz_number(&s), "{s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_matches_on_triples_degree_three() {
        let all = partitions_of(3);
        for p1 in &all {
            for p2 in &all {
                for p3 in &all {
                    let s = CoverSpec::new(0, 3, vec![p1.clone(), p2.clone(), p3.clone()])
                        .unwrap();
                    assert_eq!(hurwitz_oracle(&s).unwrap(), hurwitz_number(&s), "{s:?}");
                }
            }
        }
    }

    #[test]
    fn workload_accounting() {
        // Two profiles of sizes 3 and 2 at g=0: solve the size-3 class, walk
        // the size-2 class.
        let s = spec(0, 3, &["(2,1)", "(3)"]);
        assert_eq!(oracle_workload(&s), BigInt::from(2));
        // g=1, k=0, d=3: all (a,b) pairs.
        let s = CoverSpec::new(1, 3, vec![]).unwrap();
        assert_eq!(oracle_workload(&s), BigInt::from(36));
        // Budget refusal is an error, not a wrong answer.
        let s = spec(1, 4, &["(2,1,1)"]);
        let err = hurwitz_oracle_with_budget(&s, 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn degeneration_identity_degree_three() {
        let all = partitions_of(3);
        for p1 in &all {
            for p2 in &all {
                for p3 in &all {
                    for g in 0..=1 {
                        let s = CoverSpec::new(
                            g,
                            3,
                            vec![p1.clone(), p2.clone(), p3.clone()],
                        )
                        .unwrap();
                        for split in 1..=2 {
                            assert!(
                                degeneration_check(&s, split).unwrap(),
                                "split {split} of {s:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn degeneration_split_validation() {
        let s = spec(0, 2, &["(2)", "(2)"]);
        assert!(matches!(
            degeneration_check(&s, 0),
            Err(Error::InvalidSplit { .. })
        ));
        assert!(matches!(
            degeneration_check(&s, 2),
            Err(Error::InvalidSplit { .. })
        ));
    }

    #[test]
    fn torus_with_one_triple_point_degree_three() {
        // g=1, d=3, one profile (3). The (dim/d!)^(2-2g) weight is 1 at
        // genus one, so the count is the plain sum of phi_lambda((3)) over
        // the three irreducibles: 2 + (2*(-1)/2) + 2 = 3.
        let s = spec(1, 3, &["(3)"]);
        let direct = hurwitz_oracle(&s).unwrap();
        assert_eq!(direct, hurwitz_number(&s));
        assert_eq!(direct, rat_int(3));
    }
}
