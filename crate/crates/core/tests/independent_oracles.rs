//! Cross-checks against constructions coded from scratch in this file:
//! characters extracted as coefficients of an alternant product, Schur
//! polynomials from the complete-homogeneous determinant, and operator
//! matrices from raw permutation pair counts. None of these share a code
//! path with the implementation they validate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use hurwitz_core::character::character;
use hurwitz_core::cutjoin::CutJoinOp;
use hurwitz_core::cutjoin::schur_z;
use hurwitz_core::partition::{centralizer_order, class_size, partitions_of, Partition};
use hurwitz_core::perm::class_members;
use hurwitz_core::ppoly::PPoly;
use hurwitz_core::scalar::{rat_int, rat_of};
use hurwitz_core::zlaurent::ZLaurent;

/// Integer polynomial in a fixed number of variables, keyed by exponent
/// vector.
type XPoly = BTreeMap<Vec<usize>, BigInt>;

fn xp_mul(a: &XPoly, b: &XPoly) -> XPoly {
    let mut out = XPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exps: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(exps.clone()).or_insert_with(BigInt::zero);
            *entry += ca * cb;
            if entry.is_zero() {
                out.remove(&exps);
            }
        }
    }
    out
}

/// `x_1^m + ... + x_n^m`.
fn power_sum(vars: usize, m: usize) -> XPoly {
    let mut out = XPoly::new();
    for i in 0..vars {
        let mut exps = vec![0usize; vars];
        exps[i] = m;
        out.insert(exps, BigInt::one());
    }
    out
}

fn orderings(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in orderings(n - 1) {
        for slot in 0..n {
            let mut w = rest.clone();
            w.insert(slot, n - 1);
            out.push(w);
        }
    }
    out
}

fn inversion_sign(w: &[usize]) -> BigInt {
    let mut inv = 0usize;
    for i in 0..w.len() {
        for j in (i + 1)..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// The staircase alternant `sum_w sgn(w) prod_i x_i^(n-1-w(i))` in `n`
/// variables (the antisymmetrization of `x^(n-1, n-2, ..., 0)`).
fn staircase_alternant(n: usize) -> XPoly {
    let mut out = XPoly::new();
    for w in orderings(n) {
        let exps: Vec<usize> = w.iter().map(|&wi| n - 1 - wi).collect();
        out.insert(exps, inversion_sign(&w));
    }
    out
}

/// Irreducible character values read off as alternant coefficients: the
/// product `alternant * prod_j (x_1^(delta_j) + ... + x_n^(delta_j))`
/// expands as `sum_lambda chi_lambda(delta) *
/// (antisymmetrized x^(lambda + staircase))`, so the coefficient of the
/// strictly decreasing exponent `lambda + (n-1, ..., 0)` is the character.
#[test]
fn characters_match_alternant_coefficients() {
    let mut compared = 0usize;
    for d in 1..=5usize {
        let alternant = staircase_alternant(d);
        for delta in partitions_of(d) {
            let mut product = alternant.clone();
            for &m in delta.parts() {
                product = xp_mul(&product, &power_sum(d, m));
            }
            for lambda in partitions_of(d) {
                let mut target = vec![0usize; d];
                for (i, slot) in target.iter_mut().enumerate() {
                    *slot = lambda.parts().get(i).copied().unwrap_or(0) + (d - 1 - i);
                }
                let expected = product.get(&target).cloned().unwrap_or_else(BigInt::zero);
                let got = character(&lambda, &delta).unwrap();
                assert_eq!(
                    got, expected,
                    "character at lambda={lambda}, delta={delta} disagrees with \
                     the alternant coefficient"
                );
                compared += 1;
            }
        }
    }
    assert_eq!(compared, 1 + 4 + 9 + 25 + 49);
}

/// Symmetric function in the power-sum basis: partition key, rational
/// coefficient.
type PMap = BTreeMap<Partition, BigRational>;

fn pm_mul(a: &PMap, b: &PMap) -> PMap {
    let mut out = PMap::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            let key = pa.union(pb);
            let entry = out.entry(key.clone()).or_insert_with(BigRational::zero);
            *entry += ca * cb;
            if entry.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}

/// `h_m = sum_(gamma |- m) p_gamma / z_gamma` (the complete homogeneous
/// symmetric function; `h_0 = 1`).
fn complete_homogeneous(m: usize) -> PMap {
    let mut out = PMap::new();
    for gamma in partitions_of(m) {
        out.insert(
            gamma.clone(),
            BigRational::new(1.into(), centralizer_order(&gamma)),
        );
    }
    out
}

/// Classical Schur polynomial via the determinant
/// `s_lambda = det(h_(lambda_i - i + j))_(i,j)`, expanded by the Leibniz
/// rule. Entirely character-free.
fn jacobi_trudi(lambda: &Partition) -> PMap {
    let l = lambda.length();
    let mut out = PMap::new();
    'next: for w in orderings(l) {
        let mut term = PMap::new();
        term.insert(Partition::empty(), BigRational::one());
        for (i, &wi) in w.iter().enumerate() {
            let index = lambda.parts()[i] as i64 - i as i64 + wi as i64;
            if index < 0 {
                continue 'next;
            }
            term = pm_mul(&term, &complete_homogeneous(index as usize));
        }
        let sign = BigRational::from_integer(inversion_sign(&w));
        for (key, value) in term {
            let entry = out.entry(key.clone()).or_insert_with(BigRational::zero);
            *entry += value * &sign;
            if entry.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}

/// The deformed Schur polynomial collapses to the classical one at the
/// evaluation point 1, where the determinant formula must reproduce it.
#[test]
fn deformed_schur_at_one_matches_homogeneous_determinant() {
    let one = rat_int(1);
    for d in 1..=5usize {
        for lambda in partitions_of(d) {
            let determinant = jacobi_trudi(&lambda);
            for key in determinant.keys() {
                assert_eq!(key.degree(), d, "determinant term of wrong degree");
            }
            let mut evaluated = PMap::new();
            for (monomial, coeff) in schur_z(&lambda).terms() {
                assert!(monomial.q().is_none());
                let value = coeff.eval(&one).unwrap();
                if !value.is_zero() {
                    evaluated.insert(monomial.p().clone(), value);
                }
            }
            assert_eq!(
                evaluated, determinant,
                "schur polynomial for lambda={lambda} at z=1 disagrees with \
                 the determinant expansion"
            );
        }
    }
}

/// At the evaluation point 1 every matrix entry of the operator counts
/// plain permutation products: entry(source -> target) is the number of
/// pairs in (source class) x (profile class) multiplying into the target
/// class, divided by the source class size.
#[test]
fn operator_matrix_at_one_matches_pair_counts() {
    let one = rat_int(1);
    for d in 1..=5usize {
        let classes = partitions_of(d);
        for delta in &classes {
            let op = CutJoinOp::build(d, delta).unwrap();
            let delta_members = class_members(delta);
            for source in &classes {
                let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
                for x in class_members(source) {
                    for y in &delta_members {
                        *counts.entry(x.then(y).cycle_type()).or_insert(0) += 1;
                    }
                }
                let size = rat_of(class_size(source));
                for target in &classes {
                    let expected = counts
                        .get(target)
                        .map(|&n| rat_int(n as i64) / &size)
                        .unwrap_or_else(BigRational::zero);
                    let got = op.matrix().entry(source, target).eval(&one).unwrap();
                    assert_eq!(
                        got, expected,
                        "entry {source} -> {target} of the profile-{delta} operator \
                         at z=1 disagrees with the permutation pair count"
                    );
                }
            }
        }
    }
}

/// The differential presentation must reproduce the matrix action: summing
/// coeff * z^zexp * p_factors * (iterated d/dp over derivs) applied to each
/// basis monomial recovers `apply`.
#[test]
fn differential_form_reproduces_matrix_action() {
    for d in 1..=5usize {
        for delta in partitions_of(d) {
            let op = CutJoinOp::build(d, &delta).unwrap();
            let terms = op.diff_terms();
            for gamma in partitions_of(d) {
                let basis = PPoly::p_monomial(gamma.clone());
                let direct = op.apply(&basis).unwrap();
                let mut symbolic = PPoly::zero();
                for term in &terms {
                    let differentiated = basis.partial_profile(&term.derivs);
                    let product = differentiated.mul(&PPoly::p_monomial(term.factors.clone()));
                    symbolic =
                        symbolic.add(&product.scale(&ZLaurent::monomial(
                            term.zexp,
                            term.coeff.clone(),
                        )));
                }
                assert_eq!(
                    symbolic, direct,
                    "differential terms of the profile-{delta} operator applied to \
                     p_{gamma} disagree with the matrix action"
                );
            }
        }
    }
}

/// Normalization is exactly multiplication by `z^(l(delta) - d)`.
#[test]
fn normalization_is_a_z_power_rescale() {
    for d in 1..=5usize {
        for delta in partitions_of(d) {
            let plain = CutJoinOp::build(d, &delta).unwrap();
            let normalized = CutJoinOp::build_normalized(d, &delta).unwrap();
            let shift = delta.length() as i64 - d as i64;
            let rescaled = plain.matrix().scale(&ZLaurent::monomial(shift, rat_int(1)));
            assert_eq!(normalized.matrix(), &rescaled);
        }
    }
}
