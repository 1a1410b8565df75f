//! Randomized structural laws for the exact-arithmetic types plus
//! enumerative invariants of the cover counts. Generators are seeded so
//! every run is reproducible; set `HURWITZ_TEST_SEED` to explore other
//! streams.

use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hurwitz_core::hurwitz::{
    hurwitz_number, hurwitz_oracle, hurwitz_oracle_with_budget, oracle_workload, CoverSpec,
};
use hurwitz_core::partition::{factorial, partitions_of, Partition};
use hurwitz_core::ppoly::{Monomial, PPoly};
use hurwitz_core::scalar::{rat, rat_int, rat_of};
use hurwitz_core::zlaurent::ZLaurent;
use hurwitz_core::Error;

const DEFAULT_SEED: u64 = 20260814;

fn rng(stream: u64) -> ChaCha8Rng {
    let seed = std::env::var("HURWITZ_TEST_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    ChaCha8Rng::seed_from_u64(seed ^ stream)
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

fn random_zlaurent(rng: &mut ChaCha8Rng) -> ZLaurent {
    let mut out = ZLaurent::zero();
    for _ in 0..rng.gen_range(0..=3) {
        out = &out + &ZLaurent::monomial(rng.gen_range(-5..=5), random_rational(rng));
    }
    out
}

fn random_partition(rng: &mut ChaCha8Rng, max_degree: usize) -> Partition {
    let d = rng.gen_range(1..=max_degree);
    let all = partitions_of(d);
    all[rng.gen_range(0..all.len())].clone()
}

fn random_ppoly(rng: &mut ChaCha8Rng, with_q: bool) -> PPoly {
    let mut out = PPoly::zero();
    for _ in 0..rng.gen_range(0..=3) {
        let p = random_partition(rng, 4);
        let monomial = if with_q && rng.gen_bool(0.5) {
            Monomial::with_q(random_partition(rng, 4), p)
        } else {
            Monomial::p_only(p)
        };
        out = out.add(&PPoly::term(monomial, random_zlaurent(rng)));
    }
    out
}

#[test]
fn laurent_coefficients_form_a_commutative_ring() {
    let mut rng = rng(1);
    for _ in 0..300 {
        let a = random_zlaurent(&mut rng);
        let b = random_zlaurent(&mut rng);
        let c = random_zlaurent(&mut rng);
        assert_eq!(&a + &b, &b + &a);
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&(&a - &b) + &b, a);
        assert_eq!(&a * &ZLaurent::one(), a);
        assert_eq!(&a + &ZLaurent::zero(), a);
        assert!((&a * &ZLaurent::zero()).is_zero());
        let shift = rng.gen_range(-3..=3);
        assert_eq!(
            a.mul_pow_z(shift),
            &a * &ZLaurent::monomial(shift, BigRational::one())
        );
    }
}

#[test]
fn laurent_evaluation_is_a_ring_homomorphism() {
    let mut rng = rng(2);
    let points = [rat_int(1), rat_int(-1), rat_int(2), rat(3, 2), rat(-1, 3)];
    for _ in 0..200 {
        let a = random_zlaurent(&mut rng);
        let b = random_zlaurent(&mut rng);
        for point in &points {
            let ea = a.eval(point).unwrap();
            let eb = b.eval(point).unwrap();
            assert_eq!((&a + &b).eval(point).unwrap(), &ea + &eb);
            assert_eq!((&a * &b).eval(point).unwrap(), &ea * &eb);
        }
    }
}

#[test]
fn evaluation_at_zero_requires_nonnegative_exponents() {
    let zero = rat_int(0);
    assert_eq!(
        ZLaurent::monomial(2, rat_int(5)).eval(&zero),
        Some(rat_int(0))
    );
    assert_eq!(
        ZLaurent::monomial(0, rat_int(5)).eval(&zero),
        Some(rat_int(5))
    );
    assert_eq!(ZLaurent::monomial(-1, rat_int(5)).eval(&zero), None);
    assert_eq!(ZLaurent::zero().eval(&zero), Some(rat_int(0)));
}

#[test]
fn polynomials_form_a_commutative_ring() {
    let mut rng = rng(3);
    for _ in 0..150 {
        let a = random_ppoly(&mut rng, true);
        let b = random_ppoly(&mut rng, true);
        let c = random_ppoly(&mut rng, true);
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.sub(&b).add(&b), a);
        assert_eq!(a.mul(&PPoly::one()), a);
        assert!(a.mul(&PPoly::zero()).is_zero());
        let r = random_rational(&mut rng);
        assert_eq!(a.scale_rat(&r), a.scale(&ZLaurent::from_rational(r.clone())));
        let shift = rng.gen_range(-3..=3);
        assert_eq!(a.mul(&b).mul_pow_z(shift), a.mul_pow_z(shift).mul(&b));
    }
}

#[test]
fn partial_derivative_is_a_derivation() {
    let mut rng = rng(4);
    for _ in 0..120 {
        let f = random_ppoly(&mut rng, true);
        let g = random_ppoly(&mut rng, true);
        let r = rng.gen_range(1..=4);
        let product_rule = f.partial_p(r).mul(&g).add(&f.mul(&g.partial_p(r)));
        assert_eq!(f.mul(&g).partial_p(r), product_rule);
    }
}

#[test]
fn iterated_derivatives_commute_and_match_profile_derivative() {
    let mut rng = rng(5);
    for _ in 0..120 {
        let f = random_ppoly(&mut rng, true);
        let r = rng.gen_range(1..=4);
        let s = rng.gen_range(1..=4);
        assert_eq!(f.partial_p(r).partial_p(s), f.partial_p(s).partial_p(r));
        let delta = random_partition(&mut rng, 5);
        let mut ascending = f.clone();
        for &part in delta.parts().iter().rev() {
            ascending = ascending.partial_p(part);
        }
        let mut descending = f.clone();
        for &part in delta.parts() {
            descending = descending.partial_p(part);
        }
        assert_eq!(ascending, descending);
        assert_eq!(f.partial_profile(&delta), ascending);
    }
}

#[test]
fn alphabet_relabeling_is_linear_and_multiplicative() {
    let mut rng = rng(6);
    for _ in 0..120 {
        let f = random_ppoly(&mut rng, false);
        let g = random_ppoly(&mut rng, false);
        assert_eq!(f.add(&g).p_to_q(), f.p_to_q().add(&g.p_to_q()));
        assert_eq!(f.mul(&g).p_to_q(), f.p_to_q().mul(&g.p_to_q()));
    }
}

#[test]
fn cover_counts_are_symmetric_in_the_profiles() {
    let mut rng = rng(7);
    for _ in 0..60 {
        let d = rng.gen_range(2..=5);
        let genus = rng.gen_range(0..=1);
        let all = partitions_of(d);
        let k = rng.gen_range(2..=4);
        let mut profiles: Vec<Partition> = (0..k)
            .map(|_| all[rng.gen_range(0..all.len())].clone())
            .collect();
        let original = CoverSpec::new(genus, d, profiles.clone()).unwrap();
        profiles.shuffle(&mut rng);
        let shuffled = CoverSpec::new(genus, d, profiles).unwrap();
        assert_eq!(
            hurwitz_number(&original),
            hurwitz_number(&shuffled),
            "character-formula count changed under profile reordering"
        );
        let workload = oracle_workload(&original);
        if workload < 200_000.into() {
            assert_eq!(
                hurwitz_oracle(&original).unwrap(),
                hurwitz_oracle(&shuffled).unwrap(),
                "enumeration count changed under profile reordering"
            );
        }
    }
}

fn multisets(parts: &[Partition], k: usize) -> Vec<Vec<Partition>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        for mut rest in multisets(&parts[i..], k - 1) {
            rest.insert(0, p.clone());
            out.push(rest);
        }
    }
    out
}

/// `d! * mu` counts tuples of permutations, so it is a nonnegative integer
/// for every genus, including genus values where the character formula
/// raises dimensions to negative powers.
#[test]
fn scaled_counts_are_nonnegative_integers() {
    for d in 1..=4usize {
        let dfact = rat_of(factorial(d));
        let all = partitions_of(d);
        for genus in 0..=2usize {
            for k in 0..=3usize {
                for profiles in multisets(&all, k) {
                    let spec = CoverSpec::new(genus, d, profiles).unwrap();
                    let scaled = hurwitz_number(&spec) * &dfact;
                    assert!(
                        scaled.denom().is_one() && !scaled.is_negative(),
                        "d!*mu not a nonnegative integer for {spec:?}: {scaled}"
                    );
                }
            }
        }
    }
}

#[test]
fn error_paths_report_the_right_failure() {
    let mismatch = CoverSpec::new(0, 3, vec![Partition::new(vec![2]).unwrap()]);
    assert!(matches!(mismatch, Err(Error::DegreeMismatch { .. })));

    let spec = CoverSpec::new(1, 4, vec![Partition::new(vec![2, 1, 1]).unwrap()]).unwrap();
    match hurwitz_oracle_with_budget(&spec, 10) {
        Err(Error::BudgetExceeded { estimated, budget }) => {
            assert!(estimated > budget);
            assert_eq!(budget, 10);
        }
        other => panic!("expected a budget error, got {other:?}"),
    }

    assert!(Partition::new(vec![2, 0]).is_err());

    let mixed = PPoly::p_monomial(Partition::new(vec![2]).unwrap())
        .add(&PPoly::p_monomial(Partition::new(vec![3]).unwrap()));
    let op = hurwitz_core::cutjoin::CutJoinOp::build(2, &Partition::new(vec![2]).unwrap()).unwrap();
    assert!(op.apply(&mixed).is_err());
}
