//! Genus-graded generating functions for branched-cover counts.
//!
//! For a base surface of genus `g`, sheet count `d`, and marked branching
//! profiles `delta_1, ..., delta_n`, the series collects every cover count
//! weighted by `z` to the Euler characteristic of the covering surface:
//! the coefficient of `u^l = u_1^(l_1) ... u_n^(l_n)` is
//!
//! `(1/prod l_i!) sum_gamma z^(2h-2) mu_g(delta_1 x l_1, ..., gamma) p_gamma`
//!
//! (with an extra `q_delta` sum in the double-alphabet variant). Two
//! independent evaluation routes are implemented: [`direct_coefficient`]
//! computes each coefficient from cover counts, while [`GenFunSeries::build`]
//! starts from the unmarked initial value and applies the graded operators
//! `exp(u_i W(delta_i, z))` order by order. Their agreement, and the
//! vanishing of [`pde_residual`], express that the series solves the
//! cut-and-join evolution equations.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cutjoin::CutJoinOp;
use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_number, CoverSpec};
use crate::partition::{class_size, factorial, partitions_of, Partition};
use crate::ppoly::{Monomial, PPoly};
use crate::scalar::{rat_of, BigRational};
use crate::zlaurent::ZLaurent;

/// Euler exponent `2h - 2` for a cover with the given total profile list.
fn euler_exponent(genus: usize, degree: usize, profiles: &[&Partition]) -> i64 {
    let d = degree as i64;
    let colengths: i64 = profiles.iter().map(|p| p.colength() as i64).sum();
    (2 * genus as i64 - 2) * d + colengths
}

/// One scalar series coefficient: the number of covers with profiles
/// `marks` (each repeated `l_j` times), `extras`, and `gamma`, weighted by
/// `z^(2h-2) / prod l_j!`. The result has at most one `z` term; it is zero
/// exactly when no such cover exists.
pub fn scalar_coefficient(
    genus: usize,
    degree: usize,
    marks: &[(Partition, usize)],
    extras: &[Partition],
    gamma: &Partition,
) -> Result<ZLaurent> {
    let mut profiles: Vec<Partition> = Vec::new();
    let mut weight = BigRational::from_integer(1.into());
    for (p, l) in marks {
        for _ in 0..*l {
            profiles.push(p.clone());
        }
        weight /= rat_of(factorial(*l));
    }
    profiles.extend(extras.iter().cloned());
    profiles.push(gamma.clone());
    let spec = CoverSpec::new(genus, degree, profiles)?;
    let mu = hurwitz_number(&spec);
    if mu.is_zero() {
        return Ok(ZLaurent::zero());
    }
    let refs: Vec<&Partition> = spec.profiles().iter().collect();
    let exp = euler_exponent(genus, degree, &refs);
    Ok(ZLaurent::monomial(exp, mu * weight))
}

/// The `u^l` coefficient computed directly from cover counts, including the
/// `1/prod l_i!` normalization. `marks` pairs each profile with its
/// exponent. With `double` set, every monomial carries a `q` partition
/// recording one extra unconstrained profile.
pub fn direct_coefficient(
    genus: usize,
    degree: usize,
    marks: &[(Partition, usize)],
    double: bool,
) -> Result<PPoly> {
    let mut out = PPoly::zero();
    for gamma in partitions_of(degree) {
        if double {
            for delta in partitions_of(degree) {
                let scalar = scalar_coefficient(
                    genus,
                    degree,
                    marks,
                    std::slice::from_ref(&delta),
                    &gamma,
                )?;
                if !scalar.is_zero() {
                    out.add_term(Monomial::with_q(delta, gamma.clone()), &scalar);
                }
            }
        } else {
            let scalar = scalar_coefficient(genus, degree, marks, &[], &gamma)?;
            if !scalar.is_zero() {
                out.add_term(Monomial::p_only(gamma.clone()), &scalar);
            }
        }
    }
    Ok(out)
}

/// The series value before any marked-point evolution (`u = 0`).
pub fn initial_value(genus: usize, degree: usize, double: bool) -> PPoly {
    direct_coefficient(genus, degree, &[], double).expect("no profiles to validate")
}

/// Closed form of the genus-zero single-alphabet initial value:
/// `z^(-2d) p_(1^d) / d!`. Only trivial covers survive at `u = 0`.
pub fn initial_closed_form_single(degree: usize) -> PPoly {
    PPoly::term(
        Monomial::p_only(Partition::column(degree)),
        ZLaurent::monomial(
            -2 * degree as i64,
            BigRational::new(1.into(), factorial(degree)),
        ),
    )
}

/// Closed form of the genus-zero double-alphabet initial value:
/// `sum_delta z^(-2 l(delta)) (|C_delta|/d!) q_delta p_delta` (the
/// Cauchy-Littlewood-type pairing of the two alphabets).
pub fn initial_closed_form_double(degree: usize) -> PPoly {
    let dfact = factorial(degree);
    let mut out = PPoly::zero();
    for delta in partitions_of(degree) {
        let coeff = BigRational::new(class_size(&delta), dfact.clone());
        let exp = -2 * delta.length() as i64;
        out.add_term(
            Monomial::with_q(delta.clone(), delta),
            &ZLaurent::monomial(exp, coeff),
        );
    }
    out
}

/// A truncated multi-variable series: one polynomial coefficient per
/// exponent vector `l` with `l_i <= orders[i]`. Zero coefficients within
/// range are not stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenFunSeries {
    genus: usize,
    degree: usize,
    double: bool,
    profiles: Vec<Partition>,
    orders: Vec<usize>,
    coeffs: BTreeMap<Vec<usize>, PPoly>,
}

impl GenFunSeries {
    /// Evolve the standard initial value by the operators of the given
    /// profiles, keeping exponents up to `orders[i]` in `u_i`.
    pub fn build(
        genus: usize,
        degree: usize,
        profiles: Vec<Partition>,
        orders: Vec<usize>,
        double: bool,
    ) -> Result<GenFunSeries> {
        let initial = initial_value(genus, degree, double);
        GenFunSeries::evolve_from(genus, degree, double, initial, profiles, orders)
    }

    /// Evolve an explicit initial polynomial. The initial value must be
    /// homogeneous of the series degree in the `p` variables.
    pub fn evolve_from(
        genus: usize,
        degree: usize,
        double: bool,
        initial: PPoly,
        profiles: Vec<Partition>,
        orders: Vec<usize>,
    ) -> Result<GenFunSeries> {
        assert_eq!(
            profiles.len(),
            orders.len(),
            "one truncation order per marked profile"
        );
        for p in &profiles {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: p.degree(),
                    context: "marked profile".into(),
                });
            }
        }
        if initial.p_homogeneous_degree() != Some(degree) {
            return Err(Error::NotHomogeneous {
                expected: degree,
                context: "series initial value".into(),
            });
        }
        let ops: Vec<CutJoinOp> = profiles
            .iter()
            .map(|p| CutJoinOp::build(degree, p))
            .collect::<Result<_>>()?;
        let mut coeffs: BTreeMap<Vec<usize>, PPoly> = BTreeMap::new();
        // Exponent vectors in lexicographic order, so each predecessor
        // (first nonzero slot decremented) is already present.
        let mut counter = vec![0usize; orders.len()];
        loop {
            let value = match counter.iter().position(|&l| l > 0) {
                None => initial.clone(),
                Some(i) => {
                    let mut prev = counter.clone();
                    prev[i] -= 1;
                    let prior = coeffs.get(&prev).cloned().unwrap_or_else(PPoly::zero);
                    ops[i]
                        .apply(&prior)?
                        .scale_rat(&BigRational::new(1.into(), counter[i].into()))
                }
            };
            if !value.is_zero() {
                coeffs.insert(counter.clone(), value);
            }
            // Advance the odometer, last slot fastest.
            let mut pos = counter.len();
            loop {
                if pos == 0 {
                    return Ok(GenFunSeries {
                        genus,
                        degree,
                        double,
                        profiles,
                        orders,
                        coeffs,
                    });
                }
                pos -= 1;
                counter[pos] += 1;
                if counter[pos] <= orders[pos] {
                    break;
                }
                counter[pos] = 0;
            }
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_double(&self) -> bool {
        self.double
    }

    pub fn profiles(&self) -> &[Partition] {
        &self.profiles
    }

    pub fn orders(&self) -> &[usize] {
        self.orders.as_slice()
    }

    /// Whether an exponent vector lies within the truncation box.
    pub fn in_range(&self, exponents: &[usize]) -> bool {
        exponents.len() == self.orders.len()
            && exponents.iter().zip(&self.orders).all(|(l, max)| l <= max)
    }

    /// Stored (nonzero) coefficients in lexicographic exponent order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&Vec<usize>, &PPoly)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, exponents: &[usize]) -> Option<&PPoly> {
        self.coeffs.get(exponents)
    }

    /// Coefficient within the truncation box, zero when absent. Panics on
    /// out-of-range exponents: those were never computed.
    pub fn coefficient_or_zero(&self, exponents: &[usize]) -> PPoly {
        assert!(
            self.in_range(exponents),
            "exponents {exponents:?} outside truncation {:?}",
            self.orders
        );
        self.coeffs
            .get(exponents)
            .cloned()
            .unwrap_or_else(PPoly::zero)
    }
}

/// Residuals of the evolution equation `d/du_i Phi = W(delta_i, z) Phi` for
/// one marked slot: for every in-range `l` with `l_i < orders[i]`, the
/// polynomial `(l_i + 1) coeff(l + e_i) - W_i coeff(l)`. All must vanish.
pub fn pde_residual(
    series: &GenFunSeries,
    mark: usize,
) -> Result<BTreeMap<Vec<usize>, PPoly>> {
    assert!(mark < series.profiles.len(), "mark index out of range");
    let op = CutJoinOp::build(series.degree, &series.profiles[mark])?;
    let mut out = BTreeMap::new();
    let mut counter = vec![0usize; series.orders.len()];
    loop {
        if counter[mark] < series.orders[mark] {
            let mut next = counter.clone();
            next[mark] += 1;
            let lhs = series
                .coefficient_or_zero(&next)
                .scale_rat(&BigRational::from_integer((counter[mark] as i64 + 1).into()));
            let rhs = op.apply(&series.coefficient_or_zero(&counter))?;
            out.insert(counter.clone(), lhs.sub(&rhs));
        }
        let mut pos = counter.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            counter[pos] += 1;
            if counter[pos] <= series.orders[pos] {
                break;
            }
            counter[pos] = 0;
        }
    }
}

/// Whether every residual of every marked slot vanishes.
pub fn pde_holds(series: &GenFunSeries) -> Result<bool> {
    for mark in 0..series.profiles().len() {
        if pde_residual(series, mark)?.values().any(|r| !r.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    exponents: Vec<usize>,
    value: PPoly,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    genus: usize,
    degree: usize,
    double: bool,
    profiles: Vec<Vec<usize>>,
    orders: Vec<usize>,
    coefficients: Vec<CoeffJson>,
}

impl Serialize for GenFunSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            genus: self.genus,
            degree: self.degree,
            double: self.double,
            profiles: self.profiles.iter().map(|p| p.parts().to_vec()).collect(),
            orders: self.orders.clone(),
            coefficients: self
                .coeffs
                .iter()
                .map(|(l, v)| CoeffJson {
                    exponents: l.clone(),
                    value: v.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GenFunSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(deserializer)?;
        let profiles: Vec<Partition> = raw
            .profiles
            .into_iter()
            .map(|p| Partition::new(p).map_err(D::Error::custom))
            .collect::<std::result::Result<_, _>>()?;
        if profiles.len() != raw.orders.len() {
            return Err(D::Error::custom("profiles and orders length mismatch"));
        }
        let mut coeffs = BTreeMap::new();
        for c in raw.coefficients {
            if c.exponents.len() != raw.orders.len() {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            if !c.value.is_zero() {
                coeffs.insert(c.exponents, c.value);
            }
        }
        Ok(GenFunSeries {
            genus: raw.genus,
            degree: raw.degree,
            double: raw.double,
            profiles,
            orders: raw.orders,
            coeffs,
        })
    }
}
