//! Polynomials in power-sum variables with Laurent-polynomial coefficients.
//!
//! A [`Monomial`] is a product `q_delta p_gamma` indexed by partitions (the
//! `q` alphabet is optional; it carries boundary-condition data in the
//! double-set generating functions). A [`PPoly`] maps monomials to
//! [`ZLaurent`] coefficients; zero coefficients are never stored, so
//! structural equality is mathematical equality.
//!
//! Beyond ring operations, the module implements genuine symbolic partial
//! derivatives in the `p` variables, which the operator tests use to check
//! matrix actions against their differential-operator renderings.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{aut_factor, Partition};
use crate::scalar::{rat_of, BigRational};
use crate::zlaurent::ZLaurent;

/// A product `q_delta * p_gamma` of power-sum variables. The `p` part may be
/// empty (the constant monomial) and the `q` part absent entirely.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial {
    p: Partition,
    q: Option<Partition>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            p: Partition::empty(),
            q: None,
        }
    }

    pub fn p_only(p: Partition) -> Self {
        Monomial { p, q: None }
    }

    pub fn with_q(q: Partition, p: Partition) -> Self {
        Monomial { p, q: Some(q) }
    }

    pub fn p(&self) -> &Partition {
        &self.p
    }

    pub fn q(&self) -> Option<&Partition> {
        self.q.as_ref()
    }

    pub fn p_degree(&self) -> usize {
        self.p.degree()
    }

    /// Product of monomials: unions of the index partitions.
    pub fn merge(&self, other: &Monomial) -> Monomial {
        let q = match (&self.q, &other.q) {
            (None, None) => None,
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(b.clone()),
            (Some(a), Some(b)) => Some(a.union(b)),
        };
        Monomial {
            p: self.p.union(&other.p),
            q,
        }
    }

    /// Variable part as text (`"q_(2)*p_(2,1)"`), or `None` for the
    /// constant monomial.
    pub fn render(&self) -> Option<String> {
        let mut factors = Vec::new();
        if let Some(q) = &self.q {
            factors.push(format!("q_{q}"));
        }
        if !self.p.is_empty() {
            factors.push(format!("p_{}", self.p));
        }
        if factors.is_empty() {
            None
        } else {
            Some(factors.join("*"))
        }
    }
}

/// A finite sum of monomials with `ZLaurent` coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PPoly {
    terms: BTreeMap<Monomial, ZLaurent>,
}

impl PPoly {
    pub fn zero() -> Self {
        PPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The single term `coeff * m` (zero if the coefficient is zero).
    pub fn term(m: Monomial, coeff: ZLaurent) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        PPoly { terms }
    }

    /// The basis monomial `p_gamma` with coefficient 1.
    pub fn p_monomial(gamma: Partition) -> Self {
        PPoly::term(Monomial::p_only(gamma), ZLaurent::one())
    }

    pub fn one() -> Self {
        PPoly::term(Monomial::one(), ZLaurent::one())
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ZLaurent)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> ZLaurent {
        self.terms.get(m).cloned().unwrap_or_else(ZLaurent::zero)
    }

    pub fn get(&self, m: &Monomial) -> Option<&ZLaurent> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, coeff: &ZLaurent) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(entry) => {
                *entry = &*entry + coeff;
                if entry.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, coeff.clone());
            }
        }
    }

    pub fn add(&self, other: &PPoly) -> PPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &PPoly) -> PPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PPoly {
        PPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Multiply every coefficient by a Laurent polynomial.
    pub fn scale(&self, factor: &ZLaurent) -> PPoly {
        if factor.is_zero() {
            return PPoly::zero();
        }
        let mut out = PPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &(c * factor));
        }
        out
    }

    /// Multiply every coefficient by a rational scalar.
    pub fn scale_rat(&self, factor: &BigRational) -> PPoly {
        self.scale(&ZLaurent::from_rational(factor.clone()))
    }

    /// Multiply by `z^shift`.
    pub fn mul_pow_z(&self, shift: i64) -> PPoly {
        PPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul_pow_z(shift)))
                .collect(),
        }
    }

    /// Ring product: monomials merge by partition union.
    pub fn mul(&self, other: &PPoly) -> PPoly {
        let mut out = PPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.merge(m2), &(c1 * c2));
            }
        }
        out
    }

    /// If every monomial has the same `p` degree, return it. `None` for the
    /// zero polynomial or mixed degrees.
    pub fn p_homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|m| m.p_degree());
        let first = degrees.next()?;
        if degrees.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Rename every `p` variable to the corresponding `q` variable. Panics
    /// if any monomial already carries a `q` part.
    pub fn p_to_q(&self) -> PPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                assert!(m.q().is_none(), "monomial already has a q part");
                (
                    Monomial::with_q(m.p().clone(), Partition::empty()),
                    c.clone(),
                )
            })
            .collect();
        PPoly { terms }
    }

    /// Symbolic partial derivative with respect to the single variable
    /// `p_r`. The `q` variables are treated as constants.
    pub fn partial_p(&self, r: usize) -> PPoly {
        assert!(r >= 1, "power-sum variables are indexed from 1");
        let mut out = PPoly::zero();
        for (m, c) in &self.terms {
            let mult = m.p().multiplicity(r);
            if mult == 0 {
                continue;
            }
            let mut parts: Vec<usize> = m.p().parts().to_vec();
            let pos = parts.iter().position(|&x| x == r).unwrap();
            parts.remove(pos);
            let smaller = Partition::from_sorted_unchecked(parts);
            let reduced = match m.q() {
                Some(q) => Monomial::with_q(q.clone(), smaller),
                None => Monomial::p_only(smaller),
            };
            let factor = BigRational::from_integer(mult.into());
            out.add_term(reduced, &c.scale(&factor));
        }
        out
    }

    /// Iterated derivative `prod_j d/dp_(delta_j)` over all parts of
    /// `delta`. The factors commute, so the application order is immaterial.
    pub fn partial_profile(&self, delta: &Partition) -> PPoly {
        let mut out = self.clone();
        for &r in delta.parts() {
            out = out.partial_p(r);
            if out.is_zero() {
                break;
            }
        }
        out
    }

    /// Constant term of the polynomial: the `ZLaurent` coefficient of the
    /// empty monomial, evaluated at `z^0`.
    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::one()).coeff(0)
    }

    /// Text rendering of one scalar-monomial pair, shared with the series
    /// and operator printers: `"1/2*z^-4*q_(2)*p_(2)"`.
    pub fn render_scalar_monomial(coeff: &BigRational, zexp: i64, m: &Monomial) -> String {
        let scalar = ZLaurent::render_term(coeff, zexp);
        match m.render() {
            None => scalar,
            Some(vars) => match scalar.as_str() {
                "1" => vars,
                "-1" => format!("-{vars}"),
                _ => format!("{scalar}*{vars}"),
            },
        }
    }
}

/// Normalized derivative pairing between power-sum monomials: apply one
/// `d/dp_r` per part of `delta` to `p_gamma`, divide by the product of
/// multiplicity factorials of `delta`, and read off the constant term.
///
/// With that normalization the pairing is the Kronecker delta on partitions
/// of the same degree: differentiating `p_gamma` by its own profile leaves
/// exactly the multiplicity factorials, which the division cancels.
pub fn derivative_pairing(delta: &Partition, gamma: &Partition) -> Result<BigRational> {
    if delta.degree() != gamma.degree() {
        return Err(Error::DegreeMismatch {
            expected: delta.degree(),
            found: gamma.degree(),
            context: "derivative pairing requires equal-degree partitions".into(),
        });
    }
    let derived = PPoly::p_monomial(gamma.clone()).partial_profile(delta);
    Ok(derived.constant_term() / rat_of(aut_factor(delta)))
}

impl fmt::Display for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, coeff) in &self.terms {
            // Highest z power first within each monomial.
            let pairs: Vec<(i64, &BigRational)> = coeff.terms().collect();
            for (e, c) in pairs.into_iter().rev() {
                let rendered = PPoly::render_scalar_monomial(c, e, m);
                if first {
                    write!(f, "{rendered}")?;
                    first = false;
                } else if let Some(body) = rendered.strip_prefix('-') {
                    write!(f, " - {body}")?;
                } else {
                    write!(f, " + {rendered}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    p: Vec<usize>,
    q: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    monomial: MonomialJson,
    coeff: ZLaurent,
}

impl Serialize for PPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                monomial: MonomialJson {
                    p: m.p().parts().to_vec(),
                    q: m.q().map(|q| q.parts().to_vec()),
                },
                coeff: c.clone(),
            })
            .collect();
        v.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PPoly {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermJson>::deserialize(deserializer)?;
        let mut out = PPoly::zero();
        for t in v {
            let p = Partition::new(t.monomial.p).map_err(D::Error::custom)?;
            let m = match t.monomial.q {
                Some(q) => {
                    Monomial::with_q(Partition::new(q).map_err(D::Error::custom)?, p)
                }
                None => Monomial::p_only(p),
            };
            out.add_term(m, &t.coeff);
        }
        Ok(out)
    }
}
