//! Laurent polynomials in one variable `z` with exact rational coefficients.
//!
//! These serve as the coefficient ring everywhere a genus marker is needed:
//! operator entries, series coefficients, and eigenvalues all live in
//! `Q[z, z^-1]`. The representation is sparse and canonical (no explicitly
//! stored zero coefficients), so structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::BigRational;

/// A Laurent polynomial `sum_e c_e z^e` with `c_e` rational and `e` a
/// (possibly negative) integer. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ZLaurent {
    terms: BTreeMap<i64, BigRational>,
}

impl ZLaurent {
    pub fn zero() -> Self {
        ZLaurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        ZLaurent::monomial(0, BigRational::from_integer(1.into()))
    }

    /// The single-term polynomial `coeff * z^exp` (zero if `coeff` is zero).
    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        ZLaurent { terms }
    }

    pub fn from_rational(coeff: BigRational) -> Self {
        ZLaurent::monomial(0, coeff)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Exponent/coefficient pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// The coefficient of `z^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// If the polynomial has exactly one term, return it.
    pub fn single_term(&self) -> Option<(i64, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Multiply by `z^shift`.
    pub fn mul_pow_z(&self, shift: i64) -> Self {
        ZLaurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    /// Multiply every coefficient by a rational scalar.
    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return ZLaurent::zero();
        }
        ZLaurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c * factor))
                .collect(),
        }
    }

    fn insert_add(&mut self, exp: i64, coeff: &BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Evaluate at a rational point. Returns `None` when the point is zero
    /// and a negative exponent is present (the value would be undefined).
    pub fn eval(&self, point: &BigRational) -> Option<BigRational> {
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            if point.is_zero() {
                match e.cmp(&0) {
                    std::cmp::Ordering::Less => return None,
                    std::cmp::Ordering::Equal => total += c,
                    std::cmp::Ordering::Greater => {}
                }
            } else {
                let p = num_traits::Pow::pow(point, *e as i32);
                total += c * p;
            }
        }
        Some(total)
    }

    /// Smallest and largest stored exponents, if any term exists.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        let min = self.terms.keys().next()?;
        let max = self.terms.keys().next_back()?;
        Some((*min, *max))
    }

    /// Render one `coeff * z^exp` factor pair as used by the text output:
    /// `"1/2*z^-4"`, `"z^2"`, `"-3"`, `"1"`, `"z"`.
    pub fn render_term(coeff: &BigRational, exp: i64) -> String {
        let coeff_str = coeff.to_string();
        if exp == 0 {
            return coeff_str;
        }
        let zpart = if exp == 1 {
            "z".to_string()
        } else {
            format!("z^{exp}")
        };
        match coeff_str.as_str() {
            "1" => zpart,
            "-1" => format!("-{zpart}"),
            _ => format!("{coeff_str}*{zpart}"),
        }
    }
}

impl Add for &ZLaurent {
    type Output = ZLaurent;
    fn add(self, rhs: &ZLaurent) -> ZLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, c);
        }
        out
    }
}

impl Sub for &ZLaurent {
    type Output = ZLaurent;
    fn sub(self, rhs: &ZLaurent) -> ZLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, &-c.clone());
        }
        out
    }
}

impl Neg for &ZLaurent {
    type Output = ZLaurent;
    fn neg(self) -> ZLaurent {
        ZLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &ZLaurent {
    type Output = ZLaurent;
    fn mul(self, rhs: &ZLaurent) -> ZLaurent {
        let mut out = ZLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.insert_add(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ZLaurent {
            type Output = ZLaurent;
            fn $method(self, rhs: ZLaurent) -> ZLaurent {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ZLaurent> for ZLaurent {
            type Output = ZLaurent;
            fn $method(self, rhs: &ZLaurent) -> ZLaurent {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for ZLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest power first, matching the text renderer for series.
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let rendered = ZLaurent::render_term(c, *e);
            if first {
                write!(f, "{rendered}")?;
                first = false;
            } else if let Some(body) = rendered.strip_prefix('-') {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {rendered}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized form of one term: the exponent and the reduced rational value
/// rendered as a string (`"num/den"` or `"num"`).
#[derive(Serialize, Deserialize)]
struct ZTermJson {
    zexp: i64,
    value: String,
}

impl Serialize for ZLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let v: Vec<ZTermJson> = self
            .terms
            .iter()
            .map(|(e, c)| ZTermJson {
                zexp: *e,
                value: c.to_string(),
            })
            .collect();
        v.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ZLaurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<ZTermJson>::deserialize(deserializer)?;
        let mut out = ZLaurent::zero();
        for t in v {
            let c = BigRational::from_str(&t.value)
                .map_err(|e| D::Error::custom(format!("bad rational {:?}: {e}", t.value)))?;
            out.insert_add(t.zexp, &c);
        }
        Ok(out)
    }
}
