//! Exact scalar types: arbitrary-precision integers and reduced rationals.
//!
//! Every scalar in this crate is a [`BigInt`] or a [`BigRational`]; nothing is
//! ever evaluated in floating point.

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_of(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}
