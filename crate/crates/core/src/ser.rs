//! Serde helpers: big integers and ratios travel as decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serializer;

pub fn bigint_string<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

pub fn ratio_string<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}
