//! JSON form of exact rationals: `{num, den}` plus a rounded decimal string.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Serializes as `{"num": .., "den": ..}`; integers beyond `i64` become strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactJson(pub BigRational);

impl Serialize for ExactJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rational", 2)?;
        match (self.0.numer().to_i64(), self.0.denom().to_i64()) {
            (Some(n), Some(d)) => {
                st.serialize_field("num", &n)?;
                st.serialize_field("den", &d)?;
            }
            _ => {
                st.serialize_field("num", &self.0.numer().to_string())?;
                st.serialize_field("den", &self.0.denom().to_string())?;
            }
        }
        st.end()
    }
}

/// Decimal rendering rounded half away from zero to `places` digits.
pub fn to_decimal(q: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let two = BigInt::from(2);
    let scaled: BigInt = q.numer().abs() * &scale * &two + q.denom();
    let rounded = scaled.div_floor(&(q.denom() * &two));
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if q.numer().sign() == Sign::Minus && rounded.sign() != Sign::NoSign {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = places as usize)
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
