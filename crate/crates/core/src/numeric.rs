//! Exact rational scalars: parsing, formatting, and serde helpers.
//!
//! Every quantity in this crate is an exact rational. Rationals are written
//! as reduced `p/q` strings with positive denominator; integers print without
//! the `/1` suffix and both forms are accepted on input.

use num::BigRational;

use crate::error::{Error, Result};

/// Parses `p` or `p/q` into an exact rational.
pub fn parse_ratio(text: &str) -> Result<BigRational> {
    // Ratio's FromStr panics on a zero denominator, so parse the parts by hand.
    let bad = || Error::InvalidRational(text.to_string());
    let t = text.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p, q),
        None => (t, "1"),
    };
    let numer: num::BigInt = p.trim().parse().map_err(|_| bad())?;
    let denom: num::BigInt = q.trim().parse().map_err(|_| bad())?;
    if denom == num::BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

/// Formats a rational in reduced form (`p/q`, or `p` when integral).
pub fn ratio_string(r: &BigRational) -> String {
    r.to_string()
}

/// Serde adapter: a `BigRational` as its reduced string form.
pub mod serde_ratio {
    use num::BigRational;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_ratio(&text).map_err(de::Error::custom)
    }
}

/// Serde adapter: a `Vec<BigRational>` as a list of reduced strings.
pub mod serde_ratio_vec {
    use num::BigRational;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| super::parse_ratio(t).map_err(de::Error::custom))
            .collect()
    }
}

/// Serde adapter: a `BigInt` as its decimal string.
pub mod serde_bigint {
    use num::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.trim().parse::<BigInt>().map_err(de::Error::custom)
    }
}

/// Serde adapter: a `Vec<BigInt>` as a list of decimal strings.
pub mod serde_bigint_vec {
    use num::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|n| n.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| t.trim().parse::<BigInt>().map_err(de::Error::custom))
            .collect()
    }
}
