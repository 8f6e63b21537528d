use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A prime below `2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::InvalidParameter(format!("prime {p} is too large (limit 2^31)")));
        }
        let is_prime = p >= 2 && (2u32..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Coefficient field for homology: `GF(p)` or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(Prime),
    Rational,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(Prime(2));

    pub fn gf(p: u32) -> Result<Self> {
        Prime::new(p).map(FieldSpec::Prime)
    }

    /// Short name: `gf2`, `gf3`, …, or `rational`.
    pub fn descriptor(self) -> String {
        match self {
            FieldSpec::Prime(p) => format!("gf{}", p.get()),
            FieldSpec::Rational => "rational".to_string(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        if lower == "rational" || lower == "q" {
            return Ok(FieldSpec::Rational);
        }
        let digits = lower.strip_prefix("gf").ok_or_else(|| Error::InvalidParameter(format!("unknown field `{s}`")))?;
        let p = digits.parse::<u32>().map_err(|_| Error::InvalidParameter(format!("unknown field `{s}`")))?;
        FieldSpec::gf(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.descriptor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_only() {
        assert!(FieldSpec::gf(2).is_ok());
        assert!(FieldSpec::gf(7919).is_ok());
        assert!(FieldSpec::gf(1).is_err());
        assert!(FieldSpec::gf(9).is_err());
        assert!(FieldSpec::gf(0).is_err());
    }

    #[test]
    fn parse_and_print() {
        for s in ["gf2", "gf3", "gf5", "rational"] {
            assert_eq!(s.parse::<FieldSpec>().unwrap().to_string(), s);
        }
        assert!("gf4".parse::<FieldSpec>().is_err());
        assert!("real".parse::<FieldSpec>().is_err());
    }
}
