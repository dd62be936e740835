use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A homological dimension: a finite non-negative integer or infinity.
///
/// Variant order gives the total order, so every finite value sits below
/// [`ExtendedNat::Infinity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedNat {
    Finite(u32),
    Infinity,
}

impl ExtendedNat {
    pub const ZERO: ExtendedNat = ExtendedNat::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtendedNat::Finite(k) => Some(k),
            ExtendedNat::Infinity => None,
        }
    }
}

impl From<u32> for ExtendedNat {
    fn from(k: u32) -> Self {
        ExtendedNat::Finite(k)
    }
}

impl PartialEq<u32> for ExtendedNat {
    fn eq(&self, other: &u32) -> bool {
        *self == ExtendedNat::Finite(*other)
    }
}

impl PartialOrd<u32> for ExtendedNat {
    fn partial_cmp(&self, other: &u32) -> Option<std::cmp::Ordering> {
        self.partial_cmp(&ExtendedNat::Finite(*other))
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(k) => write!(f, "{k}"),
            ExtendedNat::Infinity => f.write_str("infinity"),
        }
    }
}

impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(k) => s.serialize_u32(*k),
            ExtendedNat::Infinity => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(k) => Ok(ExtendedNat::Finite(k)),
            Raw::Str(s) if s == "infinity" => Ok(ExtendedNat::Infinity),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("expected integer or \"infinity\", got {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_dominates() {
        assert!(ExtendedNat::Infinity > ExtendedNat::Finite(u32::MAX));
        assert!(ExtendedNat::Finite(2) < ExtendedNat::Finite(3));
        assert_eq!(
            [ExtendedNat::Finite(4), ExtendedNat::Infinity, ExtendedNat::ZERO].iter().max(),
            Some(&ExtendedNat::Infinity)
        );
    }

    #[test]
    fn json_encoding() {
        assert_eq!(serde_json::to_string(&ExtendedNat::Finite(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&ExtendedNat::Infinity).unwrap(), "\"infinity\"");
        let back: ExtendedNat = serde_json::from_str("\"infinity\"").unwrap();
        assert_eq!(back, ExtendedNat::Infinity);
        assert!(serde_json::from_str::<ExtendedNat>("\"inf\"").is_err());
    }
}
