//! JSON representation of exact integers: a number when it fits in `i64`,
//! a decimal string otherwise.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntRepr {
    Num(i64),
    Str(String),
}

impl IntRepr {
    pub fn from_scalar<T: Scalar>(v: &T) -> Self {
        match v.to_i64() {
            Some(n) => IntRepr::Num(n),
            None => IntRepr::Str(v.to_string()),
        }
    }

    pub fn to_scalar<T: Scalar>(&self) -> Result<T, String> {
        match self {
            IntRepr::Num(n) => T::from_i64(*n).ok_or_else(|| format!("{n} out of range")),
            IntRepr::Str(s) => T::from_str_radix(s, 10).map_err(|_| format!("bad integer {s:?}")),
        }
    }
}

/// Serde adapter for a single scalar field.
pub mod scalar {
    use super::IntRepr;
    use crate::scalar::Scalar;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<T: Scalar, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        IntRepr::from_scalar(v).serialize(s)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
        IntRepr::deserialize(d)?.to_scalar().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a vector of scalars.
pub mod scalar_vec {
    use super::IntRepr;
    use crate::scalar::Scalar;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<T: Scalar, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(IntRepr::from_scalar).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<Vec<T>, D::Error> {
        let raw: Vec<IntRepr> = Vec::deserialize(d)?;
        raw.iter().map(|r| r.to_scalar().map_err(serde::de::Error::custom)).collect()
    }
}

/// Serde adapter for a matrix of scalars given by rows.
pub mod scalar_vec_vec {
    use super::IntRepr;
    use crate::scalar::Scalar;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<T: Scalar, S: Serializer>(v: &[Vec<T>], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|row| row.iter().map(IntRepr::from_scalar).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<T>>, D::Error> {
        let raw: Vec<Vec<IntRepr>> = Vec::deserialize(d)?;
        raw.iter().map(|row| row.iter().map(|r| r.to_scalar().map_err(serde::de::Error::custom)).collect()).collect()
    }
}
