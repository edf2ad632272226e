use alloc::string::String;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Presence bits for the five traits, canonical order, written as e.g. `10100`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelVector(pub [bool; 5]);

impl LabelVector {
    pub fn bits(&self) -> [u8; 5] {
        self.0.map(u8::from)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        if bytes.len() != 5 {
            return Err(Error::InvalidConfig(alloc::format!("label vector must have 5 bits, got {s:?}")));
        }
        let mut out = [false; 5];
        for (o, b) in out.iter_mut().zip(bytes) {
            *o = match b {
                b'0' => false,
                b'1' => true,
                _ => return Err(Error::InvalidConfig(alloc::format!("label vector must be 0/1 bits, got {s:?}"))),
            };
        }
        Ok(LabelVector(out))
    }
}

impl fmt::Display for LabelVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for LabelVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LabelVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        LabelVector::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Rank of each trait (1 = most present), indexed in canonical trait order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RankVector([u8; 5]);

impl RankVector {
    pub fn new(ranks: [u8; 5]) -> Result<Self> {
        let mut seen = [false; 5];
        for r in ranks {
            if !(1..=5).contains(&r) || seen[usize::from(r - 1)] {
                return Err(Error::MalformedRank(alloc::format!("{ranks:?} is not a permutation of 1..5")));
            }
            seen[usize::from(r - 1)] = true;
        }
        Ok(RankVector(ranks))
    }

    pub fn identity() -> Self {
        RankVector([1, 2, 3, 4, 5])
    }

    /// Ranks by descending score; ties keep canonical order.
    pub fn from_scores(scores: &[f64; 5]) -> Self {
        let mut order = [0usize, 1, 2, 3, 4];
        order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
        let mut ranks = [0u8; 5];
        for (pos, &t) in order.iter().enumerate() {
            ranks[t] = pos as u8 + 1;
        }
        RankVector(ranks)
    }

    pub fn ranks(&self) -> [u8; 5] {
        self.0
    }

    pub fn as_f64(&self) -> [f64; 5] {
        self.0.map(f64::from)
    }

    /// Comma-free compact form such as `14253`.
    pub fn parse(s: &str) -> Result<Self> {
        let digits: alloc::vec::Vec<u8> = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')' | '[' | ']'))
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::MalformedRank(s.into())))
            .collect::<Result<_>>()?;
        let arr: [u8; 5] = digits.try_into().map_err(|_| Error::MalformedRank(s.into()))?;
        RankVector::new(arr)
    }
}

impl fmt::Display for RankVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.0 {
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for RankVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let arr = <[u8; 5]>::deserialize(d)?;
        RankVector::new(arr).map_err(serde::de::Error::custom)
    }
}
