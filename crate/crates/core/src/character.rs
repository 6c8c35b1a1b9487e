//! Characters and admissible characters.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intfn::IntFn;

/// Outcome of checking a function against the character axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum Classification {
    NotCharacter { sum: i64 },
    Character { reason: String },
    Admissible { s0: i64, s1: i64 },
}

/// Evaluates the sum-zero condition and the four admissibility clauses.
pub fn classify(f: &IntFn) -> Classification {
    let sum = f.sum();
    if sum != 0 {
        return Classification::NotCharacter { sum };
    }
    match admissible_degrees(f) {
        Ok((s0, s1)) => Classification::Admissible { s0, s1 },
        Err(reason) => Classification::Character { reason },
    }
}

fn admissible_degrees(f: &IntFn) -> std::result::Result<(i64, i64), String> {
    if let Some((lo, _)) = f.support_range() {
        if lo < 0 {
            return Err(format!("clause (1): nonzero value at negative degree {lo}"));
        }
    }
    if f.get(0) != -1 {
        return Err(format!("clause (2): value at 0 is {}, not -1", f.get(0)));
    }
    // Past the support every value is 0, so both infima exist.
    let hi = f.support_range().map_or(0, |(_, hi)| hi) + 1;
    let s0 = (0..=hi)
        .find(|&l| f.get(l) != -1)
        .expect("value 0 past the support");
    if f.get(s0) < 0 {
        return Err(format!(
            "clause (3): value {} at s0={s0} is negative",
            f.get(s0)
        ));
    }
    let Some(s1) = (s0..=hi).find(|&l| f.get(l) != 0) else {
        return Err(format!("clause (4): no nonzero value at or after s0={s0}"));
    };
    if f.get(s1) <= 0 {
        return Err(format!(
            "clause (4): value {} at s1={s1} is not positive",
            f.get(s1)
        ));
    }
    Ok((s0, s1))
}

/// A finitely supported function with total sum zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(IntFn);

impl Character {
    pub fn new(f: IntFn) -> Result<Self> {
        match f.sum() {
            0 => Ok(Character(f)),
            s => Err(Error::NotCharacter(s)),
        }
    }

    pub fn as_fn(&self) -> &IntFn {
        &self.0
    }
}

/// An admissible character together with its invariants `s0` and `s1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleCharacter {
    f: IntFn,
    s0: i64,
    s1: i64,
}

impl AdmissibleCharacter {
    pub fn new(f: IntFn) -> Result<Self> {
        match classify(&f) {
            Classification::Admissible { s0, s1 } => Ok(Self { f, s0, s1 }),
            Classification::NotCharacter { sum } => Err(Error::NotCharacter(sum)),
            Classification::Character { reason } => Err(Error::NotAdmissible(reason)),
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Result<Self> {
        Self::new(IntFn::from_pairs(pairs))
    }

    /// Least degree at which the value differs from -1.
    pub fn s0(&self) -> i64 {
        self.s0
    }

    /// Least degree at or after `s0` with a nonzero value.
    pub fn s1(&self) -> i64 {
        self.s1
    }

    #[inline]
    pub fn get(&self, l: i64) -> i64 {
        self.f.get(l)
    }

    pub fn as_fn(&self) -> &IntFn {
        &self.f
    }

    pub fn into_fn(self) -> IntFn {
        self.f
    }

    /// `Σ l·γ(l)`, the degree of a subscheme with this γ-character.
    pub fn degree(&self) -> i64 {
        self.f.first_moment()
    }

    /// Largest degree carrying a nonzero value.
    pub fn top(&self) -> i64 {
        self.f.support_range().map_or(0, |(_, hi)| hi)
    }
}

impl fmt::Debug for AdmissibleCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (s0={}, s1={})", self.f, self.s0, self.s1)
    }
}

impl fmt::Display for AdmissibleCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.f, f)
    }
}

impl Serialize for AdmissibleCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.f.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AdmissibleCharacter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = IntFn::deserialize(d)?;
        AdmissibleCharacter::new(f).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(pairs: &[(i64, i64)]) -> IntFn {
        IntFn::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&f(&[(0, -1), (1, 1)])),
            Classification::Admissible { s0: 1, s1: 1 }
        );
        assert_eq!(
            classify(&f(&[(0, -1), (1, -1), (2, 3), (3, -1)])),
            Classification::Admissible { s0: 2, s1: 2 }
        );
        // s0 = 1 with value 0 there, then the first nonzero value is 1 at degree 2.
        assert_eq!(
            classify(&f(&[(0, -1), (2, 1)])),
            Classification::Admissible { s0: 1, s1: 2 }
        );
    }

    #[test]
    fn classify_failures() {
        assert_eq!(
            classify(&f(&[(0, -1)])),
            Classification::NotCharacter { sum: -1 }
        );
        assert!(matches!(
            classify(&f(&[(-1, 1), (0, -1)])),
            Classification::Character { .. }
        ));
        assert!(matches!(
            classify(&f(&[(0, 1), (1, -1)])),
            Classification::Character { .. }
        ));
        // Clause 3: first value different from -1 is negative.
        assert!(matches!(
            classify(&f(&[(0, -1), (1, -2), (2, 3)])),
            Classification::Character { .. }
        ));
        // Clause 4: first nonzero value after s0 is negative.
        assert!(matches!(
            classify(&f(&[(0, -1), (1, 0), (2, -1), (3, 2)])),
            Classification::Character { .. }
        ));
        assert!(classify(&IntFn::zero()) != Classification::Admissible { s0: 0, s1: 0 });
    }

    #[test]
    fn values_after_s1_are_unconstrained() {
        let g = AdmissibleCharacter::from_pairs([(0, -1), (1, 3), (2, -2)]).unwrap();
        assert_eq!((g.s0(), g.s1()), (1, 1));
    }

    #[test]
    fn deserialization_validates() {
        let ok: AdmissibleCharacter =
            serde_json::from_str(r#"{"entries":[[0,-1],[1,1]]}"#).unwrap();
        assert_eq!(ok.degree(), 1);
        assert!(serde_json::from_str::<AdmissibleCharacter>(r#"{"entries":[[0,-1]]}"#).is_err());
    }
}
