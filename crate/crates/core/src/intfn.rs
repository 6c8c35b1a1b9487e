//! Finitely supported integer functions on the integers.
//!
//! [`IntFn`] is the carrier for characters, the η/θ difference functions and
//! the Δⁿ data of resolutions. Values outside the stored support are zero and
//! the stored map never contains a zero, so structural equality is equality of
//! functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Indicator of the nonnegative integers: 1 for `l >= 0`, 0 otherwise.
#[inline]
pub fn step(l: i64) -> i64 {
    i64::from(l >= 0)
}

/// A degree extended by the two infinities.
///
/// Ordered as `NegInfinity < Finite(_) < PosInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtDegree {
    NegInfinity,
    Finite(i64),
    PosInfinity,
}

impl ExtDegree {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtDegree::Finite(l) => Some(l),
            _ => None,
        }
    }
}

impl fmt::Display for ExtDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDegree::NegInfinity => f.write_str("-inf"),
            ExtDegree::Finite(l) => write!(f, "{l}"),
            ExtDegree::PosInfinity => f.write_str("+inf"),
        }
    }
}

impl Serialize for ExtDegree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtDegree::Finite(l) => s.serialize_i64(*l),
            ExtDegree::NegInfinity => s.serialize_str("-inf"),
            ExtDegree::PosInfinity => s.serialize_str("+inf"),
        }
    }
}

/// The four one-sided connectedness notions for a nonnegative function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connectivity {
    /// Connected in degrees `>= a`.
    AtLeast(i64),
    /// Connected in degrees `> a`.
    Above(i64),
    /// Connected in degrees `<= b`.
    AtMost(i64),
    /// Connected in degrees `< b`.
    Below(i64),
}

/// A finitely supported function `Z -> Z` in canonical sparse form.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntFn {
    entries: BTreeMap<i64, i64>,
}

impl IntFn {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds a function from `(degree, value)` pairs, summing repeated degrees.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut f = Self::zero();
        for (l, v) in pairs {
            f.add_at(l, v);
        }
        f
    }

    /// The spike `value` at degree `l`.
    pub fn spike(l: i64, value: i64) -> Self {
        Self::from_pairs([(l, value)])
    }

    /// Indicator of the integer interval `[a, b]`; zero when `a > b`.
    pub fn indicator(a: i64, b: i64) -> Self {
        Self::from_pairs((a..=b).map(|l| (l, 1)))
    }

    /// `step(l - a) - step(l - b)`, i.e. the indicator of `[a, b - 1]` when
    /// `a <= b` and minus the indicator of `[b, a - 1]` otherwise.
    pub fn step_difference(a: i64, b: i64) -> Self {
        if a <= b {
            Self::indicator(a, b - 1)
        } else {
            -Self::indicator(b, a - 1)
        }
    }

    #[inline]
    pub fn get(&self, l: i64) -> i64 {
        self.entries.get(&l).copied().unwrap_or(0)
    }

    pub fn add_at(&mut self, l: i64, v: i64) {
        if v == 0 {
            return;
        }
        let slot = self.entries.entry(l).or_insert(0);
        *slot += v;
        if *slot == 0 {
            self.entries.remove(&l);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries with degree in `range`, in increasing degree order.
    pub fn iter_range<R: std::ops::RangeBounds<i64>>(
        &self,
        range: R,
    ) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.entries.range(range).map(|(&l, &v)| (l, v))
    }

    /// Nonzero entries in increasing degree order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.entries.iter().map(|(&l, &v)| (l, v))
    }

    /// Smallest and largest degree carrying a nonzero value.
    pub fn support_range(&self) -> Option<(i64, i64)> {
        let lo = *self.entries.keys().next()?;
        let hi = *self.entries.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn sum(&self) -> i64 {
        self.entries.values().sum()
    }

    /// `Σ l·f(l)`.
    pub fn first_moment(&self) -> i64 {
        self.iter().map(|(l, v)| l * v).sum()
    }

    /// The translate `l ↦ f(l - by)`.
    pub fn shift(&self, by: i64) -> Self {
        IntFn {
            entries: self.entries.iter().map(|(&l, &v)| (l + by, v)).collect(),
        }
    }

    /// The reflection `l ↦ f(c - l)`.
    pub fn reflect(&self, c: i64) -> Self {
        IntFn {
            entries: self.entries.iter().map(|(&l, &v)| (c - l, v)).collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|&v| v >= 0)
    }

    /// First degree with a negative value, if any.
    pub fn first_negative(&self) -> Option<i64> {
        self.iter().find(|&(_, v)| v < 0).map(|(l, _)| l)
    }

    /// Partial sum `f#(a) = Σ_{l <= a} f(l)`.
    pub fn sharp(&self, a: i64) -> i64 {
        self.entries.range(..=a).map(|(_, &v)| v).sum()
    }

    /// `(f_a, f_o)`: least and greatest degree with a strictly positive value,
    /// `(+∞, -∞)` when there is none.
    pub fn bounds(&self) -> (ExtDegree, ExtDegree) {
        let mut positive = self.iter().filter(|&(_, v)| v > 0).map(|(l, _)| l);
        match (positive.next(), positive.next_back()) {
            (None, _) => (ExtDegree::PosInfinity, ExtDegree::NegInfinity),
            (Some(first), last) => (
                ExtDegree::Finite(first),
                ExtDegree::Finite(last.unwrap_or(first)),
            ),
        }
    }

    /// Least degree with a positive value.
    pub fn lowest_positive(&self) -> Option<i64> {
        self.bounds().0.finite()
    }

    /// Greatest degree with a positive value.
    pub fn highest_positive(&self) -> Option<i64> {
        self.bounds().1.finite()
    }

    /// The `order`-fold first difference `Δf(l) = f(l) - f(l-1)`.
    pub fn diff(&self, order: i64) -> Result<Self> {
        if order < 0 {
            return Err(Error::NegativeOrder(order));
        }
        let mut f = self.clone();
        for _ in 0..order {
            f = &f - &f.shift(1);
        }
        Ok(f)
    }

    fn require_nonnegative(&self) -> Result<()> {
        match self.first_negative() {
            Some(l) => Err(Error::NegativeValue {
                degree: l,
                value: self.get(l),
            }),
            None => Ok(()),
        }
    }

    /// One-sided connectedness of a nonnegative function.
    pub fn connected_in_degrees(&self, mode: Connectivity) -> Result<bool> {
        self.require_nonnegative()?;
        let positive_on = |a: i64, b: i64| (a..=b).all(|l| self.get(l) > 0);
        Ok(match mode {
            Connectivity::AtLeast(a) => match self.highest_positive() {
                Some(b) if b > a => positive_on(a, b),
                _ => true,
            },
            Connectivity::Above(a) => match self.highest_positive() {
                Some(b) if b > a => positive_on(a + 1, b),
                _ => true,
            },
            Connectivity::AtMost(b) => match self.lowest_positive() {
                Some(a) if a < b => positive_on(a, b),
                _ => true,
            },
            Connectivity::Below(b) => match self.lowest_positive() {
                Some(a) if a < b => positive_on(a, b - 1),
                _ => true,
            },
        })
    }

    /// Connected in degrees `<= b` and `>= a`, and positive on `[a, b]`.
    pub fn connected_about(&self, a: i64, b: i64) -> Result<bool> {
        Ok(self.connected_in_degrees(Connectivity::AtMost(b))?
            && self.connected_in_degrees(Connectivity::AtLeast(a))?
            && (a..=b).all(|l| self.get(l) > 0))
    }
}

impl fmt::Debug for IntFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (l, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}:{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<(i64, i64)> for IntFn {
    fn from_iter<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        Self::from_pairs(iter)
    }
}

impl AddAssign<&IntFn> for IntFn {
    fn add_assign(&mut self, rhs: &IntFn) {
        for (l, v) in rhs.iter() {
            self.add_at(l, v);
        }
    }
}

impl SubAssign<&IntFn> for IntFn {
    fn sub_assign(&mut self, rhs: &IntFn) {
        for (l, v) in rhs.iter() {
            self.add_at(l, -v);
        }
    }
}

impl Add for &IntFn {
    type Output = IntFn;
    fn add(self, rhs: &IntFn) -> IntFn {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &IntFn {
    type Output = IntFn;
    fn sub(self, rhs: &IntFn) -> IntFn {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for IntFn {
    type Output = IntFn;
    fn add(mut self, rhs: IntFn) -> IntFn {
        self += &rhs;
        self
    }
}

impl Sub for IntFn {
    type Output = IntFn;
    fn sub(mut self, rhs: IntFn) -> IntFn {
        self -= &rhs;
        self
    }
}

impl Add<&IntFn> for IntFn {
    type Output = IntFn;
    fn add(mut self, rhs: &IntFn) -> IntFn {
        self += rhs;
        self
    }
}

impl Sub<&IntFn> for IntFn {
    type Output = IntFn;
    fn sub(mut self, rhs: &IntFn) -> IntFn {
        self -= rhs;
        self
    }
}

impl Neg for IntFn {
    type Output = IntFn;
    fn neg(self) -> IntFn {
        IntFn {
            entries: self.entries.into_iter().map(|(l, v)| (l, -v)).collect(),
        }
    }
}

impl Serialize for IntFn {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<[i64; 2]> = self.iter().map(|(l, v)| [l, v]).collect();
        let mut st = s.serialize_struct("IntFn", 1)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for IntFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            entries: Vec<(i64, i64)>,
        }
        let raw = Raw::deserialize(d)?;
        let mut entries = BTreeMap::new();
        let mut prev: Option<i64> = None;
        for (l, v) in raw.entries {
            if prev.is_some_and(|p| l <= p) {
                return Err(de::Error::custom(format!(
                    "degrees must be strictly increasing (degree {l} repeated or out of order)"
                )));
            }
            if v == 0 {
                return Err(de::Error::custom(format!(
                    "zero value stored at degree {l}"
                )));
            }
            prev = Some(l);
            entries.insert(l, v);
        }
        Ok(IntFn { entries })
    }
}

/// A function that vanishes far to the left and is constant far to the right,
/// stored through its first difference: `value(l) = jumps#(l)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EventuallyConstant {
    jumps: IntFn,
}

impl EventuallyConstant {
    /// The step function `l ↦ step(l)`.
    pub fn step() -> Self {
        Self {
            jumps: IntFn::spike(0, 1),
        }
    }

    /// The partial-sum function of a finitely supported `f`.
    pub fn partial_sums(f: IntFn) -> Self {
        Self { jumps: f }
    }

    /// A finitely supported function viewed as eventually constant (tail 0).
    pub fn from_finite(f: &IntFn) -> Self {
        Self {
            jumps: f.diff(1).expect("order 1 is valid"),
        }
    }

    /// The first difference, finitely supported.
    pub fn jumps(&self) -> &IntFn {
        &self.jumps
    }

    pub fn value(&self, l: i64) -> i64 {
        self.jumps.sharp(l)
    }

    /// Constant value taken for all sufficiently large degrees.
    pub fn tail(&self) -> i64 {
        self.jumps.sum()
    }

    /// First degree from which the function equals its tail.
    pub fn tail_start(&self) -> Option<i64> {
        self.jumps.support_range().map(|(_, hi)| hi)
    }

    /// `Δ^order` of the function; returns the same kind of object.
    pub fn diff(&self, order: i64) -> Result<Self> {
        Ok(Self {
            jumps: self.jumps.diff(order)?,
        })
    }

    /// The finitely supported function represented, if the tail is zero.
    pub fn as_finite(&self) -> Option<IntFn> {
        if self.tail() != 0 {
            return None;
        }
        let Some((lo, hi)) = self.jumps.support_range() else {
            return Some(IntFn::zero());
        };
        Some((lo..=hi).map(|l| (l, self.value(l))).collect())
    }
}
