//! Even linkage classes, their subscheme models and the numeric liaison calculus.
//!
//! A class is described by the γ-character `γ₀` of its minimal elements,
//! the degree `t1` of the minimal complete intersection linking them, the
//! top twist `e` and optionally the descriptor of the dual class. A
//! subscheme model is a triple `(class, h, θ)`; everything else (the
//! γ-character, `s0`, `s1`, `e`, the degree) is computed from it.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::character::AdmissibleCharacter;
use crate::domination::{
    check_eta, eta_from_theta_at, relative_eta_from_witnesses, relative_theta_from_witnesses,
    sigma_from_eta, theta_from_eta, NatFn,
};
use crate::error::{Error, Result};
use crate::intfn::IntFn;

/// Numeric identity of a non-ACM even linkage class.
#[derive(Clone, PartialEq, Eq)]
pub struct LinkageClass {
    n: i64,
    gamma0: AdmissibleCharacter,
    t1: i64,
    e: i64,
    dual: Option<Box<LinkageClass>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClass {
    n: i64,
    gamma0: AdmissibleCharacter,
    t1: i64,
    e: i64,
    #[serde(default)]
    dual: Option<Box<RawClass>>,
    #[serde(default = "default_true")]
    non_acm: bool,
}

fn default_true() -> bool {
    true
}

impl LinkageClass {
    pub fn new(
        n: i64,
        gamma0: AdmissibleCharacter,
        t1: i64,
        e: i64,
        dual: Option<LinkageClass>,
    ) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidClass(format!(
                "ambient dimension n={n} must be at least 3"
            )));
        }
        let (s0, s1) = (gamma0.s0(), gamma0.s1());
        if !(s0 <= s1 && s1 <= t1) {
            return Err(Error::InvalidClass(format!(
                "need s0 <= s1 <= t1, got {s0}, {s1}, {t1}"
            )));
        }
        if let Some(d) = &dual {
            if d.n != n {
                return Err(Error::InvalidClass(format!(
                    "dual class lives in P^{}, not P^{n}",
                    d.n
                )));
            }
            if (d.s0(), d.t1) != (s0, t1) {
                return Err(Error::InvalidClass(format!(
                    "dual class has (s0, t1) = ({}, {}), expected ({s0}, {t1})",
                    d.s0(),
                    d.t1
                )));
            }
            let total = gamma0.degree() + d.gamma0.degree();
            if total != s0 * t1 {
                return Err(Error::InvalidClass(format!(
                    "minimal degrees of the class and its dual sum to {total}, expected s0*t1 = {}",
                    s0 * t1
                )));
            }
        }
        Ok(Self {
            n,
            gamma0,
            t1,
            e,
            dual: dual.map(|d| Box::new(d.stripped())),
        })
    }

    /// A class that is its own dual.
    pub fn self_dual(n: i64, gamma0: AdmissibleCharacter, t1: i64, e: i64) -> Result<Self> {
        let bare = Self::new(n, gamma0, t1, e, None)?;
        Self::new(n, bare.gamma0.clone(), t1, e, Some(bare))
    }

    fn from_raw(raw: RawClass) -> Result<Self> {
        if !raw.non_acm {
            return Err(Error::InvalidClass(
                "only non-ACM classes are modeled (non_acm must be true)".into(),
            ));
        }
        let dual = raw.dual.map(|d| Self::from_raw(*d)).transpose()?;
        Self::new(raw.n, raw.gamma0, raw.t1, raw.e, dual)
    }

    fn to_raw(&self) -> RawClass {
        RawClass {
            n: self.n,
            gamma0: self.gamma0.clone(),
            t1: self.t1,
            e: self.e,
            dual: self.dual.as_ref().map(|d| Box::new(d.to_raw())),
            non_acm: true,
        }
    }

    fn stripped(&self) -> Self {
        Self {
            dual: None,
            ..self.clone()
        }
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn gamma0(&self) -> &AdmissibleCharacter {
        &self.gamma0
    }

    pub fn s0(&self) -> i64 {
        self.gamma0.s0()
    }

    pub fn s1(&self) -> i64 {
        self.gamma0.s1()
    }

    pub fn t1(&self) -> i64 {
        self.t1
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn has_dual(&self) -> bool {
        self.dual.is_some()
    }

    /// The dual class, carrying this class as its own dual.
    pub fn dual_class(&self) -> Result<LinkageClass> {
        let partner = self.dual.as_ref().ok_or(Error::MissingDual)?;
        Ok(Self {
            dual: Some(Box::new(self.stripped())),
            ..partner.stripped()
        })
    }

    /// Equality of the numeric identities, ignoring the dual descriptor.
    pub fn same_class(&self, other: &Self) -> bool {
        self.n == other.n && self.gamma0 == other.gamma0 && self.t1 == other.t1 && self.e == other.e
    }

    /// `δ = s0 - e - n - 1`.
    pub fn delta(&self) -> i64 {
        self.s0() - self.e - self.n - 1
    }
}

impl fmt::Debug for LinkageClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinkageClass")
            .field("n", &self.n)
            .field("gamma0", &self.gamma0)
            .field("t1", &self.t1)
            .field("e", &self.e)
            .field("has_dual", &self.dual.is_some())
            .finish()
    }
}

impl Serialize for LinkageClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_raw().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinkageClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::from_raw(RawClass::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// A deformation class of subschemes in a linkage class: `(class, h, θ)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SubschemeModel {
    class: Arc<LinkageClass>,
    h: i64,
    theta: NatFn,
}

impl SubschemeModel {
    pub fn new(class: Arc<LinkageClass>, h: i64, theta: NatFn) -> Result<Self> {
        if h < 0 {
            return Err(Error::NegativeHeight(h));
        }
        crate::domination::check_theta(class.s0(), h, theta.as_fn())?;
        Ok(Self { class, h, theta })
    }

    /// The minimal elements of the class: height 0, θ = 0.
    pub fn minimal(class: Arc<LinkageClass>) -> Self {
        Self {
            class,
            h: 0,
            theta: NatFn::zero(),
        }
    }

    pub fn class(&self) -> &Arc<LinkageClass> {
        &self.class
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    pub fn theta(&self) -> &NatFn {
        &self.theta
    }

    /// `m = Σθ`.
    pub fn m(&self) -> i64 {
        self.theta.sum()
    }

    pub fn eta(&self) -> NatFn {
        eta_from_theta_at(self.class.s0(), self.h, &self.theta).expect("validated on construction")
    }

    pub fn s0(&self) -> i64 {
        self.class.s0() + self.m()
    }

    /// `min{s1 + h, θ_a}`.
    pub fn s1(&self) -> i64 {
        let base = self.class.s1() + self.h;
        self.theta.lowest().map_or(base, |a| a.min(base))
    }

    /// `max{e + h, η_o - n}`.
    pub fn e(&self) -> i64 {
        let base = self.class.e() + self.h;
        self.eta()
            .highest()
            .map_or(base, |o| base.max(o - self.class.n()))
    }

    fn with(&self, h: i64, theta: NatFn) -> Result<Self> {
        Self::new(self.class.clone(), h, theta)
    }

    /// `(h, θ)` equality within the same class.
    pub fn same_position(&self, other: &Self) -> bool {
        self.class.same_class(&other.class) && self.h == other.h && self.theta == other.theta
    }
}

impl fmt::Debug for SubschemeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(h={}, theta={})", self.h, self.theta)
    }
}

impl Serialize for SubschemeModel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            class: &'a LinkageClass,
            h: i64,
            theta: &'a NatFn,
        }
        Raw {
            class: &self.class,
            h: self.h,
            theta: &self.theta,
        }
        .serialize(s)
    }
}

/// The γ-character of the model.
pub fn model_gamma(x: &SubschemeModel) -> AdmissibleCharacter {
    sigma_from_eta(x.class.gamma0(), x.h, &x.eta())
        .expect("valid models give admissible characters")
}

/// Invariants computed from `(class, h, θ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedInvariants {
    #[serde(rename = "s0X")]
    pub s0: i64,
    #[serde(rename = "s1X")]
    pub s1: i64,
    #[serde(rename = "eX")]
    pub e: i64,
    pub degree: i64,
    #[serde(rename = "gammaX")]
    pub gamma: AdmissibleCharacter,
    #[serde(rename = "etaX")]
    pub eta: NatFn,
}

/// Invariants of a model; the degree is `Σ l·γ_X(l)`, used only once the
/// Hilbert-polynomial gate has accepted that functional.
pub fn invariants(x: &SubschemeModel) -> Result<DerivedInvariants> {
    crate::hilbert::degree_functional_gate()?;
    let gamma = model_gamma(x);
    Ok(DerivedInvariants {
        s0: x.s0(),
        s1: x.s1(),
        e: x.e(),
        degree: gamma.degree(),
        gamma,
        eta: x.eta(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinkKind {
    Basic,
    Elementary,
}

impl std::str::FromStr for LinkKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic" => Ok(LinkKind::Basic),
            "elementary" => Ok(LinkKind::Elementary),
            other => Err(Error::Unknown(format!("link kind '{other}'"))),
        }
    }
}

/// A double link of type `(s, h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoubleLinkStep {
    pub s: i64,
    pub h: i64,
    pub kind: LinkKind,
}

impl DoubleLinkStep {
    pub fn basic(s: i64, h: i64) -> Self {
        Self {
            s,
            h,
            kind: LinkKind::Basic,
        }
    }

    pub fn elementary(s: i64, h: i64) -> Self {
        Self {
            s,
            h,
            kind: LinkKind::Elementary,
        }
    }
}

/// Double link of type `(s, h)`: relative η is `1_[s, s+h-1]`.
pub fn double_link(x: &SubschemeModel, s: i64, h: i64, _kind: LinkKind) -> Result<SubschemeModel> {
    if h < 0 {
        return Err(Error::NegativeHeight(h));
    }
    if s < x.s0() {
        return Err(Error::LinkDegreeTooSmall { s, s0: x.s0() });
    }
    let eta = NatFn::indicator(s, s + h - 1).as_fn() + &x.eta().as_fn().shift(h);
    let eta = NatFn::new(eta)?;
    let height = x.h + h;
    let theta = theta_from_eta(x.class.s0(), height, &eta);
    x.with(height, theta)
}

/// Applies the steps in order.
pub fn replay(start: &SubschemeModel, steps: &[DoubleLinkStep]) -> Result<SubschemeModel> {
    steps
        .iter()
        .try_fold(start.clone(), |x, st| double_link(&x, st.s, st.h, st.kind))
}

fn require_same_class(x: &SubschemeModel, y: &SubschemeModel) -> Result<()> {
    if !x.class.same_class(&y.class) {
        return Err(Error::CrossClass);
    }
    Ok(())
}

/// `h_Y - h_X` when `Y` dominates `X`.
pub fn dominates_model(x: &SubschemeModel, y: &SubschemeModel) -> Result<Option<i64>> {
    require_same_class(x, y)?;
    let h = y.h - x.h;
    if h < 0 {
        return Ok(None);
    }
    Ok(relative_theta_from_witnesses(&x.theta, x.h, &y.theta, y.h).map(|_| h))
}

fn relative_eta_of(x: &SubschemeModel, y: &SubschemeModel) -> Result<NatFn> {
    relative_eta_from_witnesses(&x.eta(), x.h, &y.eta(), y.h).ok_or(Error::NotDominatingModel)
}

/// Height-one basic double links from `x` to `target`, with `s = η_o - h + 1`
/// on the remaining relative η at each stage.
pub fn lr_decompose(x: &SubschemeModel, target: &SubschemeModel) -> Result<Vec<DoubleLinkStep>> {
    if dominates_model(x, target)?.is_none() {
        return Err(Error::NotDominatingModel);
    }
    let mut steps = Vec::new();
    let mut cur = x.clone();
    while cur.h < target.h {
        let rel = relative_eta_of(&cur, target)?;
        let top = rel.highest().ok_or(Error::NotDominatingModel)?;
        let s = top - (target.h - cur.h) + 1;
        let step = DoubleLinkStep::basic(s, 1);
        cur = double_link(&cur, s, 1, step.kind)?;
        steps.push(step);
    }
    Ok(steps)
}

/// Sharp lower bound for `t1` in the deformation class of `x`.
pub fn t1_bound(x: &SubschemeModel) -> i64 {
    let base = x.class.t1() + x.h;
    match x.theta.highest() {
        Some(o) if o >= base - 1 => rightmost_block_start(&x.theta),
        _ => base,
    }
}

/// `max{l : θ(l) ≠ 0, θ(l-1) = 0}`.
fn rightmost_block_start(theta: &NatFn) -> i64 {
    let mut l = theta.highest().expect("nonzero theta");
    while theta.get(l - 1) != 0 {
        l -= 1;
    }
    l
}

/// Link of `x` by a complete intersection of type `(s, t)`, landing in the dual class.
pub fn link_dual(x: &SubschemeModel, s: i64, t: i64) -> Result<SubschemeModel> {
    let dual = Arc::new(x.class.dual_class()?);
    let (s0, t1) = (x.class.s0(), x.class.t1());
    if s.min(t) < x.s0() {
        return Err(Error::LinkPrecondition(format!(
            "min(s, t) = {} is below s0(X) = {}",
            s.min(t),
            x.s0()
        )));
    }
    let bound = t1_bound(x);
    if s.max(t) < bound {
        return Err(Error::LinkPrecondition(format!(
            "max(s, t) = {} is below the t1 bound {bound}",
            s.max(t)
        )));
    }
    let h_y = s + t - s0 - t1 - x.h;
    if h_y < 0 {
        return Err(Error::LinkPrecondition(format!(
            "residual height s+t-s0-t1-h = {h_y} is negative"
        )));
    }
    let mut f = x.eta().into_fn();
    f += &IntFn::step_difference(s0 + x.h, s);
    f += &IntFn::step_difference(t1 + x.h, t);
    let eta_y = f.reflect(s + t - 1);
    check_eta(dual.s0(), h_y, &eta_y)
        .map_err(|err| Error::LinkPrecondition(format!("residual eta is invalid: {err}")))?;
    let eta_y = NatFn::new(eta_y)?;
    let theta_y = theta_from_eta(dual.s0(), h_y, &eta_y);
    SubschemeModel::new(dual, h_y, theta_y)
}

/// θ of the residual of `x` in the complete intersection of type
/// `(s0(X), t1_bound(X))`, by the closed formula
/// `θ_Y(s+t-1-l) = θ(l) - 1_[θ_a, θ_o](l)`.
///
/// Requires the bound to be attained at the start of θ, i.e.
/// `t1_bound(X) = θ_a` whenever θ is nonzero.
pub fn link_minimal_ci(x: &SubschemeModel) -> Result<NatFn> {
    let (Some(a), Some(o)) = (x.theta.lowest(), x.theta.highest()) else {
        return Ok(NatFn::zero());
    };
    let (s, t) = (x.s0(), t1_bound(x));
    if t != a {
        return Err(Error::Hypothesis(format!(
            "t1 bound {t} differs from theta_a = {a}; theta is not a single block ending the support"
        )));
    }
    let rest = x.theta.as_fn() - &IntFn::indicator(a, o);
    NatFn::new(rest.reflect(s + t - 1))
        .map_err(|_| Error::Hypothesis(format!("theta does not cover [{a}, {o}]")))
}

/// A chain of elementary double links certifying that `t1_bound` is attained.
///
/// Replay starts from the minimal element double linked by `(s0, base_height)`
/// (the residual of the minimal pair linked at degrees `minimal_pair`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct T1Witness {
    pub base_height: i64,
    pub minimal_pair: (i64, i64),
    pub steps: Vec<DoubleLinkStep>,
}

impl T1Witness {
    pub fn replay(&self, class: &Arc<LinkageClass>) -> Result<SubschemeModel> {
        let minimal = SubschemeModel::minimal(class.clone());
        let base = double_link(&minimal, class.s0(), self.base_height, LinkKind::Basic)?;
        replay(&base, &self.steps)
    }
}

/// Peels off the rightmost block of θ by induction on `Σθ`.
pub fn t1_witness_chain(x: &SubschemeModel) -> T1Witness {
    let mut steps = Vec::new();
    let (mut h, mut theta) = (x.h, x.theta.clone());
    while let Some(o) = theta.highest() {
        let r = rightmost_block_start(&theta);
        let w = o - r + 1;
        let reduced = theta.as_fn().shift(-w) - &IntFn::indicator(r - w, r - 1);
        theta = NatFn::new(reduced).expect("rightmost block is positive");
        h -= w;
        steps.push(DoubleLinkStep::elementary(r, w));
    }
    steps.reverse();
    T1Witness {
        base_height: h,
        minimal_pair: (x.class.s0(), x.class.t1() + h),
        steps,
    }
}

/// Whether θ is connected about `[s1 + h, t1 + h - 1]`.
pub fn s1_t1_deformable(x: &SubschemeModel) -> bool {
    let (s1, t1) = (x.class.s1(), x.class.t1());
    x.theta
        .as_fn()
        .connected_about(s1 + x.h, t1 + x.h - 1)
        .expect("theta is nonnegative")
}

/// The least model in the class with `s1 = t1`: elementary double link of
/// type `(t1, t1 - s1)` from a minimal element.
pub fn minimal_m(class: &Arc<LinkageClass>) -> SubschemeModel {
    let minimal = SubschemeModel::minimal(class.clone());
    double_link(
        &minimal,
        class.t1(),
        class.t1() - class.s1(),
        LinkKind::Elementary,
    )
    .expect("t1 >= s0 always holds")
}

/// Whether `δ = s0 - e - n - 1 > 0`, forcing a unique minimal element.
pub fn unique_minimal(class: &LinkageClass) -> bool {
    class.delta() > 0
}

/// Whether `s0(X) > e + n + 1 + h_X`.
pub fn contains_minimal(x: &SubschemeModel) -> bool {
    x.s0() > x.class.e() + x.class.n() + 1 + x.h
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntegralVariant {
    /// Connectedness about `[s0 + h, t1 + h - 1]`.
    StrictS0,
    /// Connectedness about `[s1 + h, t1 + h - 1]` plus `θ_a <= s0 + h`.
    CombinedS1,
}

impl std::str::FromStr for IntegralVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict-s0" => Ok(IntegralVariant::StrictS0),
            "combined-s1" => Ok(IntegralVariant::CombinedS1),
            other => Err(Error::Unknown(format!("integrality variant '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralVerdict {
    pub variant: IntegralVariant,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Numeric necessary conditions for an integral representative.
pub fn integral_necessary(x: &SubschemeModel, variant: IntegralVariant) -> IntegralVerdict {
    let c = &x.class;
    let h = x.h;
    let theta = x.theta.as_fn();
    let mut failures = Vec::new();
    let lo = match variant {
        IntegralVariant::StrictS0 => c.s0() + h,
        IntegralVariant::CombinedS1 => c.s1() + h,
    };
    let hi = c.t1() + h - 1;
    if !theta.connected_about(lo, hi).expect("theta is nonnegative") {
        failures.push(format!("theta is not connected about [{lo}, {hi}]"));
    }
    if variant == IntegralVariant::CombinedS1 {
        if let Some(a) = x.theta.lowest() {
            if a > c.s0() + h {
                failures.push(format!("theta_a = {a} exceeds s0 + h = {}", c.s0() + h));
            }
        }
    }
    let cap = c.e() + c.n() + 1 + h;
    if x.s0() > cap {
        failures.push(format!("s0(X) = {} exceeds e + n + 1 + h = {cap}", x.s0()));
    }
    IntegralVerdict {
        variant,
        pass: failures.is_empty(),
        failures,
    }
}

/// One elementary double link of an integral chain with its validation notes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralStep {
    pub a: i64,
    pub w: i64,
    pub notes: Vec<String>,
}

/// Splits `x ≤ y` into elementary double links `(A, w)`, each checked
/// against `A = s0(X') or A >= s1(X')` and `A <= e(X') + n + 1 + w`.
pub fn integral_chain(x: &SubschemeModel, y: &SubschemeModel) -> Result<Vec<IntegralStep>> {
    if dominates_model(x, y)?.is_none() {
        return Err(Error::NotDominatingModel);
    }
    let n = x.class.n();
    let mut out = Vec::new();
    let mut cur = x.clone();
    while cur.h < y.h {
        let rel = relative_eta_of(&cur, y)?;
        let lo = rel.lowest().ok_or(Error::NotDominatingModel)?;
        let r = (lo..)
            .find(|&l| rel.get(l) != 0 && rel.get(l + 1) == 0)
            .expect("finite support");
        let a = r - (y.h - cur.h) + 1;
        let w = r - lo + 1;
        let (s0, s1, e) = (cur.s0(), cur.s1(), cur.e());
        if !(a == s0 || a >= s1) {
            return Err(Error::IntegralStep {
                a,
                w,
                reason: format!("A is neither s0(X') = {s0} nor >= s1(X') = {s1}"),
            });
        }
        if a > e + n + 1 + w {
            return Err(Error::IntegralStep {
                a,
                w,
                reason: format!("A exceeds e(X') + n + 1 + w = {}", e + n + 1 + w),
            });
        }
        let mut notes = Vec::new();
        let t1 = t1_bound(&cur);
        if a != s0 && a < t1 {
            notes.push(format!(
                "A = {a} >= s1(X') = {s1} but below the t1 bound {t1}"
            ));
        }
        cur = double_link(&cur, a, w, LinkKind::Elementary)?;
        out.push(IntegralStep { a, w, notes });
    }
    Ok(out)
}

/// Replays an integral chain from `x`.
pub fn replay_integral(x: &SubschemeModel, chain: &[IntegralStep]) -> Result<SubschemeModel> {
    let steps: Vec<_> = chain
        .iter()
        .map(|st| DoubleLinkStep::elementary(st.a, st.w))
        .collect();
    replay(x, &steps)
}

/// Every valid model of height at most `max_height` with θ supported in `[lo, hi]`.
pub fn enumerate_models(
    class: &Arc<LinkageClass>,
    max_height: i64,
    lo: i64,
    hi: i64,
) -> Result<Vec<SubschemeModel>> {
    let mut out = Vec::new();
    for h in 0..=max_height {
        for theta in crate::domination::enumerate_thetas(class.s0(), h, lo, hi)? {
            out.push(SubschemeModel::new(class.clone(), h, theta)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn nat(pairs: &[(i64, i64)]) -> NatFn {
        NatFn::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn model(class: &Arc<LinkageClass>, h: i64, theta: &[(i64, i64)]) -> SubschemeModel {
        SubschemeModel::new(class.clone(), h, nat(theta)).unwrap()
    }

    fn ch(pairs: &[(i64, i64)]) -> AdmissibleCharacter {
        AdmissibleCharacter::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn model_gamma_examples() {
        let c = fixtures::two_skew_lines();
        assert_eq!(
            model_gamma(&model(&c, 1, &[(8, 1)])),
            ch(&[(0, -1), (1, -1), (2, -1), (3, 3), (4, -1), (8, 1)])
        );
        assert_eq!(
            &model_gamma(&SubschemeModel::minimal(c.clone())),
            c.gamma0()
        );
        assert_eq!(
            model_gamma(&model(&c, 6, &[])),
            ch(&[(0, -1), (1, -1), (8, 3), (9, -1)])
        );
    }

    #[test]
    fn invariants_examples() {
        let c = fixtures::two_skew_lines();
        let inv = invariants(&model(&c, 1, &[(8, 1)])).unwrap();
        assert_eq!((inv.s0, inv.s1, inv.e, inv.degree), (3, 3, 5, 10));
        let inv = invariants(&model(&c, 6, &[])).unwrap();
        assert_eq!((inv.s0, inv.s1, inv.e, inv.degree), (2, 8, 4, 14));
        let inv = invariants(&SubschemeModel::minimal(c)).unwrap();
        assert_eq!((inv.s0, inv.s1, inv.e, inv.degree), (2, 2, -2, 2));
    }

    #[test]
    fn double_link_examples() {
        let c = fixtures::two_skew_lines();
        let min = SubschemeModel::minimal(c.clone());
        let x = double_link(&min, 8, 1, LinkKind::Elementary).unwrap();
        assert!(x.same_position(&model(&c, 1, &[(8, 1)])));
        let x = double_link(&min, 2, 1, LinkKind::Basic).unwrap();
        assert!(x.same_position(&model(&c, 1, &[])));
        assert!(matches!(
            double_link(&min, 1, 1, LinkKind::Basic),
            Err(Error::LinkDegreeTooSmall { s: 1, s0: 2 })
        ));
    }

    #[test]
    fn height_one_links_follow_the_two_cases() {
        // Relative θ vanishes for s = s0(X) and is a unit at s for s > s0(X).
        let c = fixtures::two_skew_lines();
        let x = model(&c, 1, &[(8, 1)]);
        let rel = |y: &SubschemeModel| {
            relative_theta_from_witnesses(x.theta(), x.h(), y.theta(), y.h()).unwrap()
        };
        let y = double_link(&x, x.s0(), 1, LinkKind::Basic).unwrap();
        assert_eq!(rel(&y), NatFn::zero());
        let y = double_link(&x, 5, 1, LinkKind::Basic).unwrap();
        assert_eq!(y.theta(), &nat(&[(5, 1), (9, 1)]));
        assert_eq!(rel(&y), nat(&[(5, 1)]));
    }

    #[test]
    fn dominates_model_examples() {
        let c = fixtures::two_skew_lines();
        let x = model(&c, 1, &[(8, 1)]);
        assert_eq!(
            dominates_model(&x, &model(&c, 2, &[(8, 1), (9, 1)])).unwrap(),
            Some(1)
        );
        assert_eq!(dominates_model(&x, &x).unwrap(), Some(0));
        assert_eq!(dominates_model(&x, &model(&c, 1, &[(9, 1)])).unwrap(), None);
        let other = SubschemeModel::minimal(fixtures::four_lines_on_quadric());
        assert!(matches!(
            dominates_model(&x, &other),
            Err(Error::CrossClass)
        ));
    }

    #[test]
    fn lr_decompose_examples() {
        let c = fixtures::two_skew_lines();
        let min = SubschemeModel::minimal(c.clone());
        assert_eq!(
            lr_decompose(&min, &model(&c, 1, &[(8, 1)])).unwrap(),
            vec![DoubleLinkStep::basic(8, 1)]
        );
        let target = model(&c, 2, &[(8, 1), (9, 1)]);
        assert_eq!(target.eta(), nat(&[(8, 1), (9, 1)]));
        let steps = lr_decompose(&min, &target).unwrap();
        assert_eq!(steps, vec![DoubleLinkStep::basic(8, 1); 2]);
        assert!(replay(&min, &steps).unwrap().same_position(&target));
        assert!(lr_decompose(&target, &target).unwrap().is_empty());
        assert!(lr_decompose(&target, &min).is_err());
    }

    #[test]
    fn link_dual_examples() {
        let c = fixtures::two_skew_lines();
        let y = link_dual(&model(&c, 1, &[(8, 1)]), 3, 8).unwrap();
        assert_eq!((y.h(), y.theta().clone()), (6, NatFn::zero()));
        assert_eq!(y.eta(), NatFn::indicator(2, 7));
        assert_eq!(invariants(&y).unwrap().degree, 14);
        let y = link_dual(&SubschemeModel::minimal(c.clone()), 2, 2).unwrap();
        assert_eq!((y.h(), y.theta().is_zero()), (0, true));
        let back = link_dual(&link_dual(&model(&c, 1, &[(8, 1)]), 3, 8).unwrap(), 3, 8).unwrap();
        assert!(back.same_position(&model(&c, 1, &[(8, 1)])));
    }

    #[test]
    fn link_dual_preconditions() {
        let c = fixtures::two_skew_lines();
        let x = model(&c, 1, &[(8, 1)]);
        assert!(matches!(
            link_dual(&x, 2, 8),
            Err(Error::LinkPrecondition(_))
        ));
        assert!(matches!(
            link_dual(&x, 3, 7),
            Err(Error::LinkPrecondition(_))
        ));
        let lone = Arc::new(LinkageClass::new(3, c.gamma0().clone(), 2, -2, None).unwrap());
        assert!(matches!(
            link_dual(&SubschemeModel::minimal(lone), 2, 2),
            Err(Error::MissingDual)
        ));
    }

    #[test]
    fn link_minimal_ci_examples() {
        let c = fixtures::two_skew_lines();
        assert_eq!(
            link_minimal_ci(&SubschemeModel::minimal(c.clone())).unwrap(),
            NatFn::zero()
        );
        let x = model(&c, 1, &[(8, 1)]);
        assert_eq!(link_minimal_ci(&x).unwrap(), NatFn::zero());
        assert_eq!(
            &link_minimal_ci(&x).unwrap(),
            link_dual(&x, x.s0(), t1_bound(&x)).unwrap().theta()
        );
        let q = fixtures::four_lines_on_quadric();
        let x = model(&q, 2, &[(4, 1), (5, 1)]);
        assert_eq!((x.s0(), t1_bound(&x)), (4, 4));
        assert_eq!(link_minimal_ci(&x).unwrap(), NatFn::zero());
        // Two blocks: the bound sits at the second one, not at θ_a.
        let x = model(&c, 3, &[(6, 1), (9, 1)]);
        assert!(matches!(link_minimal_ci(&x), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn t1_bound_examples() {
        let c = fixtures::two_skew_lines();
        assert_eq!(t1_bound(&model(&c, 1, &[(8, 1)])), 8);
        assert_eq!(t1_bound(&model(&c, 1, &[])), 3);
        assert_eq!(
            t1_bound(&model(
                &fixtures::four_lines_on_quadric(),
                2,
                &[(4, 1), (5, 1)]
            )),
            4
        );
    }

    #[test]
    fn t1_witness_examples() {
        let c = fixtures::two_skew_lines();
        let x = model(&c, 1, &[(8, 1)]);
        let w = t1_witness_chain(&x);
        assert_eq!(w.steps, vec![DoubleLinkStep::elementary(8, 1)]);
        assert_eq!(w.base_height, 0);
        assert!(w.replay(&c).unwrap().same_position(&x));

        let w = t1_witness_chain(&model(&c, 1, &[]));
        assert!(w.steps.is_empty());
        assert_eq!(w.minimal_pair, (2, 3));

        let x = model(&c, 3, &[(8, 1), (9, 1)]);
        let w = t1_witness_chain(&x);
        assert_eq!(w.steps, vec![DoubleLinkStep::elementary(8, 2)]);
        assert_eq!(w.base_height, 1);
        assert!(w.replay(&c).unwrap().same_position(&x));
    }

    #[test]
    fn s1_t1_deformable_examples() {
        let q = fixtures::four_lines_on_quadric();
        assert!(s1_t1_deformable(&model(&q, 2, &[(4, 1), (5, 1)])));
        let c = fixtures::two_skew_lines();
        assert!(!s1_t1_deformable(&model(&c, 1, &[(8, 1)])));
        assert!(s1_t1_deformable(&SubschemeModel::minimal(c)));
    }

    #[test]
    fn minimal_m_examples() {
        let c = fixtures::two_skew_lines();
        assert!(minimal_m(&c).same_position(&SubschemeModel::minimal(c.clone())));
        let syn = fixtures::synthetic_s1_below_t1();
        let m = minimal_m(&syn);
        assert_eq!((m.h(), m.theta().clone()), (2, nat(&[(5, 1), (6, 1)])));
        assert_eq!(t1_bound(&m), 5);
        assert_eq!(m.s1(), 5);
    }

    #[test]
    fn uniqueness_examples() {
        let r = fixtures::rational_degree_ten();
        assert_eq!(r.delta(), 2);
        assert!(unique_minimal(&r));
        assert!(!unique_minimal(&fixtures::two_skew_lines()));
        assert!(contains_minimal(&model(&r, 1, &[(6, 1)])));
    }

    #[test]
    fn integral_necessary_examples() {
        let q = fixtures::four_lines_on_quadric();
        let x = model(&q, 2, &[(4, 1), (5, 1)]);
        assert!(integral_necessary(&x, IntegralVariant::StrictS0).pass);
        assert!(integral_necessary(&x, IntegralVariant::CombinedS1).pass);
        let x = model(&q, 1, &[]);
        assert!(!integral_necessary(&x, IntegralVariant::StrictS0).pass);
        assert!(integral_necessary(&x, IntegralVariant::CombinedS1).pass);
        let c = fixtures::two_skew_lines();
        let x = model(&c, 1, &[(8, 1)]);
        for v in [IntegralVariant::StrictS0, IntegralVariant::CombinedS1] {
            assert!(!integral_necessary(&x, v).pass);
        }
        let combined = integral_necessary(&x, IntegralVariant::CombinedS1);
        assert!(
            combined.failures.iter().any(|f| f.contains("theta_a = 8")),
            "{combined:?}"
        );
    }

    #[test]
    fn integral_chain_examples() {
        let q = fixtures::four_lines_on_quadric();
        let x = model(&q, 2, &[(4, 1), (5, 1)]);
        // The target's η is {4,5,6}; its θ drops the unit at s0(Y) = 4.
        let y = model(&q, 3, &[(5, 1), (6, 1)]);
        assert_eq!(y.eta(), nat(&[(4, 1), (5, 1), (6, 1)]));
        assert_eq!(y, double_link(&x, 4, 1, LinkKind::Elementary).unwrap());
        let chain = integral_chain(&x, &y).unwrap();
        assert_eq!(
            chain.iter().map(|s| (s.a, s.w)).collect::<Vec<_>>(),
            vec![(4, 1)]
        );
        assert!(replay_integral(&x, &chain).unwrap().same_position(&y));
        assert!(integral_chain(&x, &x).unwrap().is_empty());

        let c = fixtures::two_skew_lines();
        let x = model(&c, 1, &[(8, 1)]);
        let y = model(&c, 2, &[(8, 1), (9, 1)]);
        let chain = integral_chain(&x, &y).unwrap();
        assert_eq!(
            chain.iter().map(|s| (s.a, s.w)).collect::<Vec<_>>(),
            vec![(8, 1)]
        );
        assert!(replay_integral(&x, &chain).unwrap().same_position(&y));
    }

    #[test]
    fn class_validation() {
        let g = fixtures::two_skew_lines().gamma0().clone();
        assert!(LinkageClass::new(2, g.clone(), 2, -2, None).is_err());
        assert!(LinkageClass::new(3, g.clone(), 1, -2, None).is_err());
        let wrong = LinkageClass::new(3, ch(&[(0, -1), (1, -1), (2, 2)]), 3, -1, None).unwrap();
        assert!(LinkageClass::new(3, g, 2, -2, Some(wrong)).is_err());
    }

    #[test]
    fn class_json_roundtrip() {
        let c = fixtures::two_skew_lines();
        let text = serde_json::to_string(&*c).unwrap();
        let back: LinkageClass = serde_json::from_str(&text).unwrap();
        assert_eq!(&back, &*c);
        let acm = text.replacen("\"non_acm\":true", "\"non_acm\":false", 1);
        assert!(serde_json::from_str::<LinkageClass>(&acm).is_err());
    }

    #[test]
    fn dual_of_dual_keeps_a_back_reference() {
        let c = fixtures::two_skew_lines();
        let d = c.dual_class().unwrap();
        let dd = d.dual_class().unwrap();
        assert!(dd.same_class(&c));
        assert!(dd.has_dual());
    }
}
