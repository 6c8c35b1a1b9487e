//! Hilbert data from γ-characters, and γ-characters from resolution-shaped data.
//!
//! Resolutions are modeled by their twists only: a dissocié sheaf `⊕ 𝒪(-a)`
//! is a [`TwistMultiset`], and the non-free part `𝒩₀` (or `ℰ₀`) is recorded
//! through `Δⁿ h⁰`, a [`CoreDelta`]. Since `Δⁿ h⁰ 𝒪(l - a) = step(l - a)`,
//! every γ computed here is a signed sum of shifted step functions.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::character::AdmissibleCharacter;
use crate::error::{Error, Result};
use crate::intfn::{EventuallyConstant, IntFn};
use crate::oracle::{hilbert_oracle, HilbertConfig};

/// `C(x, k)` for any integer `x` and `k >= 0`, as the polynomial `x(x-1)…(x-k+1)/k!`.
pub fn binomial(x: i64, k: i64) -> i64 {
    assert!(k >= 0, "binomial with negative k");
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (x as i128 - i) / (i + 1);
    }
    i64::try_from(acc).expect("binomial coefficient overflows i64")
}

/// A multiset of twists `a` standing for `⊕ 𝒪(-a)`, kept sorted.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistMultiset(Vec<i64>);

impl TwistMultiset {
    pub fn new(mut twists: Vec<i64>) -> Self {
        twists.sort_unstable();
        Self(twists)
    }

    pub fn twists(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shifted(&self, by: i64) -> Self {
        Self(self.0.iter().map(|a| a + by).collect())
    }

    /// `{d - a}`.
    pub fn reflected(&self, d: i64) -> Self {
        Self::new(self.0.iter().map(|a| d - a).collect())
    }

    pub fn with(&self, extra: &[i64]) -> Self {
        Self::new(self.0.iter().chain(extra).copied().collect())
    }

    /// `#{a : a <= x}`.
    pub fn sharp(&self, x: i64) -> i64 {
        self.0.partition_point(|&a| a <= x) as i64
    }

    /// `Σ_a step(l - a)` as jumps: one unit at every twist.
    fn jumps(&self) -> IntFn {
        self.0.iter().map(|&a| (a, 1)).collect()
    }
}

impl From<Vec<i64>> for TwistMultiset {
    fn from(v: Vec<i64>) -> Self {
        Self::new(v)
    }
}

impl fmt::Debug for TwistMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl Serialize for TwistMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwistMultiset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Self::new(Vec::deserialize(d)?))
    }
}

/// `h⁰(⊕ 𝒪(l - a))` on projective n-space.
pub fn h0_dissocie(t: &TwistMultiset, n: i64, l: i64) -> i64 {
    t.twists()
        .iter()
        .filter(|&&a| l >= a)
        .map(|&a| binomial(l - a + n, n))
        .sum()
}

/// γ of a free resolution `stages[0] <- stages[1] <- …` of the ideal:
/// `γ(l) = Σ_i (-1)^i Σ_{a ∈ stage_i} step(l - a) - step(l)`.
pub fn gamma_from_free_resolution(stages: &[TwistMultiset]) -> Result<AdmissibleCharacter> {
    let mut jumps = IntFn::spike(0, -1);
    for (i, stage) in stages.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for &a in stage.twists() {
            jumps.add_at(a, sign);
        }
    }
    character_from_jumps(jumps)
}

fn character_from_jumps(jumps: IntFn) -> Result<AdmissibleCharacter> {
    let ec = EventuallyConstant::partial_sums(jumps);
    let gamma = ec.as_finite().ok_or_else(|| {
        Error::InvalidResolution(format!(
            "ranks do not balance: gamma tends to {}",
            ec.tail()
        ))
    })?;
    AdmissibleCharacter::new(gamma)
}

/// `Δⁿ h⁰` of the non-free summand: `window` below `tail_start`, then the
/// constant `tail_rank`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoreDelta {
    window: IntFn,
    tail_rank: i64,
    tail_start: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCore {
    window: IntFn,
    tail_rank: i64,
    tail_start: i64,
}

impl CoreDelta {
    pub fn new(window: IntFn, tail_rank: i64, tail_start: i64) -> Result<Self> {
        if let Some((_, hi)) = window.support_range() {
            if hi >= tail_start {
                return Err(Error::InvalidResolution(format!(
                    "core window reaches degree {hi}, at or past the tail start {tail_start}"
                )));
            }
        }
        let mut jumps = window.diff(1)?;
        jumps.add_at(tail_start, tail_rank);
        Self::from_function(&EventuallyConstant::partial_sums(jumps))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Canonical form of an eventually constant function; the tail start is
    /// the least degree from which the value is constant.
    pub fn from_function(f: &EventuallyConstant) -> Result<Self> {
        let tail = f.tail();
        if tail < 0 {
            return Err(Error::InvalidResolution(format!(
                "core has negative tail rank {tail}"
            )));
        }
        let Some((lo, hi)) = f.jumps().support_range() else {
            return Ok(Self::zero());
        };
        let tail_start = (lo - 1..=hi)
            .rev()
            .find(|&l| f.value(l) != tail)
            .map_or(lo, |l| l + 1);
        let window = (lo..tail_start).map(|l| (l, f.value(l))).collect();
        Ok(Self {
            window,
            tail_rank: tail,
            tail_start,
        })
    }

    pub fn function(&self) -> EventuallyConstant {
        let mut jumps = self.window.diff(1).expect("order 1 is valid");
        jumps.add_at(self.tail_start, self.tail_rank);
        EventuallyConstant::partial_sums(jumps)
    }

    pub fn value(&self, l: i64) -> i64 {
        if l >= self.tail_start {
            self.tail_rank
        } else {
            self.window.get(l)
        }
    }

    pub fn window(&self) -> &IntFn {
        &self.window
    }

    pub fn tail_rank(&self) -> i64 {
        self.tail_rank
    }

    pub fn tail_start(&self) -> i64 {
        self.tail_start
    }

    pub fn is_zero(&self) -> bool {
        self.tail_rank == 0 && self.window.is_zero()
    }
}

impl<'de> Deserialize<'de> for CoreDelta {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCore::deserialize(d)?;
        CoreDelta::new(raw.window, raw.tail_rank, raw.tail_start).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ResolutionKind {
    N,
    E,
}

/// Twist data of a short resolution.
///
/// * N-type: `0 → P → 𝒩₀(-core_twist) ⊕ Q → 𝓘_X → 0`
/// * E-type: `0 → ℰ₀(-core_twist) ⊕ P → Q → 𝓘_X → 0`
///
/// `dual_core` is `Δⁿ h⁰` of the dual sheaf `𝒩₀^∨`; a link swaps it with `core`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionData {
    pub kind: ResolutionKind,
    pub p: TwistMultiset,
    #[serde(default)]
    pub q: TwistMultiset,
    #[serde(default)]
    pub core: CoreDelta,
    #[serde(default)]
    pub core_twist: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_core: Option<CoreDelta>,
}

impl ResolutionData {
    /// A resolution with dissocié middle term only.
    pub fn dissocie(kind: ResolutionKind, p: Vec<i64>, q: Vec<i64>) -> Self {
        Self {
            kind,
            p: p.into(),
            q: q.into(),
            core: CoreDelta::zero(),
            core_twist: 0,
            dual_core: Some(CoreDelta::zero()),
        }
    }

    fn core_jumps(&self) -> IntFn {
        self.core.function().jumps().shift(self.core_twist)
    }
}

/// γ of an N-type resolution:
/// `core(l - core_twist) + Σ_q step(l - q) - Σ_p step(l - p) - step(l)`.
pub fn gamma_from_n_data(res: &ResolutionData) -> Result<AdmissibleCharacter> {
    if res.kind != ResolutionKind::N {
        return Err(Error::InvalidResolution(
            "expected an N-type resolution".into(),
        ));
    }
    gamma_of_resolution(res)
}

/// γ of a resolution of either kind.
pub fn gamma_of_resolution(res: &ResolutionData) -> Result<AdmissibleCharacter> {
    let mut jumps = res.q.jumps() - &res.p.jumps();
    jumps.add_at(0, -1);
    match res.kind {
        ResolutionKind::N => jumps += &res.core_jumps(),
        ResolutionKind::E => jumps -= &res.core_jumps(),
    }
    character_from_jumps(jumps)
}

/// Solves the N-type identity for the core, with `core_twist = 0`.
pub fn core_from_minimal(
    gamma0: &AdmissibleCharacter,
    p: &TwistMultiset,
    q: &TwistMultiset,
) -> Result<CoreDelta> {
    let mut jumps = gamma0.as_fn().diff(1)? + p.jumps() - q.jumps();
    jumps.add_at(0, 1);
    CoreDelta::from_function(&EventuallyConstant::partial_sums(jumps))
}

/// N-type resolution of a minimal element with kernel `p` and dissocié part `q`.
pub fn n_type_from_minimal(
    gamma0: &AdmissibleCharacter,
    p: Vec<i64>,
    q: Vec<i64>,
) -> Result<ResolutionData> {
    let (p, q) = (TwistMultiset::new(p), TwistMultiset::new(q));
    let core = core_from_minimal(gamma0, &p, &q)?;
    Ok(ResolutionData {
        kind: ResolutionKind::N,
        p,
        q,
        core,
        core_twist: 0,
        dual_core: None,
    })
}

/// Fills in `dual_core` so that linking `res` by `(s, t)` yields `target`.
pub fn bootstrap_dual_core(
    res: &ResolutionData,
    s: i64,
    t: i64,
    target: &AdmissibleCharacter,
) -> Result<ResolutionData> {
    let d = s + t;
    let linked_p = res.q.reflected(d);
    let linked_q = res.p.reflected(d).with(&[s, t]);
    // E-type: core(l - ct') = Σ_q step - Σ_p step - step(l) - γ(l); N-type flips the sign.
    let mut jumps = linked_q.jumps() - &linked_p.jumps();
    jumps.add_at(0, -1);
    jumps -= &target.as_fn().diff(1)?;
    if res.kind == ResolutionKind::E {
        jumps = -jumps;
    }
    let dual = EventuallyConstant::partial_sums(jumps.shift(res.core_twist - d));
    let mut out = res.clone();
    out.dual_core = Some(CoreDelta::from_function(&dual)?);
    Ok(out)
}

/// Double link of type `(s, h)`: every twist shifts by `h`, `s + h` joins the
/// kernel and `s` the middle term.
pub fn resolution_double_link(res: &ResolutionData, s: i64, h: i64) -> ResolutionData {
    ResolutionData {
        kind: res.kind,
        p: res.p.shifted(h).with(&[s + h]),
        q: res.q.shifted(h).with(&[s]),
        core: res.core.clone(),
        core_twist: res.core_twist + h,
        dual_core: res.dual_core.clone(),
    }
}

/// Link by a complete intersection of type `(s, t)` via the mapping cone.
pub fn resolution_link(res: &ResolutionData, s: i64, t: i64) -> Result<ResolutionData> {
    let d = s + t;
    let dual_core = match &res.dual_core {
        Some(c) => c.clone(),
        None if res.core.is_zero() => CoreDelta::zero(),
        None => {
            return Err(Error::InvalidResolution(
                "dual core is unknown; bootstrap it first".into(),
            ))
        }
    };
    Ok(ResolutionData {
        kind: match res.kind {
            ResolutionKind::N => ResolutionKind::E,
            ResolutionKind::E => ResolutionKind::N,
        },
        p: res.q.reflected(d),
        q: res.p.reflected(d).with(&[s, t]),
        core: dual_core,
        core_twist: d - res.core_twist,
        dual_core: Some(res.core.clone()),
    })
}

/// Cancels every twist shared by the kernel and the middle term.
///
/// This is syntactic: it does not certify minimality of an actual resolution.
pub fn minimize_resolution(res: &ResolutionData) -> ResolutionData {
    let (mut p, mut q) = (Vec::new(), Vec::new());
    let (a, b) = (res.p.twists(), res.q.twists());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                p.push(*x);
                i += 1;
            }
            (Some(x), None) => {
                p.push(*x);
                i += 1;
            }
            (_, Some(y)) => {
                q.push(*y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    ResolutionData {
        p: TwistMultiset(p),
        q: TwistMultiset(q),
        ..res.clone()
    }
}

/// Whether `h = h2 - h1 >= 0` and `r#(a) >= s#(a)` for every `a`.
pub fn resolution_domination_check(r: &TwistMultiset, s: &TwistMultiset, h1: i64, h2: i64) -> bool {
    h2 >= h1
        && r.twists()
            .iter()
            .chain(s.twists())
            .all(|&a| r.sharp(a) >= s.sharp(a))
}

/// Brings two N-type resolutions with the same core onto a common middle
/// term `𝒩₀(-ct_Y) ⊕ Q_X(-h) ⊕ Q_Y`, returning the padded kernels and `h`.
pub fn pad_to_common_core(
    x: &ResolutionData,
    y: &ResolutionData,
) -> Result<(TwistMultiset, TwistMultiset, i64)> {
    if x.kind != ResolutionKind::N || y.kind != ResolutionKind::N {
        return Err(Error::InvalidResolution(
            "padding needs two N-type resolutions".into(),
        ));
    }
    if x.core != y.core {
        return Err(Error::InvalidResolution(
            "resolutions have different cores".into(),
        ));
    }
    let h = y.core_twist - x.core_twist;
    if h < 0 {
        return Err(Error::NegativeHeight(h));
    }
    let (px, qx) = (x.p.shifted(h), x.q.shifted(h));
    Ok((px.with(y.q.twists()), y.p.with(qx.twists()), h))
}

/// `h⁰ 𝓘_X(l) = h⁰ 𝒪(l) + Σ_{k <= l} γ(k) C(l - k + n - 1, n - 1)`.
pub fn hilbert_function(gamma: &AdmissibleCharacter, n: i64, l: i64) -> i64 {
    if l < 0 {
        return 0;
    }
    let free = binomial(l + n, n);
    let correction: i64 = gamma
        .as_fn()
        .iter()
        .filter(|&(k, _)| k <= l)
        .map(|(k, v)| v * binomial(l - k + n - 1, n - 1))
        .sum();
    free + correction
}

/// Hilbert polynomial of `X` in the binomial basis: `P(l) = Σ_i a_i C(l, i)`,
/// returned as `[a_0, …, a_{n-2}]`.
pub fn hilbert_polynomial(gamma: &AdmissibleCharacter, n: i64) -> Vec<i64> {
    let p = |l: i64| -> i64 {
        -gamma
            .as_fn()
            .iter()
            .map(|(k, v)| v * binomial(l - k + n - 1, n - 1))
            .sum::<i64>()
    };
    let mut values: Vec<i64> = (0..n).map(p).collect();
    let mut coeffs = Vec::with_capacity(n as usize);
    while !values.is_empty() {
        coeffs.push(values[0]);
        values = values.windows(2).map(|w| w[1] - w[0]).collect();
    }
    debug_assert_eq!(coeffs.last(), Some(&0), "characters sum to zero");
    coeffs.truncate((n - 1) as usize);
    coeffs
}

/// Degree and (for curves in P³) arithmetic genus read off the Hilbert polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeGenus {
    pub degree: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
}

pub fn degree_genus(gamma: &AdmissibleCharacter, n: i64) -> DegreeGenus {
    let coeffs = hilbert_polynomial(gamma, n);
    DegreeGenus {
        degree: coeffs[(n - 2) as usize],
        genus: (n == 3).then(|| 1 - coeffs[0]),
    }
}

/// Name, resolution stages, oracle configuration and `(degree, genus)`.
pub type GateFixture = (&'static str, Vec<TwistMultiset>, HilbertConfig, (i64, i64));

/// The free-resolution fixtures of the degree gate.
pub fn gate_fixtures() -> Vec<GateFixture> {
    let t = |v: &[i64]| TwistMultiset::new(v.to_vec());
    vec![
        (
            "line",
            vec![t(&[1, 1]), t(&[2])],
            HilbertConfig::Line,
            (1, 0),
        ),
        (
            "ci(2,2)",
            vec![t(&[2, 2]), t(&[4])],
            HilbertConfig::CompleteIntersection { a: 2, b: 2 },
            (4, 1),
        ),
        (
            "two skew lines",
            vec![t(&[2, 2, 2, 2]), t(&[3, 3, 3, 3]), t(&[4])],
            HilbertConfig::DisjointLines { d: 2 },
            (2, -1),
        ),
    ]
}

/// Runs the gate: for each fixture, γ from the resolution must reproduce the
/// closed-form `h⁰` at all degrees `<= 10`, the expected `(degree, genus)`,
/// and `Σ l·γ(l)` must equal the leading Hilbert coefficient.
pub fn run_degree_gate() -> Result<(), String> {
    for (name, stages, config, (degree, genus)) in gate_fixtures() {
        let gamma = gamma_from_free_resolution(&stages).map_err(|e| format!("{name}: {e}"))?;
        for l in 0..=10 {
            let want = hilbert_oracle(&config, l).map_err(|e| format!("{name}: {e}"))?;
            let got = hilbert_function(&gamma, 3, l);
            if got != want {
                return Err(format!("{name}: h0 at l={l} is {got}, oracle says {want}"));
            }
        }
        let dg = degree_genus(&gamma, 3);
        if (dg.degree, dg.genus) != (degree, Some(genus)) {
            return Err(format!(
                "{name}: (degree, genus) = ({}, {:?}), expected ({degree}, {genus})",
                dg.degree, dg.genus
            ));
        }
        if gamma.degree() != dg.degree {
            return Err(format!(
                "{name}: first moment {} differs from degree {}",
                gamma.degree(),
                dg.degree
            ));
        }
    }
    Ok(())
}

/// The gate result, computed once per process.
pub fn degree_functional_gate() -> Result<()> {
    static GATE: OnceLock<Result<(), String>> = OnceLock::new();
    GATE.get_or_init(run_degree_gate)
        .clone()
        .map_err(Error::DegreeGate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linkage::{double_link, model_gamma, LinkKind, SubschemeModel};

    fn t(v: &[i64]) -> TwistMultiset {
        TwistMultiset::new(v.to_vec())
    }

    fn ch(pairs: &[(i64, i64)]) -> AdmissibleCharacter {
        AdmissibleCharacter::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn skew_n() -> ResolutionData {
        n_type_from_minimal(fixtures::two_skew_lines().gamma0(), vec![4], vec![]).unwrap()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(-1, 2), 1);
        assert_eq!(binomial(-3, 3), -10);
        assert_eq!(binomial(7, 0), 1);
    }

    #[test]
    fn h0_dissocie_examples() {
        assert_eq!(h0_dissocie(&t(&[0]), 3, 2), 10);
        assert_eq!(h0_dissocie(&t(&[2, 2]), 3, 3), 8);
        assert_eq!(h0_dissocie(&t(&[4]), 3, 3), 0);
    }

    #[test]
    fn free_resolution_examples() {
        assert_eq!(
            gamma_from_free_resolution(&[t(&[1, 1]), t(&[2])]).unwrap(),
            ch(&[(0, -1), (1, 1)])
        );
        assert_eq!(
            gamma_from_free_resolution(&[t(&[2, 2]), t(&[4])]).unwrap(),
            ch(&[(0, -1), (1, -1), (2, 1), (3, 1)])
        );
        assert_eq!(
            gamma_from_free_resolution(&[t(&[2, 2, 2, 2]), t(&[3, 3, 3, 3]), t(&[4])]).unwrap(),
            fixtures::two_skew_lines().gamma0().clone()
        );
        assert!(matches!(
            gamma_from_free_resolution(&[t(&[1, 1])]),
            Err(Error::InvalidResolution(_))
        ));
    }

    #[test]
    fn core_from_minimal_examples() {
        let core =
            core_from_minimal(fixtures::two_skew_lines().gamma0(), &t(&[4]), &t(&[])).unwrap();
        assert_eq!(core.window(), &IntFn::from_pairs([(2, 4)]));
        assert_eq!((core.tail_rank(), core.tail_start()), (2, 4));
        assert_eq!((core.value(0), core.value(1), core.value(3)), (0, 0, 0));
        let ci = gamma_from_free_resolution(&[t(&[2, 2]), t(&[4])]).unwrap();
        assert!(core_from_minimal(&ci, &t(&[4]), &t(&[2, 2]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn n_data_examples() {
        assert_eq!(
            &gamma_from_n_data(&skew_n()).unwrap(),
            fixtures::two_skew_lines().gamma0()
        );
        let c = resolution_double_link(&skew_n(), 8, 1);
        assert_eq!(
            (c.p.clone(), c.q.clone(), c.core_twist),
            (t(&[5, 9]), t(&[8]), 1)
        );
        assert_eq!(
            gamma_from_n_data(&c).unwrap(),
            ch(&[(0, -1), (1, -1), (2, -1), (3, 3), (4, -1), (8, 1)])
        );
        let ci = ResolutionData::dissocie(ResolutionKind::N, vec![4], vec![2, 2]);
        assert_eq!(
            gamma_from_n_data(&ci).unwrap(),
            ch(&[(0, -1), (1, -1), (2, 1), (3, 1)])
        );
        let e = ResolutionData::dissocie(ResolutionKind::E, vec![2], vec![1, 1]);
        assert!(gamma_from_n_data(&e).is_err());
    }

    #[test]
    fn core_json_shape() {
        let core = skew_n().core;
        let text = serde_json::to_string(&core).unwrap();
        assert_eq!(
            text,
            r#"{"window":{"entries":[[2,4]]},"tail_rank":2,"tail_start":4}"#
        );
        let back: CoreDelta = serde_json::from_str(&text).unwrap();
        assert_eq!(back, core);
        let bad = r#"{"window":{"entries":[[5,4]]},"tail_rank":2,"tail_start":4}"#;
        assert!(serde_json::from_str::<CoreDelta>(bad).is_err());
    }

    #[test]
    fn core_canonicalizes_a_late_tail_start() {
        let core = CoreDelta::new(IntFn::from_pairs([(2, 4), (4, 2)]), 2, 5).unwrap();
        assert_eq!(core, skew_n().core);
    }

    #[test]
    fn hilbert_function_examples() {
        let skew = fixtures::two_skew_lines();
        assert_eq!(hilbert_function(skew.gamma0(), 3, 2), 4);
        assert_eq!(
            degree_genus(skew.gamma0(), 3),
            DegreeGenus {
                degree: 2,
                genus: Some(-1)
            }
        );
        let ci = ch(&[(0, -1), (1, -1), (2, 1), (3, 1)]);
        assert_eq!(
            degree_genus(&ci, 3),
            DegreeGenus {
                degree: 4,
                genus: Some(1)
            }
        );
        let c = ch(&[(0, -1), (1, -1), (2, -1), (3, 3), (4, -1), (8, 1)]);
        assert_eq!(degree_genus(&c, 3).degree, 10);
    }

    #[test]
    fn quadric_lines_match_oracle() {
        let q = fixtures::four_lines_on_quadric();
        for l in 0..=12 {
            let want = hilbert_oracle(&HilbertConfig::LinesOnQuadric { d: 4 }, l).unwrap();
            assert_eq!(hilbert_function(q.gamma0(), 3, l), want, "l={l}");
        }
        assert_eq!(
            degree_genus(q.gamma0(), 3),
            DegreeGenus {
                degree: 4,
                genus: Some(-3)
            }
        );
    }

    #[test]
    fn hilbert_polynomial_in_higher_dimension() {
        // A codimension-two linear space in P^4 has P(l) = C(l + 2, 2).
        let plane = ch(&[(0, -1), (1, 1)]);
        assert_eq!(hilbert_polynomial(&plane, 4), vec![1, 2, 1]);
        assert_eq!(
            degree_genus(&plane, 4),
            DegreeGenus {
                degree: 1,
                genus: None
            }
        );
    }

    #[test]
    fn gate_passes() {
        degree_functional_gate().unwrap();
    }

    #[test]
    fn double_link_commutes_with_character_level() {
        let class = fixtures::two_skew_lines();
        let min = SubschemeModel::minimal(class);
        for (s, h) in [(8, 1), (2, 1), (3, 2), (5, 0)] {
            let res = resolution_double_link(&skew_n(), s, h);
            let x = double_link(&min, s, h, LinkKind::Basic).unwrap();
            assert_eq!(
                gamma_of_resolution(&res).unwrap(),
                model_gamma(&x),
                "({s},{h})"
            );
        }
        let two = resolution_double_link(&resolution_double_link(&skew_n(), 2, 1), 3, 1);
        let x = double_link(
            &double_link(&min, 2, 1, LinkKind::Basic).unwrap(),
            3,
            1,
            LinkKind::Basic,
        )
        .unwrap();
        assert_eq!(two.core_twist, 2);
        assert_eq!(gamma_of_resolution(&two).unwrap(), model_gamma(&x));
    }

    #[test]
    fn height_zero_double_link_adds_a_cancellable_pair() {
        let res = resolution_double_link(&skew_n(), 5, 0);
        assert_eq!((res.p.clone(), res.q.clone()), (t(&[4, 5]), t(&[5])));
        assert_eq!(minimize_resolution(&res), skew_n());
    }

    #[test]
    fn line_twisted_cubic_roundtrip() {
        let line = ResolutionData::dissocie(ResolutionKind::E, vec![2], vec![1, 1]);
        assert_eq!(gamma_of_resolution(&line).unwrap(), ch(&[(0, -1), (1, 1)]));
        let cubic = resolution_link(&line, 2, 2).unwrap();
        assert_eq!(cubic.kind, ResolutionKind::N);
        assert_eq!(
            (cubic.p.clone(), cubic.q.clone()),
            (t(&[3, 3]), t(&[2, 2, 2]))
        );
        assert_eq!(
            gamma_of_resolution(&cubic).unwrap(),
            ch(&[(0, -1), (1, -1), (2, 2)])
        );
        let back = resolution_link(&cubic, 2, 2).unwrap();
        assert_eq!(
            (back.p.clone(), back.q.clone()),
            (t(&[2, 2, 2]), t(&[1, 1, 2, 2]))
        );
        let back = minimize_resolution(&back);
        assert_eq!(
            (back.kind, back.p.clone(), back.q.clone()),
            (ResolutionKind::E, t(&[2]), t(&[1, 1]))
        );
        assert_eq!(gamma_of_resolution(&back).unwrap(), ch(&[(0, -1), (1, 1)]));
    }

    #[test]
    fn minimize_is_identity_on_disjoint_twists() {
        let r = ResolutionData::dissocie(ResolutionKind::N, vec![4], vec![2, 2]);
        assert_eq!(minimize_resolution(&r), r);
    }

    #[test]
    fn bootstrapped_dual_core_agrees_with_link_dual() {
        let class = fixtures::two_skew_lines();
        let res = bootstrap_dual_core(&skew_n(), 2, 2, class.gamma0()).unwrap();
        let dual = res.dual_core.clone().unwrap();
        assert_eq!(
            dual.window(),
            &IntFn::from_pairs([(-4, 1), (-3, 1), (-2, -1), (-1, 3)])
        );
        assert_eq!((dual.tail_rank(), dual.tail_start()), (2, 0));
        assert_eq!(
            &gamma_of_resolution(&resolution_link(&res, 2, 2).unwrap()).unwrap(),
            class.gamma0()
        );

        // The dual core was fixed by the minimal pair; linking C is an independent check.
        let c = resolution_double_link(&res, 8, 1);
        let linked = resolution_link(&c, 3, 8).unwrap();
        let x = double_link(&SubschemeModel::minimal(class), 8, 1, LinkKind::Elementary).unwrap();
        let y = crate::linkage::link_dual(&x, 3, 8).unwrap();
        assert_eq!(gamma_of_resolution(&linked).unwrap(), model_gamma(&y));
        assert_eq!(
            gamma_of_resolution(&linked).unwrap(),
            ch(&[(0, -1), (1, -1), (8, 3), (9, -1)])
        );
    }

    #[test]
    fn link_without_dual_core_is_rejected() {
        assert!(resolution_link(&skew_n(), 2, 2).is_err());
    }

    #[test]
    fn sharp_comparison_examples() {
        assert!(resolution_domination_check(&t(&[5, 8]), &t(&[5, 9]), 0, 1));
        assert!(resolution_domination_check(&t(&[5, 9]), &t(&[5, 9]), 0, 0));
        assert!(!resolution_domination_check(&t(&[5, 9]), &t(&[5, 8]), 0, 1));
        assert!(!resolution_domination_check(&t(&[5, 8]), &t(&[5, 9]), 1, 0));
    }

    #[test]
    fn padding_the_double_link_pair() {
        let c = resolution_double_link(&skew_n(), 8, 1);
        let (r, s, h) = pad_to_common_core(&skew_n(), &c).unwrap();
        assert_eq!((r.clone(), s.clone(), h), (t(&[5, 8]), t(&[5, 9]), 1));
        assert!(resolution_domination_check(&r, &s, 0, h));
    }
}
