//! Domination of admissible characters and its η/θ descriptions.
//!
//! For admissible characters `γ ≤_h σ` the difference is recorded by
//!
//! * `η(l) = σ(l) - γ(l-h) + step(l) - step(l-h)`, a nonnegative function
//!   of total mass `h` connected in degrees `< s0(γ) + h`, and
//! * `θ = η - 1_[s0(σ), s0(γ)+h-1]`, a nonnegative function of mass
//!   `m = s0(σ) - s0(γ) <= h` vanishing below `s0(γ) + m`.
//!
//! Either function determines `σ` given `(γ, h)`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::character::AdmissibleCharacter;
use crate::error::{DominationFailure, Error, EtaFailure, Result, ThetaFailure};
use crate::intfn::{Connectivity, IntFn};

/// A finitely supported nonnegative integer function.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NatFn(IntFn);

impl NatFn {
    pub fn new(f: IntFn) -> Result<Self> {
        match f.first_negative() {
            Some(l) => Err(Error::NegativeValue {
                degree: l,
                value: f.get(l),
            }),
            None => Ok(NatFn(f)),
        }
    }

    pub fn zero() -> Self {
        NatFn(IntFn::zero())
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Result<Self> {
        Self::new(IntFn::from_pairs(pairs))
    }

    pub fn indicator(a: i64, b: i64) -> Self {
        NatFn(IntFn::indicator(a, b))
    }

    #[inline]
    pub fn get(&self, l: i64) -> i64 {
        self.0.get(l)
    }

    pub fn sum(&self) -> i64 {
        self.0.sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_fn(&self) -> &IntFn {
        &self.0
    }

    pub fn into_fn(self) -> IntFn {
        self.0
    }

    /// Least degree with a positive value.
    pub fn lowest(&self) -> Option<i64> {
        self.0.lowest_positive()
    }

    /// Greatest degree with a positive value.
    pub fn highest(&self) -> Option<i64> {
        self.0.highest_positive()
    }

    pub fn shift(&self, by: i64) -> Self {
        NatFn(self.0.shift(by))
    }
}

impl fmt::Debug for NatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Display for NatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for NatFn {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NatFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        NatFn::new(IntFn::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

fn require_height(h: i64) -> Result<()> {
    if h < 0 {
        return Err(Error::NegativeHeight(h));
    }
    Ok(())
}

/// The first clause of the domination relation `γ ≤_h σ` that fails, if any.
pub fn domination_failure(
    gamma: &AdmissibleCharacter,
    sigma: &AdmissibleCharacter,
    h: i64,
) -> Option<DominationFailure> {
    let (s0g, s0s) = (gamma.s0(), sigma.s0());
    if !(s0g <= s0s && s0s <= s0g + h) {
        return Some(DominationFailure::InitialDegree {
            s0_gamma: s0g,
            s0_sigma: s0s,
            upper: s0g + h,
        });
    }
    if let Some((l, v)) = sigma.as_fn().iter_range(s0s..s0g + h).find(|&(_, v)| v < 0) {
        return Some(DominationFailure::Middle {
            degree: l,
            value: v,
        });
    }
    // Clause (3) can only fail where σ or the shifted γ is nonzero.
    let start = s0g + h;
    let mut ours = sigma.as_fn().iter_range(start..).peekable();
    let mut theirs = gamma
        .as_fn()
        .iter_range(start - h..)
        .map(|(l, v)| (l + h, v))
        .peekable();
    loop {
        let (l, value, shifted) = match (ours.peek().copied(), theirs.peek().copied()) {
            (None, None) => return None,
            (Some((a, v)), Some((b, u))) if a == b => {
                ours.next();
                theirs.next();
                (a, v, u)
            }
            (Some((a, v)), Some((b, _))) if a < b => {
                ours.next();
                (a, v, 0)
            }
            (Some((a, v)), None) => {
                ours.next();
                (a, v, 0)
            }
            (_, Some((b, u))) => {
                theirs.next();
                (b, 0, u)
            }
        };
        if value < shifted {
            return Some(DominationFailure::Tail {
                degree: l,
                value,
                shifted,
            });
        }
    }
}

/// Whether `σ` dominates `γ` at height `h`, by the three defining clauses.
pub fn dominates_at(gamma: &AdmissibleCharacter, sigma: &AdmissibleCharacter, h: i64) -> bool {
    h >= 0 && domination_failure(gamma, sigma, h).is_none()
}

/// `σ(l) - γ(l-h) + step(l) - step(l-h)`, without any validity check.
pub fn eta_candidate(gamma: &AdmissibleCharacter, sigma: &IntFn, h: i64) -> IntFn {
    let mut eta = sigma - &gamma.as_fn().shift(h);
    eta += &IntFn::step_difference(0, h);
    eta
}

/// Checks that `eta` is nonnegative, connected in degrees `< s0 + h` and of
/// mass `h`.
pub fn check_eta(s0: i64, h: i64, eta: &IntFn) -> Result<(), EtaFailure> {
    if let Some(l) = eta.first_negative() {
        return Err(EtaFailure::Negative {
            degree: l,
            value: eta.get(l),
        });
    }
    let bound = s0 + h;
    let connected = eta
        .connected_in_degrees(Connectivity::Below(bound))
        .expect("checked nonnegative");
    if !connected {
        let start = eta
            .lowest_positive()
            .expect("disconnected implies positive somewhere");
        let gap = (start..bound)
            .find(|&l| eta.get(l) == 0)
            .expect("a gap exists");
        return Err(EtaFailure::NotConnected { bound, gap });
    }
    if eta.sum() != h {
        return Err(EtaFailure::WrongSum {
            sum: eta.sum(),
            height: h,
        });
    }
    Ok(())
}

/// η of the domination `γ ≤_h σ`; fails exactly when the domination fails.
pub fn eta_of(gamma: &AdmissibleCharacter, sigma: &AdmissibleCharacter, h: i64) -> Result<NatFn> {
    require_height(h)?;
    let eta = eta_candidate(gamma, sigma.as_fn(), h);
    check_eta(gamma.s0(), h, &eta)?;
    Ok(NatFn(eta))
}

/// The character `σ ≥_h γ` whose η is `eta`.
pub fn sigma_from_eta(
    gamma: &AdmissibleCharacter,
    h: i64,
    eta: &NatFn,
) -> Result<AdmissibleCharacter> {
    require_height(h)?;
    check_eta(gamma.s0(), h, eta.as_fn())?;
    let mut sigma = eta.as_fn() + &gamma.as_fn().shift(h);
    sigma -= &IntFn::step_difference(0, h);
    AdmissibleCharacter::new(sigma)
}

/// `s0(σ)` read off a valid η for `γ ≤_h σ` with `s0(γ) = s0`.
pub fn initial_degree_from_eta(s0: i64, h: i64, eta: &NatFn) -> i64 {
    match eta.lowest() {
        Some(a) if a < s0 + h => a,
        _ => s0 + h,
    }
}

/// θ from a valid η: `θ(l) = η(l) - step(l - s0(σ)) + step(l - s0 - h)`.
pub fn theta_from_eta(s0: i64, h: i64, eta: &NatFn) -> NatFn {
    let s0_sigma = initial_degree_from_eta(s0, h, eta);
    let theta = eta.as_fn() - &IntFn::step_difference(s0_sigma, s0 + h);
    NatFn(theta)
}

/// θ of the domination `γ ≤_h σ`.
pub fn theta_of(gamma: &AdmissibleCharacter, sigma: &AdmissibleCharacter, h: i64) -> Result<NatFn> {
    let eta = eta_of(gamma, sigma, h)?;
    let theta = eta.as_fn() - &IntFn::step_difference(sigma.s0(), gamma.s0() + h);
    Ok(NatFn(theta))
}

/// Checks that `theta` is valid at height `h` over a character with `s0(γ) = s0`.
pub fn check_theta(s0: i64, h: i64, theta: &IntFn) -> Result<(), ThetaFailure> {
    if let Some(l) = theta.first_negative() {
        return Err(ThetaFailure::Negative {
            degree: l,
            value: theta.get(l),
        });
    }
    let m = theta.sum();
    if m > h {
        return Err(ThetaFailure::SumExceedsHeight { sum: m, height: h });
    }
    match theta.support_range() {
        Some((lo, _)) if lo < s0 + m => Err(ThetaFailure::SupportTooLow {
            degree: lo,
            bound: s0 + m,
        }),
        _ => Ok(()),
    }
}

/// η from θ: `η(l) = θ(l) + step(l - s0 - m) - step(l - s0 - h)`.
pub fn eta_from_theta_at(s0: i64, h: i64, theta: &NatFn) -> Result<NatFn> {
    require_height(h)?;
    check_theta(s0, h, theta.as_fn())?;
    let m = theta.sum();
    Ok(NatFn(
        theta.as_fn() + &IntFn::step_difference(s0 + m, s0 + h),
    ))
}

/// η from θ for the domination over `gamma` at height `h`.
pub fn eta_from_theta(gamma: &AdmissibleCharacter, h: i64, theta: &NatFn) -> Result<NatFn> {
    eta_from_theta_at(gamma.s0(), h, theta)
}

/// `η_σ(l) - η_τ(l - k + h)` when it is everywhere nonnegative.
///
/// With `γ ≤_h τ` and `γ ≤_k σ`, a result is returned exactly when
/// `τ ≤_{k-h} σ`, and it is then `η_{τ,σ,k-h}`.
pub fn relative_eta_from_witnesses(
    eta_tau: &NatFn,
    h: i64,
    eta_sigma: &NatFn,
    k: i64,
) -> Option<NatFn> {
    let diff = eta_sigma.as_fn() - &eta_tau.as_fn().shift(k - h);
    diff.is_nonnegative().then_some(NatFn(diff))
}

/// `θ_σ(l) - θ_τ(l - k + h)` when it is nonnegative with mass at most `k - h`.
pub fn relative_theta_from_witnesses(
    theta_tau: &NatFn,
    h: i64,
    theta_sigma: &NatFn,
    k: i64,
) -> Option<NatFn> {
    let diff = theta_sigma.as_fn() - &theta_tau.as_fn().shift(k - h);
    (diff.is_nonnegative() && diff.sum() <= k - h).then_some(NatFn(diff))
}

/// Relative η of `τ ≤_{k-h} σ` computed through `γ`; errors if `γ ≤_h τ` or
/// `γ ≤_k σ` does not hold.
pub fn relative_eta(
    gamma: &AdmissibleCharacter,
    tau: &AdmissibleCharacter,
    sigma: &AdmissibleCharacter,
    h: i64,
    k: i64,
) -> Result<Option<NatFn>> {
    let eta_tau = eta_of(gamma, tau, h)?;
    let eta_sigma = eta_of(gamma, sigma, k)?;
    Ok(relative_eta_from_witnesses(&eta_tau, h, &eta_sigma, k))
}

/// Relative θ of `τ ≤_{k-h} σ` computed through `γ`.
pub fn relative_theta(
    gamma: &AdmissibleCharacter,
    tau: &AdmissibleCharacter,
    sigma: &AdmissibleCharacter,
    h: i64,
    k: i64,
) -> Result<Option<NatFn>> {
    let theta_tau = theta_of(gamma, tau, h)?;
    let theta_sigma = theta_of(gamma, sigma, k)?;
    Ok(relative_theta_from_witnesses(
        &theta_tau,
        h,
        &theta_sigma,
        k,
    ))
}

/// A domination `γ ≤_h σ` with both witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationWitness {
    pub gamma: AdmissibleCharacter,
    pub sigma: AdmissibleCharacter,
    pub h: i64,
    pub eta: NatFn,
    pub theta: NatFn,
    pub m: i64,
}

impl DominationWitness {
    pub fn new(gamma: &AdmissibleCharacter, sigma: &AdmissibleCharacter, h: i64) -> Result<Self> {
        if let Some(failure) = domination_failure(gamma, sigma, h) {
            return Err(Error::NotDominating { height: h, failure });
        }
        let eta = eta_of(gamma, sigma, h)?;
        let theta = theta_from_eta(gamma.s0(), h, &eta);
        Ok(Self {
            gamma: gamma.clone(),
            sigma: sigma.clone(),
            h,
            m: theta.sum(),
            eta,
            theta,
        })
    }
}

/// Calls `visit` with every vector of `cells` nonnegative integers summing to
/// `total`, in lexicographically decreasing order.
pub(crate) fn for_each_composition(total: i64, cells: usize, visit: &mut dyn FnMut(&[i64])) {
    fn go(rest: i64, pos: usize, buf: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        if pos + 1 == buf.len() {
            buf[pos] = rest;
            visit(buf);
            return;
        }
        for v in (0..=rest).rev() {
            buf[pos] = v;
            go(rest - v, pos + 1, buf, visit);
        }
    }
    if cells == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    let mut buf = vec![0; cells];
    go(total, 0, &mut buf, visit);
}

fn check_window(lo: i64, hi: i64) -> Result<()> {
    if lo > hi {
        return Err(Error::InvalidWindow { lo, hi });
    }
    Ok(())
}

/// Every admissible `σ ≥_h γ` whose η is supported in `[lo, hi]`, sorted by η.
pub fn enumerate_dominating(
    gamma: &AdmissibleCharacter,
    h: i64,
    lo: i64,
    hi: i64,
) -> Result<Vec<DominationWitness>> {
    require_height(h)?;
    check_window(lo, hi)?;
    let mut etas = Vec::new();
    for_each_composition(h, (hi - lo + 1) as usize, &mut |values| {
        let eta = IntFn::from_pairs((lo..).zip(values.iter().copied()));
        if check_eta(gamma.s0(), h, &eta).is_ok() {
            etas.push(NatFn(eta));
        }
    });
    etas.sort();
    etas.into_iter()
        .map(|eta| {
            let sigma = sigma_from_eta(gamma, h, &eta)?;
            let theta = theta_from_eta(gamma.s0(), h, &eta);
            Ok(DominationWitness {
                gamma: gamma.clone(),
                sigma,
                h,
                m: theta.sum(),
                eta,
                theta,
            })
        })
        .collect()
}

/// Every valid θ at height `h` over a character with `s0(γ) = s0` whose
/// support lies in `[lo, hi]`, sorted.
pub fn enumerate_thetas(s0: i64, h: i64, lo: i64, hi: i64) -> Result<Vec<NatFn>> {
    require_height(h)?;
    check_window(lo, hi)?;
    let mut out = Vec::new();
    for m in 0..=h {
        let start = lo.max(s0 + m);
        if start > hi {
            if m == 0 {
                out.push(NatFn::zero());
            }
            continue;
        }
        for_each_composition(m, (hi - start + 1) as usize, &mut |values| {
            out.push(NatFn(IntFn::from_pairs(
                (start..).zip(values.iter().copied()),
            )));
        });
    }
    out.sort();
    Ok(out)
}

/// The Bolondi-Migliore description `{b, g_2, ..., g_r}` of a position in a
/// linkage class, with `r = m + 1` and `b = h - m - 1` where `m = Σθ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BmInvariant {
    pub b: i64,
    /// `g_2, ..., g_r`, nondecreasing.
    pub g: Vec<i64>,
}

impl BmInvariant {
    pub fn r(&self) -> i64 {
        self.g.len() as i64 + 1
    }
}

/// Converts `(θ, h)` to the BM invariant.
///
/// The multiplicity rule `θ(l) = #{k : g_k + r - k = l}` is inverted by
/// listing the values of θ (with multiplicity) block by block: maximal runs
/// of consecutive support degrees in increasing order, each run read from
/// the top down. This is the ordering for which `g` is nondecreasing.
pub fn to_bm(theta: &NatFn, h: i64) -> Result<BmInvariant> {
    require_height(h)?;
    let m = theta.sum();
    if m > h {
        return Err(ThetaFailure::SumExceedsHeight { sum: m, height: h }.into());
    }
    let b = h - m - 1;
    if b < 0 {
        return Err(Error::InvalidBm(format!(
            "height {h} must exceed the mass {m} of theta"
        )));
    }
    let r = m + 1;
    let mut blocks: Vec<Vec<i64>> = Vec::new();
    let mut prev: Option<i64> = None;
    for (l, v) in theta.as_fn().iter() {
        if prev != Some(l - 1) {
            blocks.push(Vec::new());
        }
        let block = blocks.last_mut().expect("pushed above");
        block.extend(std::iter::repeat_n(l, v as usize));
        prev = Some(l);
    }
    let values = blocks.into_iter().flat_map(|block| block.into_iter().rev());
    let g = (2..=r).zip(values).map(|(k, v)| v - (r - k)).collect();
    Ok(BmInvariant { b, g })
}

/// Converts a BM invariant back to `(θ, h)`.
pub fn from_bm(inv: &BmInvariant) -> Result<(NatFn, i64)> {
    if inv.b < 0 {
        return Err(Error::InvalidBm(format!("b = {} is negative", inv.b)));
    }
    if let Some(w) = inv.g.windows(2).find(|w| w[0] > w[1]) {
        return Err(Error::InvalidBm(format!(
            "g is not nondecreasing ({} > {})",
            w[0], w[1]
        )));
    }
    let r = inv.r();
    let theta = IntFn::from_pairs((2..=r).zip(&inv.g).map(|(k, &g)| (g + r - k, 1)));
    let m = r - 1;
    Ok((NatFn(theta), inv.b + m + 1))
}
