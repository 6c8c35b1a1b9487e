//! Brute-force verification over finite windows, and closed-form `h⁰` values
//! for a few well-understood subschemes of P³.
//!
//! Every claim is checked exhaustively over the window; counterexamples are
//! returned as JSON data so that they can be replayed through the public API.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::character::{classify, AdmissibleCharacter, Classification};
use crate::domination::{
    dominates_at, enumerate_dominating, enumerate_thetas, eta_from_theta, eta_of,
    relative_eta_from_witnesses, relative_theta_from_witnesses, sigma_from_eta, theta_from_eta,
    theta_of, DominationWitness,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::hilbert::{binomial, degree_genus};
use crate::intfn::IntFn;
use crate::linkage::{
    dominates_model, enumerate_models, integral_chain, integral_necessary, invariants, link_dual,
    lr_decompose, model_gamma, replay, replay_integral, t1_bound, t1_witness_chain,
    IntegralVariant, LinkageClass, SubschemeModel,
};

/// A finite search region: degrees `[lo, hi]`, values bounded by `max_abs`
/// in absolute value, heights at most `max_height`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchWindow {
    pub lo: i64,
    pub hi: i64,
    pub max_abs: i64,
    pub max_height: i64,
}

impl SearchWindow {
    pub fn new(lo: i64, hi: i64, max_abs: i64, max_height: i64) -> Result<Self> {
        if lo > hi || max_abs < 0 || max_height < 0 {
            return Err(Error::InvalidWindow { lo, hi });
        }
        Ok(Self {
            lo,
            hi,
            max_abs,
            max_height,
        })
    }

    /// Degree range searched for η: the window extended by the height bound.
    fn eta_range(&self) -> (i64, i64) {
        (self.lo.max(0), self.hi + self.max_height)
    }
}

impl Default for SearchWindow {
    fn default() -> Self {
        Self {
            lo: 0,
            hi: 5,
            max_abs: 3,
            max_height: 3,
        }
    }
}

/// Every admissible character supported in the window with values bounded
/// by `max_abs`, sorted lexicographically by `(degree, value)` entries.
pub fn enumerate_admissible(w: &SearchWindow) -> Vec<AdmissibleCharacter> {
    if w.lo > 0 || w.hi < 1 {
        return Vec::new();
    }
    // Admissible characters vanish below 0 and take the value -1 at 0.
    let free: Vec<i64> = (1..=w.hi).collect();
    let width = 2 * w.max_abs + 1;
    let total = (width as u64).pow(free.len() as u32);
    let mut out: Vec<AdmissibleCharacter> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut f = IntFn::spike(0, -1);
            for &l in &free {
                f.add_at(l, (code % width as u64) as i64 - w.max_abs);
                code /= width as u64;
            }
            match classify(&f) {
                Classification::Admissible { .. } => AdmissibleCharacter::new(f).ok(),
                _ => None,
            }
        })
        .collect();
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// `γ ≤_h σ ≤_k τ` implies `γ ≤_{h+k} τ`.
    Transitivity,
    /// η determines σ, and `eta_of` succeeds exactly when domination holds.
    EtaBijection,
    /// θ and η determine each other given `(γ, h)`.
    ThetaBijection,
    /// Relative η exists exactly when the two characters dominate each other.
    RelativeEta,
    /// Relative θ exists exactly when the two characters dominate each other.
    RelativeTheta,
    /// Closed formulas for `s0`, `s1` and the degree agree with direct computation.
    InvariantFormulas,
    /// Linking twice is the identity; heights and degrees add up.
    DualityInvolution,
    /// The t1 witness chain replays and the bound dominates `s1`.
    T1Sharpness,
    /// Decomposition chains replay to their targets and pass the integrality gate.
    DecomposeReplay,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::Transitivity,
        Claim::EtaBijection,
        Claim::ThetaBijection,
        Claim::RelativeEta,
        Claim::RelativeTheta,
        Claim::InvariantFormulas,
        Claim::DualityInvolution,
        Claim::T1Sharpness,
        Claim::DecomposeReplay,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Transitivity => "transitivity",
            Claim::EtaBijection => "eta-bijection",
            Claim::ThetaBijection => "theta-bijection",
            Claim::RelativeEta => "relative-eta",
            Claim::RelativeTheta => "relative-theta",
            Claim::InvariantFormulas => "invariant-formulas",
            Claim::DualityInvolution => "duality-involution",
            Claim::T1Sharpness => "t1-sharpness",
            Claim::DecomposeReplay => "decompose-replay",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unknown(format!("claim '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub reason: String,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim: Claim,
    pub window: SearchWindow,
    pub instances: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl ClaimReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Per-instance outcome accumulated in parallel and merged in input order.
#[derive(Default)]
struct Tally {
    instances: u64,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn check(
        &mut self,
        ok: bool,
        reason: impl FnOnce() -> String,
        witness: impl FnOnce() -> Value,
    ) {
        self.instances += 1;
        if !ok {
            self.counterexamples.push(Counterexample {
                reason: reason(),
                witness: witness(),
            });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync + Send) -> Tally {
    items
        .par_iter()
        .map(|item| {
            let mut t = Tally::default();
            f(item, &mut t);
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

/// Evaluates a claim exhaustively over the window.
pub fn check_claim(claim: Claim, w: &SearchWindow) -> ClaimReport {
    let tally = match claim {
        Claim::Transitivity => transitivity(w),
        Claim::EtaBijection => eta_bijection(w),
        Claim::ThetaBijection => theta_bijection(w),
        Claim::RelativeEta | Claim::RelativeTheta => relative(w, claim),
        Claim::InvariantFormulas => invariant_formulas(w),
        Claim::DualityInvolution => duality(w),
        Claim::T1Sharpness => t1_sharpness(w),
        Claim::DecomposeReplay => decompose_replay(w),
    };
    ClaimReport {
        claim,
        window: *w,
        instances: tally.instances,
        counterexamples: tally.counterexamples,
    }
}

fn witnesses(gamma: &AdmissibleCharacter, h: i64, w: &SearchWindow) -> Vec<DominationWitness> {
    let (lo, hi) = w.eta_range();
    enumerate_dominating(gamma, h, lo, hi).expect("window and height are valid")
}

fn transitivity(w: &SearchWindow) -> Tally {
    let chars = enumerate_admissible(w);
    par_tally(&chars, |gamma, t| {
        for h in 0..=w.max_height {
            for ws in witnesses(gamma, h, w) {
                for k in 0..=w.max_height {
                    for wt in witnesses(&ws.sigma, k, w) {
                        t.check(
                            dominates_at(gamma, &wt.sigma, h + k),
                            || format!("γ ≤_{h} σ ≤_{k} τ but not γ ≤_{} τ", h + k),
                            || json!({"gamma": gamma, "sigma": ws.sigma, "tau": wt.sigma, "h": h, "k": k}),
                        );
                    }
                }
            }
        }
    })
}

fn eta_bijection(w: &SearchWindow) -> Tally {
    let chars = enumerate_admissible(w);
    par_tally(&chars, |gamma, t| {
        for h in 0..=w.max_height {
            // Domination criterion and inverse over all pairs in the window.
            for sigma in &chars {
                let direct = dominates_at(gamma, sigma, h);
                let eta = eta_of(gamma, sigma, h);
                t.check(
                    direct == eta.is_ok(),
                    || {
                        format!(
                            "dominates_at = {direct} but eta_of succeeded = {}",
                            eta.is_ok()
                        )
                    },
                    || json!({"gamma": gamma, "sigma": sigma, "h": h}),
                );
                if let Ok(eta) = eta {
                    let back = sigma_from_eta(gamma, h, &eta).ok();
                    t.check(
                        back.as_ref() == Some(sigma),
                        || "sigma_from_eta(eta_of(σ)) differs from σ".into(),
                        || json!({"gamma": gamma, "sigma": sigma, "h": h, "eta": eta}),
                    );
                }
            }
            // Every valid η comes back from its σ.
            for ws in witnesses(gamma, h, w) {
                let eta = eta_of(gamma, &ws.sigma, h).ok();
                t.check(
                    eta.as_ref() == Some(&ws.eta) && dominates_at(gamma, &ws.sigma, h),
                    || "eta_of(sigma_from_eta(η)) differs from η".into(),
                    || json!({"witness": ws}),
                );
            }
        }
    })
}

fn theta_bijection(w: &SearchWindow) -> Tally {
    let chars = enumerate_admissible(w);
    let (lo, hi) = w.eta_range();
    par_tally(&chars, |gamma, t| {
        for h in 0..=w.max_height {
            for ws in witnesses(gamma, h, w) {
                let theta = theta_of(gamma, &ws.sigma, h).ok();
                let eta = theta
                    .as_ref()
                    .and_then(|th| eta_from_theta(gamma, h, th).ok());
                t.check(
                    theta.as_ref() == Some(&ws.theta) && eta.as_ref() == Some(&ws.eta),
                    || "theta_of and eta_from_theta do not invert each other".into(),
                    || json!({"witness": ws}),
                );
            }
            for theta in enumerate_thetas(gamma.s0(), h, lo, hi).expect("valid window") {
                let back =
                    eta_from_theta(gamma, h, &theta).map(|eta| theta_from_eta(gamma.s0(), h, &eta));
                t.check(
                    back.as_ref().ok() == Some(&theta),
                    || "theta_from_eta(eta_from_theta(θ)) differs from θ".into(),
                    || json!({"gamma": gamma, "h": h, "theta": theta}),
                );
            }
        }
    })
}

fn relative(w: &SearchWindow, claim: Claim) -> Tally {
    let chars = enumerate_admissible(w);
    par_tally(&chars, |gamma, t| {
        let by_height: Vec<Vec<DominationWitness>> =
            (0..=w.max_height).map(|h| witnesses(gamma, h, w)).collect();
        for (h, taus) in by_height.iter().enumerate() {
            for (k, sigmas) in by_height.iter().enumerate().skip(h) {
                let (h, k) = (h as i64, k as i64);
                for tau in taus {
                    for sigma in sigmas {
                        let direct = dominates_at(&tau.sigma, &sigma.sigma, k - h);
                        let witness = || json!({"gamma": gamma, "tau": tau.sigma, "sigma": sigma.sigma, "h": h, "k": k});
                        let got = match claim {
                            Claim::RelativeEta => {
                                relative_eta_from_witnesses(&tau.eta, h, &sigma.eta, k)
                            }
                            _ => relative_theta_from_witnesses(&tau.theta, h, &sigma.theta, k),
                        };
                        let expected = if direct {
                            match claim {
                                Claim::RelativeEta => eta_of(&tau.sigma, &sigma.sigma, k - h).ok(),
                                _ => theta_of(&tau.sigma, &sigma.sigma, k - h).ok(),
                            }
                        } else {
                            None
                        };
                        t.check(
                            got == expected,
                            || format!("relative function {got:?} but direct domination gives {expected:?}"),
                            witness,
                        );
                    }
                }
            }
        }
    })
}

/// Classes whose model families the model-level claims range over.
fn model_classes() -> Vec<Arc<LinkageClass>> {
    vec![
        fixtures::two_skew_lines(),
        fixtures::four_lines_on_quadric(),
        fixtures::rational_degree_ten(),
        fixtures::synthetic_s1_below_t1(),
    ]
}

/// Models of every fixture class with θ supported in `[max(lo,0), hi]` and
/// height at most `max_height`.
pub fn model_family(w: &SearchWindow) -> Vec<SubschemeModel> {
    model_classes()
        .iter()
        .flat_map(|c| enumerate_models(c, w.max_height, w.lo.max(0), w.hi).expect("valid window"))
        .collect()
}

fn model_json(x: &SubschemeModel) -> Value {
    json!({"t1": x.class().t1(), "gamma0": x.class().gamma0(), "h": x.h(), "theta": x.theta()})
}

fn invariant_formulas(w: &SearchWindow) -> Tally {
    let models = model_family(w);
    par_tally(&models, |x, t| {
        let gamma = model_gamma(x);
        let direct = classify(gamma.as_fn());
        let inv = invariants(x);
        let ok = match (&direct, &inv) {
            (Classification::Admissible { s0, s1 }, Ok(inv)) => {
                *s0 == inv.s0
                    && *s1 == inv.s1
                    && inv.degree == degree_genus(&gamma, x.class().n()).degree
                    && inv.s1 <= t1_bound(x)
            }
            _ => false,
        };
        t.check(
            ok,
            || format!("closed formulas {inv:?} disagree with direct classification {direct:?}"),
            || model_json(x),
        );
    })
}

/// Link degrees tried for a model: `s` from `s0(X)` and `t` from the t1 bound,
/// each over three consecutive values, in both orders.
fn link_degrees(x: &SubschemeModel) -> Vec<(i64, i64)> {
    let (s0, t1) = (x.s0(), t1_bound(x));
    let mut out = Vec::new();
    for s in s0..s0 + 3 {
        for t in t1..t1 + 3 {
            out.push((s, t));
            if s != t {
                out.push((t, s));
            }
        }
    }
    out
}

fn duality(w: &SearchWindow) -> Tally {
    let models: Vec<_> = model_family(w)
        .into_iter()
        .filter(|x| x.class().has_dual())
        .collect();
    par_tally(&models, |x, t| {
        let (s0, t1) = (x.class().s0(), x.class().t1());
        for (s, tt) in link_degrees(x) {
            let witness = || json!({"model": model_json(x), "s": s, "t": tt});
            let y = match link_dual(x, s, tt) {
                Ok(y) => y,
                Err(Error::LinkPrecondition(_)) if s + tt - s0 - t1 - x.h() < 0 => continue,
                Err(e) => {
                    t.check(false, || format!("link failed: {e}"), witness);
                    continue;
                }
            };
            // Pointwise identity: η_X(l) - η_Y(s+t-1-l) equals the four step terms.
            let lhs = x.eta().as_fn() - &y.eta().as_fn().reflect(s + tt - 1);
            let mut rhs = IntFn::step_difference(s, s0 + x.h());
            rhs += &IntFn::step_difference(tt, t1 + x.h());
            t.check(lhs == rhs, || "eta identity fails".into(), witness);
            t.check(
                x.h() + y.h() == s + tt - s0 - t1,
                || format!("heights {} + {} differ from s+t-s0-t1", x.h(), y.h()),
                witness,
            );
            let (dx, dy) = (model_gamma(x).degree(), model_gamma(&y).degree());
            t.check(
                dx + dy == s * tt,
                || format!("degrees {dx} + {dy} != {}", s * tt),
                witness,
            );
            // η_Y recomputed from the dual character agrees with the model's.
            let eta_direct = eta_of(y.class().gamma0(), &model_gamma(&y), y.h()).ok();
            t.check(
                eta_direct == Some(y.eta()),
                || "dual eta disagrees with eta_of".into(),
                witness,
            );
            let back = link_dual(&y, s, tt);
            t.check(
                back.as_ref().is_ok_and(|b| b.same_position(x)),
                || format!("linking back gives {back:?}"),
                witness,
            );
        }
    })
}

fn t1_sharpness(w: &SearchWindow) -> Tally {
    let models = model_family(w);
    par_tally(&models, |x, t| {
        let chain = t1_witness_chain(x);
        let replayed = chain.replay(x.class());
        t.check(
            replayed.as_ref().is_ok_and(|y| y.same_position(x)),
            || format!("witness chain {chain:?} replays to {replayed:?}"),
            || model_json(x),
        );
        t.check(
            x.s1() <= t1_bound(x),
            || "s1(X) exceeds the t1 bound".into(),
            || model_json(x),
        );
        if x.class().has_dual() {
            let base =
                SubschemeModel::new(x.class().clone(), chain.base_height, Default::default())
                    .expect("θ = 0 is valid at any height");
            let (s, tt) = chain.minimal_pair;
            let linked = link_dual(&base, s, tt);
            t.check(
                linked
                    .as_ref()
                    .is_ok_and(|y| y.h() == 0 && y.theta().is_zero()),
                || format!("minimal pair link gives {linked:?}"),
                || model_json(x),
            );
        }
    })
}

fn decompose_replay(w: &SearchWindow) -> Tally {
    let models = model_family(w);
    par_tally(&models, |x, t| {
        let minimal = SubschemeModel::minimal(x.class().clone());
        let lr = lr_decompose(&minimal, x).and_then(|steps| replay(&minimal, &steps));
        t.check(
            lr.as_ref().is_ok_and(|y| y.same_position(x)),
            || format!("lr decomposition from the minimal element replays to {lr:?}"),
            || model_json(x),
        );
        let integral = integral_necessary(x, IntegralVariant::CombinedS1).pass;
        for y in &models {
            if !x.class().same_class(y.class()) || dominates_model(x, y).ok().flatten().is_none() {
                continue;
            }
            let witness = || json!({"from": model_json(x), "to": model_json(y)});
            let lr = lr_decompose(x, y).and_then(|steps| replay(x, &steps));
            t.check(
                lr.as_ref().is_ok_and(|z| z.same_position(y)),
                || format!("lr decomposition replays to {lr:?}"),
                witness,
            );
            if integral && integral_necessary(y, IntegralVariant::CombinedS1).pass {
                let chain = integral_chain(x, y).and_then(|c| replay_integral(x, &c));
                t.check(
                    chain.as_ref().is_ok_and(|z| z.same_position(y)),
                    || format!("integral chain gives {chain:?}"),
                    witness,
                );
            }
        }
    })
}

/// Subschemes of P³ with a closed-form Hilbert function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum HilbertConfig {
    Line,
    /// Complete intersection of surfaces of degrees `a` and `b`.
    CompleteIntersection {
        a: i64,
        b: i64,
    },
    /// `d` general disjoint lines (maximal rank).
    DisjointLines {
        d: i64,
    },
    /// `d` lines of one ruling on a smooth quadric.
    LinesOnQuadric {
        d: i64,
    },
}

impl FromStr for HilbertConfig {
    type Err = Error;

    /// Accepts `line`, `ci:A,B`, `lines:D` and `quadric-lines:D`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unknown(format!("hilbert configuration '{s}'"));
        let int = |v: &str| v.trim().parse::<i64>().map_err(|_| bad());
        let config = match s.split_once(':') {
            None if s == "line" => HilbertConfig::Line,
            Some(("ci", rest)) => {
                let (a, b) = rest.split_once(',').ok_or_else(bad)?;
                HilbertConfig::CompleteIntersection {
                    a: int(a)?,
                    b: int(b)?,
                }
            }
            Some(("lines", d)) => HilbertConfig::DisjointLines { d: int(d)? },
            Some(("quadric-lines", d)) => HilbertConfig::LinesOnQuadric { d: int(d)? },
            _ => return Err(bad()),
        };
        Ok(config)
    }
}

/// `C(x, 3)` for `x >= 0`, otherwise 0: `h⁰ 𝒪_{P³}(x - 3)`.
fn forms(x: i64) -> i64 {
    if x < 3 {
        0
    } else {
        binomial(x, 3)
    }
}

/// `h⁰ 𝓘_X(l)` by closed form.
pub fn hilbert_oracle(config: &HilbertConfig, l: i64) -> Result<i64> {
    if l < 0 {
        return Ok(0);
    }
    let all = binomial(l + 3, 3);
    Ok(match *config {
        HilbertConfig::Line => all - (l + 1),
        HilbertConfig::CompleteIntersection { a, b } => {
            if a < 1 || b < 1 {
                return Err(Error::Unknown(format!(
                    "complete intersection of degrees ({a}, {b})"
                )));
            }
            forms(l - a + 3) + forms(l - b + 3) - forms(l - a - b + 3)
        }
        HilbertConfig::DisjointLines { d } => {
            if d < 1 {
                return Err(Error::Unknown(format!("{d} disjoint lines")));
            }
            (all - d * (l + 1)).max(0)
        }
        HilbertConfig::LinesOnQuadric { d } => {
            if d < 1 {
                return Err(Error::Unknown(format!("{d} lines on a quadric")));
            }
            // Multiples of the quadric, plus forms of bidegree (l, l - d) on it.
            forms(l + 1) + (l - d + 1).max(0) * (l + 1)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn window(lo: i64, hi: i64, max_abs: i64) -> SearchWindow {
        SearchWindow::new(lo, hi, max_abs, 0).unwrap()
    }

    #[test]
    fn enumerate_admissible_small_windows() {
        let got = enumerate_admissible(&window(0, 2, 2));
        assert_eq!(got.len(), 4);
        let has = |pairs: &[(i64, i64)]| {
            got.contains(&AdmissibleCharacter::from_pairs(pairs.iter().copied()).unwrap())
        };
        assert!(has(&[(0, -1), (1, 1)]));
        assert!(has(&[(0, -1), (1, -1), (2, 2)]));
        assert!(has(&[(0, -1), (2, 1)]));
        assert!(enumerate_admissible(&window(0, 0, 3)).is_empty());
        let skew = fixtures::two_skew_lines();
        assert!(enumerate_admissible(&window(0, 3, 3)).contains(skew.gamma0()));
    }

    #[test]
    fn enumerate_admissible_is_sorted_and_distinct() {
        let got = enumerate_admissible(&window(0, 4, 2));
        assert!(got.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn default_window_count_is_pinned() {
        assert_eq!(enumerate_admissible(&SearchWindow::default()).len(), 946);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            hilbert_oracle(&HilbertConfig::DisjointLines { d: 2 }, 2).unwrap(),
            4
        );
        assert_eq!(hilbert_oracle(&HilbertConfig::Line, 1).unwrap(), 2);
        assert_eq!(
            hilbert_oracle(&HilbertConfig::CompleteIntersection { a: 2, b: 2 }, 2).unwrap(),
            2
        );
        assert_eq!(
            hilbert_oracle(&HilbertConfig::LinesOnQuadric { d: 2 }, 2).unwrap(),
            4
        );
        assert!(hilbert_oracle(&HilbertConfig::DisjointLines { d: 0 }, 2).is_err());
    }

    #[test]
    fn config_parsing() {
        assert_eq!(
            "line".parse::<HilbertConfig>().unwrap(),
            HilbertConfig::Line
        );
        assert_eq!(
            "ci:2,3".parse::<HilbertConfig>().unwrap(),
            HilbertConfig::CompleteIntersection { a: 2, b: 3 }
        );
        assert_eq!(
            "lines:4".parse::<HilbertConfig>().unwrap(),
            HilbertConfig::DisjointLines { d: 4 }
        );
        assert!("plane".parse::<HilbertConfig>().is_err());
        assert!("ci:2".parse::<HilbertConfig>().is_err());
    }

    #[test]
    fn claim_names_roundtrip() {
        for c in Claim::ALL {
            assert_eq!(c.name().parse::<Claim>().unwrap(), c);
            assert_eq!(serde_json::to_value(c).unwrap(), json!(c.name()));
        }
        assert!("bijection".parse::<Claim>().is_err());
    }

    #[test]
    fn small_window_claims_hold() {
        let w = SearchWindow::new(0, 3, 2, 2).unwrap();
        for c in Claim::ALL {
            let report = check_claim(c, &w);
            assert!(report.instances > 0, "{c}");
            assert!(report.holds(), "{c}: {:?}", report.counterexamples.first());
        }
    }
}
