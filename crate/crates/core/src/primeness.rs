//! Primeness certification for transcendental meromorphic functions.
//!
//! The certification rules are mechanical implications between named
//! hypotheses about a subject `f = numerator / denominator`:
//!
//! - a subject with simple poles (except finitely many) whose translates
//!   `f - beta` all have finitely many multiple zeros is pseudo-prime;
//! - an entire such subject is also left-prime;
//! - an entire subject whose translates have at most one multiple zero is
//!   prime;
//! - a subject with finitely many poles and finitely many multiple zeros
//!   per translate is right-prime;
//! - a strictly increasing, unbounded coefficient-ratio sequence localizes
//!   all multiple zeros of every translate inside a fixed disk, which
//!   discharges the multiplicity hypothesis for entire subjects, for
//!   quotients by a polynomial, and for dominated quotients of two such
//!   functions.
//!
//! Every certificate carries an evidence level, the weakest link of the
//! hypotheses it consumed: `Proved` (analytic, closed-form model),
//! `Window` (verified on a finite range only) or `Assumed` (declared by
//! the caller). Evidence is computed, never asserted.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{ExtValuation, LogRadius, Rat};
use crate::error::{Error, Result};
use crate::polygon::{CoefficientModel, Growth, ModelKind};
use crate::series::Poly;

/// Index/radius range over which a hypothesis was actually verified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WindowRange {
    Indices { from: usize, to: usize },
    LogRadii { from: Rat, to: Rat },
}

/// Evidence level of a hypothesis or certificate, ordered
/// `Proved > Window > Assumed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Proved,
    Window(WindowRange),
    Assumed,
}

impl Evidence {
    pub fn rank(&self) -> u8 {
        match self {
            Evidence::Proved => 2,
            Evidence::Window(_) => 1,
            Evidence::Assumed => 0,
        }
    }
}

/// Pick the weakest evidence of a nonempty collection (first one on ties).
pub fn weakest_evidence<'a, I: IntoIterator<Item = &'a Evidence>>(evs: I) -> Evidence {
    let mut out: Option<&Evidence> = None;
    for e in evs {
        out = Some(match out {
            None => e,
            Some(cur) if e.rank() < cur.rank() => e,
            Some(cur) => cur,
        });
    }
    out.expect("weakest_evidence of an empty set").clone()
}

/// What a hypothesis asserts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum HypothesisKind {
    /// All poles of the subject are simple except finitely many.
    PolesSimpleExceptFinitely,
    /// For every value beta, `f - beta` has finitely many multiple zeros.
    MultipleZerosFiniteForEveryBeta,
    /// For every value beta, `f - beta` has at most one multiple zero.
    /// Never machine-derived; only ever assumed by the caller.
    AtMostOneMultipleZeroPerBeta,
    /// The subject has finitely many poles.
    FinitelyManyPoles,
    /// The coefficient-ratio sequence is strictly increasing and unbounded
    /// from index `n0` on.
    RatioCondition { n0: usize },
    /// The numerator's maximum modulus outgrows the denominator's without
    /// bound.
    Dominates,
}

/// Which component of the subject a hypothesis talks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Subject,
    Numerator,
    Denominator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    #[serde(flatten)]
    pub kind: HypothesisKind,
    pub target: Target,
    pub evidence: Evidence,
}

impl Hypothesis {
    pub fn new(kind: HypothesisKind, evidence: Evidence) -> Hypothesis {
        Hypothesis {
            kind,
            target: Target::Subject,
            evidence,
        }
    }

    pub fn on(mut self, target: Target) -> Hypothesis {
        self.target = target;
        self
    }
}

/// Outcome of a hypothesis check: either an established hypothesis or an
/// explicit report of why the condition could not be established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypothesisCheck {
    Established(Hypothesis),
    Failed { reason: String },
}

impl HypothesisCheck {
    pub fn established(self) -> Option<Hypothesis> {
        match self {
            HypothesisCheck::Established(h) => Some(h),
            HypothesisCheck::Failed { .. } => None,
        }
    }
}

/// Primeness verdicts, from weakest to strongest claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    PseudoPrime,
    LeftPrime,
    RightPrime,
    Prime,
}

/// The certification rule that fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Ratio condition on an entire subject implies pseudo-primeness.
    IncreasingRatioCriterion,
    /// Ratio-condition numerator over a polynomial denominator.
    RatioOverPolynomialDenominator,
    /// Two ratio-condition components with a dominating numerator.
    DominatedRatioQuotient,
    /// Simple poles plus finitely many multiple zeros per translate.
    SimplePolesSimpleValues,
    /// Entire subject with finitely many multiple zeros per translate.
    EntireSimpleValues,
    /// Entire subject with finitely many multiple zeros is left-prime.
    EntireLeftPrime,
    /// Entire subject with at most one multiple zero per translate.
    EntireUniqueMultipleZero,
    /// Finitely many poles plus finite multiplicity per translate.
    FinitePolesRightPrime,
}

/// A primeness verdict with the rule that fired and the hypotheses it
/// consumed. The evidence is the weakest link of those hypotheses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub rule: Rule,
    pub evidence: Evidence,
    pub hypotheses: Vec<Hypothesis>,
}

impl Certificate {
    fn fire(verdict: Verdict, rule: Rule, hypotheses: Vec<Hypothesis>) -> Certificate {
        let evidence = weakest_evidence(hypotheses.iter().map(|h| &h.evidence));
        Certificate {
            verdict,
            rule,
            evidence,
            hypotheses,
        }
    }
}

/// A meromorphic function as a pair of entire coefficient models with no
/// common zeros. Coprimality is an input contract: it is declared by
/// constructing the pair, not checked, because it is not decidable from
/// valuations alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeromorphicModel {
    numerator: CoefficientModel,
    denominator: CoefficientModel,
}

impl MeromorphicModel {
    /// An entire subject: denominator 1.
    pub fn entire(numerator: CoefficientModel) -> MeromorphicModel {
        let denominator = CoefficientModel::poly(numerator.prime(), Poly::constant(Rat::one()));
        MeromorphicModel {
            numerator,
            denominator,
        }
    }

    pub fn quotient(
        numerator: CoefficientModel,
        denominator: CoefficientModel,
    ) -> Result<MeromorphicModel> {
        numerator.prime().require_same(denominator.prime())?;
        if is_zero_function(&denominator) {
            return Err(Error::ZeroFunction);
        }
        Ok(MeromorphicModel {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &CoefficientModel {
        &self.numerator
    }

    pub fn denominator(&self) -> &CoefficientModel {
        &self.denominator
    }

    /// True when the denominator is a nonzero constant polynomial.
    pub fn is_entire(&self) -> bool {
        matches!(self.denominator.kind(), ModelKind::Poly(p) if p.degree() == Some(0))
    }

    /// Degree of a non-constant polynomial denominator, if that is what
    /// the denominator is.
    fn polynomial_pole_degree(&self) -> Option<usize> {
        match self.denominator.kind() {
            ModelKind::Poly(p) => match p.degree() {
                Some(d) if d >= 1 => Some(d),
                _ => None,
            },
            _ => None,
        }
    }
}

fn is_zero_function(m: &CoefficientModel) -> bool {
    match m.kind() {
        ModelKind::Poly(p) => p.is_zero(),
        ModelKind::List(w) => w.iter().all(ExtValuation::is_infinite),
        ModelKind::PrefixTail { .. } | ModelKind::Family { .. } => false,
    }
}

/// Least integer `k` whose `(N-2)`-th power, scaled by `N - 1`, reaches
/// `2 N^(N-1)`; from this index on the closed-form family's consecutive
/// ratio gaps are at least 2 and the ratio sequence strictly increases.
/// Decided by exact integer comparison.
pub fn derive_tail_start(big_n: u32) -> Result<usize> {
    if big_n < 3 {
        return Err(Error::Domain(format!(
            "tail start bound requires N >= 3, got {big_n}"
        )));
    }
    let target = BigInt::from(2u32) * BigInt::from(big_n).pow(big_n - 1);
    let scale = BigInt::from(big_n - 1);
    let mut k = 1usize;
    loop {
        if BigInt::from(k).pow(big_n - 2) * &scale >= target {
            return Ok(k);
        }
        k += 1;
    }
}

/// Build the two-parameter example family: valuation steps `v_alpha` for
/// the numerator and `v_beta` for the denominator, with
/// `0 < v_alpha < v_beta` (the valuation form of `|beta| < |alpha| < 1`).
pub fn build_family_pair(
    prime: crate::arith::Prime,
    big_n: u32,
    v_alpha: &Rat,
    v_beta: &Rat,
) -> Result<(CoefficientModel, CoefficientModel)> {
    if !(v_alpha.is_positive() && v_alpha < v_beta) {
        return Err(Error::Domain(format!(
            "family pair requires 0 < v_alpha < v_beta, got v_alpha = {v_alpha}, v_beta = {v_beta}"
        )));
    }
    let f = CoefficientModel::family(prime, big_n, v_alpha.clone())?;
    let g = CoefficientModel::family(prime, big_n, v_beta.clone())?;
    Ok((f, g))
}

/// Check the strictly-increasing-ratio condition on a model.
///
/// For the closed-form family the start index comes from the exact bound
/// ([`derive_tail_start`]), the increase is re-verified on `[n0, scan_to]`
/// and the evidence is `Proved`. For list and prefix models the least
/// start index within the scanned window is found and the evidence is the
/// verified `Window`. In every case the start index is raised until its
/// ratio is at least every earlier defined ratio, so that the localization
/// disk covers all earlier critical radii.
pub fn check_ratio_condition(model: &CoefficientModel, scan_to: usize) -> HypothesisCheck {
    let failed = |reason: String| HypothesisCheck::Failed { reason };

    // Last index with a computable ratio, clamped to the scan budget.
    let scan_end = match model.kind() {
        ModelKind::Family { .. } => scan_to,
        ModelKind::Poly(p) => match p.degree() {
            Some(d) if d >= 1 => scan_to.min(d - 1),
            _ => return failed("constant model has no ratio sequence".into()),
        },
        ModelKind::List(w) => {
            if w.len() < 2 {
                return failed("valuation list too short for a ratio sequence".into());
            }
            scan_to.min(w.len() - 2)
        }
        ModelKind::PrefixTail { w, .. } => scan_to.min(w.len() - 2),
    };

    let rho = |n: usize| model.log_critical_radius(n);

    let mut n0 = match model.kind() {
        ModelKind::Family { big_n, .. } => {
            let start = derive_tail_start(*big_n).expect("validated N");
            // Re-verify the proved increase over the scanned window.
            let mut prev = match rho(start) {
                Ok(r) => r,
                Err(e) => return failed(format!("ratio undefined at start index {start}: {e}")),
            };
            for n in start + 1..=scan_end {
                let cur = rho(n).expect("family ratios are total");
                if cur <= prev {
                    return failed(format!(
                        "ratio sequence failed to increase at index {n} despite the closed-form bound"
                    ));
                }
                prev = cur;
            }
            start
        }
        _ => {
            // Least start of a strict-increase run that reaches the end of
            // the scannable window; ratios blocked by zero coefficients
            // cut the run.
            if scan_end == 0 && rho(0).is_err() {
                return failed("no computable ratio in the scanned range".into());
            }
            let mut rhos: Vec<Option<Rat>> = Vec::with_capacity(scan_end + 1);
            for n in 0..=scan_end {
                rhos.push(rho(n).ok());
            }
            let Some(last) = rhos[scan_end].clone() else {
                return failed(format!(
                    "zero coefficient blocks the ratio at the end of the scan (index {scan_end})"
                ));
            };
            let mut start = scan_end;
            let mut next = last;
            while start > 0 {
                match &rhos[start - 1] {
                    Some(r) if *r < next => {
                        next = r.clone();
                        start -= 1;
                    }
                    _ => break,
                }
            }
            if start == scan_end {
                return failed(
                    "no strict increase observed at the end of the scanned range".into(),
                );
            }
            start
        }
    };

    // Normalization: every earlier defined ratio must be <= rho(n0).
    loop {
        let r0 = match rho(n0) {
            Ok(r) => r,
            Err(e) => return failed(format!("ratio undefined at index {n0}: {e}")),
        };
        let violated = (0..n0).any(|k| matches!(rho(k), Ok(r) if r > r0));
        if !violated {
            break;
        }
        if n0 >= scan_end {
            return failed(
                "cannot normalize the start index past earlier larger ratios within the scan"
                    .into(),
            );
        }
        n0 += 1;
    }

    let evidence = match model.kind() {
        ModelKind::Family { .. } => Evidence::Proved,
        _ => Evidence::Window(WindowRange::Indices {
            from: n0,
            to: scan_end,
        }),
    };
    HypothesisCheck::Established(Hypothesis::new(
        HypothesisKind::RatioCondition { n0 },
        evidence,
    ))
}

/// Check that `f`'s maximum modulus outgrows `g`'s without bound.
///
/// For two family models with the same `N` this is decided analytically:
/// the difference of the two log moduli along the shared argmax is
/// `(v_g - v_f) * E((n/N)^N)`, which tends to infinity exactly when
/// `v_f < v_g`; the conclusion is re-verified on integer log-radii 1..50.
/// Every other pair is probed on a grid and reported as a `Window`.
pub fn check_dominates(f: &CoefficientModel, g: &CoefficientModel) -> Result<HypothesisCheck> {
    let default_grid: Vec<LogRadius> = (1..=20).map(LogRadius::from).collect();
    check_dominates_on_grid(f, g, &default_grid)
}

pub fn check_dominates_on_grid(
    f: &CoefficientModel,
    g: &CoefficientModel,
    grid: &[LogRadius],
) -> Result<HypothesisCheck> {
    f.prime().require_same(g.prime())?;
    if let (
        ModelKind::Family {
            big_n: nf,
            v_alpha: vf,
        },
        ModelKind::Family {
            big_n: ng,
            v_alpha: vg,
        },
    ) = (f.kind(), g.kind())
    {
        if nf == ng {
            if vf < vg {
                let mut prev: Option<Rat> = None;
                for t in (1..=50).map(LogRadius::from) {
                    let d = f.max_modulus_log(&t)?.value - g.max_modulus_log(&t)?.value;
                    if let Some(p) = prev {
                        if d < p {
                            return Ok(HypothesisCheck::Failed {
                                reason: format!(
                                    "modulus gap decreased at t = {t} despite the closed form"
                                ),
                            });
                        }
                    }
                    prev = Some(d);
                }
                return Ok(HypothesisCheck::Established(Hypothesis::new(
                    HypothesisKind::Dominates,
                    Evidence::Proved,
                )));
            }
            return Ok(HypothesisCheck::Failed {
                reason: format!(
                    "domination requires a strictly smaller valuation step, got {vf} vs {vg}"
                ),
            });
        }
    }

    if grid.len() < 2 {
        return Ok(HypothesisCheck::Failed {
            reason: "domination probe needs at least two grid points".into(),
        });
    }
    let mut prev: Option<Rat> = None;
    for t in grid {
        let d = f.max_modulus_log(t)?.value - g.max_modulus_log(t)?.value;
        if let Some(p) = prev {
            if d <= p {
                return Ok(HypothesisCheck::Failed {
                    reason: format!("modulus gap not strictly increasing at t = {t}"),
                });
            }
        }
        prev = Some(d);
    }
    Ok(HypothesisCheck::Established(Hypothesis::new(
        HypothesisKind::Dominates,
        Evidence::Window(WindowRange::LogRadii {
            from: grid.first().unwrap().0.clone(),
            to: grid.last().unwrap().0.clone(),
        }),
    )))
}

/// Log-radius `t_beta` past which the term of index 0 of `f - beta` can
/// never attain the maximum modulus, so that (under the ratio condition
/// from `n0`) every zero of `f - beta` beyond `t_beta` is simple.
///
/// Uses `|a_0 - beta| <= p^(-min(w_0, v_beta))` and returns
/// `max(rho_{n0}, inf { t : max_{n>=1} (n*t - w_n) >= -min(w_0, v_beta) })`,
/// the exact threshold with the property "for every rational t > t_beta
/// the argmax excludes index 0".
pub fn multiple_zero_localization(
    f: &CoefficientModel,
    v_beta: &ExtValuation,
    n0: usize,
) -> Result<LogRadius> {
    let rho_n0 = f.log_critical_radius(n0)?;

    let w0 = f.valuation(0)?;
    let bound = w0.min(v_beta.clone());
    let target = match bound {
        // a_0 = beta = 0: index 0 contributes nothing at any radius.
        ExtValuation::Infinite => return Ok(LogRadius(rho_n0)),
        ExtValuation::Finite(m) => -m,
    };

    // inf over n >= 1 of (target + w_n) / n; the scan may stop once both
    // the current ratio and the local slope exceed the best seen, since a
    // certified increasing slope keeps all later ratios above it.
    let strict_start = match f.kind() {
        ModelKind::Family { big_n, .. } => Some(derive_tail_start(*big_n)?),
        ModelKind::PrefixTail { tail, .. } => Some(tail.ratios_increasing_from),
        _ => None,
    };
    let support_end = match f.kind() {
        ModelKind::Poly(p) => p.degree(),
        ModelKind::List(w) => Some(w.len().saturating_sub(1)),
        ModelKind::PrefixTail { w, .. } => Some(w.len() - 1),
        ModelKind::Family { .. } => None,
    };

    let mut best: Option<Rat> = None;
    let mut n = 1usize;
    loop {
        if let Some(end) = support_end {
            if n > end {
                if matches!(f.kind(), ModelKind::PrefixTail { .. }) {
                    // The prefix ran out before the stop rule held.
                    return Err(Error::InsufficientPrefix {
                        available: end + 1,
                        requested: "zero localization threshold".into(),
                    });
                }
                break;
            }
        }
        let ratio = match f.valuation(n)? {
            ExtValuation::Finite(w) => {
                let r = (target.clone() + w) / Rat::from_int(n as i64);
                match &best {
                    None => best = Some(r.clone()),
                    Some(b) if r < *b => best = Some(r.clone()),
                    _ => {}
                }
                Some(r)
            }
            ExtValuation::Infinite => None,
        };
        // Stop rule: past the certified increase start, once both the
        // current ratio and the local slope exceed the best seen, every
        // later ratio stays above it.
        if let (Some(start), Some(b), Some(r)) = (strict_start, &best, &ratio) {
            if n >= start {
                if let Ok(slope) = f.log_critical_radius(n) {
                    if slope > *b && *r > *b {
                        break;
                    }
                }
            }
        }
        n += 1;
    }

    let threshold = match best {
        Some(b) => rho_n0.max(b),
        None => rho_n0,
    };
    Ok(LogRadius(threshold))
}

/// Fire every applicable certification rule for the subject given the
/// established hypotheses, deriving intermediate hypotheses where the
/// rules allow it, and return one certificate per verdict (the
/// best-evidenced rule that reached it).
///
/// Rejects subjects whose numerator is not classified transcendental:
/// primeness analysis is about transcendental functions.
pub fn rule_engine(
    subject: &MeromorphicModel,
    hypotheses: &[Hypothesis],
) -> Result<Vec<Certificate>> {
    match subject.numerator().growth_classify() {
        Growth::Transcendental { .. } => {}
        _ => return Err(Error::NotTranscendental),
    }

    let entire = subject.is_entire();
    // For an entire subject the numerator is the subject.
    let norm = |t: Target| -> Target {
        if entire && t == Target::Numerator {
            Target::Subject
        } else {
            t
        }
    };

    let mut pool: Vec<Hypothesis> = hypotheses
        .iter()
        .cloned()
        .map(|mut h| {
            h.target = norm(h.target);
            h
        })
        .collect();

    let find = |pool: &[Hypothesis], target: Target, pred: &dyn Fn(&HypothesisKind) -> bool| {
        pool.iter()
            .filter(|h| h.target == target && pred(&h.kind))
            .max_by_key(|h| h.evidence.rank())
            .cloned()
    };
    let is_ratio = |k: &HypothesisKind| matches!(k, HypothesisKind::RatioCondition { .. });

    let mut certificates: Vec<Certificate> = Vec::new();
    let mut derived: Vec<Hypothesis> = Vec::new();

    let ratio_num_target = if entire { Target::Subject } else { Target::Numerator };
    let ratio_num = find(&pool, ratio_num_target, &is_ratio);

    // Ratio condition on an entire subject: pseudo-prime, and the
    // multiplicity hypothesis follows with inherited evidence.
    if entire {
        if let Some(rc) = &ratio_num {
            certificates.push(Certificate::fire(
                Verdict::PseudoPrime,
                Rule::IncreasingRatioCriterion,
                vec![rc.clone()],
            ));
            derived.push(
                Hypothesis::new(
                    HypothesisKind::MultipleZerosFiniteForEveryBeta,
                    rc.evidence.clone(),
                )
                .on(Target::Subject),
            );
        }
    }

    // Ratio-condition numerator over a polynomial denominator: finitely
    // many poles (all at the denominator's zeros), hence also simple
    // except finitely many, and the multiplicity hypothesis transfers.
    if subject.polynomial_pole_degree().is_some() {
        if let Some(rc) = &ratio_num {
            certificates.push(Certificate::fire(
                Verdict::PseudoPrime,
                Rule::RatioOverPolynomialDenominator,
                vec![rc.clone()],
            ));
            derived.push(
                Hypothesis::new(HypothesisKind::FinitelyManyPoles, Evidence::Proved)
                    .on(Target::Subject),
            );
            derived.push(
                Hypothesis::new(
                    HypothesisKind::MultipleZerosFiniteForEveryBeta,
                    rc.evidence.clone(),
                )
                .on(Target::Subject),
            );
        }
    }

    // Two ratio-condition components with a dominating numerator: the
    // denominator's eventual simple zeros make the poles eventually
    // simple, and domination transfers the multiplicity hypothesis to
    // every translate of the quotient.
    if subject.denominator().is_transcendental() {
        let ratio_den = find(&pool, Target::Denominator, &is_ratio);
        let dominates = find(&pool, Target::Subject, &|k| {
            matches!(k, HypothesisKind::Dominates)
        });
        if let (Some(rn), Some(rd), Some(dom)) = (&ratio_num, &ratio_den, &dominates) {
            let used = vec![rn.clone(), rd.clone(), dom.clone()];
            let ev = weakest_evidence(used.iter().map(|h| &h.evidence));
            certificates.push(Certificate::fire(
                Verdict::PseudoPrime,
                Rule::DominatedRatioQuotient,
                used,
            ));
            derived.push(
                Hypothesis::new(HypothesisKind::PolesSimpleExceptFinitely, rd.evidence.clone())
                    .on(Target::Subject),
            );
            derived.push(
                Hypothesis::new(HypothesisKind::MultipleZerosFiniteForEveryBeta, ev)
                    .on(Target::Subject),
            );
        }
    }

    // At most one multiple zero is in particular finitely many.
    if let Some(h) = find(&pool, Target::Subject, &|k| {
        matches!(k, HypothesisKind::AtMostOneMultipleZeroPerBeta)
    }) {
        derived.push(
            Hypothesis::new(
                HypothesisKind::MultipleZerosFiniteForEveryBeta,
                h.evidence.clone(),
            )
            .on(Target::Subject),
        );
    }

    pool.extend(derived.drain(..));

    // Finitely many poles are in particular simple except finitely many.
    if let Some(h) = find(&pool, Target::Subject, &|k| {
        matches!(k, HypothesisKind::FinitelyManyPoles)
    }) {
        pool.push(
            Hypothesis::new(HypothesisKind::PolesSimpleExceptFinitely, h.evidence.clone())
                .on(Target::Subject),
        );
    }

    let mzf = find(&pool, Target::Subject, &|k| {
        matches!(k, HypothesisKind::MultipleZerosFiniteForEveryBeta)
    });
    let poles_simple = find(&pool, Target::Subject, &|k| {
        matches!(k, HypothesisKind::PolesSimpleExceptFinitely)
    });
    let finitely_many_poles = find(&pool, Target::Subject, &|k| {
        matches!(k, HypothesisKind::FinitelyManyPoles)
    });
    let at_most_one = find(&pool, Target::Subject, &|k| {
        matches!(k, HypothesisKind::AtMostOneMultipleZeroPerBeta)
    });

    if let (Some(ps), Some(mz)) = (&poles_simple, &mzf) {
        certificates.push(Certificate::fire(
            Verdict::PseudoPrime,
            Rule::SimplePolesSimpleValues,
            vec![ps.clone(), mz.clone()],
        ));
    }
    if entire {
        if let Some(mz) = &mzf {
            certificates.push(Certificate::fire(
                Verdict::PseudoPrime,
                Rule::EntireSimpleValues,
                vec![mz.clone()],
            ));
            certificates.push(Certificate::fire(
                Verdict::LeftPrime,
                Rule::EntireLeftPrime,
                vec![mz.clone()],
            ));
        }
        if let Some(one) = &at_most_one {
            certificates.push(Certificate::fire(
                Verdict::Prime,
                Rule::EntireUniqueMultipleZero,
                vec![one.clone()],
            ));
        }
    }
    if let (Some(fp), Some(mz)) = (&finitely_many_poles, &mzf) {
        certificates.push(Certificate::fire(
            Verdict::RightPrime,
            Rule::FinitePolesRightPrime,
            vec![fp.clone(), mz.clone()],
        ));
    }

    // One certificate per verdict: keep the best evidence, earliest rule
    // on ties. Emission order above fixes the attribution.
    let mut out: Vec<Certificate> = Vec::new();
    for cert in certificates {
        match out.iter_mut().find(|c| c.verdict == cert.verdict) {
            None => out.push(cert),
            Some(existing) => {
                if cert.evidence.rank() > existing.evidence.rank() {
                    *existing = cert;
                }
            }
        }
    }
    Ok(out)
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::PseudoPrime => "pseudo-prime",
            Verdict::LeftPrime => "left-prime",
            Verdict::RightPrime => "right-prime",
            Verdict::Prime => "prime",
        };
        write!(f, "{s}")
    }
}
