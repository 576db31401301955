//! Coefficient-valuation models of entire functions and the queries built
//! on them: Newton polygons, the log maximum modulus, zero counting and
//! growth classification.
//!
//! An entire function enters the crate as the sequence `w_n` of valuations
//! of its coefficients (`|a_n| = p^(-w_n)`, `w_n = +inf` meaning `a_n = 0`).
//! At log-radius `t` the log maximum modulus is
//!
//! ```text
//! M(t) = max_n L_n(t),   L_n(t) = n*t - w_n
//! ```
//!
//! and the least/greatest attaining indices `mu <= nu` count the zeros
//! in the open disk, the closed disk and on the circle of radius `p^t`:
//! `mu` zeros strictly inside, `nu` in the closed disk, `nu - mu` on the
//! circle. Only counts are ever produced; zeros may live in extensions of
//! the base field and are never materialized.
//!
//! All four model kinds answer the same queries, but with different
//! honesty boundaries: finite models (polynomial, valuation list) answer
//! everything, the closed-form family answers everything by a terminating
//! scan, and a prefix-plus-certified-tail model answers only queries its
//! prefix can decide, surfacing `InsufficientPrefix` beyond that.

use num_bigint::BigInt;
use num_traits::{Euclid, Signed};
use serde::{Deserialize, Serialize};

use crate::arith::{val_p, ExtValuation, LogRadius, Prime, Rat};
use crate::error::{Error, Result};
use crate::primeness::derive_tail_start;
use crate::series::{Poly, TruncatedSeries};

/// Certified property of the unseen tail of a prefix model: the ratio
/// sequence is declared strictly increasing from `ratios_increasing_from`
/// on, and unbounded when `unbounded` is set. The declared start index
/// must lie inside the prefix and the prefix itself must satisfy the
/// strict increase; this is validated at construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailCertificate {
    pub ratios_increasing_from: usize,
    pub unbounded: bool,
}

/// How the valuation sequence of an entire function is produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelKind {
    /// Explicit polynomial; `w_n = val_p(c_n)`.
    Poly(Poly),
    /// Explicit finite valuation list; indices beyond the list carry `+inf`.
    List(Vec<ExtValuation>),
    /// Finite prefix of valuations plus a certified tail property.
    PrefixTail {
        w: Vec<ExtValuation>,
        tail: TailCertificate,
    },
    /// Closed form `w_n = E((n/N)^N) * v_alpha` with `N >= 3`, `v_alpha > 0`.
    Family { big_n: u32, v_alpha: Rat },
}

/// An entire function given through the valuations of its coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientModel {
    prime: Prime,
    kind: ModelKind,
    /// Valuations of a polynomial model, computed once at construction.
    poly_valuations: Option<Vec<ExtValuation>>,
}

/// The log maximum modulus at one log-radius, with its attaining indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModulusPoint {
    pub t: LogRadius,
    /// `log_p |f|(r)` at `r = p^t`.
    pub value: Rat,
    /// Least index attaining the maximum.
    pub mu: usize,
    /// Greatest index attaining the maximum.
    pub nu: usize,
}

/// Zero counts at one radius, all with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroCounts {
    pub in_open_disk: usize,
    pub in_closed_disk: usize,
    pub on_circle: usize,
}

/// Lower convex hull of the points `(n, w_n)` with `w_n` finite.
/// Vertex indices are strictly increasing and the slopes between
/// consecutive vertices strictly increase; interior points lying exactly
/// on a hull segment are not vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub vertices: Vec<(usize, Rat)>,
}

/// Growth classification of a model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Growth {
    Polynomial { degree: usize },
    Transcendental { evidence: TranscendenceEvidence },
    Unknown,
}

/// Why a model is classified transcendental.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TranscendenceEvidence {
    /// Closed form with hull slopes growing without bound.
    UnboundedSlopes,
    /// A declared (not derived) unbounded tail certificate.
    DeclaredTail,
}

/// Outcome of probing the polynomial-growth inequality on a grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessOutcome {
    /// First grid point where `M(n*t + log_alpha) >= log_beta + n*M(t)`,
    /// which is inconsistent with polynomial growth.
    Witness { t: LogRadius },
    /// The strict inequality `M(n*t + log_alpha) < log_beta + n*M(t)`
    /// held at every sampled point.
    InequalityHeldOnGrid,
}

impl CoefficientModel {
    pub fn poly(prime: Prime, poly: Poly) -> CoefficientModel {
        let w = poly.coeffs().iter().map(|c| val_p(c, prime)).collect();
        CoefficientModel {
            prime,
            kind: ModelKind::Poly(poly),
            poly_valuations: Some(w),
        }
    }

    /// Promote a truncated series to a polynomial model made of its known
    /// coefficients.
    pub fn from_series(s: &TruncatedSeries) -> CoefficientModel {
        CoefficientModel::poly(s.prime(), s.to_poly())
    }

    pub fn list(prime: Prime, w: Vec<ExtValuation>) -> CoefficientModel {
        CoefficientModel {
            prime,
            kind: ModelKind::List(w),
            poly_valuations: None,
        }
    }

    pub fn prefix_tail(
        prime: Prime,
        w: Vec<ExtValuation>,
        tail: TailCertificate,
    ) -> Result<CoefficientModel> {
        let m = w.len();
        if m < 2 {
            return Err(Error::Domain(
                "prefix must contain at least two valuations".into(),
            ));
        }
        let n0 = tail.ratios_increasing_from;
        if n0 + 1 >= m {
            return Err(Error::Domain(format!(
                "tail start {n0} is not inside the prefix of length {m}"
            )));
        }
        for (n, v) in w.iter().enumerate().skip(n0) {
            if v.is_infinite() {
                return Err(Error::Domain(format!(
                    "prefix valuation at index {n} is infinite but lies at or beyond the tail start {n0}"
                )));
            }
        }
        let rho = |n: usize| -> Rat {
            let a = w[n].as_finite().unwrap();
            let b = w[n + 1].as_finite().unwrap();
            b - a
        };
        for n in n0..m.saturating_sub(2) {
            if rho(n) >= rho(n + 1) {
                return Err(Error::Domain(format!(
                    "prefix ratios are not strictly increasing at index {n} despite the certificate"
                )));
            }
        }
        Ok(CoefficientModel {
            prime,
            kind: ModelKind::PrefixTail { w, tail },
            poly_valuations: None,
        })
    }

    pub fn family(prime: Prime, big_n: u32, v_alpha: Rat) -> Result<CoefficientModel> {
        if big_n < 3 {
            return Err(Error::Domain(format!(
                "family parameter N must be at least 3, got {big_n}"
            )));
        }
        if !v_alpha.is_positive() {
            return Err(Error::Domain(format!(
                "family valuation step must be positive, got {v_alpha}"
            )));
        }
        Ok(CoefficientModel {
            prime,
            kind: ModelKind::Family { big_n, v_alpha },
            poly_valuations: None,
        })
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    /// Last index whose valuation the model can state, for models of
    /// finite extent; `None` for the closed-form family.
    pub fn known_prefix_end(&self) -> Option<usize> {
        self.known_support_end()
    }

    /// Valuation `w_n`, or `InsufficientPrefix` when the model simply does
    /// not know it.
    pub fn valuation(&self, n: usize) -> Result<ExtValuation> {
        match &self.kind {
            ModelKind::Poly(_) => Ok(self
                .poly_valuations
                .as_ref()
                .expect("cached at construction")
                .get(n)
                .cloned()
                .unwrap_or(ExtValuation::Infinite)),
            ModelKind::List(w) => Ok(w.get(n).cloned().unwrap_or(ExtValuation::Infinite)),
            ModelKind::PrefixTail { w, .. } => {
                w.get(n).cloned().ok_or(Error::InsufficientPrefix {
                    available: w.len(),
                    requested: format!("w_{n}"),
                })
            }
            ModelKind::Family { big_n, v_alpha } => Ok(ExtValuation::Finite(family_valuation(
                n, *big_n, v_alpha,
            ))),
        }
    }

    fn finite_valuation(&self, n: usize) -> Result<Rat> {
        match self.valuation(n)? {
            ExtValuation::Finite(v) => Ok(v),
            ExtValuation::Infinite => Err(Error::ZeroCoefficient(n)),
        }
    }

    /// Log critical radius `rho_n = w_{n+1} - w_n`, the log of the radius
    /// where the terms of index `n` and `n + 1` tie.
    pub fn log_critical_radius(&self, n: usize) -> Result<Rat> {
        let a = self.finite_valuation(n)?;
        let b = self.finite_valuation(n + 1)?;
        Ok(b - a)
    }

    /// The list `rho_n` for `n` in `[from, to]` (inclusive). Where this is
    /// strictly increasing, these log-radii are exactly the circles
    /// carrying one zero each.
    pub fn critical_radii(&self, from: usize, to: usize) -> Result<Vec<LogRadius>> {
        (from..=to)
            .map(|n| self.log_critical_radius(n).map(LogRadius))
            .collect()
    }

    /// Largest index that can carry a finite valuation, when the model is
    /// finitely supported; `None` for the closed-form family.
    fn known_support_end(&self) -> Option<usize> {
        match &self.kind {
            ModelKind::Poly(p) => Some(p.degree().unwrap_or(0)),
            ModelKind::List(w) => Some(w.len().saturating_sub(1)),
            ModelKind::PrefixTail { w, .. } => Some(w.len() - 1),
            ModelKind::Family { .. } => None,
        }
    }

    /// Inclusive scan end for the argmax of `L_n(t)`.
    ///
    /// `L_{n+1}(t) - L_n(t) = t - rho_n`, so once the ratio sequence is
    /// certified strictly increasing and `rho_n` exceeds `t`, every later
    /// term is strictly smaller. For the family this always terminates;
    /// for a prefix model the query fails honestly when the prefix cannot
    /// decide it.
    fn scan_end(&self, t: &Rat) -> Result<usize> {
        match &self.kind {
            ModelKind::Poly(_) | ModelKind::List(_) => Ok(self.known_support_end().unwrap()),
            ModelKind::PrefixTail { w, .. } => {
                let m = w.len() - 1;
                let last_rho = self.log_critical_radius(m - 1)?;
                if *t < last_rho {
                    Ok(m)
                } else {
                    Err(Error::InsufficientPrefix {
                        available: w.len(),
                        requested: format!("t = {t}"),
                    })
                }
            }
            ModelKind::Family { big_n, .. } => {
                let strict_start = derive_tail_start(*big_n)?;
                let mut n = strict_start;
                loop {
                    if self.log_critical_radius(n)? > *t {
                        return Ok(n);
                    }
                    n += 1;
                }
            }
        }
    }

    /// The log maximum modulus `M(t) = max_n (n*t - w_n)` together with the
    /// least (`mu`) and greatest (`nu`) attaining indices.
    pub fn max_modulus_log(&self, t: &LogRadius) -> Result<ModulusPoint> {
        let end = self.scan_end(&t.0)?;
        let mut best: Option<(Rat, usize, usize)> = None;
        for n in 0..=end {
            let w = match self.valuation(n)? {
                ExtValuation::Finite(w) => w,
                ExtValuation::Infinite => continue,
            };
            let l = Rat::from_int(n as i64) * t.0.clone() - w;
            best = Some(match best {
                None => (l, n, n),
                Some((cur, mu, nu)) => {
                    if l > cur {
                        (l, n, n)
                    } else if l == cur {
                        (cur, mu, n)
                    } else {
                        (cur, mu, nu)
                    }
                }
            });
        }
        match best {
            Some((value, mu, nu)) => Ok(ModulusPoint {
                t: t.clone(),
                value,
                mu,
                nu,
            }),
            None => Err(Error::ZeroFunction),
        }
    }

    /// Zeros with multiplicity in the open disk, the closed disk and on
    /// the circle of radius `p^t`.
    pub fn zero_counts(&self, t: &LogRadius) -> Result<ZeroCounts> {
        let m = self.max_modulus_log(t)?;
        Ok(ZeroCounts {
            in_open_disk: m.mu,
            in_closed_disk: m.nu,
            on_circle: m.nu - m.mu,
        })
    }

    /// Lower convex hull of `(n, w_n)` over `n <= up_to`.
    pub fn newton_polygon(&self, up_to: usize) -> Result<NewtonPolygon> {
        if let ModelKind::PrefixTail { w, .. } = &self.kind {
            if up_to >= w.len() {
                return Err(Error::InsufficientPrefix {
                    available: w.len(),
                    requested: format!("polygon up to index {up_to}"),
                });
            }
        }
        let cap = match self.known_support_end() {
            Some(e) => up_to.min(e),
            None => up_to,
        };
        let mut points: Vec<(usize, Rat)> = Vec::new();
        for n in 0..=cap {
            if let ExtValuation::Finite(w) = self.valuation(n)? {
                points.push((n, w));
            }
        }
        if points.is_empty() {
            return Err(Error::ZeroFunction);
        }
        Ok(NewtonPolygon {
            vertices: lower_hull(points),
        })
    }

    /// Growth classification from the model shape alone.
    pub fn growth_classify(&self) -> Growth {
        match &self.kind {
            ModelKind::Poly(p) => Growth::Polynomial {
                degree: p.degree().unwrap_or(0),
            },
            ModelKind::List(w) => Growth::Polynomial {
                degree: w
                    .iter()
                    .rposition(|v| !v.is_infinite())
                    .unwrap_or(0),
            },
            ModelKind::Family { .. } => Growth::Transcendental {
                evidence: TranscendenceEvidence::UnboundedSlopes,
            },
            ModelKind::PrefixTail { tail, .. } => {
                if tail.unbounded {
                    Growth::Transcendental {
                        evidence: TranscendenceEvidence::DeclaredTail,
                    }
                } else {
                    Growth::Unknown
                }
            }
        }
    }

    pub fn is_transcendental(&self) -> bool {
        matches!(self.growth_classify(), Growth::Transcendental { .. })
    }

    /// Probe, over the given grid, whether the growth comparison
    /// `M(n*t + log_alpha) < log_beta + n*M(t)` ever fails. A failure
    /// point is a witness consistent with transcendence; if the inequality
    /// holds at every sampled `t`, the data seen is consistent with
    /// polynomial growth.
    pub fn transcendence_witness(
        &self,
        log_alpha: &Rat,
        log_beta: &Rat,
        n: u32,
        t_grid: &[LogRadius],
    ) -> Result<WitnessOutcome> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "growth comparison needs an exponent n >= 2, got {n}"
            )));
        }
        for t in t_grid {
            let inner = LogRadius(Rat::from_int(n as i64) * t.0.clone() + log_alpha.clone());
            let lhs = self.max_modulus_log(&inner)?.value;
            let rhs = log_beta.clone() + Rat::from_int(n as i64) * self.max_modulus_log(t)?.value;
            if lhs >= rhs {
                return Ok(WitnessOutcome::Witness { t: t.clone() });
            }
        }
        Ok(WitnessOutcome::InequalityHeldOnGrid)
    }
}

/// `E((n/N)^N) * v_alpha`, evaluated exactly.
pub(crate) fn family_valuation(n: usize, big_n: u32, v_alpha: &Rat) -> Rat {
    let num = BigInt::from(n).pow(big_n);
    let den = BigInt::from(big_n).pow(big_n);
    let floor = num.div_euclid(&den);
    debug_assert!(!floor.is_negative());
    Rat::from_int(floor) * v_alpha.clone()
}

/// Monotone-chain lower hull with exact arithmetic. Points arrive sorted
/// by index; collinear interior points are dropped, so consecutive hull
/// slopes strictly increase.
fn lower_hull(points: Vec<(usize, Rat)>) -> Vec<(usize, Rat)> {
    let mut hull: Vec<(usize, Rat)> = Vec::new();
    for p in points {
        while hull.len() >= 2 {
            let a = &hull[hull.len() - 2];
            let b = &hull[hull.len() - 1];
            // cross((b - a), (p - b)) <= 0 means b is not strictly below
            // the chord from a to p.
            let abx = Rat::from_int((b.0 - a.0) as i64);
            let aby = &b.1 - &a.1;
            let bpx = Rat::from_int((p.0 - b.0) as i64);
            let bpy = &p.1 - &b.1;
            if abx * bpy - aby * bpx <= Rat::zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

impl NewtonPolygon {
    /// Slopes between consecutive vertices; these are exactly the log
    /// critical radii of the function.
    pub fn slopes(&self) -> Vec<Rat> {
        self.vertices
            .windows(2)
            .map(|w| {
                let run = Rat::from_int((w[1].0 - w[0].0) as i64);
                (&w[1].1 - &w[0].1) / run
            })
            .collect()
    }

    /// Attaining indices read off the hull: at a `t` strictly between two
    /// consecutive slopes both indices equal the vertex between them; at a
    /// `t` equal to a slope they are that segment's endpoints.
    pub fn indices_at(&self, t: &Rat) -> (usize, usize) {
        let slopes = self.slopes();
        let first = self.vertices[0].0;
        let mut mu = first;
        let mut nu = first;
        for (i, s) in slopes.iter().enumerate() {
            if t > s {
                mu = self.vertices[i + 1].0;
                nu = mu;
            } else if t == s {
                mu = self.vertices[i].0;
                nu = self.vertices[i + 1].0;
                break;
            } else {
                break;
            }
        }
        (mu, nu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn rat(s: &str) -> Rat {
        s.parse().unwrap()
    }

    /// w_n = n(n-1)/2 for n <= top, as a plain list model.
    fn triangular_list(top: usize) -> CoefficientModel {
        let w = (0..=top)
            .map(|n| ExtValuation::from(n as i64 * (n as i64 - 1) / 2))
            .collect();
        CoefficientModel::list(p5(), w)
    }

    fn family(big_n: u32, v: i64) -> CoefficientModel {
        CoefficientModel::family(p5(), big_n, Rat::from_int(v)).unwrap()
    }

    #[test]
    fn family_valuations_match_direct_floor() {
        let expected = [0i64, 0, 0, 1, 2, 4, 8, 12, 18, 27];
        let f = family(3, 1);
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(f.valuation(n).unwrap(), ExtValuation::from(e));
        }
    }

    #[test]
    fn critical_radius_examples() {
        let f = family(3, 1);
        assert_eq!(f.log_critical_radius(8).unwrap(), rat("9"));
        assert_eq!(f.log_critical_radius(5).unwrap(), rat("4"));
        let tri = triangular_list(20);
        assert_eq!(tri.log_critical_radius(7).unwrap(), rat("7"));
    }

    #[test]
    fn critical_radii_windows() {
        let f = family(3, 1);
        let to_rats = |v: Vec<LogRadius>| v.into_iter().map(|t| t.0).collect::<Vec<_>>();
        assert_eq!(
            to_rats(f.critical_radii(8, 11).unwrap()),
            vec![rat("9"), rat("10"), rat("12"), rat("15")]
        );
        assert_eq!(
            to_rats(f.critical_radii(2, 6).unwrap()),
            vec![rat("1"), rat("1"), rat("2"), rat("4"), rat("4")]
        );
        let tri = triangular_list(20);
        assert_eq!(
            to_rats(tri.critical_radii(0, 4).unwrap()),
            vec![rat("0"), rat("1"), rat("2"), rat("3"), rat("4")]
        );
    }

    #[test]
    fn rho_errors_on_zero_coefficient() {
        let m = CoefficientModel::poly(p5(), Poly::from_ints(&[1, 0, 1]));
        assert!(matches!(
            m.log_critical_radius(0),
            Err(Error::ZeroCoefficient(1))
        ));
        assert!(matches!(
            m.log_critical_radius(2),
            Err(Error::ZeroCoefficient(3))
        ));
    }

    #[test]
    fn polygon_of_one_plus_x() {
        let m = CoefficientModel::poly(p5(), Poly::from_ints(&[1, 1]));
        let hull = m.newton_polygon(10).unwrap();
        assert_eq!(
            hull.vertices,
            vec![(0, Rat::zero()), (1, Rat::zero())]
        );
    }

    #[test]
    fn polygon_matches_root_valuations() {
        // (x - p)^2 (x - 1/p) over p = 5: hull (0,1) -> (2,-1) -> (3,0),
        // slopes -1 (two zeros of valuation 1) then +1 (one of valuation -1).
        // The point (1, 0) lies exactly on the first segment and is not a
        // vertex.
        let x = Poly::from_ints(&[0, 1]);
        let lin1 = x.sub(&Poly::constant(Rat::from_int(5)));
        let lin2 = x.sub(&Poly::constant(rat("1/5")));
        let poly = lin1.mul(&lin1).mul(&lin2);
        let m = CoefficientModel::poly(p5(), poly);
        let hull = m.newton_polygon(5).unwrap();
        assert_eq!(
            hull.vertices,
            vec![(0, rat("1")), (2, rat("-1")), (3, rat("0"))]
        );
        assert_eq!(hull.slopes(), vec![rat("-1"), rat("1")]);
    }

    #[test]
    fn polygon_of_triangular_valuations_keeps_every_point() {
        let m = triangular_list(6);
        let hull = m.newton_polygon(6).unwrap();
        assert_eq!(hull.vertices.len(), 7);
        assert_eq!(
            hull.slopes(),
            (0..6).map(|n| Rat::from_int(n)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn polygon_rejects_zero_function() {
        let m = CoefficientModel::poly(p5(), Poly::zero());
        assert!(matches!(m.newton_polygon(4), Err(Error::ZeroFunction)));
    }

    #[test]
    fn max_modulus_examples() {
        let m = CoefficientModel::poly(p5(), Poly::from_ints(&[1, 1]));
        let pt = m.max_modulus_log(&LogRadius::from(0)).unwrap();
        assert_eq!((pt.value, pt.mu, pt.nu), (rat("0"), 0, 1));

        let tri = triangular_list(30);
        let pt = tri.max_modulus_log(&LogRadius::from(3)).unwrap();
        assert_eq!((pt.value, pt.mu, pt.nu), (rat("6"), 3, 4));
    }

    #[test]
    fn family_max_modulus_agrees_with_bounded_scan() {
        // Independent oracle: brute-force scan of L_n to n = 100.
        let f = family(3, 1);
        let t = LogRadius(rat("5/2"));
        let mut best = rat("-1000000");
        let (mut mu, mut nu) = (0usize, 0usize);
        for n in 0..=100usize {
            let w = f.valuation(n).unwrap().as_finite().unwrap().clone();
            let l = Rat::from_int(n as i64) * t.0.clone() - w;
            if l > best {
                best = l;
                mu = n;
                nu = n;
            } else if l == best {
                nu = n;
            }
        }
        let pt = f.max_modulus_log(&t).unwrap();
        assert_eq!((pt.value.clone(), pt.mu, pt.nu), (best, mu, nu));
        // frozen values from the oracle
        assert_eq!((pt.value, pt.mu, pt.nu), (rat("17/2"), 5, 5));
    }

    #[test]
    fn zero_count_examples() {
        let x = Poly::from_ints(&[0, 1]);
        let poly = x
            .sub(&Poly::constant(Rat::from_int(5)))
            .mul(&x.sub(&Poly::constant(rat("1/5"))));
        let m = CoefficientModel::poly(p5(), poly);
        assert_eq!(
            m.zero_counts(&LogRadius::from(-1)).unwrap(),
            ZeroCounts {
                in_open_disk: 0,
                in_closed_disk: 1,
                on_circle: 1
            }
        );
        assert_eq!(
            m.zero_counts(&LogRadius::from(1)).unwrap(),
            ZeroCounts {
                in_open_disk: 1,
                in_closed_disk: 2,
                on_circle: 1
            }
        );
    }

    #[test]
    fn prefix_tail_counts_one_zero_per_tied_circle() {
        let w: Vec<ExtValuation> = (0..=50)
            .map(|n: i64| ExtValuation::from(n * (n - 1) / 2))
            .collect();
        let tail = TailCertificate {
            ratios_increasing_from: 0,
            unbounded: true,
        };
        let m = CoefficientModel::prefix_tail(p5(), w, tail).unwrap();
        let c = m.zero_counts(&LogRadius::from(7)).unwrap();
        assert_eq!(c.on_circle, 1);
        assert_eq!((c.in_open_disk, c.in_closed_disk), (7, 8));
    }

    #[test]
    fn prefix_tail_refuses_large_radii() {
        let w: Vec<ExtValuation> = (0..=10)
            .map(|n: i64| ExtValuation::from(n * (n - 1) / 2))
            .collect();
        let tail = TailCertificate {
            ratios_increasing_from: 0,
            unbounded: true,
        };
        let m = CoefficientModel::prefix_tail(p5(), w, tail).unwrap();
        // last computable ratio is rho_9 = 9
        assert!(m.max_modulus_log(&LogRadius::from(8)).is_ok());
        assert!(matches!(
            m.max_modulus_log(&LogRadius::from(9)),
            Err(Error::InsufficientPrefix { .. })
        ));
        assert!(matches!(
            m.max_modulus_log(&LogRadius::from(100)),
            Err(Error::InsufficientPrefix { .. })
        ));
    }

    #[test]
    fn prefix_tail_validation() {
        let w: Vec<ExtValuation> = vec![
            ExtValuation::from(0),
            ExtValuation::from(0),
            ExtValuation::from(1),
            ExtValuation::from(1), // rho drops back: 0,1,0
        ];
        let tail = TailCertificate {
            ratios_increasing_from: 1,
            unbounded: true,
        };
        assert!(CoefficientModel::prefix_tail(p5(), w, tail).is_err());

        let w: Vec<ExtValuation> = vec![ExtValuation::Infinite, ExtValuation::from(0)];
        let tail = TailCertificate {
            ratios_increasing_from: 0,
            unbounded: true,
        };
        assert!(CoefficientModel::prefix_tail(p5(), w, tail).is_err());
    }

    #[test]
    fn growth_classification() {
        let m = CoefficientModel::poly(p5(), Poly::from_ints(&[1, 0, 0, 1]));
        assert_eq!(m.growth_classify(), Growth::Polynomial { degree: 3 });

        let f = CoefficientModel::family(p5(), 4, rat("1/2")).unwrap();
        assert_eq!(
            f.growth_classify(),
            Growth::Transcendental {
                evidence: TranscendenceEvidence::UnboundedSlopes
            }
        );

        let w: Vec<ExtValuation> = (0..=10)
            .map(|n: i64| ExtValuation::from(n * (n - 1) / 2))
            .collect();
        let tail = TailCertificate {
            ratios_increasing_from: 0,
            unbounded: false,
        };
        let m = CoefficientModel::prefix_tail(p5(), w, tail).unwrap();
        assert_eq!(m.growth_classify(), Growth::Unknown);
    }

    #[test]
    fn witness_found_for_quadratic_valuation_growth() {
        let tri = triangular_list(60);
        let grid: Vec<LogRadius> = (1..=10).map(LogRadius::from).collect();
        let out = tri
            .transcendence_witness(&Rat::zero(), &Rat::zero(), 2, &grid)
            .unwrap();
        assert_eq!(
            out,
            WitnessOutcome::Witness {
                t: LogRadius::from(1)
            }
        );
    }

    #[test]
    fn no_witness_for_monomial_with_positive_beta() {
        let m = CoefficientModel::poly(p5(), Poly::from_ints(&[0, 0, 0, 1]));
        let grid: Vec<LogRadius> = (1..=10).map(LogRadius::from).collect();
        // M(2t + a) = 3(2t + a) = 6t vs log_beta + 2 M(t) = log_beta + 6t:
        // strict inequality holds iff log_beta > 0.
        let out = m
            .transcendence_witness(&Rat::zero(), &Rat::one(), 2, &grid)
            .unwrap();
        assert_eq!(out, WitnessOutcome::InequalityHeldOnGrid);
        // with log_beta = 0 the comparison is an exact tie, hence a witness
        let out = m
            .transcendence_witness(&Rat::zero(), &Rat::zero(), 2, &grid)
            .unwrap();
        assert_eq!(
            out,
            WitnessOutcome::Witness {
                t: LogRadius::from(1)
            }
        );
    }

    #[test]
    fn family_witness_with_large_beta() {
        let f = family(3, 1);
        let grid: Vec<LogRadius> = (1..=30).map(LogRadius::from).collect();
        let out = f
            .transcendence_witness(&Rat::zero(), &Rat::from_int(10), 2, &grid)
            .unwrap();
        assert!(matches!(out, WitnessOutcome::Witness { .. }));
    }

    #[test]
    fn hull_duality_on_segment_and_between() {
        let x = Poly::from_ints(&[0, 1]);
        let lin1 = x.sub(&Poly::constant(Rat::from_int(5)));
        let lin2 = x.sub(&Poly::constant(rat("1/5")));
        let poly = lin1.mul(&lin1).mul(&lin2);
        let m = CoefficientModel::poly(p5(), poly);
        let hull = m.newton_polygon(5).unwrap();
        for t in ["-5", "-1", "0", "1", "7/2"] {
            let t = rat(t);
            let pt = m.max_modulus_log(&LogRadius(t.clone())).unwrap();
            assert_eq!(hull.indices_at(&t), (pt.mu, pt.nu), "at t = {t}");
        }
    }
}
