//! Exact truncated formal power series and polynomials over the rationals.
//!
//! A [`TruncatedSeries`] stores the coefficients `c_0..c_K` of a function
//! exactly; nothing is known about degrees above the order `K`. Binary
//! operations truncate to the smaller order, which keeps every stored
//! coefficient exact. Equality of two series is meaningful only up to the
//! smaller of the two orders ([`TruncatedSeries::agrees_with`]).
//!
//! Coefficients are rationals only. Quantities that live outside the
//! rationals enter the crate through their valuations (see the polygon
//! module), never as series coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Prime, Rat};
use crate::error::{Error, Result};

/// Polynomial with exact rational coefficients, trailing zeros trimmed.
/// The zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rat, k: usize) -> Poly {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the last nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_affine(&self) -> bool {
        self.coeffs.len() <= 2
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * &Rat::from_int(i as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// `self(other(x))`, exact.
    pub fn compose(&self, other: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with
    /// `deg r < deg divisor`. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeff(d);
        let mut rem = self.clone();
        let mut quot: Vec<Rat> = Vec::new();
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let factor = rem.coeff(rd) / lead.clone();
            let shift = rd - d;
            if quot.len() < shift + 1 {
                quot.resize(shift + 1, Rat::zero());
            }
            quot[shift] = factor.clone();
            rem = rem.sub(&divisor.mul(&Poly::monomial(factor, shift)));
        }
        (Poly::new(quot), rem)
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.degree() {
            None => a,
            Some(d) => {
                let lead = a.coeff(d);
                a.scale(&lead.recip())
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Formal power series known exactly up to a truncation order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    prime: Prime,
    /// Exactly `order + 1` entries: the coefficients of `x^0 .. x^order`.
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    pub fn new(prime: Prime, coeffs: Vec<Rat>) -> TruncatedSeries {
        assert!(!coeffs.is_empty(), "a series carries at least c_0");
        TruncatedSeries { prime, coeffs }
    }

    pub fn zero(prime: Prime, order: usize) -> TruncatedSeries {
        TruncatedSeries {
            prime,
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    /// Embed a polynomial as a series of the given order. Coefficients of
    /// the polynomial above `order` are dropped.
    pub fn from_poly(prime: Prime, p: &Poly, order: usize) -> TruncatedSeries {
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (k, c) in p.coeffs().iter().enumerate().take(order + 1) {
            coeffs[k] = c.clone();
        }
        TruncatedSeries { prime, coeffs }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Index of the highest nonzero stored coefficient.
    pub fn top_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Known coefficients as a polynomial (exact only if the function
    /// really is a polynomial of degree <= order).
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Equality up to the smaller of the two orders.
    pub fn agrees_with(&self, other: &TruncatedSeries) -> bool {
        if self.prime != other.prime {
            return false;
        }
        let k = self.order().min(other.order());
        (0..=k).all(|i| self.coeff(i) == other.coeff(i))
    }

    /// Truncate (or keep) to the given order; `order` must not exceed
    /// the available precision.
    pub fn truncated(&self, order: usize) -> Result<TruncatedSeries> {
        if order > self.order() {
            return Err(Error::OrderTooLow {
                required: order,
                available: self.order(),
            });
        }
        Ok(TruncatedSeries {
            prime: self.prime,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.prime.require_same(other.prime)?;
        let k = self.order().min(other.order());
        Ok(TruncatedSeries {
            prime: self.prime,
            coeffs: (0..=k).map(|i| self.coeff(i) + other.coeff(i)).collect(),
        })
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            prime: self.prime,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Product, truncated to the smaller order: the degree-n output
    /// coefficient depends only on input coefficients of degree <= n,
    /// so every emitted coefficient is exact.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.prime.require_same(other.prime)?;
        let k = self.order().min(other.order());
        let mut out = vec![Rat::zero(); k + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(k + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(k + 1 - i) {
                out[i + j] += &(a * b);
            }
        }
        Ok(TruncatedSeries {
            prime: self.prime,
            coeffs: out,
        })
    }

    pub fn scalar_mul(&self, s: &Rat) -> TruncatedSeries {
        TruncatedSeries {
            prime: self.prime,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Termwise derivative; result order drops by one.
    pub fn derivative(&self) -> TruncatedSeries {
        assert!(
            self.order() >= 1,
            "derivative needs at least order 1: nothing is known about c_1 of an order-0 series"
        );
        TruncatedSeries {
            prime: self.prime,
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * &Rat::from_int(i as i64 + 1))
                .collect(),
        }
    }

    /// Composition `self(inner(x))` with a truncated inner series.
    ///
    /// Requires `inner` to have zero constant term; otherwise every output
    /// coefficient would receive contributions from unknown coefficients of
    /// `inner` and of `self`, and no coefficient would be certain.
    pub fn compose_series(&self, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.prime.require_same(inner.prime)?;
        if !inner.coeff(0).is_zero() {
            return Err(Error::UncertainComposition);
        }
        let k = self.order().min(inner.order());
        // Horner over the inner series: acc = acc * inner + c_n.
        let inner_t = inner.truncated(k)?;
        let mut acc = TruncatedSeries::zero(self.prime, k);
        for n in (0..=k).rev() {
            acc = acc.mul(&inner_t)?;
            let mut coeffs = acc.coeffs;
            coeffs[0] = coeffs[0].clone() + self.coeff(n);
            acc = TruncatedSeries {
                prime: self.prime,
                coeffs,
            };
        }
        Ok(acc)
    }

    /// Composition `self(p(x))` with a polynomial inner.
    ///
    /// With `p(0) = 0` the result is exact to the series order. With
    /// `p(0) != 0` every output coefficient also draws on the unknown tail
    /// of `self`; the result is then the composition of the *truncated
    /// representative* and is flagged truncation-sensitive.
    pub fn compose_poly(&self, p: &Poly) -> Composed {
        let k = self.order();
        let sensitive = !p.coeff(0).is_zero();
        if p.degree().map_or(true, |d| d <= 1) {
            return Composed {
                series: self.compose_affine(&p.coeff(1), &p.coeff(0)),
                truncation_sensitive: sensitive,
            };
        }
        let mut acc = TruncatedSeries::zero(self.prime, k);
        let p_series = TruncatedSeries::from_poly(self.prime, p, k);
        for n in (0..=k).rev() {
            acc = acc.mul(&p_series).expect("same prime");
            let mut coeffs = acc.coeffs;
            coeffs[0] = coeffs[0].clone() + self.coeff(n);
            acc = TruncatedSeries {
                prime: self.prime,
                coeffs,
            };
        }
        Composed {
            series: acc,
            truncation_sensitive: sensitive,
        }
    }

    /// `self(a x + b)` by the binomial transform: the coefficient of x^j
    /// is `a^j sum_{n >= j} c_n C(n, j) b^(n-j)`. Quadratic in the order,
    /// against the cubic general path.
    fn compose_affine(&self, a: &Rat, b: &Rat) -> TruncatedSeries {
        let k = self.order();
        let mut out = vec![Rat::zero(); k + 1];
        if b.is_zero() {
            // pure scaling: coefficient n picks up a^n
            let mut apow = Rat::one();
            for (n, c) in self.coeffs.iter().enumerate() {
                out[n] = c * &apow;
                apow = apow * a.clone();
            }
            return TruncatedSeries {
                prime: self.prime,
                coeffs: out,
            };
        }
        // Pascal row for C(n, j) reused across n.
        let mut binom: Vec<Rat> = vec![Rat::one()];
        for (n, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut bpow = Rat::one();
                for j in (0..=n).rev() {
                    out[j] += &(c * &(&binom[j] * &bpow));
                    bpow = bpow * b.clone();
                }
            }
            // extend C(n, .) to C(n + 1, .)
            binom.push(Rat::one());
            for j in (1..=n).rev() {
                let prev = binom[j - 1].clone();
                binom[j] = binom[j].clone() + prev;
            }
        }
        let mut apow = Rat::one();
        for item in out.iter_mut() {
            *item = item.clone() * apow.clone();
            apow = apow * a.clone();
        }
        TruncatedSeries {
            prime: self.prime,
            coeffs: out,
        }
    }

    /// Polynomial of a series: `p(self)`, exact to the series order.
    pub fn apply_poly(&self, p: &Poly) -> TruncatedSeries {
        let k = self.order();
        let mut acc = TruncatedSeries::zero(self.prime, k);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).expect("same prime");
            let mut coeffs = acc.coeffs;
            coeffs[0] = coeffs[0].clone() + c.clone();
            acc = TruncatedSeries {
                prime: self.prime,
                coeffs,
            };
        }
        acc
    }
}

/// Result of composing with an inner polynomial: carries the flag that
/// marks coefficients as drawn from the truncated representative only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composed {
    pub series: TruncatedSeries,
    pub truncation_sensitive: bool,
}

/// Binary wronskian `W(f1, f2) = f1' f2 - f1 f2'`, exact to the
/// admissible order.
///
/// Sign convention: this is the two-row form with the derivative row
/// first. The determinant form [`wronskian_n`] stacks rows by increasing
/// derivative order instead, so `wronskian_n(&[f1, f2]) = -wronskian(f1, f2)`.
pub fn wronskian(f1: &TruncatedSeries, f2: &TruncatedSeries) -> Result<TruncatedSeries> {
    f1.prime().require_same(f2.prime())?;
    let a = f1.derivative().mul(f2)?;
    let b = f1.mul(&f2.derivative())?;
    a.sub(&b)
}

/// n-ary wronskian: determinant of the matrix whose row `i` holds the
/// `i`-th derivative (i = 0..n-1) of each input series.
pub fn wronskian_n(fs: &[TruncatedSeries]) -> Result<TruncatedSeries> {
    let n = fs.len();
    assert!(n >= 1, "wronskian of an empty family");
    let prime = fs[0].prime();
    for f in fs {
        prime.require_same(f.prime())?;
    }
    let min_order = fs.iter().map(TruncatedSeries::order).min().unwrap();
    if min_order + 1 < n {
        return Err(Error::OrderTooLow {
            required: n - 1,
            available: min_order,
        });
    }
    // Rows of derivatives, then Laplace expansion; n stays small in practice.
    let mut rows: Vec<Vec<TruncatedSeries>> = Vec::with_capacity(n);
    rows.push(fs.to_vec());
    for i in 1..n {
        let prev = &rows[i - 1];
        rows.push(prev.iter().map(TruncatedSeries::derivative).collect());
    }
    det_series(&rows, &(0..n).collect::<Vec<_>>(), 0)
}

fn det_series(rows: &[Vec<TruncatedSeries>], cols: &[usize], row: usize) -> Result<TruncatedSeries> {
    let prime = rows[0][0].prime();
    if cols.len() == 1 {
        return Ok(rows[row][cols[0]].clone());
    }
    let mut acc: Option<TruncatedSeries> = None;
    for (i, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&x| x != c)
            .collect();
        let minor = det_series(rows, &rest, row + 1)?;
        let term = rows[row][c].mul(&minor)?;
        let term = if i % 2 == 0 { term } else { term.neg() };
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    Ok(acc.unwrap_or_else(|| TruncatedSeries::zero(prime, 0)))
}

/// Decision for a pair of polynomials: is their wronskian a nonzero
/// constant, identically zero, or non-constant?
///
/// A nonzero constant wronskian forces both inputs to be affine; a zero
/// wronskian makes them proportional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WronskianPairDecision {
    /// `W(f1, f2) = c != 0`; both polynomials are affine.
    ConstantNonzero { constant: Rat, both_affine: bool },
    /// `W = 0`; `ratio` witnesses `f1 = ratio * f2` when `f2 != 0`.
    ConstantZero { ratio: Option<Rat> },
    /// `W` has positive degree.
    NonConstant { wronskian: Poly },
}

/// Exact polynomial-case decision on `W(f1, f2) = f1' f2 - f1 f2'`.
pub fn classify_poly_wronskian(f1: &Poly, f2: &Poly) -> WronskianPairDecision {
    let w = f1.derivative().mul(f2).sub(&f1.mul(&f2.derivative()));
    match w.degree() {
        None => {
            let ratio = match f2.degree() {
                None => None,
                Some(d2) => Some(f1.coeff(d2) / f2.coeff(d2)),
            };
            WronskianPairDecision::ConstantZero { ratio }
        }
        Some(0) => WronskianPairDecision::ConstantNonzero {
            constant: w.coeff(0),
            both_affine: f1.is_affine() && f2.is_affine(),
        },
        Some(_) => WronskianPairDecision::NonConstant { wronskian: w },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn series(coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::new(p5(), coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    #[test]
    fn ring_op_examples() {
        let one_plus_x = series(&[1, 1]);
        let one_minus_x = series(&[1, -1]);
        assert_eq!(one_plus_x.add(&one_minus_x).unwrap(), series(&[2, 0]));
        // (1+x)(1-x) = 1 - x^2 at order >= 2
        let f = series(&[1, 1, 0]);
        let g = series(&[1, -1, 0]);
        assert_eq!(f.mul(&g).unwrap(), series(&[1, 0, -1]));
        assert_eq!(series(&[0, 1]).scalar_mul(&Rat::from_int(3)), series(&[0, 3]));
    }

    #[test]
    fn mul_truncates_to_min_order() {
        let f = series(&[1, 2, 3, 4]);
        let g = series(&[5, 6]);
        assert_eq!(f.mul(&g).unwrap().order(), 1);
    }

    #[test]
    fn prime_mismatch_rejected() {
        let f = series(&[1]);
        let g = TruncatedSeries::new(Prime::new(3).unwrap(), vec![Rat::one()]);
        assert!(matches!(f.add(&g), Err(Error::PrimeMismatch(5, 3))));
    }

    #[test]
    fn compose_with_affine_poly() {
        // f = x^2, p = x + 1 -> x^2 + 2x + 1
        let f = series(&[0, 0, 1]);
        let p = Poly::from_ints(&[1, 1]);
        let c = f.compose_poly(&p);
        assert!(c.truncation_sensitive);
        assert_eq!(c.series, series(&[1, 2, 1]));
    }

    #[test]
    fn compose_geometric_reindex() {
        // f = sum x^n, inner 2x -> sum 2^n x^n
        let k = 7;
        let f = TruncatedSeries::new(p5(), vec![Rat::one(); k + 1]);
        let c = f.compose_poly(&Poly::from_ints(&[0, 2]));
        assert!(!c.truncation_sensitive);
        for n in 0..=k {
            assert_eq!(c.series.coeff(n), Rat::from_int(1i64 << n));
        }
    }

    #[test]
    fn compose_cube_with_reflection() {
        // f = x^3, p = -x + 2 -> -x^3 + 6x^2 - 12x + 8
        let f = series(&[0, 0, 0, 1]);
        let c = f.compose_poly(&Poly::from_ints(&[2, -1]));
        assert_eq!(c.series, series(&[8, -12, 6, -1]));
    }

    #[test]
    fn compose_series_requires_zero_constant_term() {
        let f = series(&[1, 1, 1]);
        let g = series(&[1, 1, 0]);
        assert!(matches!(
            f.compose_series(&g),
            Err(Error::UncertainComposition)
        ));
        let h = series(&[0, 1, 1]);
        let fh = f.compose_series(&h).unwrap();
        // f(h) = 1 + (x + x^2) + (x + x^2)^2 = 1 + x + 2x^2 + ...
        assert_eq!(fh, series(&[1, 1, 2]));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(series(&[1, 1, 1]).derivative(), series(&[1, 2]));
        assert_eq!(series(&[7, 0]).derivative(), series(&[0]));
        assert_eq!(
            series(&[0, 0, 0, 0, 0, 1]).derivative(),
            series(&[0, 0, 0, 0, 5])
        );
    }

    #[test]
    fn wronskian_examples() {
        // W(x, 1) = 1
        let w = wronskian(&series(&[0, 1]), &series(&[1, 0])).unwrap();
        assert_eq!(w, series(&[1]));
        // W(x^2, 1) = 2x
        let w = wronskian(&series(&[0, 0, 1]), &series(&[1, 0, 0])).unwrap();
        assert_eq!(w, series(&[0, 2]));
        // antisymmetry on an arbitrary pair + W(f, f) = 0
        let f = series(&[3, -1, 4, 1]);
        let g = series(&[2, 7, 1, -5]);
        let wfg = wronskian(&f, &g).unwrap();
        let wgf = wronskian(&g, &f).unwrap();
        assert_eq!(wfg.neg(), wgf);
        assert!(wronskian(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn wronskian_n_examples() {
        // n = 1 is the function itself
        assert_eq!(wronskian_n(&[series(&[0, 1])]).unwrap(), series(&[0, 1]));
        // n = 2 is the opposite of the binary convention
        let f = series(&[1, 2, 3]);
        let g = series(&[0, 1, 1]);
        let w2 = wronskian_n(&[f.clone(), g.clone()]).unwrap();
        let wb = wronskian(&f, &g).unwrap();
        assert!(w2.agrees_with(&wb.neg()));
        // (1, x, x^2) -> 2
        let fs = [series(&[1, 0, 0]), series(&[0, 1, 0]), series(&[0, 0, 1])];
        let w = wronskian_n(&fs).unwrap();
        assert_eq!(w, series(&[2]));
    }

    #[test]
    fn wronskian_n_rejects_low_order() {
        let fs = [series(&[1, 0]), series(&[0, 1]), series(&[1, 1])];
        assert!(matches!(
            wronskian_n(&fs),
            Err(Error::OrderTooLow {
                required: 2,
                available: 1
            })
        ));
    }

    #[test]
    fn poly_wronskian_decisions() {
        let x = Poly::from_ints(&[0, 1]);
        let one = Poly::from_ints(&[1]);
        match classify_poly_wronskian(&x, &one) {
            WronskianPairDecision::ConstantNonzero {
                constant,
                both_affine,
            } => {
                assert_eq!(constant, Rat::one());
                assert!(both_affine);
            }
            other => panic!("unexpected: {other:?}"),
        }

        let f1 = Poly::from_ints(&[0, 0, 2]);
        let f2 = Poly::from_ints(&[0, 0, 1]);
        match classify_poly_wronskian(&f1, &f2) {
            WronskianPairDecision::ConstantZero { ratio } => {
                assert_eq!(ratio, Some(Rat::from_int(2)));
            }
            other => panic!("unexpected: {other:?}"),
        }

        let xsq = Poly::from_ints(&[0, 0, 1]);
        match classify_poly_wronskian(&xsq, &x) {
            WronskianPairDecision::NonConstant { wronskian } => {
                // with the f1' f2 - f1 f2' convention this comes out as +x^2
                assert_eq!(wronskian, Poly::from_ints(&[0, 0, 1]));
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn constant_nonzero_wronskian_forces_affine() {
        // decidable form on a non-affine pair: W must not be constant nonzero
        let f1 = Poly::from_ints(&[1, 0, 1]);
        let f2 = Poly::from_ints(&[0, 1]);
        match classify_poly_wronskian(&f1, &f2) {
            WronskianPairDecision::ConstantNonzero { .. } => {
                panic!("non-affine pair cannot have constant nonzero wronskian")
            }
            _ => {}
        }
    }

    #[test]
    fn poly_eval_and_compose() {
        let p = Poly::from_ints(&[1, -2, 1]); // (x-1)^2
        assert_eq!(p.eval(&Rat::from_int(3)), Rat::from_int(4));
        let q = Poly::from_ints(&[1, 1]);
        assert_eq!(p.compose(&q), Poly::from_ints(&[0, 0, 1]));
    }
}
