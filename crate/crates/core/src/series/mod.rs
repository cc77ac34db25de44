//! Double-precision evaluation of the Dirichlet series built on the Lyndon
//! and necklace polynomials, of `ζ` and `Li_s` in their half-planes of
//! convergence, each with a certified truncation bound.
//!
//! Every partial sum runs in ascending `n` with compensated accumulation.
//! Radii account for the omitted tail and for rounding in the retained terms.

pub mod approx;
pub mod identity;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use approx::{Approx, CompensatedSum, ComplexValue};
pub use identity::{default_grid, verify_identity, AlternativeReport, GridSize, IdentityId, IdentityPoint, IdentityReport, Verdict};

use crate::error::{Error, Result};
use crate::numth::{self, build_sieve};
use crate::Parity;

pub const DEFAULT_GEOMETRIC_TERMS: u64 = 500;
pub const DEFAULT_ARITHMETIC_TERMS: u64 = 100_000;

/// Retained term count and the certified bound on everything omitted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationParams {
    pub terms: u64,
    pub tail_bound: f64,
}

/// Which arithmetic weight enters a divisor sum `Σ_{d|n} a(n/d) w^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ArithmeticWeight {
    Mobius,
    Totient,
}

fn check_terms(n: u64) -> Result<usize> {
    if n == 0 {
        return Err(Error::Zero { what: "terms" });
    }
    usize::try_from(n).map_err(|_| Error::ResourceLimit(format!("{n} terms")))
}

fn require_re_above(s: Complex64, bound: f64, what: &str) -> Result<()> {
    if !(s.re > bound) {
        return Err(Error::domain(format!("{what} requires Re(s) > {bound}, got Re(s) = {}", s.re)));
    }
    Ok(())
}

/// Per-term rounding budget in ulps for a term `c · n^{-s}`: the divisor sum
/// behind `c` (at most `2√n` summands), the power `w^d`, and the phase
/// `t·ln n` of `n^{-s}`.
fn term_ulps(n: usize, s: Complex64) -> f64 {
    let nf = n as f64;
    64.0 + 2.0 * nf.sqrt() + (s.norm() + 2.0) * (nf + 1.0).ln()
}

/// `n^{-s}` for real `n >= 1`.
pub(crate) fn n_pow_neg_s(n: f64, s: Complex64) -> Complex64 {
    let ln = n.ln();
    let mag = (-s.re * ln).exp();
    let phase = -s.im * ln;
    Complex64::new(mag * phase.cos(), mag * phase.sin())
}

/// `Σ_{j > m} j^{-tau}` bounded by the integral, with `j = 1` split off when
/// `m = 0`. Requires `tau > 1`.
fn power_tail(m: usize, tau: f64) -> f64 {
    if m == 0 {
        1.0 + 1.0 / (tau - 1.0)
    } else {
        (m as f64).powf(1.0 - tau) / (tau - 1.0)
    }
}

fn inflate(bound: f64) -> f64 {
    bound * (1.0 + 1e-10)
}

// ---------------------------------------------------------------------------
// polylogarithm and zeta

fn polylog_parts(s: Complex64, w: Complex64, terms: usize, parity: Parity) -> Result<(Approx, f64)> {
    let r = w.norm();
    if !(r < 1.0) {
        return Err(Error::domain(format!("Li_s(w) series requires |w| < 1, got |w| = {r}")));
    }
    let mut sum = CompensatedSum::new();
    for n in 1..=terms {
        if !parity.contains(n as u64) {
            continue;
        }
        let wn = w.powi(n as i32);
        if wn == Complex64::new(0.0, 0.0) {
            break;
        }
        let t = wn * n_pow_neg_s(n as f64, s);
        sum.add(t, t.norm(), term_ulps(n, s));
    }
    let tail = polylog_tail(s.re, r, terms);
    Ok((sum.finish(tail), tail))
}

/// `Σ_{n>N} r^n n^{-σ}`: first omitted term over one minus a ratio bound
/// valid for every later term. Infinite when no such ratio below 1 exists.
fn polylog_tail(sigma: f64, r: f64, terms: usize) -> f64 {
    if r == 0.0 {
        return 0.0;
    }
    let n1 = terms as f64 + 1.0;
    let log_first = n1 * r.ln() - sigma * n1.ln();
    let growth = if sigma >= 0.0 { 1.0 } else { ((n1 + 1.0) / n1).powf(-sigma) };
    let ratio = r * growth;
    if ratio >= 1.0 {
        return f64::INFINITY;
    }
    inflate(log_first.exp() / (1.0 - ratio))
}

pub(crate) fn polylog_approx(s: Complex64, w: Complex64, terms: u64, parity: Parity) -> Result<Approx> {
    Ok(polylog_parts(s, w, check_terms(terms)?, parity)?.0)
}

/// `Li_s(w) ≈ Σ_{n=1}^{N} w^n / n^s` for `|w| < 1`.
pub fn polylog_num(s: ComplexValue, w: ComplexValue, terms: u64) -> Result<(ComplexValue, TruncationParams)> {
    let (a, tail) = polylog_parts(s.get(), w.get(), check_terms(terms)?, Parity::All)?;
    Ok((ComplexValue::from_complex(a.mid)?, TruncationParams { terms, tail_bound: tail }))
}

pub(crate) fn zeta_approx(s: Complex64, terms: u64) -> Result<(Approx, f64)> {
    require_re_above(s, 1.0, "zeta series")?;
    let n = check_terms(terms)?;
    let mut sum = CompensatedSum::new();
    for j in 1..n {
        let t = n_pow_neg_s(j as f64, s);
        sum.add(t, t.norm(), term_ulps(j, s));
    }
    // Euler-Maclaurin for Σ_{j>=N} j^{-s} through the B_4 term
    let nf = n as f64;
    let p = n_pow_neg_s(nf, s);
    let corrections = [
        p * nf / (s - 1.0),
        p * 0.5,
        p * s / (12.0 * nf),
        -p * s * (s + 1.0) * (s + 2.0) / (720.0 * nf.powi(3)),
    ];
    for c in corrections {
        sum.add(c, c.norm(), 64.0 + (s.norm() + 2.0) * nf.ln());
    }
    let sigma = s.re;
    let tail = inflate(
        (s * (s + 1.0) * (s + 2.0) * (s + 3.0)).norm() * nf.powf(-sigma - 3.0) / (720.0 * (sigma + 3.0)),
    );
    Ok((sum.finish(tail), tail))
}

/// `ζ(s)` for `Re(s) > 1`: the partial sum to `N - 1` plus the
/// Euler-Maclaurin expansion of the rest through the `B_4` term.
pub fn riemann_zeta_num(s: ComplexValue, terms: u64) -> Result<(ComplexValue, TruncationParams)> {
    let (a, tail) = zeta_approx(s.get(), terms)?;
    Ok((ComplexValue::from_complex(a.mid)?, TruncationParams { terms, tail_bound: tail }))
}

// ---------------------------------------------------------------------------
// Dirichlet series of the word polynomials

/// `c(n) = Σ_{d|n} a(n/d) w^d` and `Σ_{d|n} |a(n/d)| |w|^d` for `n <= len`.
pub(crate) fn word_coefficients(weight: ArithmeticWeight, w: f64, len: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let sieve = build_sieve(len)?;
    let a: Vec<f64> = match weight {
        ArithmeticWeight::Mobius => sieve.mu_table().iter().map(|&m| m as f64).collect(),
        ArithmeticWeight::Totient => sieve.phi_table().iter().map(|&p| p as f64).collect(),
    };
    let a_abs: Vec<f64> = a.iter().map(|v| v.abs()).collect();
    let mut powers = vec![0.0; len + 1];
    let mut abs_powers = vec![0.0; len + 1];
    for d in 1..=len {
        powers[d] = w.powi(d as i32);
        abs_powers[d] = w.abs().powi(d as i32);
    }
    Ok((numth::dirichlet_convolve_table(&powers, &a), numth::dirichlet_convolve_table(&abs_powers, &a_abs)))
}

/// Certified bound for `Σ_{n>N} |c(n)| n^{-σ}` where
/// `|c(n)| <= Σ_{d|n} |a(n/d)| r^d`. Swapping the order of summation gives
/// `Σ_d r^d d^{-σ} Σ_{j > ⌊N/d⌋} |a(j)| j^{-σ}` with `|μ| <= 1`, `φ(j) <= j`.
pub(crate) fn word_series_tail(weight: ArithmeticWeight, r: f64, sigma: f64, terms: usize) -> f64 {
    if r == 0.0 {
        return 0.0;
    }
    let tau = match weight {
        ArithmeticWeight::Mobius => sigma,
        ArithmeticWeight::Totient => sigma - 1.0,
    };
    let mut total = 0.0;
    let mut rd = 1.0;
    for d in 1..=terms {
        rd *= r;
        if rd == 0.0 {
            return inflate(total);
        }
        total += rd * (d as f64).powf(-sigma) * power_tail(terms / d, tau);
    }
    let n1 = terms as f64 + 1.0;
    total += power_tail(0, tau) * rd * r * n1.powf(-sigma) / (1.0 - r);
    inflate(total)
}

fn word_series(
    weight: ArithmeticWeight,
    k: u64,
    x: f64,
    s: Complex64,
    terms: u64,
    parity: Parity,
) -> Result<(Approx, f64)> {
    if k == 0 {
        return Err(Error::Zero { what: "k" });
    }
    let min_re = match weight {
        ArithmeticWeight::Mobius => 1.0,
        ArithmeticWeight::Totient => 2.0,
    };
    require_re_above(s, min_re, "this Dirichlet series")?;
    if !x.is_finite() {
        return Err(Error::domain("x must be finite"));
    }
    let w = k as f64 * x;
    if !(w.abs() < 1.0) {
        return Err(Error::domain(format!("requires |kx| < 1, got |kx| = {}", w.abs())));
    }
    let n = check_terms(terms)?;
    let (c, c_abs) = word_coefficients(weight, w, n)?;
    let mut sum = CompensatedSum::new();
    for j in 1..=n {
        if !parity.contains(j as u64) || c_abs[j] == 0.0 {
            continue;
        }
        let p = n_pow_neg_s(j as f64, s);
        sum.add(p * c[j], c_abs[j] * p.norm(), term_ulps(j, s));
    }
    let tail = word_series_tail(weight, w.abs(), s.re, n);
    Ok((sum.finish(tail), tail))
}

pub(crate) fn zeta1_approx(k: u64, x: f64, s: Complex64, terms: u64, parity: Parity) -> Result<Approx> {
    Ok(word_series(ArithmeticWeight::Mobius, k, x, s, terms, parity)?.0)
}

pub(crate) fn zeta2_approx(k: u64, x: f64, s: Complex64, terms: u64, parity: Parity) -> Result<Approx> {
    Ok(word_series(ArithmeticWeight::Totient, k, x, s, terms, parity)?.0)
}

/// `ζ₁(x:k,s) = Σ n L_k(x:n) / n^s` over the chosen parity class of `n`,
/// for `|kx| < 1`, `Re(s) > 1`.
pub fn zeta1_num(
    k: u64,
    x: f64,
    s: ComplexValue,
    terms: u64,
    parity: Parity,
) -> Result<(ComplexValue, TruncationParams)> {
    let (a, tail) = word_series(ArithmeticWeight::Mobius, k, x, s.get(), terms, parity)?;
    Ok((ComplexValue::from_complex(a.mid)?, TruncationParams { terms, tail_bound: tail }))
}

/// `ζ₂(x:k,s) = Σ n N_k(x:n) / n^s` over the chosen parity class, for
/// `|kx| < 1`, `Re(s) > 2`.
pub fn zeta2_num(
    k: u64,
    x: f64,
    s: ComplexValue,
    terms: u64,
    parity: Parity,
) -> Result<(ComplexValue, TruncationParams)> {
    let (a, tail) = word_series(ArithmeticWeight::Totient, k, x, s.get(), terms, parity)?;
    Ok((ComplexValue::from_complex(a.mid)?, TruncationParams { terms, tail_bound: tail }))
}

pub(crate) fn arithmetic_odd_approx(which: ArithmeticWeight, s: Complex64, terms: u64) -> Result<(Approx, f64)> {
    let min_re = match which {
        ArithmeticWeight::Mobius => 1.0,
        ArithmeticWeight::Totient => 2.0,
    };
    require_re_above(s, min_re, "this Dirichlet series")?;
    let n = check_terms(terms)?;
    let sieve = build_sieve(n)?;
    let mut sum = CompensatedSum::new();
    for j in (1..=n).step_by(2) {
        let a = match which {
            ArithmeticWeight::Mobius => sieve.mu(j) as f64,
            ArithmeticWeight::Totient => sieve.phi(j) as f64,
        };
        if a == 0.0 {
            continue;
        }
        let t = n_pow_neg_s(j as f64, s) * a;
        sum.add(t, t.norm(), term_ulps(j, s));
    }
    let tail = match which {
        ArithmeticWeight::Mobius => inflate(power_tail(n, s.re)),
        ArithmeticWeight::Totient => inflate(power_tail(n, s.re - 1.0)),
    };
    Ok((sum.finish(tail), tail))
}

/// `Σ_{n odd, n <= N} μ(n)/n^s` or `φ(n)/n^s`.
pub fn mu_phi_odd_num(which: ArithmeticWeight, s: ComplexValue, terms: u64) -> Result<(ComplexValue, TruncationParams)> {
    let (a, tail) = arithmetic_odd_approx(which, s.get(), terms)?;
    Ok((ComplexValue::from_complex(a.mid)?, TruncationParams { terms, tail_bound: tail }))
}

/// `Σ_{n<=N} μ(mn)/n^s`.
pub(crate) fn mobius_multiple_approx(m: u64, s: Complex64, terms: u64) -> Result<Approx> {
    if m == 0 {
        return Err(Error::Zero { what: "m" });
    }
    require_re_above(s, 1.0, "the Mobius series")?;
    let n = check_terms(terms)?;
    let len = n
        .checked_mul(m as usize)
        .ok_or_else(|| Error::ResourceLimit(format!("sieve up to {m} * {n}")))?;
    let sieve = build_sieve(len)?;
    let mut sum = CompensatedSum::new();
    for j in 1..=n {
        let mu = sieve.mu(j * m as usize);
        if mu == 0 {
            continue;
        }
        let t = n_pow_neg_s(j as f64, s) * mu as f64;
        sum.add(t, t.norm(), term_ulps(j, s));
    }
    Ok(sum.finish(inflate(power_tail(n, s.re))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> ComplexValue {
        ComplexValue::real(re).unwrap()
    }

    #[test]
    fn polylog_examples() {
        let (v, t) = polylog_num(c(2.0), c(0.5), 60).unwrap();
        assert!((v.re - 0.582_240_526_465_012_5).abs() < 1e-12);
        assert!(t.tail_bound < 1e-12);
        let (v, _) = polylog_num(c(3.7), c(0.0), 10).unwrap();
        assert_eq!(v.re, 0.0);
        let (v, t) = polylog_num(c(0.0), c(0.4), 80).unwrap();
        assert!((v.re - 2.0 / 3.0).abs() < 1e-10);
        assert!((v.re - 2.0 / 3.0).abs() <= t.tail_bound + 1e-15);
        assert!(polylog_num(c(2.0), c(1.0), 10).is_err());
        assert!(polylog_num(c(2.0), c(0.5), 0).is_err());
    }

    #[test]
    fn polylog_tail_is_a_bound_for_negative_order() {
        // Li_{-3}(1/2) = 26
        let (v, t) = polylog_num(c(-3.0), c(0.5), 40).unwrap();
        assert!((v.re - 26.0).abs() <= t.tail_bound);
        assert!(t.tail_bound.is_finite());
        // too few terms for the ratio test to close
        let (_, t) = polylog_num(c(-30.0), c(0.9), 5).unwrap();
        assert!(t.tail_bound.is_infinite());
    }

    #[test]
    fn zeta_examples() {
        let pi = std::f64::consts::PI;
        for (s, want) in [(2.0, pi * pi / 6.0), (3.0, 1.202_056_903_159_594_3), (4.0, pi.powi(4) / 90.0)] {
            let (v, t) = riemann_zeta_num(c(s), 2000).unwrap();
            assert!((v.re - want).abs() < 1e-9, "s={s}");
            assert!((v.re - want).abs() <= t.tail_bound + 1e-14);
        }
        assert!(riemann_zeta_num(c(1.0), 10).is_err());
        assert!(riemann_zeta_num(ComplexValue::new(0.5, 14.0).unwrap(), 10).is_err());
    }

    #[test]
    fn word_series_examples() {
        let s = c(4.0);
        let (z1, t1) = zeta1_num(2, 0.2, s, 500, Parity::All).unwrap();
        let (zeta, tz) = riemann_zeta_num(s, 500).unwrap();
        let (li, tl) = polylog_num(s, c(0.4), 500).unwrap();
        let bound = t1.tail_bound * zeta.re + tz.tail_bound * z1.re + tl.tail_bound + 1e-14;
        assert!((zeta.re * z1.re - li.re).abs() <= bound);
        assert!((li.re - 0.410_910_564_783_086_6).abs() < 1e-12);

        let (z2, _) = zeta2_num(2, 0.2, s, 5000, Parity::All).unwrap();
        let (zeta3, _) = riemann_zeta_num(c(3.0), 5000).unwrap();
        assert!((zeta.re * z2.re - zeta3.re * li.re).abs() < 1e-8);

        for (k, x) in [(1, 0.0), (3, 0.0)] {
            assert_eq!(zeta1_num(k, x, s, 100, Parity::All).unwrap().0.re, 0.0);
            assert_eq!(zeta2_num(k, x, s, 100, Parity::All).unwrap().0.re, 0.0);
        }
    }

    #[test]
    fn parity_partition_is_exact_at_matched_terms() {
        let s = ComplexValue::new(2.5, 1.0).unwrap();
        for weight in [ArithmeticWeight::Mobius, ArithmeticWeight::Totient] {
            let s = if weight == ArithmeticWeight::Totient { ComplexValue::new(3.5, 1.0).unwrap() } else { s };
            let f = |p| word_series(weight, 3, 0.3, s.get(), 777, p).unwrap().0;
            let (all, odd, even) = (f(Parity::All), f(Parity::Odd), f(Parity::Even));
            let diff = (all.mid - (odd.mid + even.mid)).norm();
            assert!(diff <= 4.0 * f64::EPSILON * all.norm(), "{weight:?}: {diff}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(zeta1_num(2, 0.5, c(3.0), 10, Parity::All).is_err());
        assert!(zeta1_num(2, 0.2, c(1.0), 10, Parity::All).is_err());
        assert!(zeta2_num(2, 0.2, c(2.0), 10, Parity::All).is_err());
        assert!(zeta1_num(0, 0.2, c(3.0), 10, Parity::All).is_err());
        assert!(zeta1_num(2, f64::NAN, c(3.0), 10, Parity::All).is_err());
        assert!(mu_phi_odd_num(ArithmeticWeight::Totient, c(2.0), 10).is_err());
    }

    #[test]
    fn odd_arithmetic_sums() {
        let (v, t) = mu_phi_odd_num(ArithmeticWeight::Mobius, c(3.0), 100_000).unwrap();
        let want = 8.0 / (7.0 * 1.202_056_903_159_594_3);
        assert!((v.re - want).abs() <= t.tail_bound);
        assert_eq!(mu_phi_odd_num(ArithmeticWeight::Mobius, c(3.0), 1).unwrap().0.re, 1.0);
        let (v, _) = mu_phi_odd_num(ArithmeticWeight::Totient, c(3.0), 100_000).unwrap();
        // direct high-precision summation of the same partial sum
        assert!((v.re - 1.172_938_327_960_186_5).abs() < 1e-12);
    }

    #[test]
    fn word_tail_bound_dominates_observed_tail() {
        let s = Complex64::new(2.5, 0.0);
        for weight in [ArithmeticWeight::Mobius, ArithmeticWeight::Totient] {
            let s = if weight == ArithmeticWeight::Totient { s + 1.0 } else { s };
            let (short, tail) = word_series(weight, 2, 0.25, s, 50, Parity::All).unwrap();
            let (long, _) = word_series(weight, 2, 0.25, s, 20_000, Parity::All).unwrap();
            assert!((short.mid - long.mid).norm() <= tail, "{weight:?}");
        }
    }
}
