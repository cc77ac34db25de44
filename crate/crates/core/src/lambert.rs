//! Lambert series over Lyndon counts, the Lambert form of `Σ n L_k(x:n)`,
//! and the Eisenstein cusp sums `C(d) = Σ_a a^d q^a / (1 - q^a)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numth::{self, build_sieve};
use crate::series::{Approx, CompensatedSum, ComplexValue, IdentityId, IdentityPoint, IdentityReport, TruncationParams};
use crate::words::lyndon_count;

pub const DEFAULT_TERMS: u64 = 60;
/// Bound formulas are refused beyond this `|q|`.
pub const MAX_NOME: f64 = 0.9;

/// `z` in the upper half-plane with `q = e^{2πiz}` computed once.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UpperHalfPoint {
    z: ComplexValue,
    q: ComplexValue,
}

impl UpperHalfPoint {
    pub fn new(z: ComplexValue) -> Result<Self> {
        if !(z.im > 0.0) {
            return Err(Error::domain(format!("z must lie in the upper half-plane, got Im(z) = {}", z.im)));
        }
        let q = (Complex64::new(0.0, 2.0 * PI) * z.get()).exp();
        if q.norm() > MAX_NOME {
            return Err(Error::domain(format!("|q| = {} exceeds {MAX_NOME}", q.norm())));
        }
        Ok(UpperHalfPoint { z, q: ComplexValue::from_complex(q)? })
    }

    pub fn z(&self) -> ComplexValue {
        self.z
    }

    pub fn q(&self) -> Complex64 {
        self.q.get()
    }
}

fn check_terms(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::Zero { what: "terms" });
    }
    if k > i32::MAX as u64 {
        return Err(Error::ResourceLimit(format!("{k} terms")));
    }
    Ok(k)
}

/// `Σ_{a>A} a^d r^a / (1 - r)`, by the first omitted term and the ratio
/// `r ((A+2)/(A+1))^d` that dominates every later step.
fn power_geometric_tail(d: u64, r: f64, a: u64) -> f64 {
    if r == 0.0 {
        return 0.0;
    }
    let a1 = a as f64 + 1.0;
    let ratio = r * ((a1 + 1.0) / a1).powf(d as f64);
    if ratio >= 1.0 || r >= 1.0 {
        return f64::INFINITY;
    }
    let log_first = d as f64 * a1.ln() + a1 * r.ln();
    (log_first.exp() / ((1.0 - ratio) * (1.0 - r))) * (1.0 + 1e-10)
}

/// `q^a / (1 - q^a)` and a rounding budget in ulps for it.
fn lambert_kernel(q: Complex64, a: u64) -> (Complex64, f64) {
    let qa = q.powi(a as i32);
    (qa / (Complex64::new(1.0, 0.0) - qa), 16.0 + 2.0 * a as f64)
}

fn check_nome(q: Complex64) -> Result<f64> {
    let r = q.norm();
    if !(r < 1.0) {
        return Err(Error::domain(format!("requires |x| < 1, got {r}")));
    }
    Ok(r)
}

pub(crate) fn h_approx(n: u64, q: Complex64, terms: u64) -> Result<Approx> {
    if n == 0 {
        return Err(Error::Zero { what: "n" });
    }
    let terms = check_terms(terms)?;
    let r = check_nome(q)?;
    let mut sum = CompensatedSum::new();
    for k in 1..=terms {
        // n L_k(n) <= k^n, so it carries one rounding when converted
        let coeff = (lyndon_count(k, n)? * n).to_f64().unwrap_or(f64::INFINITY);
        let (kern, ulps) = lambert_kernel(q, k);
        let t = kern * coeff;
        sum.add(t, t.norm(), ulps + 2.0);
    }
    Ok(sum.finish(power_geometric_tail(n, r, terms)))
}

/// `H(n,x) = n Σ_{k<=K} L_k(n) x^k / (1 - x^k)` with the omitted alphabet
/// sizes bounded through `n L_k(n) <= k^n`.
pub fn h_num(n: u64, x: f64, terms: u64) -> Result<(ComplexValue, TruncationParams)> {
    let a = h_approx(n, Complex64::new(x, 0.0), terms)?;
    let tail = power_geometric_tail(n, x.abs(), terms);
    Ok((ComplexValue::from_complex(a.mid)?, TruncationParams { terms, tail_bound: tail }))
}

/// The rearranged form `n Σ_{k<=K} Σ_{m<=M} L_k(n) x^{km}`.
pub fn h_double_sum(n: u64, x: f64, alphabet: u64, frequencies: u64) -> Result<f64> {
    check_nome(Complex64::new(x, 0.0))?;
    let mut total = 0.0;
    for k in 1..=check_terms(alphabet)? {
        let coeff = (lyndon_count(k, n)? * n).to_f64().unwrap_or(f64::INFINITY);
        for m in 1..=check_terms(frequencies)? {
            total += coeff * x.powi((k * m) as i32);
        }
    }
    Ok(total)
}

pub(crate) fn cusp_approx(d: u64, q: Complex64, terms: u64) -> Result<Approx> {
    let terms = check_terms(terms)?;
    let r = check_nome(q)?;
    let mut sum = CompensatedSum::new();
    for a in 1..=terms {
        let (kern, ulps) = lambert_kernel(q, a);
        let t = kern * (a as f64).powi(d as i32);
        sum.add(t, t.norm(), ulps + d as f64);
    }
    Ok(sum.finish(power_geometric_tail(d, r, terms)))
}

/// `C(d) = Σ_{a<=A} a^d q^a / (1 - q^a)`, the `r = 0` double sum of the
/// Eisenstein Fourier expansion of weight `d + 1`.
pub fn cusp_sum(d: u64, p: &UpperHalfPoint, terms: u64) -> Result<(ComplexValue, TruncationParams)> {
    let a = cusp_approx(d, p.q(), terms)?;
    let tail = power_geometric_tail(d, p.q().norm(), terms);
    Ok((ComplexValue::from_complex(a.mid)?, TruncationParams { terms, tail_bound: tail }))
}

/// `Σ_{a<=A} Σ_{m<=A} a^d q^{am}`, the same sum in the other order.
pub fn cusp_double_sum(d: u64, p: &UpperHalfPoint, terms: u64) -> Result<ComplexValue> {
    let terms = check_terms(terms)?;
    let q = p.q();
    let mut sum = CompensatedSum::new();
    for a in 1..=terms {
        let qa = q.powi(a as i32);
        let ad = (a as f64).powi(d as i32);
        let mut qam = qa;
        for _ in 1..=terms {
            let t = qam * ad;
            if t.norm() == 0.0 {
                break;
            }
            sum.add(t, t.norm(), 0.0);
            qam *= qa;
        }
    }
    ComplexValue::from_complex(sum.value())
}

/// Weight-`k` Eisenstein cusp part `2(-2πi)^k/(k-1)! · C(k-1)`.
fn eisenstein_cusp(weight: u64, q: Complex64, terms: u64) -> Result<Approx> {
    let factor = Approx::computed(
        Complex64::new(0.0, -2.0 * PI).powi(weight as i32) * (2.0 / factorial(weight - 1)),
    );
    Ok(factor.mul(cusp_approx(weight - 1, q, terms)?))
}

fn factorial(n: u64) -> f64 {
    (1..=n).map(|j| j as f64).product()
}

/// Lyndon Lambert identity `Σ n L_k(y:n) x^n/(1-x^n) = kyx/(1-kyx)`; `y = 1`
/// is the undeformed count.
pub fn lambert_lyndon_check(k: u64, x: f64, y: Option<f64>, terms: u64) -> Result<IdentityReport> {
    if k == 0 {
        return Err(Error::Zero { what: "k" });
    }
    let terms = check_terms(terms)?;
    let yv = y.unwrap_or(1.0);
    if !x.is_finite() || !yv.is_finite() {
        return Err(Error::domain("x and y must be finite"));
    }
    let u = k as f64 * yv;
    let w = u * x;
    if !(x.abs() < 1.0) || !(w.abs() < 1.0) {
        return Err(Error::domain(format!("requires |x| < 1 and |kyx| < 1, got x = {x}, kyx = {w}")));
    }
    let sieve = build_sieve(terms as usize)?;
    let mut sum = CompensatedSum::new();
    for n in 1..=terms {
        // n L_k(y:n) x^n = Σ_{d|n} μ(n/d) (ky x^{n/d})^d, each factor below 1
        let mut coeff = 0.0;
        let mut mag = 0.0;
        for d in numth::divisors(n)? {
            let p = (u * x.powi((n / d) as i32)).powi(d as i32);
            coeff += sieve.mu((n / d) as usize) as f64 * p;
            mag += p.abs();
        }
        let denom = 1.0 - x.powi(n as i32);
        let t = Complex64::new(coeff / denom, 0.0);
        sum.add(t, mag / denom.abs(), 20.0 + 4.0 * n as f64);
    }
    let tail = lambert_lyndon_tail(u.abs(), x.abs(), terms);
    let lhs = sum.finish(tail);
    let rhs = Approx::computed(Complex64::new(w / (1.0 - w), 0.0));
    let (id, point) = match y {
        None => (IdentityId::Lam1, IdentityPoint { k: Some(k), x: Some(x), ..Default::default() }),
        Some(y) => (IdentityId::Lam2, IdentityPoint { k: Some(k), x: Some(x), y: Some(y), ..Default::default() }),
    };
    IdentityReport::from_sides(id, point, terms, lhs, rhs, None)
}

/// `Σ_{n>K} |n L_k(y:n)| |x|^n/(1-|x|)` with
/// `|n L_k(y:n)| <= Σ_{d|n} u^d <= n max(1,u)^n`.
fn lambert_lyndon_tail(u: f64, x: f64, terms: u64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let r = u.max(1.0) * x;
    if r >= 1.0 {
        return f64::INFINITY;
    }
    let m = terms as f64 + 1.0;
    let log_first = m * r.ln();
    // Σ_{n>=M} n r^n = r^M (M - (M-1) r) / (1-r)^2
    let tail = log_first.exp() * (m - (m - 1.0) * r) / ((1.0 - r) * (1.0 - r) * (1.0 - x));
    tail * (1.0 + 1e-10)
}

/// `H(n,q) = Σ_{d|n} μ(n/d) C(d)`.
pub fn result1_check(n: u64, p: &UpperHalfPoint, terms: u64) -> Result<IdentityReport> {
    let q = p.q();
    let lhs = h_approx(n, q, terms)?;
    let mut rhs = Approx::real(0.0);
    for d in numth::divisors(n)? {
        let mu = numth::mobius(n / d)?;
        if mu != 0 {
            rhs = rhs.add(cusp_approx(d, q, terms)?.scale(mu as f64));
        }
    }
    let point = IdentityPoint { n: Some(n), z: Some(p.z()), ..Default::default() };
    IdentityReport::from_sides(IdentityId::R1, point, terms, lhs, rhs, None)
}

/// For prime `p`: `H(p,q) = p! E_{p+1}/(2(-2πi)^{p+1}) + E_2/(8π²)` where
/// `E_k` is the weight-`k` Eisenstein cusp part; this is `C(p) - C(1)`.
pub fn prime_case_check(prime: u64, p: &UpperHalfPoint, terms: u64) -> Result<IdentityReport> {
    if !numth::is_prime(prime) {
        return Err(Error::domain(format!("{prime} is not prime")));
    }
    let q = p.q();
    let lhs = h_approx(prime, q, terms)?;
    let top = eisenstein_cusp(prime + 1, q, terms)?;
    let top_norm = Approx::computed(
        Complex64::new(0.0, -2.0 * PI).powi(prime as i32 + 1) * (2.0 / factorial(prime)),
    );
    let low = eisenstein_cusp(2, q, terms)?.scale(1.0 / (8.0 * PI * PI));
    let rhs = top.div(top_norm).add(low);
    let point = IdentityPoint { n: Some(prime), z: Some(p.z()), ..Default::default() };
    IdentityReport::from_sides(IdentityId::Prime, point, terms, lhs, rhs, None)
}
