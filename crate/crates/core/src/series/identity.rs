//! Checks of the product theorems, the Dirichlet factorizations and the
//! Lambert identities, each returning an [`IdentityReport`].

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::approx::{Approx, ComplexValue, EPS};
use super::{
    arithmetic_odd_approx, mobius_multiple_approx, polylog_approx, zeta1_approx, zeta2_approx, zeta_approx,
    ArithmeticWeight,
};
use crate::error::{Error, Result};
use crate::lambert::{self, UpperHalfPoint};
use crate::numth;
use crate::Parity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    C1,
    L1,
    L2,
    L3,
    #[serde(rename = "LAM1")]
    Lam1,
    #[serde(rename = "LAM2")]
    Lam2,
    R1,
    #[serde(rename = "PRIME")]
    Prime,
}

impl IdentityId {
    pub const ALL: [IdentityId; 14] = [
        IdentityId::T1,
        IdentityId::T2,
        IdentityId::T3,
        IdentityId::T4,
        IdentityId::T5,
        IdentityId::T6,
        IdentityId::C1,
        IdentityId::L1,
        IdentityId::L2,
        IdentityId::L3,
        IdentityId::Lam1,
        IdentityId::Lam2,
        IdentityId::R1,
        IdentityId::Prime,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::T1 => "T1",
            IdentityId::T2 => "T2",
            IdentityId::T3 => "T3",
            IdentityId::T4 => "T4",
            IdentityId::T5 => "T5",
            IdentityId::T6 => "T6",
            IdentityId::C1 => "C1",
            IdentityId::L1 => "L1",
            IdentityId::L2 => "L2",
            IdentityId::L3 => "L3",
            IdentityId::Lam1 => "LAM1",
            IdentityId::Lam2 => "LAM2",
            IdentityId::R1 => "R1",
            IdentityId::Prime => "PRIME",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            IdentityId::T1 => "zeta(s) zeta1(x:k,s) = Li_s(kx)",
            IdentityId::T2 => "zeta(s) zeta2(x:k,s) = zeta(s-1) Li_s(kx)",
            IdentityId::T3 => "(2^s - 1) zeta(s) zeta1_odd(x:k,s) = 2^s Li_s(kx) - Li_s(k^2x^2)",
            IdentityId::T4 => "2^s zeta(s) zeta2_odd(x:k,s) = (2^s - 1) zeta(s-1) (Li_s(kx) - 2^-s Li_s(k^2x^2))",
            IdentityId::T5 => "(2^s - 1) zeta(s) zeta1_even(x:k,s) = Li_s(k^2x^2) - Li_s(kx)",
            IdentityId::T6 => "2^s zeta(s) zeta2_even(x:k,s) = zeta(s-1) (Li_s(kx) - (1 - 2^s)/2^s Li_s(k^2x^2))",
            IdentityId::C1 => "zeta(s-1) zeta1(x:k,s) = zeta2(x:k,s)",
            IdentityId::L1 => "sum mu(mn)/n^s = mu(m)/zeta(s) prod_{p|m} 1/(1 - p^-s)",
            IdentityId::L2 => "zeta1_odd(x:k,s) = (sum_{n odd} mu(n)/n^s) (sum_{n odd} (kx)^n/n^s)",
            IdentityId::L3 => "zeta2_odd(x:k,s) = (sum_{n odd} phi(n)/n^s) (sum_{n odd} (kx)^n/n^s)",
            IdentityId::Lam1 => "sum n L_k(n) x^n/(1 - x^n) = kx/(1 - kx)",
            IdentityId::Lam2 => "sum n L_k(y:n) x^n/(1 - x^n) = kyx/(1 - kyx)",
            IdentityId::R1 => "H(n,q) = sum_{d|n} mu(n/d) sum_a a^d q^a/(1 - q^a)",
            IdentityId::Prime => "H(p,q) = p! E_{p+1}/(2(-2 pi i)^{p+1}) + E_2/(8 pi^2)",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::parse("identity id", s))
    }
}

/// The parameters an identity is evaluated at; each identity reads the
/// subset it needs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct IdentityPoint {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<ComplexValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<ComplexValue>,
}

impl IdentityPoint {
    pub fn dirichlet(s: f64, k: u64, x: f64) -> Self {
        IdentityPoint { s: ComplexValue::real(s).ok(), k: Some(k), x: Some(x), ..Default::default() }
    }
}

impl fmt::Display for IdentityPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(s) = self.s {
            parts.push(format!("s={s}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(x) = self.x {
            parts.push(format!("x={x}"));
        }
        if let Some(y) = self.y {
            parts.push(format!("y={y}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(z) = self.z {
            parts.push(format!("z={z}"));
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The tolerance is not finite, so neither outcome is certified.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The same left side checked against a second right side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlternativeReport {
    pub hypothesis: String,
    pub rhs: ComplexValue,
    pub residual: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub point: IdentityPoint,
    pub terms: u64,
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub residual: f64,
    /// Sum of the certified radii of both sides.
    pub tail_bound: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternative: Option<AlternativeReport>,
}

/// Residual, tolerance and verdict for two certified values.
fn compare(lhs: Approx, rhs: Approx) -> (f64, f64, f64, Verdict) {
    let residual = (lhs.mid - rhs.mid).norm();
    let radii = lhs.rad + rhs.rad;
    let slack = 64.0 * EPS * 1f64.max(lhs.norm()).max(rhs.norm());
    let tolerance = radii + slack;
    let verdict = if !tolerance.is_finite() || !residual.is_finite() {
        Verdict::Inconclusive
    } else if residual <= tolerance {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    (residual, radii, tolerance, verdict)
}

fn finite(c: Complex64, what: &str) -> Result<ComplexValue> {
    ComplexValue::from_complex(c).map_err(|_| Error::Internal(format!("{what} evaluated to {c}")))
}

impl IdentityReport {
    pub fn from_sides(
        identity_id: IdentityId,
        point: IdentityPoint,
        terms: u64,
        lhs: Approx,
        rhs: Approx,
        alternative: Option<(&str, Approx)>,
    ) -> Result<Self> {
        let (residual, tail_bound, tolerance, verdict) = compare(lhs, rhs);
        let alternative = match alternative {
            None => None,
            Some((hypothesis, alt)) => {
                let (residual, _, tolerance, verdict) = compare(lhs, alt);
                Some(AlternativeReport {
                    hypothesis: hypothesis.to_string(),
                    rhs: finite(alt.mid, "alternative right side")?,
                    residual,
                    tolerance,
                    verdict,
                })
            }
        };
        Ok(IdentityReport {
            identity_id,
            point,
            terms,
            lhs: finite(lhs.mid, "left side")?,
            rhs: finite(rhs.mid, "right side")?,
            residual,
            tail_bound,
            tolerance,
            verdict,
            alternative,
        })
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] N={}: {} | lhs={} rhs={} residual={:.3e} tolerance={:.3e}",
            self.identity_id, self.point, self.terms, self.verdict, self.lhs, self.rhs, self.residual, self.tolerance
        )?;
        if let Some(alt) = &self.alternative {
            write!(
                f,
                " | alternative ({}): {} residual={:.3e} tolerance={:.3e}",
                alt.hypothesis, alt.verdict, alt.residual, alt.tolerance
            )?;
        }
        Ok(())
    }
}

fn need<T>(v: Option<T>, id: IdentityId, name: &'static str) -> Result<T> {
    v.ok_or(Error::MissingParameter { id: id.as_str(), name })
}

fn two_pow(s: Complex64) -> Approx {
    Approx::computed((s * std::f64::consts::LN_2).exp())
}

const ONE: Approx = Approx { mid: Complex64 { re: 1.0, im: 0.0 }, rad: 0.0 };

/// Evaluates one identity at `point` with `terms` retained terms per series
/// (alphabet sizes and frequencies for the Lambert identities).
pub fn verify_identity(id: IdentityId, point: &IdentityPoint, terms: u64) -> Result<IdentityReport> {
    match id {
        IdentityId::Lam1 => {
            return lambert::lambert_lyndon_check(need(point.k, id, "k")?, need(point.x, id, "x")?, None, terms)
        }
        IdentityId::Lam2 => {
            let y = need(point.y, id, "y")?;
            return lambert::lambert_lyndon_check(need(point.k, id, "k")?, need(point.x, id, "x")?, Some(y), terms);
        }
        IdentityId::R1 => {
            let p = UpperHalfPoint::new(need(point.z, id, "z")?)?;
            return lambert::result1_check(need(point.n, id, "n")?, &p, terms);
        }
        IdentityId::Prime => {
            let p = UpperHalfPoint::new(need(point.z, id, "z")?)?;
            return lambert::prime_case_check(need(point.n, id, "n")?, &p, terms);
        }
        IdentityId::L1 => {
            let s = need(point.s, id, "s")?.get();
            let m = point.m.unwrap_or(2);
            let lhs = mobius_multiple_approx(m, s, terms)?;
            let (zeta, _) = zeta_approx(s, terms)?;
            let mut rhs = Approx::real(numth::mobius(m)? as f64).div(zeta);
            for p in numth::factorize(m)?.primes() {
                let factor = ONE.sub(Approx::computed(super::n_pow_neg_s(p as f64, s)));
                rhs = rhs.div(factor);
            }
            let point = IdentityPoint { s: point.s, m: Some(m), ..Default::default() };
            return IdentityReport::from_sides(id, point, terms, lhs, rhs, None);
        }
        _ => {}
    }

    let s = need(point.s, id, "s")?.get();
    let k = need(point.k, id, "k")?;
    let x = need(point.x, id, "x")?;
    let w = Complex64::new(k as f64 * x, 0.0);
    let point = IdentityPoint { s: point.s, k: Some(k), x: Some(x), ..Default::default() };
    let zeta = |s| zeta_approx(s, terms).map(|(a, _)| a);
    let li = |arg: Complex64| polylog_approx(s, arg, terms, Parity::All);
    let two_s = two_pow(s);

    let report = match id {
        IdentityId::T1 => {
            let lhs = zeta(s)?.mul(zeta1_approx(k, x, s, terms, Parity::All)?);
            IdentityReport::from_sides(id, point, terms, lhs, li(w)?, None)?
        }
        IdentityId::T2 => {
            let lhs = zeta(s)?.mul(zeta2_approx(k, x, s, terms, Parity::All)?);
            let rhs = zeta(s - 1.0)?.mul(li(w)?);
            IdentityReport::from_sides(id, point, terms, lhs, rhs, None)?
        }
        IdentityId::T3 => {
            let lhs = zeta(s)?.mul(zeta1_approx(k, x, s, terms, Parity::Odd)?);
            let rhs = two_s.mul(li(w)?).sub(li(w * w)?).div(two_s.sub(ONE));
            IdentityReport::from_sides(id, point, terms, lhs, rhs, None)?
        }
        IdentityId::T5 => {
            let lhs = zeta(s)?.mul(zeta1_approx(k, x, s, terms, Parity::Even)?);
            let rhs = li(w * w)?.sub(li(w)?).div(two_s.sub(ONE));
            IdentityReport::from_sides(id, point, terms, lhs, rhs, None)?
        }
        IdentityId::T4 | IdentityId::T6 => {
            let parity = if id == IdentityId::T4 { Parity::Odd } else { Parity::Even };
            let lhs = two_s.mul(zeta(s)?).mul(zeta2_approx(k, x, s, terms, parity)?);
            let zeta_prev = zeta(s - 1.0)?;
            let (li1, li2) = (li(w)?, li(w * w)?);
            let inv_two_s = ONE.div(two_s);
            // odd-index part of Li_s(kx)
            let odd_li = li1.sub(inv_two_s.mul(li2));
            // Σ_{n odd} φ(n)/n^s = ζ(s-1)(1 - 2^{1-s}) / (ζ(s)(1 - 2^{-s}))
            let c = ONE.sub(inv_two_s.scale(2.0)).div(ONE.sub(inv_two_s));
            let (rhs, alt) = if id == IdentityId::T4 {
                let rhs = two_s.sub(ONE).mul(zeta_prev).mul(odd_li);
                let alt = two_s.mul(c).mul(zeta_prev).mul(odd_li);
                (rhs, alt)
            } else {
                let rhs = zeta_prev.mul(li1.sub(ONE.sub(two_s).mul(inv_two_s).mul(li2)));
                let alt = two_s.mul(zeta_prev).mul(ONE.sub(c).mul(li1).add(c.mul(inv_two_s).mul(li2)));
                (rhs, alt)
            };
            let hypothesis = "odd totient factor (1 - 2^(1-s)) zeta(s-1) / ((1 - 2^-s) zeta(s))";
            IdentityReport::from_sides(id, point, terms, lhs, rhs, Some((hypothesis, alt)))?
        }
        IdentityId::C1 => {
            let lhs = zeta(s - 1.0)?.mul(zeta1_approx(k, x, s, terms, Parity::All)?);
            let rhs = zeta2_approx(k, x, s, terms, Parity::All)?;
            IdentityReport::from_sides(id, point, terms, lhs, rhs, None)?
        }
        IdentityId::L2 | IdentityId::L3 => {
            let (weight, lhs) = if id == IdentityId::L2 {
                (ArithmeticWeight::Mobius, zeta1_approx(k, x, s, terms, Parity::Odd)?)
            } else {
                (ArithmeticWeight::Totient, zeta2_approx(k, x, s, terms, Parity::Odd)?)
            };
            let (factor, _) = arithmetic_odd_approx(weight, s, terms)?;
            let rhs = factor.mul(polylog_approx(s, w, terms, Parity::Odd)?);
            IdentityReport::from_sides(id, point, terms, lhs, rhs, None)?
        }
        _ => unreachable!("handled above"),
    };
    Ok(report)
}

/// Size of the evaluation grid used by the audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum GridSize {
    Small,
    Default,
}

impl GridSize {
    pub fn as_str(self) -> &'static str {
        match self {
            GridSize::Small => "small",
            GridSize::Default => "default",
        }
    }
}

pub const ZETA1_TERMS: u64 = 500;
pub const ZETA2_TERMS: u64 = 10_000;
pub const MOBIUS_TERMS: u64 = 10_000;

fn dirichlet_grid(ss: &[f64], ks: &[u64], kxs: &[f64]) -> Vec<IdentityPoint> {
    let mut out = Vec::new();
    for &s in ss {
        for &k in ks {
            for &kx in kxs {
                out.push(IdentityPoint::dirichlet(s, k, kx / k as f64));
            }
        }
    }
    out
}

fn upper(z: &str) -> ComplexValue {
    ComplexValue::parse(z).expect("grid constant")
}

/// Evaluation points and the retained term count for one identity.
pub fn default_grid(id: IdentityId, size: GridSize) -> (Vec<IdentityPoint>, u64) {
    let small = size == GridSize::Small;
    match id {
        IdentityId::T1 | IdentityId::T3 | IdentityId::T5 | IdentityId::L2 => {
            let points = if small {
                dirichlet_grid(&[3.0], &[2, 5], &[0.1, 0.5])
            } else {
                dirichlet_grid(&[2.5, 3.0, 4.5], &[2, 3, 5], &[0.1, 0.3, 0.5])
            };
            (points, ZETA1_TERMS)
        }
        IdentityId::T2 | IdentityId::T4 | IdentityId::T6 | IdentityId::C1 | IdentityId::L3 => {
            let points = if small {
                dirichlet_grid(&[3.0], &[2], &[0.4])
            } else {
                dirichlet_grid(&[3.0, 4.0], &[2, 3], &[0.2, 0.4])
            };
            (points, ZETA2_TERMS)
        }
        IdentityId::L1 => {
            let (ss, ms): (&[f64], &[u64]) = if small { (&[3.0], &[2]) } else { (&[2.5, 3.0, 4.0], &[2, 6]) };
            let mut points = Vec::new();
            for &s in ss {
                for &m in ms {
                    points.push(IdentityPoint { s: ComplexValue::real(s).ok(), m: Some(m), ..Default::default() });
                }
            }
            (points, MOBIUS_TERMS)
        }
        IdentityId::Lam1 => {
            let pairs: &[(u64, f64)] = if small { &[(2, 0.1)] } else { &[(1, 0.0), (2, 0.1), (2, 0.3), (3, 0.2), (5, 0.1)] };
            let points = pairs.iter().map(|&(k, x)| IdentityPoint { k: Some(k), x: Some(x), ..Default::default() });
            (points.collect(), lambert::DEFAULT_TERMS)
        }
        IdentityId::Lam2 => {
            let triples: &[(u64, f64, f64)] =
                if small { &[(2, 0.1, 0.5)] } else { &[(2, 0.1, 0.5), (2, 0.1, 1.5), (3, 0.2, 0.25), (2, -0.1, 2.0)] };
            let points = triples
                .iter()
                .map(|&(k, x, y)| IdentityPoint { k: Some(k), x: Some(x), y: Some(y), ..Default::default() });
            (points.collect(), lambert::DEFAULT_TERMS)
        }
        IdentityId::R1 => {
            let (ns, zs): (Vec<u64>, &[&str]) =
                if small { (vec![1, 6], &["i"]) } else { ((1..=12).collect(), &["i", "2i", "1/2+i"]) };
            let mut points = Vec::new();
            for &n in &ns {
                for z in zs {
                    points.push(IdentityPoint { n: Some(n), z: Some(upper(z)), ..Default::default() });
                }
            }
            (points, lambert::DEFAULT_TERMS)
        }
        IdentityId::Prime => {
            let (ps, zs): (&[u64], &[&str]) = if small { (&[2, 3], &["i"]) } else { (&[2, 3, 5, 7], &["i", "0.5i", "2i"]) };
            let mut points = Vec::new();
            for &p in ps {
                for z in zs {
                    points.push(IdentityPoint { n: Some(p), z: Some(upper(z)), ..Default::default() });
                }
            }
            (points, lambert::DEFAULT_TERMS)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dirichlet(id: IdentityId, s: f64, k: u64, x: f64, terms: u64) -> IdentityReport {
        verify_identity(id, &IdentityPoint::dirichlet(s, k, x), terms).unwrap()
    }

    #[test]
    fn t1_passes() {
        let r = dirichlet(IdentityId::T1, 3.0, 2, 0.2, 200);
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
    }

    #[test]
    fn t4_fails_and_alternative_passes() {
        let r = dirichlet(IdentityId::T4, 3.0, 2, 0.2, 10_000);
        assert_eq!(r.verdict, Verdict::Fail, "{r}");
        assert!(r.residual > 10.0 * r.tolerance, "{r}");
        assert_eq!(r.alternative.unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn l1_passes() {
        let point = IdentityPoint { s: ComplexValue::real(3.0).ok(), m: Some(2), ..Default::default() };
        let r = verify_identity(IdentityId::L1, &point, 10_000).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        let want = -1.0 / (1.202_056_903_159_594_3 * (1.0 - 0.125));
        assert!((r.rhs.re - want).abs() < 1e-12);
    }

    #[test]
    fn complex_s_is_supported() {
        let point = IdentityPoint { s: ComplexValue::new(3.0, 2.0).ok(), k: Some(2), x: Some(0.2), ..Default::default() };
        for id in [IdentityId::T1, IdentityId::T3, IdentityId::C1] {
            let r = verify_identity(id, &point, 2000).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r}");
            assert!(r.lhs.im.abs() > 0.0);
        }
    }

    #[test]
    fn missing_parameters_are_reported() {
        let err = verify_identity(IdentityId::T1, &IdentityPoint::default(), 10).unwrap_err();
        assert_eq!(err, Error::MissingParameter { id: "T1", name: "s" });
        assert!(verify_identity(IdentityId::R1, &IdentityPoint::default(), 10).is_err());
    }

    #[test]
    fn domains_are_enforced() {
        assert!(verify_identity(IdentityId::T2, &IdentityPoint::dirichlet(2.0, 2, 0.2), 10).is_err());
        assert!(verify_identity(IdentityId::T1, &IdentityPoint::dirichlet(3.0, 2, 0.5), 10).is_err());
    }

    #[test]
    fn ids_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.as_str()));
        }
        assert!("T9".parse::<IdentityId>().is_err());
    }

    #[test]
    fn grids_cover_every_identity() {
        for id in IdentityId::ALL {
            for size in [GridSize::Small, GridSize::Default] {
                assert!(!default_grid(id, size).0.is_empty());
            }
        }
        assert_eq!(default_grid(IdentityId::T1, GridSize::Default).0.len(), 27);
    }
}
