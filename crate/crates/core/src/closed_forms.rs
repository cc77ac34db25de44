//! Exact values of `ζ₁`, `ζ₂` and their parity restrictions at `s = -m`.
//!
//! Each point is evaluated twice. The continuation track combines
//! `Li_{-m}(kx)` and `ζ(-m)`, `ζ(-m-1)` so that the product theorems valid for
//! large `Re(s)` continue to hold. The printed track evaluates the
//! Bernoulli and Apostol-Bernoulli closed forms as stated. The two are
//! reported side by side.

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::bernoulli::{apostol_bernoulli_number_at, bernoulli_number, polylog_nonpositive, zeta_neg, EulerianTriangle};
use crate::error::{Error, Result};
use crate::rational::{abs_lt_one, int, render, ExactRational, RationalJson};
use crate::Parity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Zeta1,
    Zeta2,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Zeta1 => "zeta1",
            Family::Zeta2 => "zeta2",
        }
    }
}

/// `s = -m`, together with `k`, `x` and a parity class, with `|kx| < 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialValuePoint {
    m: u32,
    k: u64,
    x: ExactRational,
    parity: Parity,
}

impl SpecialValuePoint {
    pub fn new(m: u32, k: u64, x: ExactRational, parity: Parity) -> Result<Self> {
        if k == 0 {
            return Err(Error::Zero { what: "k" });
        }
        let lambda = &x * int(k as i64);
        if !abs_lt_one(&lambda) {
            return Err(Error::domain(format!("requires |kx| < 1, got kx = {}", render(&lambda))));
        }
        Ok(SpecialValuePoint { m, k, x, parity })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn x(&self) -> &ExactRational {
        &self.x
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn with_parity(&self, parity: Parity) -> Self {
        SpecialValuePoint { parity, ..self.clone() }
    }

    /// `λ = kx`.
    pub fn lambda(&self) -> ExactRational {
        &self.x * int(self.k as i64)
    }
}

impl Serialize for SpecialValuePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SpecialValuePoint", 4)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("x", &RationalJson::from(&self.x))?;
        st.serialize_field("parity", &self.parity)?;
        st.end()
    }
}

/// One track's outcome at a special point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecialOutcome {
    Value(ExactRational),
    /// A nonzero quantity divided by zero.
    Pole,
    /// Zero over zero in the assembled formula.
    Indeterminate,
    /// No printed formula exists at this point.
    NotPrinted,
}

impl SpecialOutcome {
    /// `num / den`, typed when `den = 0`.
    pub fn quotient(num: ExactRational, den: ExactRational) -> Self {
        match (num.is_zero(), den.is_zero()) {
            (_, false) => SpecialOutcome::Value(num / den),
            (false, true) => SpecialOutcome::Pole,
            (true, true) => SpecialOutcome::Indeterminate,
        }
    }

    pub fn value(&self) -> Option<&ExactRational> {
        match self {
            SpecialOutcome::Value(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, SpecialOutcome::Pole)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SpecialOutcome::Value(_) => "value",
            SpecialOutcome::Pole => "pole",
            SpecialOutcome::Indeterminate => "indeterminate",
            SpecialOutcome::NotPrinted => "not_printed",
        }
    }
}

impl std::fmt::Display for SpecialOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpecialOutcome::Value(v) => f.write_str(&render(v)),
            SpecialOutcome::Pole => f.write_str("pole"),
            SpecialOutcome::Indeterminate => f.write_str("indeterminate"),
            SpecialOutcome::NotPrinted => f.write_str("not printed"),
        }
    }
}

impl Serialize for SpecialOutcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let n = if self.value().is_some() { 2 } else { 1 };
        let mut st = serializer.serialize_struct("SpecialOutcome", n)?;
        st.serialize_field("kind", self.kind())?;
        if let Some(v) = self.value() {
            st.serialize_field("value", &RationalJson::from(v))?;
        }
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialValueResult {
    pub family: Family,
    pub point: SpecialValuePoint,
    pub continuation_value: SpecialOutcome,
    pub paper_value: SpecialOutcome,
    pub agrees: bool,
}

impl SpecialValueResult {
    fn new(family: Family, point: &SpecialValuePoint, continuation: SpecialOutcome, printed: SpecialOutcome) -> Self {
        let agrees = match (&continuation, &printed) {
            (SpecialOutcome::Value(a), SpecialOutcome::Value(b)) => a == b,
            (SpecialOutcome::Pole, SpecialOutcome::Pole) => true,
            _ => false,
        };
        SpecialValueResult {
            family,
            point: point.clone(),
            continuation_value: continuation,
            paper_value: printed,
            agrees,
        }
    }
}

fn pow2(m: u32) -> ExactRational {
    ExactRational::from_integer(num_bigint::BigInt::one() << m as usize)
}

fn one() -> ExactRational {
    ExactRational::one()
}

fn continuation(family: Family, p: &SpecialValuePoint) -> Result<SpecialOutcome> {
    let lambda = p.lambda();
    if lambda.is_zero() {
        // every coefficient of the series vanishes
        return Ok(SpecialOutcome::Value(ExactRational::zero()));
    }
    let m = p.m as usize;
    let li = polylog_nonpositive(m, &lambda)?;
    let li_sq = polylog_nonpositive(m, &(&lambda * &lambda))?;
    let two_m = pow2(p.m);
    let z = zeta_neg(m);
    let (num, den) = match (family, p.parity) {
        (Family::Zeta1, Parity::All) => (li, z),
        (Family::Zeta1, Parity::Odd) => (li - &two_m * li_sq, (one() - &two_m) * z),
        (Family::Zeta1, Parity::Even) => (&two_m * (li_sq - li), (one() - &two_m) * z),
        (Family::Zeta2, parity) => {
            let z_next = zeta_neg(m + 1);
            match parity {
                Parity::All => (z_next * li, z),
                Parity::Odd => {
                    let num = z_next * (one() - pow2(p.m + 1)) * (li - &two_m * li_sq);
                    (num, z * (one() - &two_m))
                }
                Parity::Even => {
                    let num = z_next * &two_m * (li + (one() - pow2(p.m + 1)) * li_sq);
                    (num, z * (one() - &two_m))
                }
            }
        }
    };
    Ok(SpecialOutcome::quotient(num, den))
}

fn printed(family: Family, p: &SpecialValuePoint) -> Result<SpecialOutcome> {
    let lambda = p.lambda();
    let m = p.m as usize;
    if m == 0 && !(family == Family::Zeta1 && p.parity == Parity::All) {
        return Ok(SpecialOutcome::NotPrinted);
    }
    let a = apostol_bernoulli_number_at(m + 1, &lambda)?;
    let a_sq = apostol_bernoulli_number_at(m + 1, &(&lambda * &lambda))?;
    let two_m = pow2(p.m);
    let b_next = bernoulli_number(m + 1);
    let (num, den) = match family {
        Family::Zeta1 => match p.parity {
            Parity::All => (a, b_next),
            Parity::Odd => (a - &two_m * a_sq, (one() - &two_m) * b_next),
            Parity::Even => (&two_m * (a_sq - a), (one() - &two_m) * b_next),
        },
        Family::Zeta2 => {
            let b_m = bernoulli_number(m);
            let den = int(m as i64) * b_next;
            match p.parity {
                Parity::All => (-b_m * a, den),
                Parity::Odd => ((one() - &two_m) * b_m * (&two_m * a_sq - a), den),
                Parity::Even => (&two_m * b_m * (a - (&two_m - one()) * a_sq), den),
            }
        }
    };
    Ok(SpecialOutcome::quotient(num, den))
}

pub fn special_value(family: Family, p: &SpecialValuePoint) -> Result<SpecialValueResult> {
    Ok(SpecialValueResult::new(family, p, continuation(family, p)?, printed(family, p)?))
}

/// `ζ₁` (or its parity part) at `s = -m`. The continuation track is
/// `Li_{-m}(kx)/ζ(-m)`; the printed track is `𝓑_{m+1}(kx)/B_{m+1}` and its
/// parity variants.
pub fn zeta1_special(p: &SpecialValuePoint) -> Result<SpecialValueResult> {
    special_value(Family::Zeta1, p)
}

/// `ζ₂` (or its parity part) at `s = -m`. The continuation track is
/// `ζ(-m-1) Li_{-m}(kx)/ζ(-m)`; the printed track is
/// `-B_m 𝓑_{m+1}(kx)/(m B_{m+1})` and its parity variants, not printed at `m = 0`.
pub fn zeta2_special(p: &SpecialValuePoint) -> Result<SpecialValueResult> {
    special_value(Family::Zeta2, p)
}

/// `-(m+1) Σ_j A(m,j) λ^{m-j} / ((1-λ)^{m+1} B_{m+1})` with `λ = kx`.
pub fn zeta1_special_eulerian(m: u32, k: u64, x: &ExactRational) -> Result<ExactRational> {
    let p = SpecialValuePoint::new(m, k, x.clone(), Parity::All)?;
    let lambda = p.lambda();
    let m = m as usize;
    let b_next = bernoulli_number(m + 1);
    if b_next.is_zero() {
        return Err(Error::Pole(format!("B_{} = 0", m + 1)));
    }
    let tri = EulerianTriangle::new(m);
    let mut acc = ExactRational::zero();
    let mut lp = ExactRational::one();
    for j in (0..=m).rev() {
        acc += &lp * ExactRational::from_integer(tri.get(m, j as i64));
        lp *= &lambda;
    }
    let scale = -int(m as i64 + 1) / (num_traits::pow(one() - &lambda, m + 1) * b_next);
    Ok(scale * acc)
}

/// `odd + even == all` on one track, or `None` when one of the three is not a
/// finite value.
pub fn parity_additivity(family: Family, m: u32, k: u64, x: &ExactRational, printed_track: bool) -> Result<Option<bool>> {
    let mut vals = Vec::with_capacity(3);
    for parity in Parity::ALL {
        let p = SpecialValuePoint::new(m, k, x.clone(), parity)?;
        let r = special_value(family, &p)?;
        let outcome = if printed_track { r.paper_value } else { r.continuation_value };
        match outcome {
            SpecialOutcome::Value(v) => vals.push(v),
            _ => return Ok(None),
        }
    }
    Ok(Some(&vals[1] + &vals[2] == vals[0]))
}
