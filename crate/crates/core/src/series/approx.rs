//! Complex values carried with an error radius, and compensated summation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) const EPS: f64 = f64::EPSILON;

/// A pair of finite doubles. Non-finite components are rejected at
/// construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl ComplexValue {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::domain(format!("non-finite complex value ({re}, {im})")));
        }
        Ok(ComplexValue { re, im })
    }

    pub fn real(re: f64) -> Result<Self> {
        Self::new(re, 0.0)
    }

    pub fn from_complex(c: Complex64) -> Result<Self> {
        Self::new(c.re, c.im)
    }

    pub fn get(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn norm(self) -> f64 {
        self.get().norm()
    }

    /// Accepts `3`, `-2.5`, `i`, `2i`, `-i`, `3+2i`, `0.5-1.5i`, `1/2+i`.
    pub fn parse(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || Error::parse("complex number", input);
        let number = |t: &str| -> Result<f64> {
            if t.contains('/') {
                crate::rational::parse_rational(t).map(|r| crate::rational::to_f64(&r)).map_err(|_| err())
            } else {
                t.parse::<f64>().map_err(|_| err())
            }
        };
        if s.is_empty() {
            return Err(err());
        }
        let Some(body) = s.strip_suffix('i') else {
            return Self::real(number(&s)?);
        };
        // split at the last sign that is not a leading sign or part of an exponent
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
        let (re_part, im_part) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let im = match im_part {
            "" | "+" => 1.0,
            "-" => -1.0,
            t => number(t)?,
        };
        let re = if re_part.is_empty() { 0.0 } else { number(re_part)? };
        Self::new(re, im)
    }
}

impl std::fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", self.re)
        } else if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// A midpoint and a radius such that the exact quantity lies within `rad`
/// of `mid`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Approx {
    pub mid: Complex64,
    pub rad: f64,
}

impl Approx {
    pub fn new(mid: Complex64, rad: f64) -> Self {
        Approx { mid, rad }
    }

    pub fn exact(mid: Complex64) -> Self {
        Approx { mid, rad: 0.0 }
    }

    /// A value produced by a few correctly rounded library calls.
    pub fn computed(mid: Complex64) -> Self {
        Approx { mid, rad: 8.0 * EPS * mid.norm() }
    }

    pub fn real(x: f64) -> Self {
        Self::exact(Complex64::new(x, 0.0))
    }

    pub fn norm(&self) -> f64 {
        self.mid.norm()
    }

    pub fn add(self, o: Approx) -> Approx {
        let mid = self.mid + o.mid;
        Approx { mid, rad: self.rad + o.rad + 2.0 * EPS * mid.norm() }
    }

    pub fn sub(self, o: Approx) -> Approx {
        let mid = self.mid - o.mid;
        Approx { mid, rad: self.rad + o.rad + 2.0 * EPS * mid.norm() }
    }

    pub fn mul(self, o: Approx) -> Approx {
        let mid = self.mid * o.mid;
        let rad = self.norm() * o.rad + o.norm() * self.rad + self.rad * o.rad + 4.0 * EPS * mid.norm();
        Approx { mid, rad }
    }

    /// Radius is infinite when the divisor's disc contains zero.
    pub fn div(self, o: Approx) -> Approx {
        let b = o.norm();
        if b <= o.rad {
            return Approx { mid: self.mid / o.mid, rad: f64::INFINITY };
        }
        let mid = self.mid / o.mid;
        let rad = (self.rad + mid.norm() * o.rad) / (b - o.rad) + 4.0 * EPS * mid.norm();
        Approx { mid, rad }
    }

    pub fn scale(self, c: f64) -> Approx {
        let mid = self.mid * c;
        Approx { mid, rad: self.rad * c.abs() + EPS * mid.norm() }
    }
}

/// Neumaier summation on both components, with a running allowance for the
/// rounding error of the terms themselves.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    re: f64,
    re_c: f64,
    im: f64,
    im_c: f64,
    allowance: f64,
}

fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `term`, whose computed value is within `rel_ulps · ε · magnitude`
    /// of the exact term.
    pub fn add(&mut self, term: Complex64, magnitude: f64, rel_ulps: f64) {
        neumaier(&mut self.re, &mut self.re_c, term.re);
        neumaier(&mut self.im, &mut self.im_c, term.im);
        self.allowance += rel_ulps * EPS * magnitude;
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re + self.re_c, self.im + self.im_c)
    }

    /// The sum as an [`Approx`], its radius widened by `tail`.
    pub fn finish(&self, tail: f64) -> Approx {
        let mid = self.value();
        Approx { mid, rad: tail + self.allowance + 2.0 * EPS * mid.norm() }
    }
}
