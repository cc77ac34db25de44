//! Exact Bernoulli, Apostol-Bernoulli and Eulerian numbers, and the values of
//! `ζ` and `Li` at negative integers.

use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, ExactRational};

fn binomial_cache() -> &'static Mutex<Vec<Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<Vec<Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![vec![BigInt::one()]]))
}

/// Row `n` of Pascal's triangle, memoized.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut rows = binomial_cache().lock().expect("binomial cache poisoned");
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 is seeded");
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(BigInt::one());
        for w in prev.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        rows.push(next);
    }
    rows[n].clone()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n { BigInt::zero() } else { binomial_row(n)[k].clone() }
}

/// `B_0..=B_limit` with the convention `B_1 = -1/2`.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<ExactRational>,
}

impl BernoulliTable {
    /// Solves `Σ_{j=0}^{m} C(m+1, j) B_j = 0` for `B_m`, `m >= 1`.
    pub fn new(limit: usize) -> Self {
        let mut values = vec![ExactRational::one()];
        for m in 1..=limit {
            let row = binomial_row(m + 1);
            let mut acc = ExactRational::zero();
            for (j, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * BigRational::from_integer(row[j].clone());
                }
            }
            values.push(-acc / BigRational::from_integer(row[m].clone()));
        }
        BernoulliTable { values }
    }

    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, m: usize) -> &ExactRational {
        &self.values[m]
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }
}

fn bernoulli_cache() -> &'static Mutex<BernoulliTable> {
    static CACHE: OnceLock<Mutex<BernoulliTable>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BernoulliTable::new(32)))
}

pub fn bernoulli_number(m: usize) -> ExactRational {
    let mut table = bernoulli_cache().lock().expect("bernoulli cache poisoned");
    if table.limit() < m {
        *table = BernoulliTable::new(m.max(2 * table.limit()));
    }
    table.get(m).clone()
}

/// `B_m(x) = Σ_{j=0}^{m} C(m,j) x^{m-j} B_j`.
pub fn bernoulli_poly(m: usize, x: &ExactRational) -> ExactRational {
    let row = binomial_row(m);
    let mut acc = ExactRational::zero();
    let mut xp = ExactRational::one();
    // ascending powers of x pair with descending j
    for j in (0..=m).rev() {
        let b = bernoulli_number(j);
        if !b.is_zero() {
            acc += &xp * b * BigRational::from_integer(row[j].clone());
        }
        xp *= x;
    }
    acc
}

// ---------------------------------------------------------------------------
// Rational functions of λ with denominator (λ-1)^e

/// `numerator(λ) / (λ-1)^pole_order` with integer coefficients. The
/// numerator is never divisible by `(λ-1)` unless it is zero, and zero is
/// stored with `pole_order = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaRationalFunction {
    /// Ascending coefficients, no trailing zeros.
    numerator: Vec<BigInt>,
    pole_order: u32,
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// `p · (λ-1)`.
fn times_lambda_minus_one(p: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c;
    }
    out
}

/// Synthetic division by `(λ-1)`, if exact.
fn divide_lambda_minus_one(p: &[BigInt]) -> Option<Vec<BigInt>> {
    if p.is_empty() {
        return None;
    }
    let mut q = vec![BigInt::zero(); p.len() - 1];
    let mut carry = BigInt::zero();
    for i in (1..p.len()).rev() {
        carry += &p[i];
        q[i - 1] = carry.clone();
    }
    if (carry + &p[0]).is_zero() { Some(q) } else { None }
}

impl LambdaRationalFunction {
    pub fn zero() -> Self {
        LambdaRationalFunction { numerator: Vec::new(), pole_order: 0 }
    }

    /// Builds and reduces `numerator / (λ-1)^pole_order`.
    pub fn new(numerator: Vec<BigInt>, pole_order: u32) -> Self {
        let mut num = trim(numerator);
        let mut e = pole_order;
        if num.is_empty() {
            return Self::zero();
        }
        while e > 0 {
            match divide_lambda_minus_one(&num) {
                Some(q) => {
                    num = q;
                    e -= 1;
                }
                None => break,
            }
        }
        LambdaRationalFunction { numerator: num, pole_order: e }
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    fn lift(&self, e: u32) -> Vec<BigInt> {
        let mut p = self.numerator.clone();
        for _ in self.pole_order..e {
            p = times_lambda_minus_one(&p);
        }
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        let e = self.pole_order.max(other.pole_order);
        let (a, b) = (self.lift(e), other.lift(e));
        let mut sum = vec![BigInt::zero(); a.len().max(b.len())];
        for (i, c) in a.into_iter().enumerate() {
            sum[i] += c;
        }
        for (i, c) in b.into_iter().enumerate() {
            sum[i] += c;
        }
        Self::new(sum, e)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.numerator.iter().map(|a| a * c).collect(), self.pole_order)
    }

    pub fn times_lambda(&self) -> Self {
        let mut p = vec![BigInt::zero()];
        p.extend(self.numerator.iter().cloned());
        Self::new(p, self.pole_order)
    }

    pub fn over_lambda_minus_one(&self) -> Self {
        Self::new(self.numerator.clone(), self.pole_order + 1)
    }

    /// Exact value at `λ`; `λ = 1` is a pole whenever `pole_order > 0`.
    pub fn eval(&self, lambda: &ExactRational) -> Result<ExactRational> {
        let num = self
            .numerator
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * lambda + BigRational::from_integer(c.clone()));
        if self.pole_order == 0 {
            return Ok(num);
        }
        let base = lambda - ExactRational::one();
        if base.is_zero() {
            return Err(Error::Pole("Apostol-Bernoulli numbers have a pole at lambda = 1".into()));
        }
        Ok(num / num_traits::pow(base, self.pole_order as usize))
    }
}

/// Canonical text such as `-2*l / (l-1)^2`, numerator in descending powers of
/// `l`, parenthesized when it has more than one term.
impl fmt::Display for LambdaRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut body = String::new();
        let mut count = 0;
        for (deg, c) in self.numerator.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if count == 0 {
                if neg {
                    body.push('-');
                }
            } else {
                body.push_str(if neg { " - " } else { " + " });
            }
            count += 1;
            let mag = c.abs();
            let mono = match deg {
                0 => String::new(),
                1 => "l".to_string(),
                d => format!("l^{d}"),
            };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => body.push_str(&mag.to_string()),
                (false, true) => body.push_str(&mono),
                (false, false) => body.push_str(&format!("{mag}*{mono}")),
            }
        }
        if self.pole_order == 0 {
            return f.write_str(&body);
        }
        if count > 1 {
            body = format!("({body})");
        }
        match self.pole_order {
            1 => write!(f, "{body} / (l-1)"),
            e => write!(f, "{body} / (l-1)^{e}"),
        }
    }
}

fn apostol_cache() -> &'static Mutex<Vec<LambdaRationalFunction>> {
    static CACHE: OnceLock<Mutex<Vec<LambdaRationalFunction>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![LambdaRationalFunction::zero()]))
}

/// `𝓑_m(λ)`, the coefficients of `t / (λ e^t - 1)`, from
/// `(λ-1) 𝓑_n = [n=1] - λ Σ_{j<n} C(n,j) 𝓑_j` with `𝓑_0 = 0`.
pub fn apostol_bernoulli_rf(m: usize) -> LambdaRationalFunction {
    let mut table = apostol_cache().lock().expect("apostol cache poisoned");
    while table.len() <= m {
        let n = table.len();
        let row = binomial_row(n);
        let mut acc = LambdaRationalFunction::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc = acc.add(&b.scale(&row[j]));
            }
        }
        let mut rhs = acc.times_lambda().scale(&BigInt::from(-1));
        if n == 1 {
            rhs = rhs.add(&LambdaRationalFunction::new(vec![BigInt::one()], 0));
        }
        table.push(rhs.over_lambda_minus_one());
    }
    table[m].clone()
}

fn reject_lambda_one(lambda: &ExactRational) -> Result<()> {
    if lambda.is_one() {
        return Err(Error::domain("lambda = 1 is a pole of every Apostol-Bernoulli number"));
    }
    Ok(())
}

/// `𝓑_m(λ)` at an exact `λ != 1`.
pub fn apostol_bernoulli_number_at(m: usize, lambda: &ExactRational) -> Result<ExactRational> {
    reject_lambda_one(lambda)?;
    apostol_bernoulli_rf(m).eval(lambda)
}

/// `𝓑_m(x; λ) = Σ_{j=0}^{m} C(m,j) x^{m-j} 𝓑_j(λ)`.
pub fn apostol_bernoulli_poly_at(m: usize, x: &ExactRational, lambda: &ExactRational) -> Result<ExactRational> {
    reject_lambda_one(lambda)?;
    let row = binomial_row(m);
    let mut acc = ExactRational::zero();
    let mut xp = ExactRational::one();
    for j in (0..=m).rev() {
        let b = apostol_bernoulli_rf(j).eval(lambda)?;
        acc += &xp * b * BigRational::from_integer(row[j].clone());
        xp *= x;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Eulerian numbers

/// Rows `0..=limit` of `A(m, j)`, the permutations of `m` elements with `j`
/// descents. Row `m` has `m + 1` entries with `A(m, m) = 0` for `m >= 1`.
#[derive(Debug, Clone)]
pub struct EulerianTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTriangle {
    /// `A(m,j) = (j+1) A(m-1,j) + (m-j) A(m-1,j-1)`, `A(0,0) = 1`.
    pub fn new(limit: usize) -> Self {
        let mut rows = vec![vec![BigInt::one()]];
        for m in 1..=limit {
            let prev = &rows[m - 1];
            let get = |j: usize| prev.get(j).cloned().unwrap_or_else(BigInt::zero);
            let row = (0..=m)
                .map(|j| {
                    let left = get(j) * BigInt::from(j + 1);
                    let right = if j == 0 { BigInt::zero() } else { get(j - 1) * BigInt::from(m - j) };
                    left + right
                })
                .collect();
            rows.push(row);
        }
        EulerianTriangle { rows }
    }

    pub fn limit(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, m: usize) -> &[BigInt] {
        &self.rows[m]
    }

    pub fn get(&self, m: usize, j: i64) -> BigInt {
        if j < 0 {
            return BigInt::zero();
        }
        self.rows[m].get(j as usize).cloned().unwrap_or_else(BigInt::zero)
    }
}

pub fn eulerian(m: usize, j: i64) -> BigInt {
    EulerianTriangle::new(m).get(m, j)
}

/// `Σ_{j=0}^{m} A(m,j) λ^{m-j} / (1-λ)^{m+1}`.
pub fn polylog_neg_eulerian(m: usize, lambda: &ExactRational) -> Result<ExactRational> {
    reject_lambda_one(lambda)?;
    let tri = EulerianTriangle::new(m);
    let mut acc = ExactRational::zero();
    let mut lp = ExactRational::one();
    for j in (0..=m).rev() {
        acc += &lp * BigRational::from_integer(tri.get(m, j as i64));
        lp *= lambda;
    }
    Ok(acc / num_traits::pow(ExactRational::one() - lambda, m + 1))
}

/// `-𝓑_{m+1}(λ) / (m+1)`.
pub fn polylog_neg_apostol(m: usize, lambda: &ExactRational) -> Result<ExactRational> {
    Ok(-apostol_bernoulli_number_at(m + 1, lambda)? / int(m as i64 + 1))
}

/// `Li_{-m}(λ)` for `m >= 1`, computed by the Eulerian-number form and by the
/// Apostol-Bernoulli form; the two must agree.
///
/// `m = 0` is refused: both forms give `1/(1-λ)` there, which is the Lerch
/// value `Φ(λ,0,0)`, while `Li_0(λ) = λ/(1-λ)`. Use
/// [`polylog_nonpositive`] for the `m = 0` value.
pub fn polylog_neg(m: usize, lambda: &ExactRational) -> Result<ExactRational> {
    if m == 0 {
        return Err(Error::domain(
            "polylog_neg requires m >= 1; the interpolation formulas give Phi(l,0,0) = 1/(1-l), not Li_0(l)",
        ));
    }
    let a = polylog_neg_eulerian(m, lambda)?;
    let b = polylog_neg_apostol(m, lambda)?;
    if a != b {
        return Err(Error::Internal(format!("Li_-{m}: Eulerian form {a} != Apostol form {b}")));
    }
    Ok(a)
}

/// `Li_{-m}(λ)` for every `m >= 0`, with `Li_0(λ) = λ/(1-λ)`.
pub fn polylog_nonpositive(m: usize, lambda: &ExactRational) -> Result<ExactRational> {
    if m == 0 {
        reject_lambda_one(lambda)?;
        return Ok(lambda / (ExactRational::one() - lambda));
    }
    polylog_neg(m, lambda)
}

/// `ζ(-m) = -B_{m+1}(1) / (m+1)`, which is `-B_{m+1}/(m+1)` for `m >= 1`
/// and `-1/2` at `m = 0` (where `B_1 = -1/2` would give the wrong sign).
pub fn zeta_neg(m: usize) -> ExactRational {
    -bernoulli_poly(m + 1, &ExactRational::one()) / int(m as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    /// Power-series coefficients of `t e^{xt} / (λ e^t - 1)` times `n!`,
    /// by direct series division. Independent of the recurrence above.
    fn apostol_by_series(order: usize, x: &ExactRational, lambda: &ExactRational) -> Vec<ExactRational> {
        let mut fact = vec![ExactRational::one()];
        for i in 1..=order + 1 {
            let f = &fact[i - 1] * int(i as i64);
            fact.push(f);
        }
        // numerator t e^{xt}
        let num: Vec<ExactRational> = (0..=order)
            .map(|n| if n == 0 { ExactRational::zero() } else { num_traits::pow(x.clone(), n - 1) / &fact[n - 1] })
            .collect();
        let den: Vec<ExactRational> = (0..=order)
            .map(|n| if n == 0 { lambda - ExactRational::one() } else { lambda / &fact[n] })
            .collect();
        let mut q: Vec<ExactRational> = Vec::new();
        for n in 0..=order {
            let mut acc = num[n].clone();
            for i in 0..n {
                acc -= &q[i] * &den[n - i];
            }
            q.push(acc / &den[0]);
        }
        q.iter().zip(&fact).map(|(c, f)| c * f).collect()
    }

    /// `t/(e^t - 1) = 1 / Σ t^n/(n+1)!` by series inversion.
    fn bernoulli_by_series(order: usize) -> Vec<ExactRational> {
        let mut fact = vec![ExactRational::one()];
        for i in 1..=order + 1 {
            let f = &fact[i - 1] * int(i as i64);
            fact.push(f);
        }
        let den: Vec<ExactRational> = (0..=order).map(|n| ExactRational::one() / &fact[n + 1]).collect();
        let mut q: Vec<ExactRational> = Vec::new();
        for n in 0..=order {
            let mut acc = if n == 0 { ExactRational::one() } else { ExactRational::zero() };
            for i in 0..n {
                acc -= &q[i] * &den[n - i];
            }
            q.push(acc / &den[0]);
        }
        q.iter().zip(&fact).map(|(c, f)| c * f).collect()
    }

    #[test]
    fn printed_bernoulli_numbers() {
        let want = [
            ratio(1, 1),
            ratio(-1, 2),
            ratio(1, 6),
            int(0),
            ratio(-1, 30),
            int(0),
            ratio(1, 42),
            int(0),
            ratio(-1, 30),
            int(0),
            ratio(5, 66),
        ];
        for (m, w) in want.iter().enumerate() {
            assert_eq!(&bernoulli_number(m), w, "B_{m}");
        }
    }

    #[test]
    fn bernoulli_matches_series_inversion() {
        let series = bernoulli_by_series(30);
        let table = BernoulliTable::new(30);
        assert_eq!(table.values(), &series[..]);
    }

    #[test]
    fn bernoulli_table_invariants() {
        let t = BernoulliTable::new(64);
        assert_eq!(t.get(0), &int(1));
        assert_eq!(t.get(1), &ratio(-1, 2));
        for m in 1..32 {
            assert!(t.get(2 * m + 1).is_zero(), "B_{}", 2 * m + 1);
        }
        assert_eq!(bernoulli_number(64), t.get(64).clone());
    }

    #[test]
    fn bernoulli_poly_examples() {
        for m in 0..8 {
            assert_eq!(bernoulli_poly(m, &int(0)), bernoulli_number(m));
        }
        assert_eq!(bernoulli_poly(2, &int(1)), ratio(1, 6));
        assert_eq!(bernoulli_poly(1, &ratio(1, 2)), int(0));
        for m in 2..12 {
            assert_eq!(bernoulli_poly(m, &int(1)), bernoulli_number(m));
        }
    }

    #[test]
    fn printed_apostol_numbers() {
        let rendered: Vec<String> = (0..=4).map(|m| apostol_bernoulli_rf(m).to_string()).collect();
        assert_eq!(
            rendered,
            [
                "0",
                "1 / (l-1)",
                "-2*l / (l-1)^2",
                "(3*l^2 + 3*l) / (l-1)^3",
                "(-4*l^3 - 16*l^2 - 4*l) / (l-1)^4",
            ]
        );
        let b4 = apostol_bernoulli_rf(4);
        assert_eq!(b4.pole_order(), 4);
        let want: Vec<BigInt> = [0, -4, -16, -4].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(b4.numerator(), &want[..]);
    }

    #[test]
    fn apostol_matches_series_division() {
        for lambda in [ratio(1, 2), ratio(-3, 7), int(2), ratio(5, 3)] {
            let series = apostol_by_series(12, &int(0), &lambda);
            for (m, want) in series.iter().enumerate() {
                assert_eq!(&apostol_bernoulli_number_at(m, &lambda).unwrap(), want, "m={m} l={lambda}");
            }
            for x in [ratio(1, 3), ratio(-2, 5), int(1)] {
                let series = apostol_by_series(8, &x, &lambda);
                for (m, want) in series.iter().enumerate() {
                    assert_eq!(&apostol_bernoulli_poly_at(m, &x, &lambda).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn apostol_poly_examples() {
        let l = ratio(3, 4);
        for m in 0..6 {
            assert_eq!(apostol_bernoulli_poly_at(m, &int(0), &l).unwrap(), apostol_bernoulli_number_at(m, &l).unwrap());
        }
        assert_eq!(apostol_bernoulli_number_at(2, &ratio(1, 2)).unwrap(), int(-4));
        assert_eq!(apostol_bernoulli_poly_at(2, &int(1), &ratio(1, 2)).unwrap(), int(-8));
        // 𝓑_0(λ) = 0, so only the j = 1 term survives: 𝓑_1(2) = 1
        assert_eq!(apostol_bernoulli_poly_at(1, &ratio(1, 3), &int(2)).unwrap(), int(1));
        assert!(apostol_bernoulli_poly_at(2, &int(0), &int(1)).is_err());
        assert!(matches!(apostol_bernoulli_rf(3).eval(&int(1)), Err(Error::Pole(_))));
    }

    #[test]
    fn rational_function_reduction() {
        // (λ^2 - 1)/(λ-1)^3 reduces to (λ+1)/(λ-1)^2
        let f = LambdaRationalFunction::new(vec![BigInt::from(-1), BigInt::zero(), BigInt::one()], 3);
        assert_eq!(f.pole_order(), 2);
        assert_eq!(f.to_string(), "(l + 1) / (l-1)^2");
        let g = LambdaRationalFunction::new(vec![BigInt::from(-1), BigInt::one()], 1);
        assert_eq!(g.to_string(), "1");
        let z = f.add(&f.scale(&BigInt::from(-1)));
        assert!(z.is_zero());
        assert_eq!(z.pole_order(), 0);
    }

    /// Descent counts over all permutations of `0..m`.
    fn eulerian_brute(m: usize) -> Vec<u64> {
        fn permute(prefix: &mut Vec<usize>, left: &mut Vec<usize>, counts: &mut Vec<u64>) {
            if left.is_empty() {
                let descents = prefix.windows(2).filter(|w| w[0] > w[1]).count();
                counts[descents] += 1;
                return;
            }
            for i in 0..left.len() {
                let v = left.remove(i);
                prefix.push(v);
                permute(prefix, left, counts);
                prefix.pop();
                left.insert(i, v);
            }
        }
        let mut counts = vec![0; m + 1];
        permute(&mut Vec::new(), &mut (0..m).collect(), &mut counts);
        counts
    }

    #[test]
    fn eulerian_examples_and_brute_force() {
        assert_eq!(eulerian(0, 0), BigInt::one());
        assert_eq!(eulerian(2, 1), BigInt::one());
        assert_eq!(eulerian(3, 1), BigInt::from(4));
        assert_eq!(eulerian(3, -1), BigInt::zero());
        assert_eq!(eulerian(3, 7), BigInt::zero());
        let tri = EulerianTriangle::new(7);
        for m in 1..=7 {
            let brute = eulerian_brute(m);
            for j in 0..=m {
                assert_eq!(tri.get(m, j as i64), BigInt::from(brute[j]), "A({m},{j})");
            }
        }
    }

    #[test]
    fn eulerian_triangle_invariants() {
        let tri = EulerianTriangle::new(16);
        let mut fact = BigInt::one();
        for m in 0..=16usize {
            if m > 0 {
                fact *= BigInt::from(m);
            }
            let row = tri.row(m);
            assert_eq!(row.iter().sum::<BigInt>(), fact);
            assert_eq!(row[0], BigInt::one());
            if m >= 1 {
                assert!(row[m].is_zero());
                for j in 0..m {
                    assert_eq!(row[j], row[m - 1 - j]);
                }
            }
        }
    }

    #[test]
    fn polylog_neg_examples() {
        assert_eq!(polylog_neg(1, &ratio(1, 2)).unwrap(), int(2));
        assert_eq!(polylog_neg(2, &ratio(1, 2)).unwrap(), int(6));
        for m in 1..6 {
            assert_eq!(polylog_neg(m, &int(0)).unwrap(), int(0));
        }
        assert!(polylog_neg(0, &ratio(1, 2)).is_err());
        assert!(polylog_neg(3, &int(1)).is_err());
        // the m = 0 case: both interpolation forms give Φ(λ,0,0), not Li_0
        let l = ratio(1, 3);
        assert_eq!(polylog_neg_eulerian(0, &l).unwrap(), ratio(3, 2));
        assert_eq!(polylog_neg_apostol(0, &l).unwrap(), ratio(3, 2));
        assert_eq!(polylog_nonpositive(0, &l).unwrap(), ratio(1, 2));
    }

    #[test]
    fn zeta_neg_examples() {
        assert_eq!(zeta_neg(0), ratio(-1, 2));
        assert_eq!(zeta_neg(1), ratio(-1, 12));
        assert_eq!(zeta_neg(2), int(0));
        assert_eq!(zeta_neg(3), ratio(1, 120));
    }
}
