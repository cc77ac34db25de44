//! Lyndon words and necklaces: the counting formulas, their polynomial
//! deformations in `x`, and combinatorial oracles that count by enumeration.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numth;
use crate::rational::ExactRational;

/// Default ceiling on `k^n` for the enumeration oracles.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// A word over the alphabet `0..alphabet_size`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u32>,
    alphabet_size: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet_size: u32) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::Zero { what: "alphabet size" });
        }
        if letters.is_empty() {
            return Err(Error::domain("a word has length >= 1"));
        }
        if let Some(&bad) = letters.iter().find(|&&c| c >= alphabet_size) {
            return Err(Error::domain(format!("letter {bad} is outside 0..{alphabet_size}")));
        }
        Ok(Word { letters, alphabet_size })
    }

    /// Parses a digit string such as `"001011"` (alphabet size <= 10) or a
    /// comma-separated list such as `"0,11,3"`.
    pub fn parse(text: &str, alphabet_size: u32) -> Result<Self> {
        let letters: Option<Vec<u32>> = if text.contains(',') {
            text.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            text.chars().map(|c| c.to_digit(10)).collect()
        };
        let letters = letters.ok_or_else(|| Error::parse("word", text))?;
        Word::new(letters, alphabet_size)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet_size <= 10 {
            for c in &self.letters {
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

fn check_kn(k: u64, n: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::Zero { what: "k" });
    }
    if n == 0 {
        return Err(Error::Zero { what: "n" });
    }
    Ok(())
}

/// `Σ_{d|n} weight(n/d) k^d`, exactly.
fn weighted_power_sum(k: u64, n: u64, weight: impl Fn(u64) -> Result<i64>) -> Result<BigInt> {
    let kb = BigInt::from(k);
    let mut acc = BigInt::zero();
    for d in numth::divisors(n)? {
        let w = weight(n / d)?;
        if w != 0 {
            acc += BigInt::from(w) * num_traits::pow(kb.clone(), d as usize);
        }
    }
    Ok(acc)
}

fn exact_quotient(total: BigInt, n: u64, what: &str) -> Result<BigInt> {
    let (q, r) = total.div_rem(&BigInt::from(n));
    if !r.is_zero() {
        return Err(Error::Internal(format!("{what}: divisor sum not divisible by n = {n}")));
    }
    Ok(q)
}

/// Number of Lyndon words of length `n` over `k` letters:
/// `(1/n) Σ_{d|n} μ(n/d) k^d`.
pub fn lyndon_count(k: u64, n: u64) -> Result<BigInt> {
    check_kn(k, n)?;
    let total = weighted_power_sum(k, n, |m| Ok(numth::mobius(m)? as i64))?;
    exact_quotient(total, n, "lyndon_count")
}

/// Number of necklaces of length `n` over `k` colours:
/// `(1/n) Σ_{d|n} φ(n/d) k^d`.
pub fn necklace_count(k: u64, n: u64) -> Result<BigInt> {
    check_kn(k, n)?;
    let total = weighted_power_sum(k, n, |m| Ok(numth::totient(m)? as i64))?;
    exact_quotient(total, n, "necklace_count")
}

/// Sparse polynomial in `x` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordPolynomial {
    coefficients: BTreeMap<u32, ExactRational>,
}

impl WordPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, ExactRational)>) -> Self {
        let mut p = Self::zero();
        for (deg, c) in terms {
            p.add_term(deg, c);
        }
        p
    }

    fn add_term(&mut self, degree: u32, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coefficients.entry(degree).or_insert_with(ExactRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coefficients.remove(&degree);
        }
    }

    pub fn coefficient(&self, degree: u32) -> ExactRational {
        self.coefficients.get(&degree).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &ExactRational)> {
        self.coefficients.iter().map(|(&d, c)| (d, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coefficients.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Horner-free evaluation; only divisor degrees are present, so this is sparse.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coefficients
            .iter()
            .map(|(&d, c)| c * num_traits::pow(x.clone(), d as usize))
            .fold(ExactRational::zero(), |a, b| a + b)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .map(|(&d, c)| crate::rational::to_f64(c) * x.powi(d as i32))
            .sum()
    }

    /// Common denominator and the integer numerator coefficients over it,
    /// descending by degree.
    fn integer_form(&self) -> (BigInt, Vec<(u32, BigInt)>) {
        let den = self.coefficients.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let terms = self
            .coefficients
            .iter()
            .rev()
            .map(|(&d, c)| (d, c.numer() * (&den / c.denom())))
            .collect();
        (den, terms)
    }
}

impl std::ops::Add for &WordPolynomial {
    type Output = WordPolynomial;

    fn add(self, rhs: &WordPolynomial) -> WordPolynomial {
        let mut out = self.clone();
        for (&d, c) in &rhs.coefficients {
            out.add_term(d, c.clone());
        }
        out
    }
}

/// Renders as `(32*x^6 - 4*x^3 - 2*x^2 + x)/3`; the parentheses and the
/// denominator are dropped when the common denominator is 1.
impl fmt::Display for WordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let (den, terms) = self.integer_form();
        let mut body = String::new();
        for (i, (deg, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    body.push('-');
                }
            } else {
                body.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let monomial = match deg {
                0 => String::new(),
                1 => "x".to_string(),
                d => format!("x^{d}"),
            };
            if monomial.is_empty() {
                body.push_str(&mag.to_string());
            } else if mag.is_one() {
                body.push_str(&monomial);
            } else {
                body.push_str(&format!("{mag}*{monomial}"));
            }
        }
        if den.is_one() {
            f.write_str(&body)
        } else if terms.len() == 1 {
            write!(f, "{body}/{den}")
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

fn word_poly(k: u64, n: u64, weight: impl Fn(u64) -> Result<i64>) -> Result<WordPolynomial> {
    check_kn(k, n)?;
    let kb = BigInt::from(k);
    let mut terms = Vec::new();
    for d in numth::divisors(n)? {
        let w = weight(n / d)?;
        let c = BigRational::new(BigInt::from(w) * num_traits::pow(kb.clone(), d as usize), BigInt::from(n));
        terms.push((d as u32, c));
    }
    Ok(WordPolynomial::from_terms(terms))
}

/// `L_k(x:n) = (1/n) Σ_{d|n} μ(n/d) k^d x^d`.
pub fn lyndon_poly(k: u64, n: u64) -> Result<WordPolynomial> {
    word_poly(k, n, |m| Ok(numth::mobius(m)? as i64))
}

/// `N_k(x:n) = (1/n) Σ_{d|n} φ(n/d) k^d x^d`.
pub fn necklace_poly(k: u64, n: u64) -> Result<WordPolynomial> {
    word_poly(k, n, |m| Ok(numth::totient(m)? as i64))
}

fn check_budget(k: u64, n: u64, budget: u64) -> Result<u64> {
    check_kn(k, n)?;
    let exceeded = || Error::BudgetExceeded { k, n, budget };
    let n32 = u32::try_from(n).map_err(|_| exceeded())?;
    let total = k.checked_pow(n32).ok_or_else(exceeded)?;
    if total > budget {
        return Err(exceeded());
    }
    Ok(total)
}

fn alphabet(k: u64) -> Result<u32> {
    u32::try_from(k).map_err(|_| Error::domain(format!("alphabet size {k} does not fit in u32")))
}

/// Lyndon words of length `n` in lexicographic order, generated by Duval's
/// successor rule (extend periodically, strip trailing maximal letters,
/// increment).
pub fn enumerate_lyndon(k: u64, n: u64) -> Result<Vec<Word>> {
    enumerate_lyndon_with_budget(k, n, DEFAULT_BUDGET)
}

pub fn enumerate_lyndon_with_budget(k: u64, n: u64, budget: u64) -> Result<Vec<Word>> {
    check_budget(k, n, budget)?;
    let k32 = alphabet(k)?;
    let n = n as usize;
    let mut out = Vec::new();
    let mut w: Vec<u32> = vec![0];
    loop {
        if w.len() == n {
            out.push(Word { letters: w.clone(), alphabet_size: k32 });
        }
        let period = w.len();
        while w.len() < n {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&(k32 - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => break,
        }
    }
    Ok(out)
}

/// Second oracle: filter all `k^n` words through [`is_lyndon`]. Meant for
/// tiny sizes only.
pub fn enumerate_lyndon_by_filter(k: u64, n: u64, budget: u64) -> Result<Vec<Word>> {
    let total = check_budget(k, n, budget)?;
    let k32 = alphabet(k)?;
    let mut out = Vec::new();
    for code in 0..total {
        let w = decode(code, k, n as usize, k32);
        if is_lyndon(&w) {
            out.push(w);
        }
    }
    Ok(out)
}

fn decode(mut code: u64, k: u64, n: usize, k32: u32) -> Word {
    let mut letters = vec![0u32; n];
    for slot in letters.iter_mut().rev() {
        *slot = (code % k) as u32;
        code /= k;
    }
    Word { letters, alphabet_size: k32 }
}

/// True iff `w` is strictly smaller than each of its nontrivial rotations,
/// which also forces it to be primitive.
pub fn is_lyndon(w: &Word) -> bool {
    let s = &w.letters;
    let n = s.len();
    (1..n).all(|r| {
        let rotated = s[r..].iter().chain(&s[..r]);
        s.iter().cmp(rotated) == std::cmp::Ordering::Less
    })
}

/// Number of rotation classes of length-`n` words over `k` letters, found by
/// partitioning the `k^n` integer encodings directly.
pub fn count_necklaces_orbits(k: u64, n: u64) -> Result<u64> {
    count_necklaces_orbits_with_budget(k, n, DEFAULT_BUDGET)
}

pub fn count_necklaces_orbits_with_budget(k: u64, n: u64, budget: u64) -> Result<u64> {
    let total = check_budget(k, n, budget)?;
    let top = total / k;
    let mut seen = vec![false; total as usize];
    let mut orbits = 0;
    for start in 0..total {
        if seen[start as usize] {
            continue;
        }
        orbits += 1;
        let mut c = start;
        loop {
            seen[c as usize] = true;
            // left rotation by one letter
            c = (c % top) * k + c / top;
            if c == start {
                break;
            }
        }
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn words(list: &[Word]) -> Vec<String> {
        list.iter().map(Word::to_string).collect()
    }

    #[test]
    fn counts() {
        assert_eq!(lyndon_count(2, 1).unwrap(), BigInt::from(2));
        assert_eq!(lyndon_count(2, 2).unwrap(), BigInt::from(1));
        assert_eq!(lyndon_count(2, 6).unwrap(), BigInt::from(9));
        assert_eq!(necklace_count(2, 1).unwrap(), BigInt::from(2));
        assert_eq!(necklace_count(2, 3).unwrap(), BigInt::from(4));
        assert_eq!(necklace_count(2, 6).unwrap(), BigInt::from(14));
        assert!(lyndon_count(0, 3).is_err());
        assert!(necklace_count(2, 0).is_err());
    }

    #[test]
    fn printed_polynomials() {
        assert_eq!(lyndon_poly(1, 6).unwrap().to_string(), "(x^6 - x^3 - x^2 + x)/6");
        assert_eq!(lyndon_poly(2, 6).unwrap().to_string(), "(32*x^6 - 4*x^3 - 2*x^2 + x)/3");
        assert_eq!(necklace_poly(1, 6).unwrap().to_string(), "(x^6 + x^3 + 2*x^2 + 2*x)/6");
        assert_eq!(necklace_poly(2, 6).unwrap().to_string(), "(32*x^6 + 4*x^3 + 4*x^2 + 2*x)/3");
        for k in 1..6 {
            let want = WordPolynomial::from_terms([(1, int(k as i64))]);
            assert_eq!(lyndon_poly(k, 1).unwrap(), want);
            assert_eq!(necklace_poly(k, 1).unwrap(), want);
        }
        assert_eq!(lyndon_poly(3, 1).unwrap().to_string(), "3*x");
        assert_eq!(lyndon_poly(1, 2).unwrap().to_string(), "(x^2 - x)/2");
    }

    #[test]
    fn polynomial_has_no_constant_term() {
        for k in 1..4 {
            for n in 1..20 {
                assert!(lyndon_poly(k, n).unwrap().coefficient(0).is_zero());
                assert!(necklace_poly(k, n).unwrap().coefficient(0).is_zero());
            }
        }
    }

    #[test]
    fn polynomial_eval_and_rendering() {
        let p = WordPolynomial::from_terms([(1, ratio(1, 2)), (3, ratio(-2, 3)), (3, ratio(2, 3))]);
        assert_eq!(p.to_string(), "x/2");
        assert_eq!(p.eval(&int(4)), int(2));
        assert_eq!(WordPolynomial::zero().to_string(), "0");
        let q = WordPolynomial::from_terms([(0, int(-3)), (2, int(-1))]);
        assert_eq!(q.to_string(), "-x^2 - 3");
        assert_eq!((&p + &q).degree(), Some(2));
        assert!((q.eval_f64(0.5) + 3.25).abs() < 1e-15);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(words(&enumerate_lyndon(2, 1).unwrap()), ["0", "1"]);
        assert_eq!(words(&enumerate_lyndon(2, 3).unwrap()), ["001", "011"]);
        let six = words(&enumerate_lyndon(2, 6).unwrap());
        assert_eq!(six.len(), 9);
        assert!(six.contains(&"001011".to_string()));
        assert_eq!(words(&enumerate_lyndon(1, 1).unwrap()), ["0"]);
        assert!(enumerate_lyndon(1, 2).unwrap().is_empty());
        assert_eq!(
            enumerate_lyndon(5, 11).unwrap_err(),
            Error::BudgetExceeded { k: 5, n: 11, budget: DEFAULT_BUDGET }
        );
    }

    #[test]
    fn duval_matches_filter() {
        for k in 1..=3 {
            for n in 1..=7 {
                let a = enumerate_lyndon(k, n).unwrap();
                let b = enumerate_lyndon_by_filter(k, n, 1 << 12).unwrap();
                assert_eq!(a, b, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn lyndon_predicate() {
        let w = |s: &str| Word::parse(s, 2).unwrap();
        assert!(is_lyndon(&w("001011")));
        assert!(!is_lyndon(&w("0101")));
        assert!(!is_lyndon(&w("10")));
        assert!(is_lyndon(&w("1")));
        assert!(!is_lyndon(&w("00")));
    }

    #[test]
    fn word_validation_and_display() {
        assert!(Word::new(vec![], 2).is_err());
        assert!(Word::new(vec![2], 2).is_err());
        assert!(Word::new(vec![0], 0).is_err());
        let big = Word::new(vec![0, 11, 3], 12).unwrap();
        assert_eq!(big.to_string(), "0,11,3");
        assert_eq!(Word::parse("0,11,3", 12).unwrap(), big);
        assert!(Word::parse("0x1", 2).is_err());
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(count_necklaces_orbits(2, 6).unwrap(), 14);
        assert_eq!(count_necklaces_orbits(3, 1).unwrap(), 3);
        assert_eq!(count_necklaces_orbits(2, 4).unwrap(), 6);
        assert_eq!(count_necklaces_orbits(1, 5).unwrap(), 1);
        assert!(matches!(count_necklaces_orbits(2, 30), Err(Error::BudgetExceeded { .. })));
    }
}
