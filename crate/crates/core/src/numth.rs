//! Elementary multiplicative number theory: factorization, Möbius, totient,
//! divisors and Dirichlet convolution.

use std::ops::{AddAssign, Mul};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::ExactRational;

/// Largest accepted input for the per-number functions.
pub const MAX_INPUT: u64 = (1u64 << 63) - 1;

/// Default ceiling on sieve size.
pub const DEFAULT_SIEVE_CAP: usize = 1 << 26;

const SMALL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Prime factorization with primes strictly increasing and exponents >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactorMap {
    entries: Vec<(u64, u32)>,
}

impl FactorMap {
    pub fn entries(&self) -> &[(u64, u32)] {
        &self.entries
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().map(|&(p, _)| p)
    }

    pub fn is_square_free(&self) -> bool {
        self.entries.iter().all(|&(_, e)| e == 1)
    }

    pub fn reconstruct(&self) -> u64 {
        self.entries.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

fn check_input(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Zero { what: "n" });
    }
    if n > MAX_INPUT {
        return Err(Error::ResourceLimit(format!("{n} exceeds the input cap 2^63-1")));
    }
    Ok(())
}

/// Trial division: the table of small primes first, then candidates `6j ± 1`.
pub fn factorize(n: u64) -> Result<FactorMap> {
    check_input(n)?;
    let mut rest = n;
    let mut entries = Vec::new();
    let mut take = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            entries.push((p, e));
        }
    };
    for &p in &SMALL_PRIMES {
        if p * p > rest {
            break;
        }
        take(p, &mut rest);
    }
    let mut p = 101;
    while p * p <= rest {
        take(p, &mut rest);
        take(p + 2, &mut rest);
        p += 6;
    }
    if rest > 1 {
        entries.push((rest, 1));
    }
    Ok(FactorMap { entries })
}

pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    Ok(mobius_of(&f))
}

pub(crate) fn mobius_of(f: &FactorMap) -> i8 {
    if !f.is_square_free() {
        0
    } else if f.entries.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn totient(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.entries.iter().map(|&(p, e)| (p - 1) * p.pow(e - 1)).product())
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.entries == [(n, 1)]).unwrap_or(false)
}

/// All divisors of `n`, strictly ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut out = vec![1u64];
    for &(p, e) in &f.entries {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// `(f * g)(n) = Σ_{d|n} f(d) g(n/d)`, with failures of `f` or `g` propagated.
pub fn dirichlet_convolve<F, G>(f: F, g: G, n: u64) -> Result<ExactRational>
where
    F: Fn(u64) -> Result<ExactRational>,
    G: Fn(u64) -> Result<ExactRational>,
{
    let mut acc = ExactRational::zero();
    for d in divisors(n)? {
        acc += f(d)? * g(n / d)?;
    }
    Ok(acc)
}

/// Convolution of two tables indexed `1..len` (index 0 ignored), over every
/// `n < min(f.len(), g.len())` at once.
pub fn dirichlet_convolve_table<T>(f: &[T], g: &[T]) -> Vec<T>
where
    T: Copy + Zero + AddAssign + Mul<Output = T>,
{
    let len = f.len().min(g.len());
    let mut h = vec![T::zero(); len];
    for d in 1..len {
        let fd = f[d];
        if fd.is_zero() {
            continue;
        }
        for (j, n) in (d..len).step_by(d).enumerate() {
            h[n] += fd * g[j + 1];
        }
    }
    h
}

/// Möbius and totient tables for `1..=limit`.
#[derive(Debug, Clone)]
pub struct SieveTables {
    limit: usize,
    mu: Vec<i8>,
    phi: Vec<u64>,
}

impl SieveTables {
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// `μ(n)` for `1 <= n <= limit`.
    pub fn mu(&self, n: usize) -> i8 {
        assert!(n >= 1 && n <= self.limit, "index {n} outside 1..={}", self.limit);
        self.mu[n]
    }

    pub fn phi(&self, n: usize) -> u64 {
        assert!(n >= 1 && n <= self.limit, "index {n} outside 1..={}", self.limit);
        self.phi[n]
    }

    /// Tables with a dummy slot at index 0.
    pub fn mu_table(&self) -> &[i8] {
        &self.mu
    }

    pub fn phi_table(&self) -> &[u64] {
        &self.phi
    }
}

pub fn build_sieve(limit: usize) -> Result<SieveTables> {
    build_sieve_with_cap(limit, DEFAULT_SIEVE_CAP)
}

/// Linear sieve over smallest prime factors.
pub fn build_sieve_with_cap(limit: usize, cap: usize) -> Result<SieveTables> {
    if limit == 0 {
        return Err(Error::Zero { what: "limit" });
    }
    if limit > cap {
        return Err(Error::ResourceLimit(format!("sieve limit {limit} exceeds cap {cap}")));
    }
    let mut mu = vec![0i8; limit + 1];
    let mut phi = vec![0u64; limit + 1];
    let mut composite = vec![false; limit + 1];
    let mut primes: Vec<usize> = Vec::new();
    mu[1] = 1;
    phi[1] = 1;
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
            phi[i] = (i - 1) as u64;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > limit {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                phi[ip] = phi[i] * p as u64;
                break;
            }
            mu[ip] = -mu[i];
            phi[ip] = phi[i] * (p as u64 - 1);
        }
    }
    Ok(SieveTables { limit, mu, phi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().entries().is_empty());
        assert_eq!(factorize(12).unwrap().entries(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(97).unwrap().entries(), &[(97, 1)]);
        assert_eq!(factorize(0), Err(Error::Zero { what: "n" }));
        assert!(matches!(factorize(u64::MAX), Err(Error::ResourceLimit(_))));
        let big = 1_000_000_007u64 * 998_244_353;
        assert_eq!(factorize(big).unwrap().entries(), &[(998_244_353, 1), (1_000_000_007, 1)]);
    }

    #[test]
    fn mobius_and_totient_examples() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert!(mobius(0).is_err());
        for (n, want) in [(1, 1), (6, 2), (8, 4)] {
            assert_eq!(totient(n).unwrap(), want);
            let brute = (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64;
            assert_eq!(brute, want);
        }
        assert!(totient(0).is_err());
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(6).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn convolution_examples() {
        let mu = |d| Ok(int(mobius(d)? as i64));
        let one = |_| Ok(int(1));
        let phi = |d| Ok(int(totient(d)? as i64));
        assert_eq!(dirichlet_convolve(mu, one, 6).unwrap(), int(0));
        assert_eq!(dirichlet_convolve(phi, one, 6).unwrap(), int(6));
        assert_eq!(dirichlet_convolve(|_| Ok(int(3)), |_| Ok(int(5)), 1).unwrap(), int(15));
        let failing = |d: u64| if d == 3 { Err(Error::domain("boom")) } else { Ok(int(1)) };
        assert!(dirichlet_convolve(failing, one, 6).is_err());
    }

    #[test]
    fn table_convolution_matches_pointwise() {
        let f: Vec<i64> = (0..50).map(|n| n * n % 7).collect();
        let g: Vec<i64> = (0..50).map(|n| 3 - n % 5).collect();
        let h = dirichlet_convolve_table(&f, &g);
        for n in 1..50u64 {
            let want: i64 = divisors(n).unwrap().iter().map(|&d| f[d as usize] * g[(n / d) as usize]).sum();
            assert_eq!(h[n as usize], want, "n = {n}");
        }
    }

    #[test]
    fn sieve_examples() {
        let s = build_sieve(1).unwrap();
        assert_eq!((s.mu(1), s.phi(1)), (1, 1));
        let s = build_sieve(30).unwrap();
        assert_eq!((s.mu(6), s.phi(6)), (1, 2));
        assert_eq!(s.phi(30), 8);
        assert_eq!(build_sieve(0).unwrap_err(), Error::Zero { what: "limit" });
        assert!(matches!(build_sieve_with_cap(100, 10), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
