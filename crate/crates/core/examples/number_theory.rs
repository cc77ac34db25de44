// Factorization, Möbius and totient values, the linear sieve, and exact
// Dirichlet convolution.

use lyndon_dirichlet::numth::{build_sieve, dirichlet_convolve, divisors, factorize, mobius, totient};
use lyndon_dirichlet::rational::int;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("12 = {:?}", factorize(12)?.entries());
    println!("mu(6) = {}, mu(12) = {}", mobius(6)?, mobius(12)?);
    println!("phi(8) = {}, divisors(12) = {:?}", totient(8)?, divisors(12)?);

    let sieve = build_sieve(30)?;
    println!("sieve: mu(30) = {}, phi(30) = {}", sieve.mu(30), sieve.phi(30));

    let phi = |n: u64| Ok(int(totient(n)? as i64));
    let one = |_| Ok(int(1));
    let sum = dirichlet_convolve(phi, one, 36)?;
    println!("sum of phi(d) over d | 36 = {sum}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
