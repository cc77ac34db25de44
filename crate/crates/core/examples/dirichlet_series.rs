// Numeric ζ, Li_s, ζ₁, ζ₂ and the odd Möbius/totient sums, each with its
// certified truncation bound.

use lyndon_dirichlet::series::{
    mu_phi_odd_num, polylog_num, riemann_zeta_num, zeta1_num, zeta2_num, ArithmeticWeight, ComplexValue,
};
use lyndon_dirichlet::Parity;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s = ComplexValue::real(4.0)?;
    let (zeta, t) = riemann_zeta_num(s, 1000)?;
    println!("zeta(4) = {zeta} ± {:.1e}", t.tail_bound);
    let (li, t) = polylog_num(s, ComplexValue::real(0.4)?, 500)?;
    println!("Li_4(0.4) = {li} ± {:.1e}", t.tail_bound);

    let (z1, t) = zeta1_num(2, 0.2, s, 500, Parity::All)?;
    println!("zeta1(0.2:2,4) = {z1} ± {:.1e}", t.tail_bound);
    println!("zeta(4) zeta1 - Li_4(0.4) = {:.2e}", zeta.re * z1.re - li.re);
    let (z2, t) = zeta2_num(2, 0.2, s, 5000, Parity::Odd)?;
    println!("zeta2_odd(0.2:2,4) = {z2} ± {:.1e}", t.tail_bound);

    let s3 = ComplexValue::real(3.0)?;
    let (v, t) = mu_phi_odd_num(ArithmeticWeight::Totient, s3, 100_000)?;
    println!("sum over odd n of phi(n)/n^3 = {v} ± {:.1e}", t.tail_bound);

    let complex = ComplexValue::parse("3+2i")?;
    let (v, _) = zeta1_num(3, 0.1, complex, 500, Parity::Even)?;
    println!("zeta1_even(0.1:3,3+2i) = {v}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
