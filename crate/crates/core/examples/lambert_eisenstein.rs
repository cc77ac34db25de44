// Lambert series over Lyndon counts and the Eisenstein cusp-sum relations.

use lyndon_dirichlet::lambert::{
    cusp_double_sum, cusp_sum, h_num, lambert_lyndon_check, prime_case_check, result1_check, UpperHalfPoint,
};
use lyndon_dirichlet::series::ComplexValue;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (h, t) = h_num(1, 0.1, 40)?;
    println!("H(1, 0.1) = {h} ± {:.1e}", t.tail_bound);

    println!("{}", lambert_lyndon_check(2, 0.1, None, 60)?);
    println!("{}", lambert_lyndon_check(2, 0.1, Some(0.5), 60)?);

    let p = UpperHalfPoint::new(ComplexValue::parse("i")?)?;
    let (c, _) = cusp_sum(3, &p, 60)?;
    println!("C(3) at z=i: {c}, other order: {}", cusp_double_sum(3, &p, 60)?);

    println!("{}", result1_check(6, &p, 60)?);
    let half = UpperHalfPoint::new(ComplexValue::parse("0.5i")?)?;
    println!("{}", prime_case_check(3, &half, 60)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
