// Bernoulli numbers, Apostol-Bernoulli rational functions, Eulerian numbers
// and the negative-order polylogarithm computed two ways.

use lyndon_dirichlet::bernoulli::{
    apostol_bernoulli_poly_at, apostol_bernoulli_rf, bernoulli_number, eulerian, polylog_neg, polylog_nonpositive,
    zeta_neg,
};
use lyndon_dirichlet::rational::{int, ratio, render};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let list: Vec<String> = (0..=10).map(|m| render(&bernoulli_number(m))).collect();
    println!("B_0..B_10: {}", list.join(", "));
    for m in 0..=4 {
        println!("apostol B_{m}(l) = {}", apostol_bernoulli_rf(m));
    }
    println!("B_2(1; 1/2) = {}", apostol_bernoulli_poly_at(2, &int(1), &ratio(1, 2))?);
    println!("A(3,1) = {}", eulerian(3, 1));

    // Eulerian and Apostol forms must agree; polylog_neg checks that internally
    println!("Li_-2(1/2) = {}", polylog_neg(2, &ratio(1, 2))?);
    println!("Li_0(1/3) = {}", polylog_nonpositive(0, &ratio(1, 3))?);
    println!("zeta(0) = {}, zeta(-1) = {}", zeta_neg(0), zeta_neg(1));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
