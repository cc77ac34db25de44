// Values of ζ₁ and ζ₂ at non-positive integers: the continuation track
// next to the printed Bernoulli closed forms.

use lyndon_dirichlet::closed_forms::{
    parity_additivity, zeta1_special, zeta1_special_eulerian, zeta2_special, Family, SpecialValuePoint,
};
use lyndon_dirichlet::rational::ratio;
use lyndon_dirichlet::Parity;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = ratio(1, 2);
    for parity in Parity::ALL {
        let r = zeta1_special(&SpecialValuePoint::new(1, 1, x.clone(), parity)?)?;
        println!(
            "zeta1_{parity}(1/2:1,-1): continuation {}, printed {}, agrees {}",
            r.continuation_value, r.paper_value, r.agrees
        );
    }
    println!("Eulerian form at m=1: {}", zeta1_special_eulerian(1, 1, &x)?);

    let r = zeta2_special(&SpecialValuePoint::new(1, 1, x.clone(), Parity::All)?)?;
    println!("zeta2(1/2:1,-1): continuation {}, printed {}", r.continuation_value, r.paper_value);
    let r = zeta2_special(&SpecialValuePoint::new(2, 1, ratio(1, 3), Parity::All)?)?;
    println!("zeta2(1/3:1,-2): continuation {}", r.continuation_value);

    for family in [Family::Zeta1, Family::Zeta2] {
        let holds = parity_additivity(family, 1, 1, &x, true)?;
        println!("{} printed odd + even = all at m=1: {holds:?}", family.as_str());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
