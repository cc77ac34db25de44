// Lyndon and necklace counts, their x-deformed polynomials, and the two
// combinatorial oracles that back them.

use lyndon_dirichlet::rational::ratio;
use lyndon_dirichlet::words::{
    count_necklaces_orbits, enumerate_lyndon, is_lyndon, lyndon_count, lyndon_poly, necklace_count, necklace_poly,
    Word,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("L_2(x:6) = {}", lyndon_poly(2, 6)?);
    println!("N_2(x:6) = {}", necklace_poly(2, 6)?);

    let words = enumerate_lyndon(2, 6)?;
    let listed: Vec<String> = words.iter().map(ToString::to_string).collect();
    println!("Lyndon words of length 6 over {{0,1}}: {}", listed.join(" "));
    assert_eq!(lyndon_count(2, 6)?, (words.len() as u64).into());
    assert_eq!(necklace_count(2, 6)?, count_necklaces_orbits(2, 6)?.into());

    let w = Word::parse("001011", 2)?;
    println!("{w} is Lyndon: {}", is_lyndon(&w));

    let x = ratio(1, 3);
    println!("L_2(1/3:6) = {}", lyndon_poly(2, 6)?.eval(&x));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
