// The product theorems and Dirichlet factorizations checked with certified
// tolerances; T4 carries the corrected odd totient factor as an
// alternative right side.

use lyndon_dirichlet::series::{default_grid, verify_identity, GridSize, IdentityId, IdentityPoint, Verdict};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let point = IdentityPoint::dirichlet(3.0, 2, 0.2);
    println!("{}", verify_identity(IdentityId::T1, &point, 200)?);

    let t4 = verify_identity(IdentityId::T4, &point, 10_000)?;
    println!("{t4}");
    if let Some(alt) = &t4.alternative {
        println!("T4 as printed: {}; with the corrected factor: {}", t4.verdict, alt.verdict);
    }

    for id in [IdentityId::C1, IdentityId::L1, IdentityId::L3] {
        let (points, terms) = default_grid(id, GridSize::Small);
        for p in &points {
            let r = verify_identity(id, p, terms)?;
            assert_ne!(r.verdict, Verdict::Inconclusive);
            println!("{r}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
