// A small-grid audit assembled in memory and summarized.

use lyndon_dirichlet::cli::build_audit;
use lyndon_dirichlet::series::GridSize;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = build_audit(GridSize::Small, 7, "1970-01-01T00:00:00Z".to_string())?;
    for s in &report.identity_sections {
        println!("{:<6} pass {:>3}  fail {:>3}  inconclusive {:>3}", s.identity_id, s.pass, s.fail, s.inconclusive);
    }
    for (family, tally) in &report.special_value_summary {
        println!("{}: {} of {} special points agree", family.as_str(), tally.agree, tally.points);
    }
    let json = serde_json::to_string(&report)?;
    println!("report size: {} bytes", json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
