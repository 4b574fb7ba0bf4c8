//! Compares the A-side divisor with the B-side Pfaffian for one case.
//!
//! `cargo run --example divisor_matching -- gross-prasad 2`

use spherinv::divisors::verify_matching;
use spherinv::liealg::CaseTag;

fn main() -> Result<(), spherinv::Error> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "rankin-selberg".into());
    let n = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let case = CaseTag::from_name(&name, n)?;

    let (verdict, report) = verify_matching(case)?;
    println!("case {case}, coordinates {:?}", report.coordinates);
    println!("A-side divisor:   {}", report.aside_groundtruth);
    println!("  chart {} with unit {}", report.aside_chart, report.aside_unit);
    println!("B-side det:       {}", report.bside_det);
    if let Some(p) = &report.bside_polarized_det {
        println!("B-side det on S+: {p}");
    }
    println!("B-side Pfaffian:  {}", report.bside_pfaffian);
    println!("verdict: {:?}, unit {:?}", verdict.status, verdict.unit.map(|u| u.to_string()));
    for c in &verdict.corrections {
        println!("  correction to {}: {}", c.target, c.description);
    }
    Ok(())
}
