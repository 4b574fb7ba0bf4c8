//! Runs the divisor comparison over every case of the verification grid.

use std::time::Instant;

use spherinv::divisors::verify_matching;
use spherinv::liealg::CaseTag;

fn main() -> Result<(), spherinv::Error> {
    for case in CaseTag::grid() {
        let start = Instant::now();
        let (verdict, report) = verify_matching(case)?;
        println!("{case:<24} {:?} unit={:?} ({:.2?})", verdict.status, verdict.unit.map(|u| u.to_string()), start.elapsed());
        for c in &verdict.corrections {
            println!("    {}: {}", c.target, c.description);
        }
        if let Some(r) = &report.aside_closed_resolution {
            println!("    aside closed form: {:?}", r.matched_variant);
        }
        if let Some(r) = &report.bside_closed_resolution {
            println!("    bside closed form: {:?}", r.matched_variant);
        }
    }
    Ok(())
}
