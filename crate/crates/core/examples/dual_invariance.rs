//! Checks the B-side determinant against random points of the full dual
//! representation.

use spherinv::divisors::{bside, random_invariance_check};
use spherinv::liealg::{dual_shapes, CaseTag};

fn main() -> Result<(), spherinv::Error> {
    for case in CaseTag::grid() {
        let b = bside(case)?;
        let report = random_invariance_check(case, 3, 25)?;
        println!(
            "{case:<24} shapes {:?}: {}/{} failures{}",
            dual_shapes(case),
            report.failures,
            report.trials,
            if report.vacuous { " (trivial dual)" } else { "" }
        );
        println!("    Pf = {}", b.pfaffian);
    }
    Ok(())
}
