//! Samples base points on and off the divisor and counts orbit classes in
//! the fibers.

use spherinv::divisors::aside_groundtruth;
use spherinv::fibers::{diagnose, fiber_divisor_consistency, sample_point};
use spherinv::liealg::CaseTag;

fn main() -> Result<(), spherinv::Error> {
    let case = CaseTag::FriedbergJacquet(2);
    let divisor = aside_groundtruth(case)?;
    for (seed, on_divisor) in [(0, false), (1, true), (2, true)] {
        let point = sample_point(case, on_divisor, seed)?;
        let d = diagnose(&point, &divisor)?;
        let coords: Vec<String> = point.coords.iter().map(ToString::to_string).collect();
        println!(
            "{case} at ({}): u_i v_i = {:?}, {} orbit(s), divisor value {}",
            coords.join(", "),
            d.uv_products.iter().map(ToString::to_string).collect::<Vec<_>>(),
            d.orbit_count,
            d.divisor_value
        );
    }

    for case in CaseTag::grid() {
        let r = fiber_divisor_consistency(case, 0, 40)?;
        println!("{case:<24} passed={} histogram={:?} violations={}", r.passed(), r.orbit_histogram, r.violations);
    }
    Ok(())
}
