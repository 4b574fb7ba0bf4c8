//! Infinitesimal stabilizer dimensions and regularity of random points.

use spherinv::centralizer::{minimal_dim_estimate, random_hperp, stabilizer_dim, ActionSpec};
use spherinv::liealg::sample::seeded_rng;
use spherinv::liealg::CaseTag;

fn main() -> Result<(), spherinv::Error> {
    let mut rng = seeded_rng(1);
    for case in CaseTag::grid() {
        let spec = ActionSpec::for_case(case);
        let dims = (0..5)
            .map(|_| stabilizer_dim(&spec, &random_hperp(case, &mut rng, 9)))
            .collect::<Result<Vec<_>, _>>()?;
        println!(
            "{case:<24} dim h = {:>2}, expected minimum {}, sampled min {}, dims of 5 points {dims:?}",
            spec.basis.len(),
            spec.expected_minimal_dim,
            minimal_dim_estimate(&spec, 1, 20),
        );
    }
    Ok(())
}
