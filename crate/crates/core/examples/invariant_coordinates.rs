//! Builds points of each case, symbolic and random, and computes their
//! invariant coordinates.

use exactpoly::{MultiPoly, VarContext};
use spherinv::centralizer::random_hperp;
use spherinv::liealg::sample::seeded_rng;
use spherinv::liealg::{git_coords, CaseTag, HPerpPoint};

fn main() -> Result<(), spherinv::Error> {
    let ctx = VarContext::new(["a1", "a2", "u1", "u2", "v1", "v2", "d"])?;
    let var = |s: &str| MultiPoly::var(&ctx, s);
    let alpha = [var("a1")?, var("a2")?];
    let u = [var("u1")?, var("u2")?];
    let v = [var("v1")?, var("v2")?];
    let normal = HPerpPoint::rankin_selberg_normal(&alpha, &u, &v, &var("d")?)?;
    let coords = git_coords(&normal)?;
    println!("rankin-selberg normal form, x2 =\n{}", normal.components[1]);
    for (name, value) in CaseTag::RankinSelberg(2).coord_names().iter().zip(coords.values()) {
        println!("  {name} = {value}");
    }

    let mut rng = seeded_rng(7);
    for case in CaseTag::grid() {
        let point = random_hperp(case, &mut rng, 5);
        let values: Vec<String> = git_coords(&point)?.values().iter().map(ToString::to_string).collect();
        println!("{case:<24} [{}]", values.join(", "));
    }
    Ok(())
}
