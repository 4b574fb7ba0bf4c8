//! Monomial symmetric functions, elementary expansions and the Newton-type
//! identity with its multiplicity factors.

use spherinv::symfun::{elem_expand, indexed_names, monomial_sym, newton_report, Family, Partition};

fn main() -> Result<(), spherinv::Error> {
    let family = Family::new("x", 3);
    let lambda = Partition::new(vec![2, 1])?;
    let m = monomial_sym(&lambda, &family)?;
    println!("m_{lambda}(x1, x2, x3) = {}", m.poly());
    println!("  in elementary functions: {}", elem_expand(&m, &indexed_names("e", 3))?);

    for (mu, n) in [(vec![], 2), (vec![1], 3), (vec![2, 2], 3)] {
        let mu = Partition::new(mu)?;
        let report = newton_report(&mu, n)?;
        println!("\nmu = {mu}, n = {n}: passed = {}", report.passed());
        println!("  literal identity holds: {}", report.literal_holds);
        for check in &report.nontrivial_factors {
            println!("  k = {}: factor {} (observed {:?})", check.k, check.predicted_factor, check.observed_factor);
        }
    }
    Ok(())
}
