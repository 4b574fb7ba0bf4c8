//! Exact multivariate polynomials and polynomial matrices.

use exactpoly::{MultiPoly, PolyMatrix, VarContext};

fn main() -> Result<(), exactpoly::PolyError> {
    let ctx = VarContext::new(["x", "y", "z"])?;
    let p = MultiPoly::parse(&ctx, "x^2 + 2*x*y + y^2")?;
    let q = MultiPoly::parse(&ctx, "x + y")?;
    println!("p = {p}");
    println!("p / (x + y) = {}", p.exact_div(&q).expect("divides"));
    println!("sqrt(p) = {}", p.sqrt().expect("perfect square"));

    let m = PolyMatrix::new(
        &ctx,
        3,
        3,
        ["x", "y", "0", "-y", "z", "1", "0", "-1", "x - z"]
            .iter()
            .map(|s| MultiPoly::parse(&ctx, s))
            .collect::<Result<_, _>>()?,
    )?;
    println!("M =\n{m}");
    println!("det M = {}", m.det()?);
    println!("tr M = {}", m.trace()?);
    println!("det M^2 = {}", m.try_mul(&m)?.det()?);
    Ok(())
}
