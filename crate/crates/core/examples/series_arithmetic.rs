//! Exact truncated power series: products, reciprocals and reversion.

use freeprob::rational::ratio;
use freeprob::RationalSeries;

fn main() -> freeprob::Result<()> {
    let order = 8;
    // 1/(1 - z) and its square.
    let geo = RationalSeries::geometric(&ratio(1, 1), &ratio(1, 1), order);
    println!("1/(1-z)      = {geo}");
    println!("1/(1-z)^2    = {}", geo.mul(&geo));
    println!("(1-z)        = {}", geo.reciprocal()?);

    // Catalan generating function: C(z) = 1 + z C(z)^2, so f(w) = w - w^2 reverts to z C(z).
    let f = RationalSeries::from_ints(&[0, 1, -1, 0, 0, 0, 0, 0, 0]);
    let g = f.revert()?;
    println!("revert(w-w^2) = {g}");
    assert_eq!(f.compose(&g)?, RationalSeries::identity(order));
    Ok(())
}
