//! Cauchy coefficients, R-transforms and free convolutions.

use freeprob::cumulants::MomentSeq;
use freeprob::rational::format;
use freeprob::transforms::{
    cauchy_to_rtransform, free_add_convolve, free_mult_convolve, moments_to_cauchy,
};

fn show(label: &str, m: &MomentSeq) {
    let s: Vec<String> = m.moments().iter().map(format).collect();
    println!("{label:<28} [{}]", s.join(", "));
}

fn main() -> freeprob::Result<()> {
    let semi = MomentSeq::from_ints(&[0, 1, 0, 2, 0, 5]);
    let r = cauchy_to_rtransform(&moments_to_cauchy(&semi))?;
    println!("R-transform of semicircle    {}", r.series());

    // Semicircle boxplus semicircle is a semicircle of variance 2.
    show("semi + semi", &free_add_convolve(&semi, &semi));

    // Free Poisson(1) boxtimes free Poisson(1).
    let fp = MomentSeq::from_ints(&[1, 2, 5, 14]);
    show("fP(1) * fP(1)", &free_mult_convolve(&fp, &fp, 4)?);
    Ok(())
}
