//! Moment <-> free cumulant conversion, the non-crossing oracle, and
//! inverse cumulants of a free Poisson variable.

use freeprob::cumulants::{
    cumulants_to_moments, inverse_cumulants_recursion, inverse_cumulants_series,
    moments_to_cumulants, moments_via_nc_oracle, FreeCumulantSeq, MomentSeq,
};
use freeprob::rational::{format, int};

fn show(label: &str, xs: &[freeprob::Rat]) {
    let s: Vec<String> = xs.iter().map(format).collect();
    println!("{label:<22} [{}]", s.join(", "));
}

fn main() -> freeprob::Result<()> {
    // Standard semicircle: only R_2 = 1, even moments are Catalan numbers.
    let semi = FreeCumulantSeq::from_ints(&[0, 1, 0, 0, 0, 0, 0, 0]);
    let m = cumulants_to_moments(&semi, 8)?;
    show("semicircle moments", m.moments());
    assert_eq!(moments_to_cumulants(&m), semi);
    for n in 1..=8 {
        assert_eq!(m.get(n), Some(moments_via_nc_oracle(&semi, n)?));
    }

    // Free Poisson with rate 2 and jump 1: every cumulant is 2, phi(X^{-1}) = 1.
    let fp = FreeCumulantSeq::new(vec![int(2); 8]);
    show(
        "free Poisson moments",
        cumulants_to_moments(&fp, 8)?.moments(),
    );
    let rec = inverse_cumulants_recursion(&fp, &int(1));
    let ser = inverse_cumulants_series(&fp.to_rtransform_series(), &int(1));
    show("inverse cumulants", rec.values());
    assert_eq!(rec, ser);

    let custom = MomentSeq::from_ints(&[1, 2, 5, 14]);
    show(
        "cumulants of 1,2,5,14",
        moments_to_cumulants(&custom).values(),
    );
    Ok(())
}
