//! Replay the regression characterization of the free Poisson law in exact
//! arithmetic, then show that a perturbed R-transform is caught.

use freeprob::characterization::{
    free_poisson_rtransform, params_from_config, perturb_cumulant, validate_config,
    verify_characterization, verify_with_rtransform, CheckerConfig,
};
use freeprob::rational::{format, int, ratio};

fn main() -> freeprob::Result<()> {
    let cfg = CheckerConfig::new(ratio(3, 5), int(6), ratio(13, 2), 12);
    let v = validate_config(&cfg)?;
    let (px, py) = params_from_config(&v);
    println!(
        "lambda = {}, alpha = {}; X ~ nu({}, {}), Y ~ nu({}, {})",
        format(v.lambda()),
        format(v.alpha()),
        format(&px.lambda),
        format(&px.alpha),
        format(&py.lambda),
        format(&py.alpha)
    );

    let report = verify_characterization(&v);
    for id in &report.identities {
        println!("{:<40} {}", id.name, if id.pass { "ok" } else { "FAIL" });
    }
    assert!(report.all_pass());

    let bent = perturb_cumulant(&free_poisson_rtransform(&px, 12), 2, &ratio(1, 1000));
    let report = verify_with_rtransform(&v, &bent)?;
    let bad = report.first_failure().expect("perturbation is detected");
    println!(
        "perturbed R_2: {} fails at degree {:?}",
        bad.name, bad.first_bad_degree
    );
    Ok(())
}
