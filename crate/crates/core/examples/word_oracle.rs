//! Mixed moments of free words and the word-level version of the
//! characterization, checked by expanding (X+Y)^n letter by letter.

use freeprob::characterization::{validate_config, word_level_check, CheckerConfig};
use freeprob::cumulants::{word_moment, FreeCumulantSeq, LetterCumulants, Word};
use freeprob::rational::{format, int, ratio};

fn main() -> freeprob::Result<()> {
    let r = FreeCumulantSeq::new(vec![int(1); 4]);
    let data = LetterCumulants::new(r.clone(), r);
    for w in ["X.Y", "X.X.Y.Y", "X.Y.X.Y"] {
        let w: Word = w.parse()?;
        println!("phi({w}) = {}", format(&word_moment(&w, &data)?));
    }

    let v = validate_config(&CheckerConfig::new(ratio(1, 2), int(3), int(1), 12))?;
    let report = word_level_check(&v, 6)?;
    for c in &report.checks {
        println!(
            "{:<5} n={} words={:<3} {} = {} {}",
            c.side,
            c.n,
            c.words,
            format(&c.lhs),
            format(&c.rhs),
            if c.pass { "ok" } else { "FAIL" }
        );
    }
    assert!(report.all_pass());
    Ok(())
}
