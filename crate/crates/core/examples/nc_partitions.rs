//! Enumerate non-crossing partitions and check the Catalan counts.

use freeprob::partitions::{count_nc, enumerate_nc};

fn main() -> freeprob::Result<()> {
    for p in enumerate_nc(4)? {
        let blocks: Vec<String> = p
            .blocks()
            .iter()
            .map(|b| format!("{:?}", b.iter().map(|i| i + 1).collect::<Vec<_>>()))
            .collect();
        println!("{}", blocks.join(" "));
    }
    for n in 1..=12 {
        println!("NC({n:>2}) = {}", count_nc(n)?);
    }
    Ok(())
}
