//! ides and (ides, imaj) over permutations avoiding 12...m, by brute force and
//! from the closed forms, with occurrences tracked by s.

use permcluster::compute::{compute, Method};
use permcluster::formulas::SParam;
use permcluster::{Family, PatternSet};

fn main() -> permcluster::Result<()> {
    let set = PatternSet::parse("123")?;
    let brute = compute(
        &set,
        Family::AIdes,
        6,
        SParam::Symbolic,
        Method::Brute,
        false,
    )?;
    let closed = compute(
        &set,
        Family::AIdes,
        6,
        SParam::Symbolic,
        Method::Closed,
        false,
    )?;
    for (b, c) in brute.iter().zip(&closed) {
        println!(
            "n={}: {}{}",
            b.n,
            b.poly,
            if b == c { "" } else { "  MISMATCH" }
        );
    }
    let imaj = compute(
        &set,
        Family::AIdesImaj,
        5,
        SParam::Zero,
        Method::Closed,
        false,
    )?;
    for d in imaj {
        println!("(ides, imaj) n={}: {}", d.n, d.poly);
    }
    Ok(())
}
