//! The cluster identity in the truncated Malvenuto-Reutenauer algebra,
//! checked degree by degree.

use permcluster::fqsym::{f_bar, g_product, r_bar, verify_cluster_identity, FqsymElement};
use permcluster::{PatternSet, Permutation};

fn main() -> permcluster::Result<()> {
    let g1 = FqsymElement::basis(Permutation::identity(1), 3);
    print!("G[1] * G[1] =\n{}", g_product(&g1, &g1));

    let set = PatternSet::parse("123")?;
    print!("R(s-1) for {{123}} to degree 4:\n{}", r_bar(&set, 4, true));
    println!(
        "F(s) for {{123}} has {} terms to degree 5",
        f_bar(&set, 5).len()
    );

    for spec in ["21", "123", "132,231"] {
        let report = verify_cluster_identity(&PatternSet::parse(spec)?, 6)?;
        let checked: usize = report.degrees.iter().map(|d| d.checked).sum();
        println!(
            "{{{spec}}}: {} on {checked} basis elements",
            if report.passed() { "holds" } else { "fails" }
        );
    }
    Ok(())
}
