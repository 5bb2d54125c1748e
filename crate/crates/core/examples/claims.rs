//! Counting identities: ipk = 0 over S_n(12...m) against Fibonacci numbers of
//! order m-1, ilpk = 1 over S_n(321), and ides = 1 over S_n(123).

use permcluster::formulas::{claim_ilpk_rows, claim_ipk_rows, prop_123_rows};

fn main() -> permcluster::Result<()> {
    for m in 3..=5 {
        for r in claim_ipk_rows(m, 9)? {
            println!(
                "m={m} n={}: {} vs {} {}",
                r.n,
                r.counted,
                r.predicted,
                if r.holds() { "ok" } else { "FAIL" }
            );
        }
    }
    for r in claim_ilpk_rows(9)? {
        println!(
            "321 n={}: {} vs {} {}",
            r.n,
            r.counted,
            r.predicted,
            if r.holds() { "ok" } else { "FAIL" }
        );
    }
    for r in prop_123_rows(9)? {
        let w: Vec<String> = r.witnesses.iter().map(|p| p.to_string()).collect();
        println!(
            "n={}: {} (expected {}) {}",
            r.n,
            r.count,
            r.expected,
            w.join(" ")
        );
    }
    Ok(())
}
