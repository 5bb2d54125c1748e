//! A_n(t,q) / prod_{i=0}^{n} (1 - t q^i) = sum_k [k]_q^n t^k.

use permcluster::brute::euler_mahonian;
use permcluster::formulas::carlitz_rows;

fn main() -> permcluster::Result<()> {
    for n in 0..=4 {
        println!("A_{n}(t,q) = {}", euler_mahonian(n));
    }
    for (n, ok) in carlitz_rows(5, 6)? {
        println!("n={n}: {}", if ok { "holds through t^6" } else { "FAILS" });
    }
    Ok(())
}
