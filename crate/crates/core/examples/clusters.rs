//! Clusters of a consecutive pattern and their refined generating
//! polynomials, enumerated and from the closed form.

use permcluster::formulas::{cluster_polys, ClusterSource};
use permcluster::pattern::{cluster_candidates, clusters};
use permcluster::{ClusterStat, PatternSet, Permutation};

fn main() -> permcluster::Result<()> {
    let set = PatternSet::parse("1324")?;
    println!("clusters of {{1324}} of length 7:");
    cluster_candidates(7, &set, &mut |w| {
        let p = Permutation::new(w.to_vec()).expect("candidate");
        for c in clusters(&p, &set) {
            let marks: Vec<String> = c.marks.iter().map(|m| m.start.to_string()).collect();
            println!("  {}  marked at {}", c.base, marks.join(","));
        }
    });

    let inc = PatternSet::parse("123")?;
    let brute = cluster_polys(&inc, ClusterStat::Ides, 7, ClusterSource::BruteForce)?;
    let closed = cluster_polys(&inc, ClusterStat::Ides, 7, ClusterSource::ClosedForm)?;
    for (k, (b, c)) in brute.iter().zip(&closed).enumerate() {
        println!("R_{k}(s,t) = {b}{}", if b == c { "" } else { "  MISMATCH" });
    }
    Ok(())
}
