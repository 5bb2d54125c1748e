//! The cluster method for words over {a, b, c} with marked words cab and bc.

use permcluster::words::{verify_word_cluster_method, word_clusters};

fn main() -> permcluster::Result<()> {
    let b = ["cab", "bc"];
    for w in ["cabc", "bcab", "cabcab"] {
        for c in word_clusters(w, &b)? {
            let marks: Vec<String> = c
                .marks
                .iter()
                .map(|m| format!("{}@{}", m.word, m.start))
                .collect();
            println!("{}: {}", c.word, marks.join(" "));
        }
    }
    let report = verify_word_cluster_method(&['a', 'b', 'c'], &b, 7)?;
    println!(
        "identity on {} words of length <= 7: {}",
        report.words_checked,
        if report.passed() { "holds" } else { "fails" }
    );
    Ok(())
}
