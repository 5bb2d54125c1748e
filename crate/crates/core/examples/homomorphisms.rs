//! The five homomorphisms out of the truncated algebra, checked to be
//! multiplicative on all basis pairs.

use permcluster::fqsym::{apply_hom, hom_is_multiplicative_check, FqsymElement, Hom};
use permcluster::Permutation;

fn main() -> permcluster::Result<()> {
    let p: Permutation = "21".parse()?;
    for hom in Hom::ALL {
        let image = apply_hom(&FqsymElement::basis(p.clone(), 3), hom, hom.truncation(3))?;
        println!("{hom}(G[21]) = {image}");
    }
    for hom in Hom::ALL {
        let r = hom_is_multiplicative_check(hom, 5)?;
        println!(
            "{hom}: {} pairs, {}",
            r.pairs_checked,
            if r.passed() {
                "multiplicative"
            } else {
                "FAILS"
            }
        );
    }
    Ok(())
}
