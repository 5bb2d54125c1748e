//! Descent and peak statistics of a permutation and of its inverse.

use permcluster::Permutation;

fn main() -> permcluster::Result<()> {
    for s in ["72163584", "85712643", "1"] {
        let p: Permutation = s.parse()?;
        let r = p.stats();
        println!("{p}  inverse {}", p.inverse());
        println!(
            "  des={} maj={} comaj={} pk={} lpk={} inv={} comp={}",
            r.des, r.maj, r.comaj, r.pk, r.lpk, r.inv, r.comp
        );
        println!(
            "  ides={} imaj={} icomaj={} ipk={} ilpk={}",
            r.ides, r.imaj, r.icomaj, r.ipk, r.ilpk
        );
    }
    Ok(())
}
