//! Reproduces every golden table with each closed form and diffs it.

use permcluster::compute::Method;
use permcluster::tables::{reproduce, reproduce_with, TableSpec};

fn main() -> permcluster::Result<()> {
    for spec in TableSpec::all() {
        println!("table {}: {}", spec.id, spec.caption());
        println!("  {}", reproduce(spec.id, Method::Closed)?);
        for f in spec.closed_forms() {
            println!("  {}", reproduce_with(spec.id, &f)?);
        }
    }
    Ok(())
}
