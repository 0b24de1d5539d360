//! Writes the subgroup lattice of a catalog group as Graphviz DOT.
//!
//!     cargo run --example lattice_dot -- S4 > s4.dot && dot -Tsvg s4.dot > s4.svg

use modlattice::lattice::to_dot;
use modlattice::{catalog, SubgroupLattice};

fn main() -> modlattice::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S3".to_string());
    let lat = SubgroupLattice::enumerate(&catalog::construct(&name)?);
    eprintln!("{name}: {} subgroups, longest maximal chain {}", lat.len(), lat.longest_chain());
    print!("{}", to_dot(&lat));
    Ok(())
}
