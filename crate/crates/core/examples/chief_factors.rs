//! Chief factors of a catalog group with their automizer orders; these decide
//! supersolubility (all cyclic) and strong supersolubility (square-free
//! automizers).

use modlattice::classify::Structure;
use modlattice::{catalog, SubgroupLattice};

fn main() -> modlattice::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "hol_C13".to_string());
    let lat = SubgroupLattice::enumerate(&catalog::construct(&name)?);
    let s = Structure::of_group(&lat);
    println!("{name}: {} normal subgroups", s.normal_subgroups().len());
    for f in s.chief_factors() {
        println!(
            "  |{}| / |{}|: order {:<3} automizer {:<3} cyclic {:<5} frattini {}",
            lat.order_of(f.upper),
            lat.order_of(f.lower),
            f.factor_order,
            f.automizer_order,
            f.is_cyclic,
            f.is_frattini
        );
    }
    let hc = s.hypercyclic_center();
    println!("  hypercyclic center has order {}", lat.order_of(hc));
    Ok(())
}
