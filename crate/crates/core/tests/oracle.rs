mod common;

use common::{brute_force_subgroups, lattice_members, modular_flags_z_outer};
use modlattice::{catalog, SubgroupLattice};

#[test]
fn enumeration_matches_brute_force() {
    for entry in catalog::standard_suite() {
        let g = entry.construct().unwrap();
        if g.order() > 24 {
            continue;
        }
        let lat = SubgroupLattice::enumerate(&g);
        assert_eq!(lattice_members(&lat), brute_force_subgroups(&g), "{}", entry.name);
    }
}

#[test]
fn brute_force_spot_counts() {
    for (name, count) in [("C5", 2), ("C7", 2), ("Q8", 6), ("S4", 30), ("D8", 10), ("C2xC2xC2", 16)] {
        let g = catalog::construct(name).unwrap();
        assert_eq!(brute_force_subgroups(&g).len(), count, "{name}");
    }
}

#[test]
fn modularity_loop_orders_agree() {
    for name in ["S3", "D8", "Q8", "A4", "S4", "SL23", "C3:C4", "A4xC2", "hol_C7", "S3xC5"] {
        let lat = SubgroupLattice::enumerate(&catalog::construct(name).unwrap());
        assert_eq!(modular_flags_z_outer(&lat), lat.modular_flags(), "{name}");
    }
}

#[test]
fn modular_subgroup_counts() {
    // a non-normal maximal subgroup is modular iff its index is prime: in S4
    // the three D8 (index 3) are modular, the four S3 (index 4) are not;
    // in D8 the four reflection subgroups are not modular
    for (name, count) in [("S3", 6), ("A4", 3), ("S4", 7), ("Q8", 6), ("D8", 6), ("A5", 2)] {
        let lat = SubgroupLattice::enumerate(&catalog::construct(name).unwrap());
        let modular = lat.modular_flags().iter().filter(|&&m| m).count();
        assert_eq!(modular, count, "{name}");
    }
}
