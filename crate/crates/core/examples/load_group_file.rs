//! Loads a group from a JSON file (or builds one inline), then lists its
//! subgroups with their embedding properties.

use modlattice::io::{self, GroupSpec};
use modlattice::group::DEFAULT_MAX_ORDER;
use modlattice::SubgroupLattice;

const D10: &str = r#"{
    "name": "D10",
    "kind": "permutation",
    "degree": 5,
    "generators": [[[0, 1, 2, 3, 4]], [[1, 4], [2, 3]]]
}"#;

fn main() -> modlattice::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(source) => io::resolve(&source, None)?,
        None => GroupSpec::parse(D10)?.build(DEFAULT_MAX_ORDER)?,
    };
    let lat = SubgroupLattice::enumerate(&g);
    println!("{} has order {} and {} subgroups", g.name(), g.order(), lat.len());
    for h in 0..lat.len() {
        println!(
            "  #{h:<3} order {:<4} normal {:<5} modular {:<5} s-quasinormal {}",
            lat.order_of(h),
            lat.is_normal(h),
            lat.is_modular(h),
            lat.is_s_quasinormal(h)
        );
    }
    Ok(())
}
