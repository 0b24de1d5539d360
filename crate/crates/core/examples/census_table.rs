//! Prints the modularity census of catalog groups: for each depth n, how many
//! n-maximal subgroups are modular, S-quasinormal, or neither.

use modlattice::lattice::SubgroupLattice;
use modlattice::{catalog, verify};

fn main() -> modlattice::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names = if args.is_empty() {
        vec!["S3".to_string(), "A4".into(), "A4xC2".into(), "S4".into()]
    } else {
        args
    };
    for name in names {
        let lat = SubgroupLattice::enumerate(&catalog::construct(&name)?);
        let c = verify::census(&lat);
        println!("{name}: min n all modular {:?}, all modular or S-quasinormal {:?}",
            c.min_n_all_modular, c.min_n_all_modular_or_s_quasinormal);
        println!("   n  count  modular  sqn  neither");
        for r in &c.rows {
            println!("{:>4} {:>6} {:>8} {:>4} {:>8}", r.n, r.count, r.modular, r.s_quasinormal, r.neither);
        }
    }
    Ok(())
}
