//! The two boundary cases for the depth bounds: A4 has every 3-maximal
//! subgroup modular yet is not supersoluble, and A4 x C2 has every 4-maximal
//! subgroup modular yet its strongly supersoluble residual is not a nilpotent
//! Hall subgroup.

use modlattice::verify::{check_group, Options, Selector};
use modlattice::catalog;

fn main() -> modlattice::Result<()> {
    for name in ["A4", "A4xC2"] {
        let g = catalog::construct(name)?;
        for r in check_group(&g, &Selector::Sharpness, Options::default()) {
            println!("{} {}: hypothesis {}, conclusion {}", r.group, r.theorem, r.hypothesis, r.conclusion);
            for w in &r.witnesses {
                println!("    {w}");
            }
        }
    }
    Ok(())
}
