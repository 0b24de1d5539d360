//! The three groups that separate the supersolubility classes: S3 is nearly
//! nilpotent without being nilpotent, hol(C7) is strongly supersoluble but
//! not nearly nilpotent, and hol(C13) is supersoluble but not strongly so.

use modlattice::catalog;
use modlattice::classify::Structure;
use modlattice::SubgroupLattice;

fn main() -> modlattice::Result<()> {
    for name in ["S3", "hol_C7", "hol_C13", "A4"] {
        let g = catalog::construct(name)?;
        let lat = SubgroupLattice::enumerate(&g);
        let s = Structure::of_group(&lat);
        let p = s.profile();
        println!(
            "{name:<8} |G| = {:<4} nilpotent {:<5} nearly nilpotent {:<5} strongly supersoluble {:<5} supersoluble {}",
            g.order(),
            p.nilpotent,
            p.nearly_nilpotent,
            p.strongly_supersoluble,
            p.supersoluble
        );
        let ru = lat.order_of(s.residual_u()?);
        let rus = lat.order_of(s.residual_us()?);
        println!("         supersoluble residual order {ru}, strongly supersoluble residual order {rus}");
    }
    Ok(())
}
