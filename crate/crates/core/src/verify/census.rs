use serde::{Deserialize, Serialize};

use crate::lattice::SubgroupLattice;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    /// Number of `n`-maximal subgroups.
    pub count: usize,
    pub modular: usize,
    pub s_quasinormal: usize,
    /// Neither modular nor S-quasinormal.
    pub neither: usize,
}

/// How the `n`-maximal subgroups sit in the group, for each `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularityCensus {
    pub group: String,
    pub rows: Vec<CensusRow>,
    /// Least `n ≥ 1` whose `n`-maximal subgroups are all modular.
    pub min_n_all_modular: Option<usize>,
    /// Least `n ≥ 1` whose `n`-maximal subgroups are all modular or S-quasinormal.
    pub min_n_all_modular_or_s_quasinormal: Option<usize>,
}

/// Rows for `n = 1..=max(longest chain, 1)`.
pub fn census(lat: &SubgroupLattice) -> ModularityCensus {
    let rows: Vec<CensusRow> = (1..=lat.longest_chain().max(1))
        .map(|n| {
            let set = lat.n_maximal_set(n).expect("n ≥ 1");
            CensusRow {
                n,
                count: set.len(),
                modular: set.iter().filter(|&&h| lat.is_modular(h)).count(),
                s_quasinormal: set.iter().filter(|&&h| lat.is_s_quasinormal(h)).count(),
                neither: set
                    .iter()
                    .filter(|&&h| !lat.is_modular_or_s_quasinormal(h))
                    .count(),
            }
        })
        .collect();
    let min_n_all_modular = rows.iter().find(|r| r.modular == r.count).map(|r| r.n);
    let min_n_all_modular_or_s_quasinormal =
        rows.iter().find(|r| r.neither == 0).map(|r| r.n);
    ModularityCensus {
        group: lat.group().name().to_string(),
        rows,
        min_n_all_modular,
        min_n_all_modular_or_s_quasinormal,
    }
}
