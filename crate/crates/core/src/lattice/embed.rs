//! Embedding properties of subgroups: modularity in the lattice,
//! (S-)quasinormality, subnormality.

use super::{SubgroupId, SubgroupLattice};
use crate::group;

impl SubgroupLattice {
    /// Whether `m` is a modular element of the subgroup lattice of the whole group.
    pub fn is_modular(&self, m: SubgroupId) -> bool {
        self.modular_flags()[m]
    }

    /// Modularity of `m` in the lattice of the subgroup `within` (`m ≤ within`).
    ///
    /// Both defining identities are evaluated literally over every pair of
    /// subgroups of `within`:
    /// `⟨X, M∩Z⟩ = ⟨X, M⟩∩Z` for `X ≤ Z`, and
    /// `⟨M, Y∩Z⟩ = ⟨M, Y⟩∩Z` for `M ≤ Z`.
    pub fn is_modular_in(&self, m: SubgroupId, within: SubgroupId) -> bool {
        debug_assert!(self.leq(m, within));
        let sub = self.below(within);
        for x in sub.iter() {
            let xm = self.join(x, m);
            for z in self.above(x).intersection(sub).iter() {
                if self.join(x, self.meet(m, z)) != self.meet(xm, z) {
                    return false;
                }
            }
        }
        let zs = self.above(m).intersection(sub);
        for y in sub.iter() {
            let my = self.join(m, y);
            for z in zs.iter() {
                if self.join(m, self.meet(y, z)) != self.meet(my, z) {
                    return false;
                }
            }
        }
        true
    }

    pub fn modular_flags(&self) -> &[bool] {
        self.modular
            .get_or_init(|| (0..self.len()).map(|m| self.is_modular_in(m, self.top())).collect())
    }

    /// `AB = BA`, decided by `|⟨A, B⟩|·|A ∩ B| = |A|·|B|`: the product set has
    /// `|A||B|/|A∩B|` elements and lies inside the join, with equality exactly
    /// when it is a subgroup.
    pub fn permutes(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.order_of(self.join(a, b)) * self.order_of(self.meet(a, b))
            == self.order_of(a) * self.order_of(b)
    }

    /// Permutes with every subgroup.
    pub fn is_quasinormal(&self, h: SubgroupId) -> bool {
        (0..self.len()).all(|p| self.permutes(h, p))
    }

    /// Permutes with every Sylow subgroup.
    pub fn is_s_quasinormal(&self, h: SubgroupId) -> bool {
        self.s_quasinormal_flags()[h]
    }

    /// S-quasinormality of `h` in the subgroup `within` (`h ≤ within`).
    pub fn is_s_quasinormal_in(&self, h: SubgroupId, within: SubgroupId) -> bool {
        self.sylow_subgroups_of(within)
            .into_iter()
            .all(|p| self.permutes(h, p))
    }

    pub fn s_quasinormal_flags(&self) -> &[bool] {
        self.s_quasinormal.get_or_init(|| {
            let sylows = self.sylow_subgroups_of(self.top());
            (0..self.len())
                .map(|h| sylows.iter().all(|&p| self.permutes(h, p)))
                .collect()
        })
    }

    pub fn is_modular_or_s_quasinormal(&self, h: SubgroupId) -> bool {
        self.is_modular(h) || self.is_s_quasinormal(h)
    }

    /// Descends `G ≥ H^G ≥ H^(H^G) ≥ …` until it stabilizes; subnormal iff it
    /// stops at `H`.
    pub fn is_subnormal(&self, h: SubgroupId) -> bool {
        let g = self.group();
        let target = self.subgroup(h);
        let mut k = g.whole();
        loop {
            let next = group::normal_closure_in(g, &k, target);
            if next == k {
                return k == *target;
            }
            k = next;
        }
    }

    /// `H_G`
    pub fn core_of(&self, h: SubgroupId) -> SubgroupId {
        self.index_of(&group::core(self.group(), self.subgroup(h)))
            .expect("core is a subgroup")
    }

    /// `H^G`
    pub fn normal_closure_of(&self, h: SubgroupId) -> SubgroupId {
        self.index_of(&group::normal_closure(self.group(), self.subgroup(h)))
            .expect("normal closure is a subgroup")
    }

    /// Whether `h` is normal in the subgroup `within`.
    pub fn is_normal_in(&self, h: SubgroupId, within: SubgroupId) -> bool {
        group::is_normalized_by(self.group(), self.subgroup(h), self.subgroup(within))
    }
}
