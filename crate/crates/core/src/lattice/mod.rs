//! The complete subgroup lattice of a group.
//!
//! Subgroups are enumerated by seeding with every cyclic subgroup and closing
//! under joins with cyclic subgroups, which reaches every subgroup since each
//! one is generated by its elements. All subgroups are kept explicitly (no
//! collapsing to conjugacy classes) and numbered canonically: by order, then
//! lexicographically by member list. Index 0 is the trivial subgroup and the
//! last index is the whole group.

mod dot;
mod embed;

pub use dot::to_dot;

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{self, generating_set, Element, Group, Subgroup, IDENTITY};

pub type SubgroupId = usize;

/// A maximal chain `G = M₀ > M₁ > … > Mₙ`, as lattice indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalChain(pub Vec<SubgroupId>);

impl MaximalChain {
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn end(&self) -> SubgroupId {
        *self.0.last().expect("chain starts at the group")
    }
}

pub struct SubgroupLattice {
    group: Group,
    subgroups: Vec<Subgroup>,
    generators: Vec<Vec<Element>>,
    index: HashMap<BitSet, SubgroupId>,
    above: Vec<BitSet>,
    below: Vec<BitSet>,
    maximal: Vec<Vec<SubgroupId>>,
    covered_by: Vec<Vec<SubgroupId>>,
    join: Vec<u32>,
    meet: Vec<u32>,
    depths: Vec<u64>,
    normal: Vec<bool>,
    modular: OnceLock<Vec<bool>>,
    s_quasinormal: OnceLock<Vec<bool>>,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group", &self.group.name())
            .field("subgroups", &self.subgroups.len())
            .finish()
    }
}

impl SubgroupLattice {
    pub fn enumerate(g: &Group) -> SubgroupLattice {
        let n = g.order();

        // Cyclic subgroups, each with a single generator.
        let mut found: HashMap<BitSet, Vec<Element>> = HashMap::new();
        let mut cyclic: Vec<(BitSet, Element)> = Vec::new();
        for x in g.elements() {
            let c = group::subgroup_generated(g, &[x]);
            if !found.contains_key(c.members()) {
                let gens = if x == IDENTITY { vec![] } else { vec![x] };
                found.insert(c.members().clone(), gens);
                cyclic.push((c.members().clone(), x));
            }
        }

        let mut queue: VecDeque<BitSet> = cyclic.iter().map(|(b, _)| b.clone()).collect();
        while let Some(h) = queue.pop_front() {
            let h_gens = found[&h].clone();
            for (c, x) in &cyclic {
                if c.is_subset(&h) {
                    continue;
                }
                let mut seed = h_gens.clone();
                seed.push(*x);
                let j = group::subgroup_generated(g, &seed);
                if !found.contains_key(j.members()) {
                    found.insert(j.members().clone(), seed);
                    queue.push_back(j.members().clone());
                }
            }
        }

        let mut entries: Vec<(Subgroup, Vec<Element>)> = found
            .into_iter()
            .map(|(bits, gens)| (Subgroup::from_bits(bits), gens))
            .collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let (subgroups, generators): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        debug_assert!(subgroups.last().is_some_and(|s| s.order() == n));

        Self::from_subgroups(g.clone(), subgroups, generators)
    }

    fn from_subgroups(group: Group, subgroups: Vec<Subgroup>, generators: Vec<Vec<Element>>) -> Self {
        let m = subgroups.len();
        let index: HashMap<BitSet, SubgroupId> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();

        let mut above = vec![BitSet::new(m); m];
        let mut below = vec![BitSet::new(m); m];
        for i in 0..m {
            for j in i..m {
                if subgroups[i].is_subgroup_of(&subgroups[j]) {
                    above[i].insert(j);
                    below[j].insert(i);
                }
            }
        }

        // i is maximal in j iff the interval [i, j] has exactly two members.
        let mut maximal = vec![Vec::new(); m];
        let mut covered_by = vec![Vec::new(); m];
        for j in 0..m {
            for i in below[j].iter().filter(|&i| i != j) {
                if above[i].intersection(&below[j]).count() == 2 {
                    maximal[j].push(i);
                    covered_by[i].push(j);
                }
            }
        }

        let mut join = vec![0u32; m * m];
        let mut meet = vec![0u32; m * m];
        for a in 0..m {
            for b in a..m {
                // Upper bounds are ordered by order, so the first is the least.
                let j = above[a].first_common(&above[b]).expect("the whole group is an upper bound");
                let k = index[&subgroups[a].members().intersection(subgroups[b].members())];
                join[a * m + b] = j as u32;
                join[b * m + a] = j as u32;
                meet[a * m + b] = k as u32;
                meet[b * m + a] = k as u32;
            }
        }

        // Bit d of depths[i] is set iff some maximal chain of length d ends at i.
        let mut depths = vec![0u64; m];
        if m > 0 {
            depths[m - 1] = 1;
        }
        for j in (0..m).rev() {
            for &i in &maximal[j] {
                depths[i] |= depths[j] << 1;
            }
        }

        let normal = subgroups.iter().map(|s| group::is_normal(&group, s)).collect();

        SubgroupLattice {
            group,
            subgroups,
            generators,
            index,
            above,
            below,
            maximal,
            covered_by,
            join,
            meet,
            depths,
            normal,
            modular: OnceLock::new(),
            s_quasinormal: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, id: SubgroupId) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn order_of(&self, id: SubgroupId) -> usize {
        self.subgroups[id].order()
    }

    /// Generators recorded during enumeration.
    pub fn generators_of(&self, id: SubgroupId) -> &[Element] {
        &self.generators[id]
    }

    pub fn index_of(&self, s: &Subgroup) -> Option<SubgroupId> {
        self.index.get(s.members()).copied()
    }

    pub fn id_of_bits(&self, bits: &BitSet) -> Option<SubgroupId> {
        self.index.get(bits).copied()
    }

    pub fn trivial(&self) -> SubgroupId {
        0
    }

    pub fn top(&self) -> SubgroupId {
        self.subgroups.len() - 1
    }

    pub fn leq(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.above[a].contains(b)
    }

    /// Indices of subgroups containing `a` (including `a`).
    pub fn above(&self, a: SubgroupId) -> &BitSet {
        &self.above[a]
    }

    /// Indices of subgroups of `a` (including `a`).
    pub fn below(&self, a: SubgroupId) -> &BitSet {
        &self.below[a]
    }

    /// Whether `b` covers `a`, i.e. `a` is maximal in `b`.
    pub fn covers(&self, b: SubgroupId, a: SubgroupId) -> bool {
        self.covered_by[a].contains(&b)
    }

    pub fn join(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        self.join[a * self.len() + b] as SubgroupId
    }

    pub fn meet(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        self.meet[a * self.len() + b] as SubgroupId
    }

    pub fn is_normal(&self, id: SubgroupId) -> bool {
        self.normal[id]
    }

    pub fn normal_subgroups(&self) -> Vec<SubgroupId> {
        (0..self.len()).filter(|&i| self.normal[i]).collect()
    }

    /// Maximal subgroups of `h`.
    pub fn maximal_subgroups(&self, h: SubgroupId) -> &[SubgroupId] {
        &self.maximal[h]
    }

    /// Subgroups in which `h` is maximal.
    pub fn covered_by(&self, h: SubgroupId) -> &[SubgroupId] {
        &self.covered_by[h]
    }

    /// Lengths of the maximal chains from the whole group down to `h`, as a bitmask.
    pub fn depth_mask(&self, h: SubgroupId) -> u64 {
        self.depths[h]
    }

    /// Whether some maximal chain of length `n` ends at `h`.
    pub fn is_n_maximal(&self, h: SubgroupId, n: usize) -> Result<bool> {
        if n < 1 {
            return Err(Error::BadDepth(n));
        }
        Ok(n < 64 && self.depths[h] & (1 << n) != 0)
    }

    /// All `n`-maximal subgroups, in canonical order. May be empty.
    pub fn n_maximal_set(&self, n: usize) -> Result<Vec<SubgroupId>> {
        if n < 1 {
            return Err(Error::BadDepth(n));
        }
        Ok((0..self.len())
            .filter(|&i| n < 64 && self.depths[i] & (1 << n) != 0)
            .collect())
    }

    /// Length of the longest maximal chain, which always ends at the trivial subgroup.
    pub fn longest_chain(&self) -> usize {
        63 - self.depths[0].leading_zeros() as usize
    }

    /// One maximal chain of length `n` ending at `h`, if any.
    pub fn chain_to(&self, h: SubgroupId, n: usize) -> Option<MaximalChain> {
        if n >= 64 || self.depths[h] & (1 << n) == 0 {
            return None;
        }
        let mut chain = vec![h];
        let mut cur = h;
        for d in (0..n).rev() {
            cur = *self.covered_by[cur]
                .iter()
                .find(|&&p| self.depths[p] & (1 << d) != 0)?;
            chain.push(cur);
        }
        chain.reverse();
        Some(MaximalChain(chain))
    }

    /// `Φ(H)`: intersection of the maximal subgroups of `h`, or `h` itself when it has none.
    pub fn frattini_of(&self, h: SubgroupId) -> SubgroupId {
        let mut bits = self.subgroups[h].members().clone();
        for &m in &self.maximal[h] {
            bits.intersect_with(self.subgroups[m].members());
        }
        self.index[&bits]
    }

    pub fn frattini(&self) -> SubgroupId {
        self.frattini_of(self.top())
    }

    /// Subgroups of `within` whose order is `order`.
    pub fn subgroups_of_order(&self, within: SubgroupId, order: usize) -> Vec<SubgroupId> {
        self.below[within]
            .iter()
            .filter(|&i| self.subgroups[i].order() == order)
            .collect()
    }

    /// All Sylow subgroups of `within`, for every prime dividing its order.
    pub fn sylow_subgroups_of(&self, within: SubgroupId) -> Vec<SubgroupId> {
        let n = self.order_of(within) as u64;
        group::factorize(n)
            .into_iter()
            .flat_map(|(p, e)| self.subgroups_of_order(within, p.pow(e) as usize))
            .collect()
    }

    /// First subgroup (canonical order) whose order is the `π`-part of `|G|`.
    /// Such a subgroup is automatically a Hall subgroup; none need exist.
    pub fn hall_subgroup(&self, primes: &group::PrimeSet) -> Option<SubgroupId> {
        let target = group::pi_part(self.group.order() as u64, primes.as_slice()) as usize;
        self.subgroups_of_order(self.top(), target).into_iter().next()
    }

    /// Subgroup generated by two lattice members, computed by closure rather
    /// than by table lookup.
    pub fn join_by_closure(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        let mut seed = self.generators[a].clone();
        seed.extend_from_slice(&self.generators[b]);
        let j = group::subgroup_generated(&self.group, &seed);
        self.index[j.members()]
    }

    /// Generators of `id` computed afresh, for callers outside enumeration.
    pub fn fresh_generators(&self, id: SubgroupId) -> Vec<Element> {
        generating_set(&self.group, &self.subgroups[id])
    }
}

/// Hall `π`-subgroup of `g`, found by enumerating its subgroup lattice.
pub fn hall_subgroup(g: &Group, primes: &group::PrimeSet) -> Option<Subgroup> {
    let lat = SubgroupLattice::enumerate(g);
    lat.hall_subgroup(primes).map(|i| lat.subgroup(i).clone())
}

#[cfg(test)]
mod tests;
