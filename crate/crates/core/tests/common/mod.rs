#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use modlattice::bitset::BitSet;
use modlattice::group::Group;
use modlattice::{SubgroupId, SubgroupLattice};

/// Every multiplication-closed subset containing the identity, found by
/// walking all subsets of each divisor size (Gosper's hack over a u64 mask).
/// Independent of the lattice code; only usable for |G| ≤ 63.
pub fn brute_force_subgroups(g: &Group) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n < 64);
    let table = g.table();
    let closed = |mask: u64| {
        (0..n).filter(|&a| mask >> a & 1 == 1).all(|a| {
            (0..n).filter(|&b| mask >> b & 1 == 1).all(|b| mask >> table[a][b] & 1 == 1)
        })
    };
    let mut found = BTreeSet::new();
    let others = n - 1;
    for size in (1..=n).filter(|k| n % k == 0) {
        let k = size - 1;
        if k == 0 {
            found.insert(vec![0]);
            continue;
        }
        let mut s: u64 = (1 << k) - 1;
        while s < 1 << others {
            let mask = (s << 1) | 1;
            if closed(mask) {
                found.insert((0..n).filter(|&i| mask >> i & 1 == 1).collect());
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    found
}

pub fn lattice_members(lat: &SubgroupLattice) -> BTreeSet<Vec<usize>> {
    lat.subgroups().iter().map(|h| h.elements().collect()).collect()
}

/// Modularity of every subgroup with the quantifiers nested the other way
/// round: the upper bound `Z` is the outer loop, joins are recomputed by
/// closure from generators (memoized) and meets by intersecting member sets.
pub fn modular_flags_z_outer(lat: &SubgroupLattice) -> Vec<bool> {
    let len = lat.len();
    let mut joins: HashMap<(SubgroupId, SubgroupId), SubgroupId> = HashMap::new();
    let mut join = |a: SubgroupId, b: SubgroupId| {
        let key = (a.min(b), a.max(b));
        *joins.entry(key).or_insert_with(|| lat.join_by_closure(key.0, key.1))
    };
    let meet = |a: SubgroupId, b: SubgroupId| {
        let bits: BitSet = lat.subgroup(a).members().intersection(lat.subgroup(b).members());
        lat.id_of_bits(&bits).expect("intersection of subgroups is a subgroup")
    };
    let contains = |big: SubgroupId, small: SubgroupId| {
        lat.subgroup(small).members().is_subset(lat.subgroup(big).members())
    };
    let mut modular = vec![true; len];
    for z in 0..len {
        for x in (0..len).filter(|&x| contains(z, x)) {
            for m in 0..len {
                if modular[m] && join(x, meet(m, z)) != meet(join(x, m), z) {
                    modular[m] = false;
                }
            }
        }
        for m in (0..len).filter(|&m| contains(z, m)) {
            if !modular[m] {
                continue;
            }
            for y in 0..len {
                if join(m, meet(y, z)) != meet(join(m, y), z) {
                    modular[m] = false;
                    break;
                }
            }
        }
    }
    modular
}
