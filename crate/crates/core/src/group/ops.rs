//! Subgroup-level operations that need only the multiplication table.

use super::primes::{is_prime, p_part, PrimeSet};
use super::{Element, Group, Subgroup, IDENTITY};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Smallest subgroup containing `seed`.
pub fn subgroup_generated(g: &Group, seed: &[Element]) -> Subgroup {
    let mut members = BitSet::new(g.order());
    members.insert(IDENTITY);
    let mut frontier = vec![IDENTITY];
    while let Some(x) = frontier.pop() {
        for &s in seed {
            let y = g.mul(x, s);
            if members.insert(y) {
                frontier.push(y);
            }
        }
    }
    Subgroup::from_bits(members)
}

/// Greedy generating set: repeatedly adds the highest-order element not yet
/// covered (ties to the lowest index).
pub fn generating_set(g: &Group, h: &Subgroup) -> Vec<Element> {
    let mut candidates: Vec<(usize, Element)> =
        h.elements().map(|x| (g.element_order(x), x)).collect();
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut gens = Vec::new();
    let mut current = g.trivial_subgroup();
    for (_, x) in candidates {
        if current.order() == h.order() {
            break;
        }
        if !current.contains(x) {
            gens.push(x);
            current = subgroup_generated(g, &gens);
        }
    }
    gens
}

pub(crate) fn small_generating_set(g: &Group) -> Vec<Element> {
    generating_set(g, &g.whole())
}

/// `⟨A, B⟩`
pub fn join(g: &Group, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut seed = generating_set(g, a);
    seed.extend(generating_set(g, b));
    subgroup_generated(g, &seed)
}

/// Setwise product `AB = {ab}`.
pub fn product_set(g: &Group, a: &Subgroup, b: &Subgroup) -> BitSet {
    let mut out = BitSet::new(g.order());
    for x in a.elements() {
        for y in b.elements() {
            out.insert(g.mul(x, y));
        }
    }
    out
}

pub fn centralizer(g: &Group, s: &Subgroup) -> Subgroup {
    let members = BitSet::from_indices(
        g.order(),
        g.elements()
            .filter(|&x| s.elements().all(|y| g.mul(x, y) == g.mul(y, x))),
    );
    Subgroup::from_bits(members)
}

pub fn normalizer(g: &Group, s: &Subgroup) -> Subgroup {
    let members = BitSet::from_indices(
        g.order(),
        g.elements().filter(|&x| s.elements().all(|y| s.contains(g.conj(x, y)))),
    );
    Subgroup::from_bits(members)
}

pub fn center(g: &Group) -> Subgroup {
    centralizer(g, &g.whole())
}

/// Whether `H` is normalized by every element of `K`.
pub fn is_normalized_by(g: &Group, h: &Subgroup, k: &Subgroup) -> bool {
    k.elements()
        .all(|x| h.elements().all(|y| h.contains(g.conj(x, y))))
}

pub fn is_normal(g: &Group, h: &Subgroup) -> bool {
    g.generators()
        .iter()
        .all(|&x| h.elements().all(|y| h.contains(g.conj(x, y))))
}

/// Largest normal subgroup of `G` inside `H`.
pub fn core(g: &Group, h: &Subgroup) -> Subgroup {
    let mut bits = h.members().clone();
    for x in g.elements() {
        let conj = BitSet::from_indices(g.order(), h.elements().map(|y| g.conj(x, y)));
        bits.intersect_with(&conj);
    }
    Subgroup::from_bits(bits)
}

/// Smallest normal subgroup of `G` containing `H`.
pub fn normal_closure(g: &Group, h: &Subgroup) -> Subgroup {
    normal_closure_in(g, &g.whole(), h)
}

/// Smallest subgroup of `K` containing `H` and normalized by `K`.
pub fn normal_closure_in(g: &Group, k: &Subgroup, h: &Subgroup) -> Subgroup {
    let gens = generating_set(g, h);
    let mut seed = BitSet::new(g.order());
    for x in k.elements() {
        for &y in &gens {
            seed.insert(g.conj(x, y));
        }
    }
    let seed: Vec<Element> = seed.iter().collect();
    subgroup_generated(g, &seed)
}

/// `[A, B] = ⟨[a, b] : a ∈ A, b ∈ B⟩`
pub fn commutator_subgroup(g: &Group, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut seed = BitSet::new(g.order());
    for x in a.elements() {
        for y in b.elements() {
            seed.insert(g.commutator(x, y));
        }
    }
    let seed: Vec<Element> = seed.iter().collect();
    subgroup_generated(g, &seed)
}

pub fn derived_subgroup(g: &Group) -> Subgroup {
    let whole = g.whole();
    commutator_subgroup(g, &whole, &whole)
}

/// `H ⊇ H' ⊇ H'' ⊇ …` down to the first repeated term.
pub fn derived_series(g: &Group, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, last);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

/// `H = γ₁ ⊇ γ₂ = [γ₁, H] ⊇ …` down to the first repeated term.
pub fn lower_central_series(g: &Group, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, h);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

pub fn is_abelian_subgroup(g: &Group, h: &Subgroup) -> bool {
    let elems: Vec<_> = h.elements().collect();
    elems
        .iter()
        .all(|&a| elems.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

pub fn is_soluble_subgroup(g: &Group, h: &Subgroup) -> bool {
    derived_series(g, h).last().unwrap().is_trivial()
}

pub fn is_nilpotent_subgroup(g: &Group, h: &Subgroup) -> bool {
    nilpotent_modulo(g, h, &g.trivial_subgroup())
}

/// Whether `H/N` is nilpotent, for `N ⊴ H`: the lower central series of `H`
/// must stabilize inside `N`.
pub fn nilpotent_modulo(g: &Group, h: &Subgroup, n: &Subgroup) -> bool {
    lower_central_series(g, h).last().unwrap().is_subgroup_of(n)
}

pub fn is_abelian(g: &Group) -> bool {
    is_abelian_subgroup(g, &g.whole())
}

pub fn is_soluble(g: &Group) -> bool {
    is_soluble_subgroup(g, &g.whole())
}

pub fn is_nilpotent(g: &Group) -> bool {
    is_nilpotent_subgroup(g, &g.whole())
}

pub fn prime_spectrum(g: &Group) -> PrimeSet {
    PrimeSet::of(g.order() as u64)
}

/// A Sylow `p`-subgroup, grown one factor of `p` at a time inside normalizers.
pub fn sylow_subgroup(g: &Group, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let target = p_part(g.order() as u64, p) as usize;
    let mut sylow = g.trivial_subgroup();
    let mut gens: Vec<Element> = Vec::new();
    while sylow.order() < target {
        let norm = normalizer(g, &sylow);
        let x = norm
            .elements()
            .find(|&x| !sylow.contains(x) && sylow.contains(g.pow(x, p)))
            .expect("a p-subgroup of non-Sylow order has a p-element in its normalizer");
        gens.push(x);
        sylow = subgroup_generated(g, &gens);
    }
    Ok(sylow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Permutation;

    fn perm(deg: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(deg, &cycles).unwrap()
    }

    fn s3() -> Group {
        Group::from_permutations("S3", 3, &[perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])]).unwrap()
    }

    fn a4() -> Group {
        Group::from_permutations(
            "A4",
            4,
            &[perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]]), perm(4, &[&[1, 2, 3]])],
        )
        .unwrap()
    }

    fn q8() -> Group {
        // Regular representation of i and j.
        Group::from_permutations(
            "Q8",
            8,
            &[perm(8, &[&[0, 2, 1, 3], &[4, 6, 5, 7]]), perm(8, &[&[0, 4, 1, 5], &[2, 7, 3, 6]])],
        )
        .unwrap()
    }

    fn element_of_order(g: &Group, k: usize) -> Element {
        g.elements().find(|&x| g.element_order(x) == k).unwrap()
    }

    #[test]
    fn generated_subgroups() {
        let g = s3();
        assert!(subgroup_generated(&g, &[]).is_trivial());
        let c3 = subgroup_generated(&g, &[element_of_order(&g, 3)]);
        assert_eq!(c3.order(), 3);

        let a = a4();
        let invols: Vec<_> = a.elements().filter(|&x| a.element_order(x) == 2).collect();
        assert_eq!(invols.len(), 3);
        let v4 = subgroup_generated(&a, &invols[..2]);
        assert_eq!(v4.order(), 4);
        assert!(a.is_subgroup(&v4));
    }

    #[test]
    fn centralizers_and_normalizers() {
        let g = s3();
        assert_eq!(centralizer(&g, &g.trivial_subgroup()), g.whole());
        let c3 = subgroup_generated(&g, &[element_of_order(&g, 3)]);
        assert_eq!(centralizer(&g, &c3), c3);
        assert_eq!(normalizer(&g, &c3), g.whole());
    }

    #[test]
    fn cores_and_closures() {
        let g = s3();
        let c2 = subgroup_generated(&g, &[element_of_order(&g, 2)]);
        assert!(core(&g, &c2).is_trivial());
        assert_eq!(normal_closure(&g, &c2), g.whole());

        let a = a4();
        let c2 = subgroup_generated(&a, &[element_of_order(&a, 2)]);
        assert!(core(&a, &c2).is_trivial());
        assert_eq!(normal_closure(&a, &c2).order(), 4);

        let c3 = subgroup_generated(&g, &[element_of_order(&g, 3)]);
        assert_eq!(core(&g, &c3), c3);
        assert_eq!(normal_closure(&g, &c3), c3);
    }

    #[test]
    fn derived_and_center() {
        let g = s3();
        assert_eq!(derived_subgroup(&g).order(), 3);
        assert!(center(&g).is_trivial());
        let q = q8();
        assert_eq!(derived_subgroup(&q).order(), 2);
        assert_eq!(center(&q), derived_subgroup(&q));
        assert!(is_nilpotent(&q));
        assert!(!is_nilpotent(&a4()));
        assert!(is_soluble(&a4()));
        assert!(!is_abelian(&g));
    }

    #[test]
    fn sylow_subgroups() {
        let g = s3();
        assert_eq!(sylow_subgroup(&g, 3).unwrap().order(), 3);
        assert_eq!(sylow_subgroup(&g, 2).unwrap().order(), 2);
        assert_eq!(sylow_subgroup(&g, 5).unwrap().order(), 1);
        assert!(matches!(sylow_subgroup(&g, 4), Err(Error::NotPrime(4))));
        let a = a4();
        let p = sylow_subgroup(&a, 2).unwrap();
        assert_eq!(p.order(), 4);
        assert!(is_normal(&a, &p));
    }

    #[test]
    fn spectrum() {
        assert!(prime_spectrum(&Group::from_permutations("1", 1, &[]).unwrap()).is_empty());
        assert_eq!(prime_spectrum(&a4()).as_slice(), &[2, 3]);
    }
}
