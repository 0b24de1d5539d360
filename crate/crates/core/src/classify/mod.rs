//! Chief factors and the group classes built on them.
//!
//! A [`Structure`] views one member of a subgroup lattice as a group in its own
//! right, so every predicate here applies equally to `G` and to any subgroup
//! of `G`. Quotient classes are decided through the chief factors of `T`
//! lying above a normal subgroup `N`, which are exactly the chief factors of
//! `T/N`.

mod dispersive;
mod profile;

use std::sync::OnceLock;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{self, is_prime, PrimeSet};
use crate::lattice::{SubgroupId, SubgroupLattice};

pub use dispersive::permutations;
pub use profile::ClassProfile;

/// A chief factor `H/K` of the structure's group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiefFactor {
    pub lower: SubgroupId,
    pub upper: SubgroupId,
    pub factor_order: usize,
    /// `|T : C_T(H/K)|`
    pub automizer_order: usize,
    pub is_cyclic: bool,
    /// `H/K ≤ Φ(T/K)`
    pub is_frattini: bool,
}

/// Classes decided by [`Structure::holds_modulo`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupClass {
    Abelian,
    Nilpotent,
    Soluble,
    Supersoluble,
    StronglySupersoluble,
    NearlyNilpotent,
}

impl GroupClass {
    pub fn name(self) -> &'static str {
        match self {
            GroupClass::Abelian => "abelian",
            GroupClass::Nilpotent => "nilpotent",
            GroupClass::Soluble => "soluble",
            GroupClass::Supersoluble => "supersoluble",
            GroupClass::StronglySupersoluble => "strongly supersoluble",
            GroupClass::NearlyNilpotent => "nearly nilpotent",
        }
    }
}

pub struct Structure<'a> {
    lat: &'a SubgroupLattice,
    top: SubgroupId,
    normals: Vec<SubgroupId>,
    normal_bits: BitSet,
    factors: OnceLock<Vec<ChiefFactor>>,
}

impl<'a> Structure<'a> {
    pub fn of_group(lat: &'a SubgroupLattice) -> Self {
        Structure::of_subgroup(lat, lat.top())
    }

    /// The subgroup `top` of the lattice's group, as a group.
    pub fn of_subgroup(lat: &'a SubgroupLattice, top: SubgroupId) -> Self {
        let normals: Vec<SubgroupId> = if top == lat.top() {
            lat.normal_subgroups()
        } else {
            lat.below(top).iter().filter(|&k| lat.is_normal_in(k, top)).collect()
        };
        let normal_bits = BitSet::from_indices(lat.len(), normals.iter().copied());
        Structure {
            lat,
            top,
            normals,
            normal_bits,
            factors: OnceLock::new(),
        }
    }

    pub fn lattice(&self) -> &'a SubgroupLattice {
        self.lat
    }

    pub fn top(&self) -> SubgroupId {
        self.top
    }

    pub fn order(&self) -> usize {
        self.lat.order_of(self.top)
    }

    pub fn prime_spectrum(&self) -> PrimeSet {
        PrimeSet::of(self.order() as u64)
    }

    /// Normal subgroups of the structure's group, in canonical order.
    pub fn normal_subgroups(&self) -> &[SubgroupId] {
        &self.normals
    }

    pub fn is_normal(&self, h: SubgroupId) -> bool {
        self.normal_bits.contains(h)
    }

    fn require_normal(&self, h: SubgroupId) -> Result<()> {
        if self.is_normal(h) {
            Ok(())
        } else {
            Err(Error::NotNormal)
        }
    }

    /// Every pair `K < H` of normal subgroups with no normal subgroup strictly between.
    pub fn chief_factors(&self) -> &[ChiefFactor] {
        self.factors.get_or_init(|| self.compute_factors())
    }

    fn compute_factors(&self) -> Vec<ChiefFactor> {
        let lat = self.lat;
        let mut out = Vec::new();
        for &k in &self.normals {
            let between_from_k = lat.above(k).intersection(&self.normal_bits);
            let frattini_bits = self.frattini_above(k);
            for h in between_from_k.iter() {
                if h == k || between_from_k.intersection(lat.below(h)).count() != 2 {
                    continue;
                }
                out.push(self.factor(k, h, &frattini_bits));
            }
        }
        out
    }

    /// Intersection of the maximal subgroups of `T` containing `k`: the
    /// preimage of `Φ(T/K)`.
    fn frattini_above(&self, k: SubgroupId) -> BitSet {
        let lat = self.lat;
        let mut bits = lat.subgroup(self.top).members().clone();
        for &m in lat.maximal_subgroups(self.top) {
            if lat.leq(k, m) {
                bits.intersect_with(lat.subgroup(m).members());
            }
        }
        bits
    }

    fn factor(&self, k: SubgroupId, h: SubgroupId, frattini_bits: &BitSet) -> ChiefFactor {
        let lat = self.lat;
        let g = lat.group();
        let (ks, hs) = (lat.subgroup(k), lat.subgroup(h));
        let factor_order = hs.order() / ks.order();
        let centralizer = lat
            .subgroup(self.top)
            .elements()
            .filter(|&x| hs.elements().all(|y| ks.contains(g.commutator(x, y))))
            .count();
        let is_cyclic = hs.elements().any(|x| order_modulo(g, x, ks) == factor_order);
        ChiefFactor {
            lower: k,
            upper: h,
            factor_order,
            automizer_order: self.order() / centralizer,
            is_cyclic,
            is_frattini: hs.members().is_subset(frattini_bits),
        }
    }

    /// Chief factors of `T/N`, as factors of `T` above `n`.
    pub fn chief_factors_above(&self, n: SubgroupId) -> impl Iterator<Item = &ChiefFactor> + '_ {
        self.chief_factors().iter().filter(move |f| self.lat.leq(n, f.lower))
    }

    /// One chief series from `T` down to 1. At each step `choose` picks among
    /// the maximal normal subgroups of the current term.
    pub fn chief_series_with(&self, choose: impl Fn(&[SubgroupId]) -> SubgroupId) -> Vec<ChiefFactor> {
        let mut series = Vec::new();
        let mut cur = self.top;
        while cur != self.lat.trivial() {
            let options: Vec<SubgroupId> = self
                .chief_factors()
                .iter()
                .filter(|f| f.upper == cur)
                .map(|f| f.lower)
                .collect();
            let next = choose(&options);
            let f = self
                .chief_factors()
                .iter()
                .find(|f| f.upper == cur && f.lower == next)
                .expect("choice among offered factors");
            series.push(f.clone());
            cur = next;
        }
        series
    }

    pub fn is_abelian(&self) -> bool {
        group::is_abelian_subgroup(self.lat.group(), self.lat.subgroup(self.top))
    }

    pub fn is_nilpotent(&self) -> bool {
        group::is_nilpotent_subgroup(self.lat.group(), self.lat.subgroup(self.top))
    }

    pub fn is_soluble(&self) -> bool {
        group::is_soluble_subgroup(self.lat.group(), self.lat.subgroup(self.top))
    }

    pub fn is_supersoluble(&self) -> bool {
        self.holds(GroupClass::Supersoluble)
    }

    pub fn is_strongly_supersoluble(&self) -> bool {
        self.holds(GroupClass::StronglySupersoluble)
    }

    pub fn is_nearly_nilpotent(&self) -> bool {
        self.holds(GroupClass::NearlyNilpotent)
    }

    pub fn holds(&self, class: GroupClass) -> bool {
        self.holds_modulo(class, self.lat.trivial())
    }

    /// Whether `T/N` lies in `class`, for `N` normal in `T`.
    pub fn holds_modulo(&self, class: GroupClass, n: SubgroupId) -> bool {
        let lat = self.lat;
        let g = lat.group();
        let (t, ns) = (lat.subgroup(self.top), lat.subgroup(n));
        match class {
            GroupClass::Abelian => group::commutator_subgroup(g, t, t).is_subgroup_of(ns),
            GroupClass::Nilpotent => group::nilpotent_modulo(g, t, ns),
            GroupClass::Soluble => group::derived_series(g, t).last().unwrap().is_subgroup_of(ns),
            GroupClass::Supersoluble => self.chief_factors_above(n).all(|f| f.is_cyclic),
            GroupClass::StronglySupersoluble => self
                .chief_factors_above(n)
                .all(|f| f.is_cyclic && group::is_square_free(f.automizer_order as u64)),
            GroupClass::NearlyNilpotent => self.chief_factors_above(n).all(|f| {
                f.is_cyclic
                    && (f.is_frattini
                        || f.automizer_order == 1
                        || is_prime(f.automizer_order as u64))
            }),
        }
    }

    /// Intersection of the normal `N` with `T/N` in `class`. Fails with
    /// [`Error::FormationViolation`] if the quotient by the intersection is
    /// itself outside the class.
    pub fn residual(&self, class: GroupClass) -> Result<SubgroupId> {
        let lat = self.lat;
        let mut bits = lat.subgroup(self.top).members().clone();
        for &n in &self.normals {
            if self.holds_modulo(class, n) {
                bits.intersect_with(lat.subgroup(n).members());
            }
        }
        let r = lat.id_of_bits(&bits).expect("intersection of subgroups");
        if !self.holds_modulo(class, r) {
            return Err(Error::FormationViolation(format!(
                "{} modulo the {} residual of order {}",
                lat.group().name(),
                class.name(),
                lat.order_of(r)
            )));
        }
        Ok(r)
    }

    /// `T^U`
    pub fn residual_u(&self) -> Result<SubgroupId> {
        self.residual(GroupClass::Supersoluble)
    }

    /// `T^{U_s}`
    pub fn residual_us(&self) -> Result<SubgroupId> {
        self.residual(GroupClass::StronglySupersoluble)
    }

    /// Whether `T = A ⋊ ⟨t⟩` with `A` a nontrivial normal elementary abelian
    /// `p`-subgroup, `t` of prime order `q ≠ p`, and `t` acting on `A` as
    /// `a ↦ a^k` for one `k ≢ 1 (mod p)`.
    pub fn is_p_group_schmidt(&self) -> bool {
        self.p_group_decomposition().is_some()
    }

    /// `(A, t, k)` for the first decomposition found.
    pub fn p_group_decomposition(&self) -> Option<(SubgroupId, usize, u64)> {
        let lat = self.lat;
        let g = lat.group();
        let t_sub = lat.subgroup(self.top);
        for &a in &self.normals {
            let a_sub = lat.subgroup(a);
            let factors = group::factorize(a_sub.order() as u64);
            let [(p, _)] = factors[..] else { continue };
            let q = (t_sub.order() / a_sub.order()) as u64;
            if !is_prime(q) || q == p {
                continue;
            }
            if !group::is_abelian_subgroup(g, a_sub)
                || a_sub.elements().any(|x| g.pow(x, p) != group::IDENTITY)
            {
                continue;
            }
            let Some(t) = t_sub
                .elements()
                .find(|&x| g.element_order(x) == q as usize)
            else {
                continue;
            };
            let mut exponent = None;
            let uniform = a_sub.elements().skip(1).all(|x| {
                let y = g.conj(t, x);
                let k = (1..p).find(|&k| g.pow(x, k) == y);
                match (k, exponent) {
                    (None, _) => false,
                    (Some(k), None) => {
                        exponent = Some(k);
                        true
                    }
                    (Some(k), Some(e)) => k == e,
                }
            });
            if let (true, Some(k)) = (uniform, exponent) {
                if k != 1 {
                    return Some((a, t, k));
                }
            }
        }
        None
    }

    /// Not in the class defined by `pred`, while every proper subgroup is.
    pub fn is_critical(&self, pred: impl Fn(&Structure) -> bool) -> bool {
        if pred(self) {
            return false;
        }
        let mut proper: Vec<SubgroupId> =
            self.lat.below(self.top).iter().filter(|&s| s != self.top).collect();
        proper.reverse();
        proper
            .into_iter()
            .all(|s| pred(&Structure::of_subgroup(self.lat, s)))
    }

    /// Minimal non-nilpotent.
    pub fn is_schmidt_group(&self) -> bool {
        self.is_critical(|s| s.is_nilpotent())
    }

    /// Minimal non-supersoluble.
    pub fn is_u_critical(&self) -> bool {
        self.is_critical(|s| s.is_supersoluble())
    }

    /// Minimal non-abelian.
    pub fn is_miller_moreno(&self) -> bool {
        self.is_critical(|s| s.is_abelian())
    }

    /// Every chief factor `H/K` with `N ≤ K` and `H ≤ A` is cyclic.
    pub fn is_hypercyclically_embedded_modulo(&self, n: SubgroupId, a: SubgroupId) -> Result<bool> {
        self.require_normal(a)?;
        self.require_normal(n)?;
        Ok(self
            .chief_factors_above(n)
            .filter(|f| self.lat.leq(f.upper, a))
            .all(|f| f.is_cyclic))
    }

    pub fn is_hypercyclically_embedded(&self, a: SubgroupId) -> Result<bool> {
        self.is_hypercyclically_embedded_modulo(self.lat.trivial(), a)
    }

    /// `Z_U(T/N)`, as a subgroup of `T` containing `N`: the join of the normal
    /// subgroups above `N` that are hypercyclically embedded modulo `N`.
    pub fn hypercyclic_center_modulo(&self, n: SubgroupId) -> Result<SubgroupId> {
        self.require_normal(n)?;
        let mut z = n;
        for &a in &self.normals {
            if self.lat.leq(n, a) && self.is_hypercyclically_embedded_modulo(n, a)? {
                z = self.lat.join(z, a);
            }
        }
        debug_assert!(self.is_hypercyclically_embedded_modulo(n, z).unwrap());
        Ok(z)
    }

    /// `Z_U(T)`
    pub fn hypercyclic_center(&self) -> SubgroupId {
        self.hypercyclic_center_modulo(self.lat.trivial())
            .expect("trivial subgroup is normal")
    }

    /// `H` nilpotent and `gcd(|H|, |T:H|) = 1`.
    pub fn is_nilpotent_hall(&self, h: SubgroupId) -> bool {
        let order = self.lat.order_of(h);
        let index = self.order() / order;
        gcd(order, index) == 1 && group::is_nilpotent_subgroup(self.lat.group(), self.lat.subgroup(h))
    }

    pub fn profile(&self) -> ClassProfile {
        ClassProfile {
            abelian: self.is_abelian(),
            nilpotent: self.is_nilpotent(),
            soluble: self.is_soluble(),
            supersoluble: self.is_supersoluble(),
            strongly_supersoluble: self.is_strongly_supersoluble(),
            nearly_nilpotent: self.is_nearly_nilpotent(),
            p_group_schmidt: self.is_p_group_schmidt(),
            schmidt_group: self.is_schmidt_group(),
            u_critical: self.is_u_critical(),
            ore_dispersive: self.is_ore_dispersive(),
            dispersive_orderings: self.dispersive_orderings(),
        }
    }
}

/// Order of `xK` in `⟨x⟩K/K`.
fn order_modulo(g: &group::Group, x: usize, k: &group::Subgroup) -> usize {
    let mut y = x;
    let mut n = 1;
    while !k.contains(y) {
        y = g.mul(y, x);
        n += 1;
    }
    n
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
