//! Concrete finite groups stored as dense Cayley tables.
//!
//! Elements are indices `0..order` into the table and index `0` is always the
//! identity. A [`Group`] is immutable once built; subgroups are [`Subgroup`]
//! bitsets over the same indices and carry no reference back to their parent,
//! so every operation takes the parent explicitly.

mod build;
mod iso;
mod ops;
mod perm;
mod primes;

pub use build::{Action, Quotient};
pub use iso::{are_isomorphic, find_isomorphism};
pub use ops::*;
pub use perm::Permutation;
pub use primes::{factorize, is_prime, p_part, pi_part, PrimeSet};
pub(crate) use primes::is_square_free;

use std::cmp::Ordering;

use crate::bitset::BitSet;

/// Index of an element in its parent group's table.
pub type Element = usize;

pub const IDENTITY: Element = 0;

/// Default construction-time limit on group order.
pub const DEFAULT_MAX_ORDER: usize = 2000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<Element>,
    max_order_cap: usize,
}

impl Group {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Same group, with `cap` recorded as the order cap inherited by derived groups.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.max_order_cap = cap;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn max_order_cap(&self) -> usize {
        self.max_order_cap
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as Element
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a] as Element
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a⁻¹ b⁻¹ a b`
    #[inline]
    pub fn commutator(&self, a: Element, b: Element) -> Element {
        self.mul(
            self.mul(self.inv(a), self.inv(b)),
            self.mul(a, b),
        )
    }

    pub fn pow(&self, a: Element, mut k: u64) -> Element {
        let mut base = a;
        let mut acc = IDENTITY;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: Element) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Row `a` of the Cayley table.
    pub fn row(&self, a: Element) -> impl Iterator<Item = Element> + '_ {
        self.table[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&x| x as Element)
    }

    pub fn table(&self) -> Vec<Vec<Element>> {
        (0..self.order).map(|a| self.row(a).collect()).collect()
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_bits(BitSet::from_indices(self.order, [IDENTITY]))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_bits(BitSet::full(self.order))
    }

    /// Checks closure, inverses and Lagrange divisibility of a candidate subgroup.
    pub fn is_subgroup(&self, h: &Subgroup) -> bool {
        if h.members().universe() != self.order || !h.contains(IDENTITY) {
            return false;
        }
        if self.order % h.order() != 0 {
            return false;
        }
        let elems: Vec<_> = h.elements().collect();
        elems.iter().all(|&a| {
            h.contains(self.inv(a)) && elems.iter().all(|&b| h.contains(self.mul(a, b)))
        })
    }
}

/// A subgroup of some parent group, as a bitset of element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: BitSet,
    order: usize,
}

impl Subgroup {
    /// Wraps a bitset the caller knows to be closed.
    pub(crate) fn from_bits(members: BitSet) -> Self {
        let order = members.count();
        Subgroup { members, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, g: Element) -> bool {
        self.members.contains(g)
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn meet(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_bits(self.members.intersection(&other.members))
    }

    pub fn index_in(&self, other: &Subgroup) -> usize {
        other.order / self.order
    }
}

/// Canonical order: by order, then lexicographically by member list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order, self.members)
    }
}
