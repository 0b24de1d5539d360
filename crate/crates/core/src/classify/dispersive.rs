//! `φ`-dispersive groups: for an ordering `p₁, …, p_r` of the primes, each
//! product of the first `i` Sylow orders is the order of a normal subgroup.

use super::Structure;
use crate::error::{Error, Result};
use crate::group::{factorize, p_part};
use crate::lattice::SubgroupId;

impl Structure<'_> {
    pub fn is_phi_dispersive(&self, phi: &[u64]) -> Result<bool> {
        self.is_phi_dispersive_modulo(self.lattice().trivial(), phi)
    }

    /// Whether `T/N` is `φ`-dispersive. `phi` may list primes not dividing
    /// `|T/N|`; those are skipped, but every prime that divides it must appear.
    pub fn is_phi_dispersive_modulo(&self, n: SubgroupId, phi: &[u64]) -> Result<bool> {
        let lat = self.lattice();
        let index = (self.order() / lat.order_of(n)) as u64;
        let needed: Vec<u64> = factorize(index).into_iter().map(|(p, _)| p).collect();
        let mut seen: Vec<u64> = phi.to_vec();
        seen.sort_unstable();
        let dedup_len = {
            let mut d = seen.clone();
            d.dedup();
            d.len()
        };
        let all_primes = self.prime_spectrum();
        let consistent = dedup_len == seen.len()
            && needed.iter().all(|p| seen.binary_search(p).is_ok())
            && (n != lat.trivial() || seen.len() == needed.len())
            && seen.iter().all(|&p| all_primes.contains(p));
        if !consistent {
            return Err(Error::BadOrdering {
                given: phi.to_vec(),
                expected: needed,
            });
        }
        let quotient_orders: Vec<u64> = self
            .normal_subgroups()
            .iter()
            .filter(|&&m| lat.leq(n, m))
            .map(|&m| (lat.order_of(m) / lat.order_of(n)) as u64)
            .collect();
        let mut target = 1;
        for &p in phi {
            target *= p_part(index, p);
            if !quotient_orders.contains(&target) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every ordering of `π(T)` for which `T` is dispersive, in lexicographic order.
    pub fn dispersive_orderings(&self) -> Vec<Vec<u64>> {
        permutations(self.prime_spectrum().as_slice())
            .into_iter()
            .filter(|phi| self.is_phi_dispersive(phi).expect("ordering of π(T)"))
            .collect()
    }

    /// Dispersive for the descending ordering of primes.
    pub fn is_ore_dispersive(&self) -> bool {
        let mut phi = self.prime_spectrum().as_slice().to_vec();
        phi.reverse();
        self.is_phi_dispersive(&phi).expect("ordering of π(T)")
    }
}

/// All orderings of `items`, lexicographic when `items` is sorted.
pub fn permutations(items: &[u64]) -> Vec<Vec<u64>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}
