use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(p, exponent)` pairs, ascending in `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut n = n;
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

/// Product of the `p`-parts of `n` for `p` in `primes`.
pub fn pi_part(n: u64, primes: &[u64]) -> u64 {
    primes.iter().map(|&p| p_part(n, p)).product()
}

/// Sorted set of distinct primes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSet(Vec<u64>);

impl PrimeSet {
    pub fn new(mut primes: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(bad));
        }
        primes.sort_unstable();
        primes.dedup();
        Ok(PrimeSet(primes))
    }

    /// Primes dividing `n`.
    pub fn of(n: u64) -> Self {
        PrimeSet(factorize(n).into_iter().map(|(p, _)| p).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }
}

impl TryFrom<Vec<u64>> for PrimeSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        PrimeSet::new(v)
    }
}

impl From<PrimeSet> for Vec<u64> {
    fn from(s: PrimeSet) -> Self {
        s.0
    }
}

/// Whether `n` is square-free (1 counts).
pub(crate) fn is_square_free(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(156), vec![(2, 2), (3, 1), (13, 1)]);
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(pi_part(24, &[2, 3]), 24);
        assert!(is_square_free(42));
        assert!(!is_square_free(12));
    }

    #[test]
    fn prime_sets() {
        assert_eq!(PrimeSet::of(1).as_slice(), &[] as &[u64]);
        assert_eq!(PrimeSet::of(12).as_slice(), &[2, 3]);
        assert_eq!(PrimeSet::of(42).as_slice(), &[2, 3, 7]);
        assert!(matches!(PrimeSet::new(vec![2, 4]), Err(Error::NotPrime(4))));
        assert_eq!(PrimeSet::new(vec![5, 2, 5]).unwrap().as_slice(), &[2, 5]);
    }
}
