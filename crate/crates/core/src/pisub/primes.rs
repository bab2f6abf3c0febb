use std::fmt;

use crate::error::{Error, Result};
use crate::permcore::{is_prime, prime_factors, PermGroup, Permutation};

/// A finite set of primes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    pub fn new(primes: &[u64]) -> Result<Self> {
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        let mut primes = primes.to_vec();
        primes.sort_unstable();
        primes.dedup();
        Ok(Self { primes })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    /// Every prime factor of `n` lies in the set.
    pub fn is_pi_number(&self, n: u64) -> bool {
        prime_factors(n).into_iter().all(|p| self.contains(p))
    }

    /// No prime factor of `n` lies in the set.
    pub fn is_coprime_to(&self, n: u64) -> bool {
        prime_factors(n).into_iter().all(|p| !self.contains(p))
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn is_pi_element(g: &Permutation, pi: &PrimeSet) -> bool {
    pi.is_pi_number(g.order())
}

pub fn is_pi_group(h: &PermGroup, pi: &PrimeSet) -> bool {
    pi.is_pi_number(h.order())
}
