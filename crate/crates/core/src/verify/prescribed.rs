//! Rings with a prescribed number of prime ideals: C(discrete n, Y) for a
//! zero-divisor-free ring Y has exactly the n primes I(z).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraTable, Val};
use crate::funcspace::{Elem, FuncError, FunctionRing};
use crate::ideals::{classify_primes, ideal_lattice, prime_radical, IdealConfig, IdealError};
use crate::topology::ExplicitSpace;

/// Largest lattice the generator will enumerate.
pub const PRESCRIBED_LATTICE_BUDGET: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrescribedError {
    #[error("need at least one prime")]
    ZeroPrimes,
    #[error("{0} points is more than the discrete constructor allows")]
    TooManyPrimes(usize),
    #[error("Y has zero divisors ({}·{} = 0), so the I(z) are not prime", .0.0, .0.1)]
    ZeroDivisorHypothesis((Val, Val)),
    #[error("Y has no addition table; multiplicative ideals have more primes than points")]
    MissingAddition,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("inventory check failed: {0}")]
    Unverified(String),
}

impl From<FuncError> for PrescribedError {
    fn from(e: FuncError) -> Self {
        PrescribedError::BudgetExceeded(e.to_string())
    }
}

impl From<IdealError> for PrescribedError {
    fn from(e: IdealError) -> Self {
        PrescribedError::BudgetExceeded(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeEntry {
    pub point: usize,
    pub members: Vec<Elem>,
    pub min_max: bool,
}

/// Verified description of the prime spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inventory {
    pub algebra: String,
    pub points: usize,
    pub ring_size: usize,
    pub lattice_size: usize,
    pub primes: Vec<PrimeEntry>,
    pub maximal_ideals: usize,
    pub radical: Vec<Elem>,
}

pub fn generate_prescribed_ring(n_primes: usize, y: &AlgebraTable) -> Result<(FunctionRing, Inventory), PrescribedError> {
    if n_primes == 0 {
        return Err(PrescribedError::ZeroPrimes);
    }
    if n_primes > 16 {
        return Err(PrescribedError::TooManyPrimes(n_primes));
    }
    if let Some(&w) = y.zero_divisors().first() {
        return Err(PrescribedError::ZeroDivisorHypothesis(w));
    }
    if !y.has_add() {
        return Err(PrescribedError::MissingAddition);
    }
    let space = ExplicitSpace::discrete(n_primes);
    let ring = FunctionRing::new(&space, y, crate::funcspace::DEFAULT_BUDGET)?;
    let lattice = ideal_lattice(&ring, IdealConfig::default_for(y), PRESCRIBED_LATTICE_BUDGET)?;
    let cls = classify_primes(&ring, &lattice)?;
    let radical = prime_radical(&ring, &lattice, &cls)?;

    let mut primes = Vec::new();
    for (i, &p) in cls.primes.iter().enumerate() {
        let Some(point) = cls.vanishing_point[i] else {
            return Err(PrescribedError::Unverified(format!("prime #{p} is not of the form I(z)")));
        };
        let min_max = cls.min_max.contains(&p);
        if !min_max {
            return Err(PrescribedError::Unverified(format!("I({point}) is not min-max")));
        }
        primes.push(PrimeEntry { point, members: lattice.ideals[p].ones().map(|e| e as Elem).collect(), min_max });
    }
    if primes.len() != n_primes {
        return Err(PrescribedError::Unverified(format!("{} primes, expected {n_primes}", primes.len())));
    }
    let radical: Vec<Elem> = radical.ones().map(|e| e as Elem).collect();
    if radical != [ring.theta()] {
        return Err(PrescribedError::Unverified("the prime radical is not (Θ)".into()));
    }
    primes.sort_by_key(|p| p.point);
    let inv = Inventory {
        algebra: y.name().to_string(),
        points: n_primes,
        ring_size: ring.len(),
        lattice_size: lattice.len(),
        primes,
        maximal_ideals: cls.maximal_ideals.len(),
        radical,
    };
    Ok((ring, inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_zmod;

    #[test]
    fn three_primes_over_z2() {
        let (ring, inv) = generate_prescribed_ring(3, &make_zmod(2)).unwrap();
        assert_eq!(ring.len(), 8);
        assert_eq!(inv.primes.len(), 3);
        assert!(inv.primes.iter().all(|p| p.min_max));
    }

    #[test]
    fn one_point_is_y() {
        let (ring, inv) = generate_prescribed_ring(1, &make_zmod(5)).unwrap();
        assert_eq!(ring.len(), 5);
        assert_eq!(inv.primes.len(), 1);
        assert_eq!(inv.primes[0].members, vec![ring.theta()]);
    }

    #[test]
    fn z4_refused() {
        assert_eq!(generate_prescribed_ring(2, &make_zmod(4)).unwrap_err(), PrescribedError::ZeroDivisorHypothesis((2, 2)));
    }
}
