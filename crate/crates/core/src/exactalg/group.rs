use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A finitely generated abelian group `ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` with
/// `2 ≤ d₁ | d₂ | … | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    /// Panics if the factors violate the divisibility-chain invariant.
    pub fn new(free_rank: usize, invariant_factors: Vec<BigInt>) -> Self {
        let two = BigInt::from(2);
        assert!(
            invariant_factors.iter().all(|d| *d >= two),
            "invariant factors must be at least 2"
        );
        assert!(
            invariant_factors
                .windows(2)
                .all(|w| (&w[1] % &w[0]).is_zero()),
            "invariant factors must form a divisibility chain"
        );
        Self {
            free_rank,
            invariant_factors,
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// Cokernel of a map into ℤ^`generators` whose Smith diagonal (nonzero
    /// part) is `diagonal`.
    pub fn from_diagonal(generators: usize, diagonal: &[BigInt]) -> Self {
        let factors = diagonal.iter().filter(|d| !d.is_one()).cloned().collect();
        Self::new(generators - diagonal.len(), factors)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}
