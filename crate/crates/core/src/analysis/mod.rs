//! Transition systems for the three chains, exact stationary laws, balance
//! and projection checks, and simulation.

mod balance;
pub mod format;
mod projection;
mod report;
mod simulate;
mod solve;
mod system;

pub use balance::{verify_balance, BalanceReport, BalanceViolation};
pub use projection::{fiber_stationary, index_map, verify_projection, DEFAULT_T_MAX};
pub use report::{Report, Violation};
pub use simulate::{simulate, Walker, BURN_IN_FRACTION};
pub use solve::{solve_left_fixed_vector, stationary, stationary_exact, Distribution};
pub use system::{
    pasep_system, perm_system, pt_system, ChainKind, ChainState, Edge, StochasticMatrix, TransitionSystem,
};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::tableaux::weight_sum;
use crate::Poly;

/// `Z_N`: the weight sum over tableaux of half-perimeter `n + 1`.
pub fn partition_function(n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(Error::NoSites(n));
    }
    Ok(weight_sum(n + 1))
}

/// The Catalan number `C_n`.
pub fn catalan(n: usize) -> BigUint {
    // C_{k+1} = C_k (4k + 2) / (k + 2)
    (0..n).fold(BigUint::from(1u32), |c, k| c * BigUint::from(4 * k + 2) / BigUint::from(k + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::tableaux::enumerate_tableaux;

    #[test]
    fn small_partition_functions() {
        assert_eq!(partition_function(1).unwrap(), Poly::monomial(0, -1, 0) + Poly::monomial(0, 0, -1));
        let z2 = [(0, -2, 0), (0, -1, -1), (0, 0, -2), (0, -1, 0), (0, 0, -1), (1, -1, -1)]
            .into_iter()
            .map(|(q, a, b)| Poly::monomial(q, a, b))
            .sum::<Poly>();
        assert_eq!(partition_function(2).unwrap(), z2);
        assert_eq!(partition_function(1).unwrap().to_string(), "1 * q^0 * a^-1 * b^0 + 1 * q^0 * a^0 * b^-1");
    }

    #[test]
    fn factorial_and_catalan_specializations() {
        let (zero, one) = (ratio(0, 1), ratio(1, 1));
        let mut fact = 1u64;
        for n in 1..=6usize {
            fact *= n as u64 + 1;
            let z = partition_function(n).unwrap();
            assert_eq!(z.eval(&one, &one, &one).unwrap(), ratio(fact as i64, 1));
            let rank_zero = enumerate_tableaux(n + 1).iter().filter(|t| t.stats().rank == 0).count();
            let at_zero = z.eval(&zero, &one, &one).unwrap();
            assert_eq!(at_zero, ratio(rank_zero as i64, 1));
            assert_eq!(BigUint::from(rank_zero), catalan(n + 1));
        }
    }

    #[test]
    fn catalan_numbers() {
        let first: Vec<BigUint> = (0..8).map(catalan).collect();
        let expected: Vec<BigUint> = [1u32, 1, 2, 5, 14, 42, 132, 429].into_iter().map(BigUint::from).collect();
        assert_eq!(first, expected);
    }
}
