use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::pasep::PasepParams;

use super::solve::Distribution;
use super::system::{ChainState, TransitionSystem};

/// Share of the steps discarded before counting occupancies.
pub const BURN_IN_FRACTION: f64 = 0.1;

/// A seeded walk on an instantiated system, starting from state 0.
///
/// The generator is xoshiro256++ seeded through SplitMix64, so a seed fixes
/// the trajectory on every platform.
pub struct Walker {
    cumulative: Vec<Vec<(f64, usize)>>,
    rng: Xoshiro256PlusPlus,
    state: usize,
}

impl Walker {
    pub fn new<S: ChainState>(sys: &TransitionSystem<S>, params: &PasepParams, seed: u64) -> Result<Self> {
        params.validate()?;
        // instantiate exactly, then round once per entry
        let m = sys.instantiate(params)?;
        let cumulative = (0..m.len())
            .map(|i| {
                let mut acc = 0.0;
                m.row(i)
                    .iter()
                    .filter(|(j, _)| *j != i)
                    .map(|(j, p)| {
                        acc += p.to_f64_lossy();
                        (acc, *j)
                    })
                    .collect()
            })
            .collect();
        Ok(Walker { cumulative, rng: Xoshiro256PlusPlus::seed_from_u64(seed), state: 0 })
    }

    pub fn state(&self) -> usize {
        self.state
    }

    pub fn step(&mut self) -> usize {
        let u: f64 = self.rng.random();
        if let Some(&(_, j)) = self.cumulative[self.state].iter().find(|(c, _)| u < *c) {
            self.state = j;
        }
        self.state
    }
}

/// Occupancy frequencies of a `steps`-long walk from state 0, counted after
/// the first `BURN_IN_FRACTION` of the steps.
pub fn simulate<S: ChainState>(
    sys: &TransitionSystem<S>,
    params: &PasepParams,
    seed: u64,
    steps: u64,
) -> Result<Distribution<f64>> {
    if steps == 0 {
        return Err(Error::InvalidParameters("steps must be at least 1".into()));
    }
    let mut walker = Walker::new(sys, params, seed)?;
    let burn = (steps as f64 * BURN_IN_FRACTION) as u64;
    let mut counts = vec![0u64; sys.len()];
    for t in 0..steps {
        let s = walker.step();
        if t >= burn {
            counts[s] += 1;
        }
    }
    Distribution::from_weights(counts.into_iter().map(|c| c as f64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::analysis::solve::stationary_exact;
    use crate::analysis::system::{pasep_system, pt_system};

    #[test]
    fn same_seed_same_trajectory() {
        let sys = pt_system(3).unwrap();
        let params = PasepParams::new(ratio(1, 2), ratio(1, 3), ratio(2, 3));
        let run = |seed| {
            let mut w = Walker::new(&sys, &params, seed).unwrap();
            (0..2000).map(|_| w.step()).collect::<Vec<_>>()
        };
        assert_eq!(run(7), run(7));
        assert_ne!(run(7), run(8));
    }

    #[test]
    fn one_site_occupancy() {
        let sys = pasep_system(1).unwrap();
        let d = simulate(&sys, &PasepParams::new(ratio(1, 2), ratio(1, 2), ratio(1, 2)), 3, 1_000_000).unwrap();
        let full = sys.index_of(&"1".parse().unwrap()).unwrap();
        assert!((d.get(full) - 0.5).abs() < 0.01);
    }

    #[test]
    fn error_shrinks_with_more_steps() {
        let sys = pasep_system(2).unwrap();
        let params = PasepParams::new(ratio(1, 4), ratio(1, 2), ratio(1, 3));
        let exact = stationary_exact(&sys, &params).unwrap();
        let mean_tv = |steps| {
            (1..=10).map(|seed| exact.tv_distance(&simulate(&sys, &params, seed, steps).unwrap())).sum::<f64>() / 10.0
        };
        assert!(mean_tv(200_000) < mean_tv(2_000));
    }

    #[test]
    fn rejects_bad_input() {
        let sys = pasep_system(1).unwrap();
        assert!(simulate(&sys, &PasepParams::new(ratio(1, 2), ratio(0, 1), ratio(1, 2)), 1, 10).is_err());
        assert!(simulate(&sys, &PasepParams::ones(), 1, 0).is_err());
    }
}
