use crate::error::{Error, Result};
use crate::pasep::PasepParams;
use crate::{Poly, Rational};

use super::report::Report;
use super::solve::{stationary_exact, Distribution};
use super::system::{ChainState, TransitionSystem};

/// Default horizon for the time-`t` comparison.
pub const DEFAULT_T_MAX: usize = 12;

/// `f` as an index map from `m` to `n`, failing if a target is missing.
pub fn index_map<A: ChainState, B: ChainState>(
    m: &TransitionSystem<A>,
    n: &TransitionSystem<B>,
    f: impl Fn(&A) -> B,
) -> Result<Vec<usize>> {
    m.states()
        .iter()
        .map(|x| {
            let y = f(x);
            n.index_of(&y).ok_or_else(|| Error::BadState(format!("{x} maps to {y}, which is not a state")))
        })
        .collect()
}

/// Checks that `m` projects to `n` through `f`.
///
/// Edge level, symbolically: every edge of `m` is carried to an edge of
/// `n` with the same rate, every state keeps its total out-rate, and every
/// edge of `n` lifts uniquely from each point of its source fiber. Then,
/// at `params`, the time-`t` law of `n` from `f(x₀)` is the fiber sum of the
/// time-`t` law of `m` from `x₀`, for every `x₀` and `t <= t_max`.
pub fn verify_projection<A: ChainState, B: ChainState>(
    m: &TransitionSystem<A>,
    n: &TransitionSystem<B>,
    f: impl Fn(&A) -> B,
    t_max: usize,
    params: &PasepParams,
) -> Result<Report> {
    let map = index_map(m, n, f)?;
    let mut report = Report::new("projection");
    let name_m = |i: usize| m.states()[i].to_string();
    let name_n = |j: usize| n.states()[j].to_string();

    let mut fibers = vec![Vec::new(); n.len()];
    for (x, &y) in map.iter().enumerate() {
        fibers[y].push(x);
    }
    for (y, fiber) in fibers.iter().enumerate() {
        report.check(!fiber.is_empty(), "surjective", || name_n(y), || "empty fiber".into());
    }

    for x in 0..m.len() {
        let y = map[x];
        for e in m.edges(x) {
            let image = n.rate(y, map[e.to]);
            report.check(
                image.is_some_and(|img| img.rate == e.rate),
                "edge carried to an equal edge",
                || format!("{} -> {}", name_m(x), name_m(e.to)),
                || match image {
                    Some(img) => format!("rate {} below, {} above", img.rate.to_poly(), e.rate.to_poly()),
                    None => format!("no edge {} -> {}", name_n(y), name_n(map[e.to])),
                },
            );
        }
        let (above, below): (Poly, Poly) = (m.out_rate(x), n.out_rate(y));
        report.check(above == below, "holding probability", || name_m(x), || format!("out-rate {above} vs {below}"));
    }

    for (y, fiber) in fibers.iter().enumerate() {
        for e in n.edges(y) {
            for &x in fiber {
                let lifts: Vec<_> = m.edges(x).iter().filter(|l| map[l.to] == e.to).collect();
                report.check(
                    lifts.len() == 1 && lifts[0].rate == e.rate,
                    "unique lift",
                    || format!("{} over {} -> {}", name_m(x), name_n(y), name_n(e.to)),
                    || format!("{} lifts", lifts.len()),
                );
            }
        }
    }

    let pm = m.instantiate(params)?;
    let pn = n.instantiate(params)?;
    let zero = || Rational::from_integer(0.into());
    for x0 in 0..m.len() {
        let mut above = vec![zero(); m.len()];
        above[x0] = Rational::from_integer(1.into());
        let mut below = vec![zero(); n.len()];
        below[map[x0]] = Rational::from_integer(1.into());
        for t in 0..=t_max {
            if t > 0 {
                above = pm.step(&above);
                below = pn.step(&below);
            }
            let mut summed = vec![zero(); n.len()];
            for (x, p) in above.iter().enumerate() {
                summed[map[x]] += p;
            }
            report.check(
                summed == below,
                "time-t law",
                || format!("start {} t={t}", name_m(x0)),
                || "fiber sums differ from the projected chain".into(),
            );
        }
    }
    Ok(report)
}

/// Stationary laws of both chains, with the one of `m` summed over fibers.
pub fn fiber_stationary<A: ChainState, B: ChainState>(
    m: &TransitionSystem<A>,
    n: &TransitionSystem<B>,
    f: impl Fn(&A) -> B,
    params: &PasepParams,
) -> Result<(Distribution, Distribution)> {
    let map = index_map(m, n, f)?;
    let summed = stationary_exact(m, params)?.push_forward(n.len(), |i| map[i]);
    Ok((summed, stationary_exact(n, params)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::analysis::system::{pasep_system, perm_system, pt_system};
    use crate::pasep::RateKind;
    use crate::tableaux::PasepState;

    fn params() -> PasepParams {
        PasepParams::new(ratio(1, 3), ratio(2, 5), ratio(3, 4))
    }

    #[test]
    fn pt_chain_projects_to_pasep() {
        for n in 1..=3 {
            let r = verify_projection(&pt_system(n).unwrap(), &pasep_system(n).unwrap(), |t| t.word(), 6, &params())
                .unwrap();
            assert!(r.passed(), "{:?}", r.violations.first());
        }
    }

    #[test]
    fn permutation_chain_projects_to_pasep() {
        let n = 3;
        let r = verify_projection(&perm_system(n).unwrap(), &pasep_system(n).unwrap(), |p| p.word(), 6, &params())
            .unwrap();
        assert!(r.passed());
    }

    #[test]
    fn fiber_sums_of_stationary_laws() {
        for n in 1..=3 {
            let (summed, direct) =
                fiber_stationary(&pt_system(n).unwrap(), &pasep_system(n).unwrap(), |t| t.word(), &params()).unwrap();
            assert_eq!(summed, direct);
        }
    }

    #[test]
    fn horizon_zero_only_compares_indicators() {
        let r = verify_projection(&pt_system(2).unwrap(), &pasep_system(2).unwrap(), |t| t.word(), 0, &params())
            .unwrap();
        assert!(r.passed());
    }

    #[test]
    fn a_wrong_rate_is_caught() {
        // a PASEP whose hops left run at rate 1 instead of q
        let states = PasepState::all(2);
        let skewed = TransitionSystem::build(states, 2, |x| {
            crate::pasep::pasep_transitions(x)
                .into_iter()
                .map(|t| (t.target, if t.kind == RateKind::Q { RateKind::One } else { t.kind }))
                .collect()
        })
        .unwrap();
        let r = verify_projection(&pt_system(2).unwrap(), &skewed, |t| t.word(), 2, &params()).unwrap();
        assert!(!r.passed());
        assert!(r.violations.iter().any(|v| v.check == "edge carried to an equal edge"));
    }
}
