//! The discrete-time PASEP on `{0,1}^N`.

use std::fmt;

use num_traits::One;

use crate::algebra::{Exponents, Field, Monomial};
use crate::error::{Error, Result};
use crate::tableaux::PasepState;
use crate::{Mono, Rational};

/// A parameter point `(q, α, β)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PasepParams<C = Rational> {
    pub q: C,
    pub alpha: C,
    pub beta: C,
}

impl<C: Field> PasepParams<C> {
    pub fn new(q: C, alpha: C, beta: C) -> Self {
        PasepParams { q, alpha, beta }
    }

    /// Checks `0 <= q <= 1` and `0 < α, β <= 1`; inside this box every
    /// instantiated row of the three chains is a probability vector.
    pub fn validate(&self) -> Result<()> {
        let in_unit = |x: &C| x.is_nonnegative() && (C::one() - x.clone()).is_nonnegative();
        let ok = in_unit(&self.q)
            && in_unit(&self.alpha)
            && in_unit(&self.beta)
            && !self.alpha.is_zero()
            && !self.beta.is_zero();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!("q={} alpha={} beta={}", self.q, self.alpha, self.beta)))
        }
    }

    /// Parameters with `α` and `β` exchanged.
    pub fn swapped(&self) -> Self {
        PasepParams { q: self.q.clone(), alpha: self.beta.clone(), beta: self.alpha.clone() }
    }

    pub fn to_f64(&self) -> PasepParams<f64> {
        PasepParams { q: self.q.to_f64_lossy(), alpha: self.alpha.to_f64_lossy(), beta: self.beta.to_f64_lossy() }
    }
}

impl PasepParams<Rational> {
    pub fn ones() -> Self {
        PasepParams::new(Rational::one(), Rational::one(), Rational::one())
    }
}

impl<C: fmt::Display> fmt::Display for PasepParams<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} alpha={} beta={}", self.q, self.alpha, self.beta)
    }
}

/// The four kinds of PASEP transitions, which fix the rate numerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RateKind {
    /// `α/(N+1)`
    Alpha,
    /// `β/(N+1)`
    Beta,
    /// `1/(N+1)`
    One,
    /// `q/(N+1)`
    Q,
}

impl RateKind {
    pub fn numerator(self) -> Exponents {
        match self {
            RateKind::Alpha => Exponents::new(0, 1, 0),
            RateKind::Beta => Exponents::new(0, 0, 1),
            RateKind::One => Exponents::ZERO,
            RateKind::Q => Exponents::new(1, 0, 0),
        }
    }

    /// `numerator / (n_sites + 1)`.
    pub fn rate(self, n_sites: usize) -> Mono {
        Monomial::new(Rational::new(1.into(), (n_sites as i64 + 1).into()), self.numerator())
    }

    /// Which kind a scaled monomial rate is, if any.
    pub fn classify(rate: &Mono, n_sites: usize) -> Option<RateKind> {
        [RateKind::Alpha, RateKind::Beta, RateKind::One, RateKind::Q]
            .into_iter()
            .find(|k| k.rate(n_sites) == *rate)
    }

    /// Edge label used in state diagrams.
    pub fn label(self) -> &'static str {
        match self {
            RateKind::Alpha => "a/(N+1)",
            RateKind::Beta => "b/(N+1)",
            RateKind::One => "1/(N+1)",
            RateKind::Q => "q/(N+1)",
        }
    }

    /// The kind under the particle-hole exchange `α ↔ β`.
    pub fn swapped(self) -> RateKind {
        match self {
            RateKind::Alpha => RateKind::Beta,
            RateKind::Beta => RateKind::Alpha,
            k => k,
        }
    }
}

/// One off-diagonal PASEP transition.
#[derive(Clone, Debug, PartialEq)]
pub struct PasepTransition {
    pub target: PasepState,
    pub kind: RateKind,
    pub rate: Mono,
}

/// All transitions `X → Y` with `Y ≠ X`. The self-loop probability is
/// `1 - Σ rates` and is never listed.
///
/// Order: entry at site 1, then hops by site pair left to right, then exit
/// at site `N`.
pub fn pasep_transitions(x: &PasepState) -> Vec<PasepTransition> {
    let n = x.len();
    let mut out = Vec::new();
    let mut push = |target: PasepState, kind: RateKind| {
        out.push(PasepTransition { target, kind, rate: kind.rate(n) });
    };
    if !x.occupied(1) {
        push(x.with_sites(&[(1, true)]), RateKind::Alpha);
    }
    for k in 1..n {
        match (x.occupied(k), x.occupied(k + 1)) {
            (true, false) => push(x.with_sites(&[(k, false), (k + 1, true)]), RateKind::One),
            (false, true) => push(x.with_sites(&[(k, true), (k + 1, false)]), RateKind::Q),
            _ => {}
        }
    }
    if x.occupied(n) {
        push(x.with_sites(&[(n, false)]), RateKind::Beta);
    }
    out
}

/// `(1-τ_N, …, 1-τ_1)`.
pub fn particle_hole(x: &PasepState) -> PasepState {
    x.particle_hole()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::Poly;

    fn st(s: &str) -> PasepState {
        s.parse().unwrap()
    }

    fn targets(x: &str) -> Vec<(String, RateKind)> {
        pasep_transitions(&st(x)).into_iter().map(|t| (t.target.to_string(), t.kind)).collect()
    }

    #[test]
    fn transition_examples() {
        assert_eq!(targets("10"), vec![("01".to_string(), RateKind::One)]);
        assert_eq!(targets("00"), vec![("10".to_string(), RateKind::Alpha)]);
        assert_eq!(targets("1"), vec![("0".to_string(), RateKind::Beta)]);
        let t = &pasep_transitions(&st("1"))[0];
        assert_eq!(t.rate, Monomial::new(ratio(1, 2), Exponents::new(0, 0, 1)));
        let t = &pasep_transitions(&st("00"))[0];
        assert_eq!(t.rate, Monomial::new(ratio(1, 3), Exponents::new(0, 1, 0)));
    }

    #[test]
    fn n2_diagram_edges() {
        // six directed transitions; 10 <-> 01 share a pair, so five linked pairs
        let mut pairs = std::collections::BTreeSet::new();
        let mut directed = 0;
        for x in PasepState::all(2) {
            for t in pasep_transitions(&x) {
                directed += 1;
                pairs.insert(if x < t.target { (x.clone(), t.target) } else { (t.target, x.clone()) });
            }
        }
        assert_eq!(directed, 6);
        assert_eq!(pairs.len(), 5);
    }

    #[test]
    fn out_rate_is_a_probability_at_box_corners() {
        let corners = [ratio(0, 1), ratio(1, 2), ratio(1, 1)];
        for n in 1..=6 {
            for x in PasepState::all(n) {
                let total: Poly = pasep_transitions(&x).iter().map(|t| t.rate.to_poly()).sum();
                for q in &corners {
                    for a in &corners[1..] {
                        for b in &corners[1..] {
                            assert!(total.eval(q, a, b).unwrap() <= ratio(1, 1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn particle_hole_maps_transitions_with_alpha_beta_swapped() {
        for n in 1..=6 {
            for x in PasepState::all(n) {
                let mut direct: Vec<(PasepState, RateKind)> = pasep_transitions(&x)
                    .into_iter()
                    .map(|t| (t.target.particle_hole(), t.kind.swapped()))
                    .collect();
                let mut mirrored: Vec<(PasepState, RateKind)> =
                    pasep_transitions(&x.particle_hole()).into_iter().map(|t| (t.target, t.kind)).collect();
                direct.sort();
                mirrored.sort();
                assert_eq!(direct, mirrored, "{x}");
            }
        }
    }

    #[test]
    fn parameter_box() {
        assert!(PasepParams::new(ratio(0, 1), ratio(1, 1), ratio(1, 3)).validate().is_ok());
        assert!(PasepParams::new(ratio(3, 2), ratio(1, 1), ratio(1, 3)).validate().is_err());
        assert!(PasepParams::new(ratio(1, 2), ratio(0, 1), ratio(1, 3)).validate().is_err());
        assert!(PasepParams::new(ratio(1, 2), ratio(1, 2), ratio(-1, 3)).validate().is_err());
        assert!(PasepParams::new(0.5f64, 1.0, 0.25).validate().is_ok());
    }
}
