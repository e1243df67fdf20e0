use serde::Serialize;

use crate::Poly;

use super::report::Report;
use super::system::{ChainState, TransitionSystem};

/// A state whose balance equation fails, with both sides.
#[derive(Clone, Debug, PartialEq)]
pub struct BalanceViolation {
    pub state: usize,
    pub inflow: Poly,
    pub outflow: Poly,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BalanceReport {
    pub states: usize,
    pub violations: Vec<BalanceViolation>,
}

impl BalanceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// As a generic report, naming states through `sys`.
    pub fn to_report<S: ChainState>(&self, sys: &TransitionSystem<S>) -> Report {
        #[derive(Serialize)]
        struct Sides<'a> {
            inflow: &'a str,
            outflow: &'a str,
        }
        let mut r = Report::new("balance");
        r.checks = self.states;
        for v in &self.violations {
            let (inflow, outflow) = (v.inflow.to_string(), v.outflow.to_string());
            let detail = serde_json::to_string(&Sides { inflow: &inflow, outflow: &outflow }).expect("plain strings");
            r.violations.push(super::report::Violation {
                check: format!("balance N={}", sys.n_sites()),
                subject: sys.states()[v.state].to_string(),
                detail,
            });
        }
        r
    }
}

/// Checks `Σ_Q wt(Q) rate(Q→T) = wt(T) Σ_S rate(T→S)` at every state `T`
/// as an identity of Laurent polynomials.
pub fn verify_balance<S: ChainState>(sys: &TransitionSystem<S>, weight: impl Fn(&S) -> Poly) -> BalanceReport {
    let weights: Vec<Poly> = sys.states().iter().map(weight).collect();
    let incoming = sys.in_edges();
    let mut report = BalanceReport { states: sys.len(), violations: Vec::new() };
    for (t, ins) in incoming.iter().enumerate() {
        let inflow: Poly = ins.iter().map(|(from, e)| weights[*from].clone() * e.rate.to_poly()).sum();
        let outflow = weights[t].clone() * sys.out_rate(t);
        if inflow != outflow {
            report.violations.push(BalanceViolation { state: t, inflow, outflow });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::analysis::system::{pasep_system, perm_system, pt_system};
    use crate::tableaux::{f_lambda, shape_from_state};
    use std::collections::BTreeSet;

    #[test]
    fn tableau_weights_balance() {
        for n in 1..=4 {
            let sys = pt_system(n).unwrap();
            assert!(verify_balance(&sys, |t| t.weight().to_poly()).passed(), "N={n}");
        }
    }

    #[test]
    fn permutation_weights_balance() {
        for n in 1..=4 {
            let sys = perm_system(n).unwrap();
            let r = verify_balance(&sys, |p| {
                let s = p.stats();
                Poly::monomial(s.crossings as i32, -(s.f as i32), -(s.u as i32))
            });
            assert!(r.passed(), "N={n}");
        }
    }

    #[test]
    fn generating_functions_balance_the_pasep() {
        for n in 1..=5 {
            let sys = pasep_system(n).unwrap();
            assert!(verify_balance(&sys, |x| f_lambda(&shape_from_state(x))).passed(), "N={n}");
        }
    }

    #[test]
    fn two_state_chain_by_hand() {
        // α wt(T0) = β wt(T1) with wt(T0) = β^-1, wt(T1) = α^-1, both sides 1/2
        let sys = pt_system(1).unwrap();
        let r = verify_balance(&sys, |t| t.weight().to_poly());
        assert!(r.passed());
        for (i, t) in sys.states().iter().enumerate() {
            let flow = t.weight().to_poly() * sys.out_rate(i);
            assert_eq!(flow, Poly::constant(ratio(1, 2)));
        }
    }

    #[test]
    fn corrupted_weight_flags_its_out_neighbourhood() {
        let sys = pt_system(3).unwrap();
        for bad in [0, 7, 23] {
            let r = verify_balance(&sys, |t| {
                let w = t.weight().to_poly();
                if sys.index_of(t) == Some(bad) {
                    w * Poly::q()
                } else {
                    w
                }
            });
            let flagged: BTreeSet<usize> = r.violations.iter().map(|v| v.state).collect();
            let mut expected: BTreeSet<usize> = sys.edges(bad).iter().map(|e| e.to).collect();
            expected.insert(bad);
            assert_eq!(flagged, expected);
        }
    }
}
