//! Exhaustive verification suites. Each returns a [`Report`] whose
//! `violations` list is empty on success.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::analysis::{
    fiber_stationary, pasep_system, perm_system, pt_system, stationary_exact, verify_balance, verify_projection,
    ChainState, Report, TransitionSystem,
};
use crate::error::{Error, Result};
use crate::involution::{invol_perm, invol_tableau};
use crate::pasep::{PasepParams, RateKind};
use crate::perm::{boundary_labels, phi, project_perm, Permutation, PhiTable};
use crate::pt_chain::state_class;
use crate::tableaux::{f_lambda, shape_from_state, PasepState, PermutationTableau};
use crate::{Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Balance,
    Projection,
    Bijection,
    Involution,
    Outrates,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Balance, Suite::Projection, Suite::Bijection, Suite::Involution, Suite::Outrates];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Balance => "balance",
            Suite::Projection => "projection",
            Suite::Bijection => "bijection",
            Suite::Involution => "involution",
            Suite::Outrates => "outrates",
        }
    }

    /// Run with the suite's own reading of `n_max`: the number of sites for
    /// chain suites, the permutation size for the bijection and involution.
    pub fn run(self, n_max: usize) -> Result<Report> {
        match self {
            Suite::Balance => balance_suite(n_max),
            Suite::Projection => projection_suite(n_max, crate::analysis::DEFAULT_T_MAX, &default_params()),
            Suite::Bijection => Ok(bijection_suite(n_max)),
            Suite::Involution => involution_suite(n_max),
            Suite::Outrates => outrates_suite(n_max),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::BadState(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The parameter point used where a suite needs one.
pub fn default_params() -> PasepParams {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    PasepParams::new(r(1, 3), r(2, 5), r(3, 4))
}

/// `count` seeded points of the box with `0 <= q <= 1`, `0 < α, β <= 1`
/// and denominators up to 12.
pub fn sample_params(seed: u64, count: usize) -> Vec<PasepParams> {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut draw = |positive: bool| {
        let den: i64 = rng.random_range(1..=12);
        let num: i64 = rng.random_range(if positive { 1 } else { 0 }..=den);
        Rational::new(num.into(), den.into())
    };
    (0..count).map(|_| PasepParams::new(draw(false), draw(true), draw(true))).collect()
}

fn tableau_weight(t: &PermutationTableau) -> Poly {
    t.weight().to_poly()
}

fn perm_weight(p: &Permutation) -> Poly {
    let s = p.stats();
    Poly::monomial(s.crossings as i32, -(s.f as i32), -(s.u as i32))
}

/// The balance equations, symbolically, for `N = 1..=n_max`: the PT chain
/// with tableau weights, the permutation chain with permutation weights,
/// and the PASEP with the generating functions `F_λ`.
pub fn balance_suite(n_max: usize) -> Result<Report> {
    let mut report = Report::new("balance");
    for n in 1..=n_max {
        let pt = pt_system(n)?;
        report.merge(verify_balance(&pt, tableau_weight).to_report(&pt));
        let perm = perm_system(n)?;
        report.merge(verify_balance(&perm, perm_weight).to_report(&perm));
        let pasep = pasep_system(n)?;
        report.merge(verify_balance(&pasep, |x| f_lambda(&shape_from_state(x))).to_report(&pasep));
    }
    Ok(report)
}

/// Projection of the PT and permutation chains onto the PASEP for
/// `N = 1..=n_max`, edge by edge and for time-`t` laws up to `t_max`, and
/// fiber sums of the stationary laws.
pub fn projection_suite(n_max: usize, t_max: usize, params: &PasepParams) -> Result<Report> {
    let mut report = Report::new("projection");
    for n in 1..=n_max {
        let pasep = pasep_system(n)?;
        let pt = pt_system(n)?;
        let perm = perm_system(n)?;
        report.merge(verify_projection(&pt, &pasep, |t| t.word(), t_max, params)?);
        report.merge(verify_projection(&perm, &pasep, |p| p.word(), t_max, params)?);
        for (label, (summed, direct)) in [
            ("pt", fiber_stationary(&pt, &pasep, |t| t.word(), params)?),
            ("perm", fiber_stationary(&perm, &pasep, |p| p.word(), params)?),
        ] {
            report.check(
                summed == direct,
                "stationary fiber sums",
                || format!("{label} N={n}"),
                || "fiber sums differ from the PASEP law".into(),
            );
        }
    }
    Ok(report)
}

/// `Φ` on half-perimeters `1..=n_max`: a bijection onto `S_n` carrying
/// `rk, f, u` to crossings and special extrema, row labels to weak
/// excedances, and empty rows to fixed points. The worked example of
/// half-perimeter 8 is always checked.
pub fn bijection_suite(n_max: usize) -> Report {
    let mut report = Report::new("bijection");
    for n in 1..=n_max {
        let table = PhiTable::build(n);
        let distinct: BTreeSet<&Permutation> = table.perms().iter().collect();
        let factorial: usize = (1..=n).product();
        report.check(
            table.tableaux().len() == factorial && distinct.len() == factorial,
            "bijection",
            || format!("n={n}"),
            || format!("{} tableaux, {} distinct images, {factorial} permutations", table.tableaux().len(), distinct.len()),
        );
        for (t, p) in table.tableaux().iter().zip(table.perms()) {
            let ts = t.stats();
            let ps = p.stats();
            report.check(
                (ts.rank, ts.f, ts.u) == (ps.crossings, ps.f, ps.u),
                "statistics",
                || t.to_string(),
                || format!("tableau (rk,f,u)=({},{},{}), {p} has ({},{},{})", ts.rank, ts.f, ts.u, ps.crossings, ps.f, ps.u),
            );
            let (rows, _) = boundary_labels(t);
            let vertical: BTreeSet<usize> = rows.iter().copied().collect();
            report.check(ps.weak_excedances == vertical, "weak excedances", || t.to_string(), || p.to_string());
            let empty_rows: BTreeSet<usize> =
                rows.iter().enumerate().filter(|&(r, _)| !t.rows()[r].contains(&true)).map(|(_, &l)| l).collect();
            report.check(ps.fixed_points == empty_rows, "fixed points", || t.to_string(), || p.to_string());
        }
    }
    let example = worked_example();
    let p = phi(&example);
    report.check(p.images() == [7, 4, 8, 3, 6, 2, 1, 5], "worked example", || example.to_string(), || p.to_string());
    report
}

/// The tableau of shape `(4,4,4,3)` whose image is `74836215`.
pub fn worked_example() -> PermutationTableau {
    PermutationTableau::from_bits(&[4, 4, 4, 3], &[&[1, 1, 0, 0], &[0, 0, 1, 0], &[1, 1, 1, 1], &[0, 0, 1]])
        .expect("a valid tableau")
}

/// The involution on `S_n` and on tableaux of half-perimeter `n`, for
/// `n <= n_max`, and on the chains with `N <= n_max - 1` sites.
pub fn involution_suite(n_max: usize) -> Result<Report> {
    let mut report = Report::new("involution");
    for n in 1..=n_max {
        for p in Permutation::all(n) {
            let bar = invol_perm(&p);
            report.check(invol_perm(&bar) == p, "I is an involution", || p.to_string(), || bar.to_string());
            let (s, sb) = (p.stats(), bar.stats());
            report.check(
                s.crossings == sb.crossings && s.u == sb.f && s.f == sb.u,
                "statistics exchanged",
                || p.to_string(),
                || format!("(cr,f,u) ({},{},{}) vs ({},{},{})", s.crossings, s.f, s.u, sb.crossings, sb.f, sb.u),
            );
            let (w, wb) = (perm_weight(&p), perm_weight(&bar).swap_alpha_beta());
            report.check(w == wb, "weights exchanged", || p.to_string(), || format!("{w} vs {wb}"));
            if n >= 2 {
                let (x, xb) = (project_perm(&p)?, project_perm(&bar)?);
                report.check(
                    x == xb.particle_hole(),
                    "projection reflected",
                    || p.to_string(),
                    || format!("{x} vs {xb}"),
                );
            }
        }
        for t in crate::tableaux::enumerate_tableaux(n) {
            let bar = invol_tableau(&t);
            report.check(phi(&bar) == invol_perm(&phi(&t)), "compatible with phi", || t.to_string(), || bar.to_string());
            report.check(invol_tableau(&bar) == t, "tableau involution", || t.to_string(), || bar.to_string());
        }
    }
    for n in 1..n_max {
        report.merge(automorphism(&perm_system(n)?, invol_perm, "permutation chain"));
        report.merge(automorphism(&pt_system(n)?, invol_tableau, "PT chain"));
        for tau in PasepState::all(n) {
            let lhs = f_lambda(&shape_from_state(&tau)).swap_alpha_beta();
            let rhs = f_lambda(&shape_from_state(&tau.particle_hole()));
            report.check(lhs == rhs, "generating functions exchanged", || tau.to_string(), || format!("{lhs} vs {rhs}"));
        }
    }
    Ok(report)
}

/// Checks that `s → t` is an edge of kind `k` exactly when `f(s) → f(t)` is
/// an edge of kind `k` with `α` and `β` exchanged.
pub fn automorphism<S: ChainState>(sys: &TransitionSystem<S>, f: impl Fn(&S) -> S, label: &str) -> Report {
    let mut report = Report::new("automorphism");
    let image: Vec<Option<usize>> = sys.states().iter().map(|s| sys.index_of(&f(s))).collect();
    for (i, s) in sys.states().iter().enumerate() {
        let Some(fi) = image[i] else {
            report.check(false, "closed under the map", || s.to_string(), || label.to_string());
            continue;
        };
        let mut mapped: Vec<(Option<usize>, RateKind)> =
            sys.edges(i).iter().map(|e| (image[e.to], e.kind.swapped())).collect();
        let mut direct: Vec<(Option<usize>, RateKind)> = sys.edges(fi).iter().map(|e| (Some(e.to), e.kind)).collect();
        mapped.sort();
        direct.sort();
        report.check(
            mapped == direct,
            "edge-labelled automorphism",
            || format!("{label} N={} at {s}", sys.n_sites()),
            || format!("{} mapped edges, {} edges at the image", mapped.len(), direct.len()),
        );
    }
    report
}

/// Total out-rates of every state of the three chains against the four
/// class formulas, for `N = 1..=n_max`.
pub fn outrates_suite(n_max: usize) -> Result<Report> {
    let mut report = Report::new("outrates");
    for n in 1..=n_max {
        out_rates(&mut report, &pasep_system(n)?, "PASEP")?;
        out_rates(&mut report, &pt_system(n)?, "PT chain")?;
        out_rates(&mut report, &perm_system(n)?, "permutation chain")?;
    }
    Ok(report)
}

fn out_rates<S: ChainState>(report: &mut Report, sys: &TransitionSystem<S>, label: &str) -> Result<()> {
    for (i, s) in sys.states().iter().enumerate() {
        let (class, pairs) = state_class(&s.word())?;
        let expected = class.out_rate(pairs, sys.n_sites());
        let actual = sys.out_rate(i);
        report.check(
            expected == actual,
            "out-rate formula",
            || format!("{label} {s}"),
            || format!("class {} expects {expected}, got {actual}", class.number()),
        );
    }
    Ok(())
}

/// The PASEP stationary law against `F_λ(τ) / Z_N` at `params`.
pub fn stationary_formula(n: usize, params: &PasepParams) -> Result<Report> {
    let mut report = Report::new("stationary");
    let sys = pasep_system(n)?;
    let law = stationary_exact(&sys, params)?;
    let z = crate::analysis::partition_function(n)?.eval(&params.q, &params.alpha, &params.beta)?;
    for (i, tau) in sys.states().iter().enumerate() {
        let f = f_lambda(&shape_from_state(tau)).eval(&params.q, &params.alpha, &params.beta)?;
        let expected = f / z.clone();
        report.check(
            *law.get(i) == expected,
            "stationary law",
            || format!("N={n} {tau} at {params}"),
            || format!("solved {}, formula {expected}", law.get(i)),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let r = suite.run(3).unwrap();
            assert!(r.passed(), "{suite}: {:?}", r.violations.first());
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn sampled_points_lie_in_the_box() {
        let points = sample_params(11, 50);
        assert_eq!(points, sample_params(11, 50));
        for p in points {
            p.validate().unwrap();
        }
    }

    #[test]
    fn stationary_formula_holds_for_small_chains() {
        for p in sample_params(5, 3) {
            for n in 1..=3 {
                assert!(stationary_formula(n, &p).unwrap().passed());
            }
        }
    }

    #[test]
    fn automorphism_detects_a_broken_map() {
        let sys = perm_system(2).unwrap();
        let r = automorphism(&sys, |p| p.clone(), "identity");
        assert!(!r.passed());
    }
}
