use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::pasep::PasepParams;
use crate::Rational;

use super::system::{ChainState, StochasticMatrix, TransitionSystem};

/// Probabilities indexed like the states of a system.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution<C = Rational> {
    probs: Vec<C>,
}

impl<C: Field> Distribution<C> {
    /// Normalizes `weights`, which must be nonnegative with a nonzero sum.
    pub fn from_weights(weights: Vec<C>) -> Result<Self> {
        if weights.iter().any(|w| !w.is_nonnegative()) {
            return Err(Error::BadState("negative weight".into()));
        }
        let total = weights.iter().fold(C::zero(), |acc, w| acc + w.clone());
        let inv = total.checked_inv().ok_or(Error::Singular)?;
        Ok(Distribution { probs: weights.into_iter().map(|w| w * inv.clone()).collect() })
    }

    pub fn uniform(n: usize) -> Self {
        let p = C::one() / C::from_i64(n as i64);
        Distribution { probs: vec![p; n] }
    }

    pub fn probs(&self) -> &[C] {
        &self.probs
    }

    pub fn get(&self, i: usize) -> &C {
        &self.probs[i]
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Half the `L1` distance, in floating point.
    pub fn tv_distance<D: Field>(&self, other: &Distribution<D>) -> f64 {
        assert_eq!(self.len(), other.len(), "distributions over different state sets");
        0.5 * self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| (a.to_f64_lossy() - b.to_f64_lossy()).abs())
            .sum::<f64>()
    }

    /// Sum over the fibers of `f`, which maps state indices into `0..m`.
    pub fn push_forward(&self, m: usize, f: impl Fn(usize) -> usize) -> Distribution<C> {
        let mut probs = vec![C::zero(); m];
        for (i, p) in self.probs.iter().enumerate() {
            let j = f(i);
            probs[j] = probs[j].clone() + p.clone();
        }
        Distribution { probs }
    }
}

/// The stationary law of `sys` at `params` by exact elimination.
///
/// The result is checked to satisfy `π P = π` exactly.
pub fn stationary_exact<S: ChainState>(sys: &TransitionSystem<S>, params: &PasepParams) -> Result<Distribution> {
    let m = sys.instantiate(params)?;
    if !m.is_irreducible() {
        return Err(Error::Singular);
    }
    let x = solve_left_fixed_vector(&m)?;
    if m.step(&x) != x {
        return Err(Error::Singular);
    }
    Distribution::from_weights(x)
}

/// The stationary law over any field, without the exact residual check.
pub fn stationary<S: ChainState, C: Field>(sys: &TransitionSystem<S>, params: &PasepParams<C>) -> Result<Distribution<C>> {
    let m = sys.instantiate(params)?;
    if !m.is_irreducible() {
        return Err(Error::Singular);
    }
    Distribution::from_weights(solve_left_fixed_vector(&m)?)
}

/// A nonzero `x` with `x P = x`, scaled so that `x[0] = 1`.
///
/// Solves `x (P - I) = 0` with `x[0]` fixed, dropping the equation of
/// state 0, by sparse elimination. Pivots are chosen among the shortest
/// candidate rows to limit fill-in.
pub fn solve_left_fixed_vector<C: Field>(m: &StochasticMatrix<C>) -> Result<Vec<C>> {
    let n = m.len();
    if n == 0 {
        return Err(Error::Singular);
    }
    if n == 1 {
        return Ok(vec![C::one()]);
    }
    // equation j: Σ_i x_i (P - I)_{ij} = 0, unknowns x_1..x_{n-1}
    let mut eqs: Vec<BTreeMap<usize, C>> = vec![BTreeMap::new(); n];
    let mut rhs: Vec<C> = vec![C::zero(); n];
    for i in 0..n {
        for (j, p) in m.row(i) {
            let v = if i == *j { p.clone() - C::one() } else { p.clone() };
            if v.is_zero() || *j == 0 {
                continue;
            }
            if i == 0 {
                rhs[*j] = rhs[*j].clone() - v;
            } else {
                eqs[*j].insert(i, v);
            }
        }
    }
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (j, eq) in eqs.iter().enumerate().skip(1) {
        for &i in eq.keys() {
            col_rows[i].insert(j);
        }
    }

    let mut pivots: Vec<(usize, BTreeMap<usize, C>, C)> = Vec::with_capacity(n - 1);
    for col in 1..n {
        let r = *col_rows[col].iter().min_by_key(|&&r| (eqs[r].len(), r)).ok_or(Error::Singular)?;
        let pivot_row = std::mem::take(&mut eqs[r]);
        let pivot_rhs = std::mem::replace(&mut rhs[r], C::zero());
        for &c in pivot_row.keys() {
            col_rows[c].remove(&r);
        }
        let pivot = pivot_row[&col].clone();
        let others: Vec<usize> = col_rows[col].iter().copied().collect();
        for o in others {
            let factor = eqs[o][&col].clone() / pivot.clone();
            for (c, v) in &pivot_row {
                let entry = eqs[o].get(c).cloned().unwrap_or_else(C::zero) - factor.clone() * v.clone();
                if entry.is_zero() {
                    eqs[o].remove(c);
                    col_rows[*c].remove(&o);
                } else {
                    eqs[o].insert(*c, entry);
                    col_rows[*c].insert(o);
                }
            }
            rhs[o] = rhs[o].clone() - factor * pivot_rhs.clone();
        }
        pivots.push((col, pivot_row, pivot_rhs));
    }

    let mut x = vec![C::zero(); n];
    x[0] = C::one();
    for (col, row, b) in pivots.into_iter().rev() {
        let mut acc = b;
        for (c, v) in &row {
            if *c != col {
                acc = acc - v.clone() * x[*c].clone();
            }
        }
        x[col] = acc / row[&col].clone();
    }
    Ok(x)
}
