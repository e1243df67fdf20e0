use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::pasep::{pasep_transitions, PasepParams, RateKind};
use crate::perm::{perm_transitions, project_perm, Permutation};
use crate::pt_chain::pt_transitions;
use crate::tableaux::{enumerate_tableaux, PasepState, PermutationTableau};
use crate::{Mono, Poly};

/// A state of one of the three chains.
pub trait ChainState: Clone + Eq + Hash + fmt::Display + Send + Sync {
    /// The PASEP word this state lies over.
    fn word(&self) -> PasepState;

    /// Node label for state diagrams.
    fn node_label(&self) -> String {
        format!("{}\\n{}", self.word(), self)
    }
}

impl ChainState for PasepState {
    fn word(&self) -> PasepState {
        self.clone()
    }

    fn node_label(&self) -> String {
        self.to_string()
    }
}

impl ChainState for PermutationTableau {
    fn word(&self) -> PasepState {
        PermutationTableau::project(self).expect("chain states have at least one site")
    }
}

impl ChainState for Permutation {
    fn word(&self) -> PasepState {
        project_perm(self).expect("chain states have at least one site")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Pasep,
    Pt,
    Perm,
}

impl FromStr for ChainKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pasep" => Ok(ChainKind::Pasep),
            "pt" => Ok(ChainKind::Pt),
            "perm" => Ok(ChainKind::Perm),
            _ => Err(Error::BadState(format!("unknown chain {s:?}; expected pasep, pt or perm"))),
        }
    }
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainKind::Pasep => "pasep",
            ChainKind::Pt => "pt",
            ChainKind::Perm => "perm",
        })
    }
}

/// An off-diagonal transition.
#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub to: usize,
    pub kind: RateKind,
    pub rate: Mono,
}

/// A finite chain with symbolic rates. Self-loops are implicit.
#[derive(Clone, Debug)]
pub struct TransitionSystem<S> {
    states: Vec<S>,
    index: HashMap<S, usize>,
    edges: Vec<Vec<Edge>>,
    n_sites: usize,
}

impl<S: ChainState> TransitionSystem<S> {
    /// Close `states` under `moves`; every target must already be a state.
    pub fn build(states: Vec<S>, n_sites: usize, moves: impl Fn(&S) -> Vec<(S, RateKind)>) -> Result<Self> {
        let index: HashMap<S, usize> = states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        if index.len() != states.len() {
            return Err(Error::BadState("duplicate states".into()));
        }
        let mut edges = Vec::with_capacity(states.len());
        for s in &states {
            let mut out: Vec<Edge> = Vec::new();
            for (target, kind) in moves(s) {
                let to = *index
                    .get(&target)
                    .ok_or_else(|| Error::BadState(format!("{s} moves to {target}, which is not a state")))?;
                if to == *index.get(s).expect("indexed") || out.iter().any(|e| e.to == to) {
                    return Err(Error::BadState(format!("{s} has a repeated or looping move to {target}")));
                }
                out.push(Edge { to, kind, rate: kind.rate(n_sites) });
            }
            edges.push(out);
        }
        Ok(TransitionSystem { states, index, edges, n_sites })
    }

    pub fn states(&self) -> &[S] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn index_of(&self, s: &S) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn edges(&self, from: usize) -> &[Edge] {
        &self.edges[from]
    }

    pub fn num_edges(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn rate(&self, from: usize, to: usize) -> Option<&Edge> {
        self.edges[from].iter().find(|e| e.to == to)
    }

    pub fn out_rate(&self, from: usize) -> Poly {
        self.edges[from].iter().map(|e| e.rate.to_poly()).sum()
    }

    /// For each state, the `(source, edge)` pairs entering it.
    pub fn in_edges(&self) -> Vec<Vec<(usize, &Edge)>> {
        let mut incoming = vec![Vec::new(); self.len()];
        for (from, out) in self.edges.iter().enumerate() {
            for e in out {
                incoming[e.to].push((from, e));
            }
        }
        incoming
    }

    /// The transition matrix at `params`, diagonal included. Fails unless
    /// every row is a probability vector.
    pub fn instantiate<C: Field>(&self, params: &PasepParams<C>) -> Result<StochasticMatrix<C>> {
        let denom = C::from_i64(self.n_sites as i64 + 1);
        let value = |kind: RateKind| {
            let num = match kind {
                RateKind::Alpha => params.alpha.clone(),
                RateKind::Beta => params.beta.clone(),
                RateKind::One => C::one(),
                RateKind::Q => params.q.clone(),
            };
            num / denom.clone()
        };
        let mut rows = Vec::with_capacity(self.len());
        for (i, out) in self.edges.iter().enumerate() {
            let mut row: Vec<(usize, C)> = out.iter().map(|e| (e.to, value(e.kind))).collect();
            let total = row.iter().fold(C::zero(), |acc, (_, p)| acc + p.clone());
            let stay = C::one() - total;
            if !stay.is_nonnegative() || row.iter().any(|(_, p)| !p.is_nonnegative()) {
                return Err(Error::InvalidParameters(format!("row of {} is not a probability vector", self.states[i])));
            }
            row.push((i, stay));
            row.sort_by_key(|&(j, _)| j);
            rows.push(row);
        }
        Ok(StochasticMatrix { rows })
    }
}

/// A row-sparse transition matrix including the diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct StochasticMatrix<C> {
    rows: Vec<Vec<(usize, C)>>,
}

impl<C: Field> StochasticMatrix<C> {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, i: usize) -> &[(usize, C)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> C {
        self.rows[i].iter().find(|(k, _)| *k == j).map_or_else(C::zero, |(_, p)| p.clone())
    }

    /// Every row nonnegative with sum exactly one.
    pub fn is_row_stochastic(&self) -> bool {
        self.rows.iter().all(|row| {
            row.iter().all(|(_, p)| p.is_nonnegative())
                && row.iter().fold(C::zero(), |acc, (_, p)| acc + p.clone()) == C::one()
        })
    }

    /// Whether the positive entries connect every state to every other.
    pub fn is_irreducible(&self) -> bool {
        let n = self.len();
        let mut reverse = vec![Vec::new(); n];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, p) in row {
                if !p.is_zero() {
                    reverse[*j].push(i);
                }
            }
        }
        let reaches_all = |next: &dyn Fn(usize) -> Vec<usize>| {
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(i) = stack.pop() {
                for j in next(i) {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        let forward = |i: usize| self.rows[i].iter().filter(|(_, p)| !p.is_zero()).map(|&(j, _)| j).collect();
        let backward = |i: usize| reverse[i].clone();
        n == 0 || (reaches_all(&forward) && reaches_all(&backward))
    }

    /// `x P`.
    pub fn step(&self, x: &[C]) -> Vec<C> {
        let mut out = vec![C::zero(); self.len()];
        for (i, row) in self.rows.iter().enumerate() {
            if x[i].is_zero() {
                continue;
            }
            for (j, p) in row {
                out[*j] = out[*j].clone() + x[i].clone() * p.clone();
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<C>> {
        (0..self.len()).map(|i| (0..self.len()).map(|j| self.get(i, j)).collect()).collect()
    }
}

/// The PASEP on `n` sites.
pub fn pasep_system(n: usize) -> Result<TransitionSystem<PasepState>> {
    if n == 0 {
        return Err(Error::NoSites(n));
    }
    TransitionSystem::build(PasepState::all(n), n, |x| {
        pasep_transitions(x).into_iter().map(|t| (t.target, t.kind)).collect()
    })
}

/// The PT chain on tableaux of half-perimeter `n + 1`.
pub fn pt_system(n: usize) -> Result<TransitionSystem<PermutationTableau>> {
    if n == 0 {
        return Err(Error::NoSites(n));
    }
    TransitionSystem::build(enumerate_tableaux(n + 1), n, |t| {
        pt_transitions(t).into_iter().map(|m| (m.target, m.kind.rate_kind())).collect()
    })
}

/// The PT chain carried to `S_{n+1}`.
pub fn perm_system(n: usize) -> Result<TransitionSystem<Permutation>> {
    if n == 0 {
        return Err(Error::NoSites(n));
    }
    TransitionSystem::build(Permutation::all(n + 1), n, |p| {
        perm_transitions(p).into_iter().map(|m| (m.target, m.kind.rate_kind())).collect()
    })
}
