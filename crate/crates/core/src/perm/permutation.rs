use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableaux::PasepState;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::BadPermutation(format!("{images:?} is not a rearrangement of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot has a successor");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `π(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn is_weak_excedance(&self, i: usize) -> bool {
        self.at(i) >= i
    }

    pub fn weak_excedances(&self) -> BTreeSet<usize> {
        (1..=self.len()).filter(|&i| self.is_weak_excedance(i)).collect()
    }

    pub fn fixed_points(&self) -> BTreeSet<usize> {
        (1..=self.len()).filter(|&i| self.at(i) == i).collect()
    }

    /// Pairs `i < j` with `i < j <= π(i) < π(j)` or `π(i) < π(j) < i < j`.
    pub fn crossings(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                let (pi, pj) = (self.at(i), self.at(j));
                if (j <= pi && pi < pj) || (pi < pj && pj < i) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Left-to-right maxima exceeding `π(1)`.
    pub fn special_lr_maxima(&self) -> BTreeSet<usize> {
        let first = self.at(1);
        let mut best = 0;
        let mut out = BTreeSet::new();
        for i in 1..=self.len() {
            let v = self.at(i);
            if v > best {
                best = v;
                if v > first {
                    out.insert(i);
                }
            }
        }
        out
    }

    /// Right-to-left minima below `π(1)`.
    pub fn special_rl_minima(&self) -> BTreeSet<usize> {
        let first = self.at(1);
        let mut best = usize::MAX;
        let mut out = BTreeSet::new();
        for i in (1..=self.len()).rev() {
            let v = self.at(i);
            if v < best {
                best = v;
                if v < first {
                    out.insert(i);
                }
            }
        }
        out
    }

    pub fn stats(&self) -> PermStats {
        PermStats {
            crossings: self.crossings(),
            f: self.special_rl_minima().len(),
            u: self.special_lr_maxima().len(),
            weak_excedances: self.weak_excedances(),
            fixed_points: self.fixed_points(),
        }
    }
}

/// Statistics carried over from tableaux: `rk` is the crossing count, `f`
/// the number of special right-to-left minima, `u` the number of special
/// left-to-right maxima.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermStats {
    pub crossings: usize,
    pub f: usize,
    pub u: usize,
    pub weak_excedances: BTreeSet<usize>,
    pub fixed_points: BTreeSet<usize>,
}

pub fn perm_stats(p: &Permutation) -> PermStats {
    p.stats()
}

/// `pr(π)`: site `i` is occupied iff `i+1` is a weak excedance.
pub fn project_perm(p: &Permutation) -> Result<PasepState> {
    PasepState::new((2..=p.len()).map(|i| p.is_weak_excedance(i)).collect())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma-separated one-line notation; a bare digit string is accepted
    /// for `n <= 9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadPermutation(s.to_string());
        let images: Vec<usize> = if s.contains(',') {
            s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        if images.is_empty() {
            return Err(bad());
        }
        Permutation::new(images)
    }
}

/// A label of a generalized permutation. Labels are stored doubled, so
/// integers are even and the half-integers `i + 1/2` are odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(i64);

impl Label {
    pub fn int(i: usize) -> Label {
        Label(2 * i as i64)
    }

    /// `i + 1/2`.
    pub fn half_after(i: usize) -> Label {
        Label(2 * i as i64 + 1)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}+1/2", self.0 / 2)
        }
    }
}

/// A bijection of an ordered finite label set onto itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPermutation {
    map: BTreeMap<Label, Label>,
}

impl LabeledPermutation {
    pub fn new(map: BTreeMap<Label, Label>) -> Result<Self> {
        let values: BTreeSet<_> = map.values().collect();
        if values.len() != map.len() || values.iter().any(|v| !map.contains_key(v)) {
            return Err(Error::BadPermutation("map is not a bijection of its ground set".into()));
        }
        Ok(LabeledPermutation { map })
    }

    /// Build from `(label, image)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Label, Label)>) -> Result<Self> {
        Self::new(pairs.into_iter().collect())
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        LabeledPermutation {
            map: p.images().iter().enumerate().map(|(i, &v)| (Label::int(i + 1), Label::int(v))).collect(),
        }
    }

    /// Ground set in increasing order.
    pub fn ground(&self) -> Vec<Label> {
        self.map.keys().copied().collect()
    }

    pub fn get(&self, l: Label) -> Option<Label> {
        self.map.get(&l).copied()
    }

    fn preimage(&self, l: Label) -> Label {
        *self.map.iter().find(|(_, v)| **v == l).expect("bijection").0
    }

    /// The collapse at `i`: drop `i` from the ground set and send
    /// `π⁻¹(i)` to `π(i)`.
    pub fn collapse(&self, i: Label) -> Result<Self> {
        let image = self.get(i).ok_or_else(|| Error::UnknownLabel(i.to_string()))?;
        if image == i {
            return Err(Error::CollapseAtFixedPoint(i.to_string()));
        }
        let pre = self.preimage(i);
        let mut map = self.map.clone();
        map.remove(&i);
        map.insert(pre, image);
        Ok(LabeledPermutation { map })
    }

    /// Drop a fixed point from the ground set.
    pub fn remove_fixed_point(&self, i: Label) -> Result<Self> {
        match self.get(i) {
            Some(v) if v == i => {
                let mut map = self.map.clone();
                map.remove(&i);
                Ok(LabeledPermutation { map })
            }
            Some(_) => Err(Error::BadPermutation(format!("{i} is not a fixed point"))),
            None => Err(Error::UnknownLabel(i.to_string())),
        }
    }

    /// Add a new fixed point. The label must be fresh.
    pub fn insert_fixed_point(&self, i: Label) -> Result<Self> {
        if self.map.contains_key(&i) {
            return Err(Error::BadPermutation(format!("{i} is already in the ground set")));
        }
        let mut map = self.map.clone();
        map.insert(i, i);
        Ok(LabeledPermutation { map })
    }

    /// Redirect `from ↦ π(from)` through a fresh label: `from ↦ fresh ↦ π(from)`.
    pub fn splice(&self, from: Label, fresh: Label) -> Result<Self> {
        let image = self.get(from).ok_or_else(|| Error::UnknownLabel(from.to_string()))?;
        if self.map.contains_key(&fresh) {
            return Err(Error::BadPermutation(format!("{fresh} is already in the ground set")));
        }
        let mut map = self.map.clone();
        map.insert(from, fresh);
        map.insert(fresh, image);
        Ok(LabeledPermutation { map })
    }

    /// The order-isomorphic permutation of `{1..n}`.
    pub fn normalize(&self) -> Permutation {
        let rank: BTreeMap<Label, usize> = self.map.keys().enumerate().map(|(i, l)| (*l, i + 1)).collect();
        Permutation { images: self.map.values().map(|v| rank[v]).collect() }
    }
}

impl fmt::Display for LabeledPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.map.values().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

pub fn collapse(p: &LabeledPermutation, i: Label) -> Result<LabeledPermutation> {
    p.collapse(i)
}

pub fn normalize(p: &LabeledPermutation) -> Permutation {
    p.normalize()
}
