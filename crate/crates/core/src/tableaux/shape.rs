use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A step of the boundary path of a Young diagram, walked from the
/// north-east corner to the south-west corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    South,
    West,
}

/// A Young diagram given by weakly decreasing row lengths, top to bottom.
///
/// Zero-length rows are kept: they are part of the boundary path and so of
/// the half-perimeter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape {
    rows: Vec<usize>,
}

impl Shape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyShape);
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(rows));
        }
        Ok(Shape { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Length of row `r` (0-based); zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        self.rows.get(r).copied().unwrap_or(0)
    }

    pub fn num_cols(&self) -> usize {
        self.rows[0]
    }

    pub fn half_perimeter(&self) -> usize {
        self.num_rows() + self.num_cols()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Height of column `c` (0-based).
    pub fn col_len(&self, c: usize) -> usize {
        self.rows.iter().take_while(|&&len| len > c).count()
    }

    /// Column heights, left to right.
    pub fn conjugate_rows(&self) -> Vec<usize> {
        (0..self.num_cols()).map(|c| self.col_len(c)).collect()
    }

    /// The boundary path, one step per row (south) and per column (west).
    pub fn path(&self) -> Vec<Step> {
        let mut path = Vec::with_capacity(self.half_perimeter());
        for (r, &len) in self.rows.iter().enumerate() {
            path.push(Step::South);
            let next = self.row_len(r + 1);
            path.extend(std::iter::repeat_n(Step::West, len - next));
        }
        path
    }

    /// Rebuild a shape from its boundary path. The path must start south.
    pub fn from_path(path: &[Step]) -> Result<Self> {
        if path.first() != Some(&Step::South) {
            return Err(Error::EmptyShape);
        }
        let total_west = path.iter().filter(|s| **s == Step::West).count();
        let mut west_seen = 0;
        let mut rows = Vec::new();
        for step in path {
            match step {
                Step::South => rows.push(total_west - west_seen),
                Step::West => west_seen += 1,
            }
        }
        Shape::new(rows)
    }

    /// Every shape of half-perimeter `hp`, in descending lexicographic order
    /// of the row vectors.
    pub fn all_with_half_perimeter(hp: usize) -> Vec<Shape> {
        assert!(hp >= 1, "half-perimeter must be positive");
        let mut shapes: Vec<Shape> = (0..1u64 << (hp - 1))
            .map(|bits| {
                let mut path = vec![Step::South];
                path.extend((0..hp - 1).map(|i| if bits >> i & 1 == 1 { Step::South } else { Step::West }));
                Shape::from_path(&path).expect("path starts south")
            })
            .collect();
        shapes.sort_by(|a, b| b.rows.cmp(&a.rows));
        shapes
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Shape::new(rows)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Vec<usize> {
        s.rows
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// A PASEP configuration `τ ∈ {0,1}^N`; `true` is an occupied site.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PasepState {
    sites: Vec<bool>,
}

impl PasepState {
    pub fn new(sites: Vec<bool>) -> Result<Self> {
        if sites.is_empty() {
            return Err(Error::BadState(String::new()));
        }
        Ok(PasepState { sites })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        Self::new(bits.iter().map(|&b| b != 0).collect())
    }

    /// All `2^n` states, ordered as binary numbers with site 1 most significant.
    pub fn all(n: usize) -> Vec<PasepState> {
        assert!(n >= 1);
        (0..1u64 << n)
            .map(|bits| PasepState { sites: (0..n).map(|i| bits >> (n - 1 - i) & 1 == 1).collect() })
            .collect()
    }

    pub fn sites(&self) -> &[bool] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    /// Site `i`, 1-based.
    pub fn occupied(&self, i: usize) -> bool {
        self.sites[i - 1]
    }

    pub(crate) fn with_sites(&self, updates: &[(usize, bool)]) -> PasepState {
        let mut sites = self.sites.clone();
        for &(i, v) in updates {
            sites[i - 1] = v;
        }
        PasepState { sites }
    }

    /// Reverse and complement: `(1-τ_N, …, 1-τ_1)`.
    pub fn particle_hole(&self) -> PasepState {
        PasepState { sites: self.sites.iter().rev().map(|&s| !s).collect() }
    }
}

impl fmt::Display for PasepState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.sites {
            f.write_str(if s { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for PasepState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sites = s
            .trim()
            .chars()
            .map(|c| match c {
                '1' | '*' => Ok(true),
                '0' | '.' => Ok(false),
                _ => Err(Error::BadState(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        PasepState::new(sites).map_err(|_| Error::BadState(s.to_string()))
    }
}

/// `λ(τ)`: the shape of half-perimeter `N+1` whose path is `S` followed by
/// `S` for every occupied site and `W` for every empty one.
pub fn shape_from_state(tau: &PasepState) -> Shape {
    let mut path = vec![Step::South];
    path.extend(tau.sites.iter().map(|&s| if s { Step::South } else { Step::West }));
    Shape::from_path(&path).expect("path starts south")
}

/// `τ(λ)`, the inverse of [`shape_from_state`].
pub fn state_from_shape(shape: &Shape) -> Result<PasepState> {
    let hp = shape.half_perimeter();
    if hp < 2 {
        return Err(Error::NoSites(hp));
    }
    Ok(PasepState { sites: shape.path()[1..].iter().map(|s| *s == Step::South).collect() })
}
