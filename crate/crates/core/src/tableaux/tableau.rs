use std::fmt;

use serde::{Deserialize, Serialize};

use super::shape::{state_from_shape, PasepState, Shape};
use crate::algebra::{Exponents, Monomial};
use crate::error::{Error, Result};
use crate::Rational;

/// `rk`, `f` and `u` of a permutation tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TableauStats {
    /// Superfluous ones: total ones minus columns.
    pub rank: usize,
    /// Ones in the top row.
    pub f: usize,
    /// Unrestricted rows minus one.
    pub u: usize,
}

impl TableauStats {
    /// Exponent triple of `q^rk α^-f β^-u`.
    pub fn exponents(&self) -> Exponents {
        Exponents::new(self.rank as i32, -(self.f as i32), -(self.u as i32))
    }
}

/// A Young diagram filled with 0/1 so that every column holds a 1 and no 0
/// has both a 1 above it and a 1 to its left.
///
/// Rows are stored top to bottom, cells left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationTableau {
    shape: Shape,
    rows: Vec<Vec<bool>>,
}

fn check_dimensions(shape: &Shape, rows: &[Vec<bool>]) -> Result<()> {
    if rows.len() != shape.num_rows() {
        return Err(Error::DimensionMismatch(format!(
            "shape {} has {} rows, filling has {}",
            shape,
            shape.num_rows(),
            rows.len()
        )));
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != shape.row_len(r) {
            return Err(Error::DimensionMismatch(format!(
                "row {} should have {} cells, has {}",
                r + 1,
                shape.row_len(r),
                row.len()
            )));
        }
    }
    Ok(())
}

/// Checks both tableau conditions for a filling of `shape`.
pub fn is_valid_tableau(shape: &Shape, rows: &[Vec<bool>]) -> Result<bool> {
    check_dimensions(shape, rows)?;
    for c in 0..shape.num_cols() {
        if !rows[..shape.col_len(c)].iter().any(|row| row[c]) {
            return Ok(false);
        }
    }
    for (r, row) in rows.iter().enumerate() {
        for (c, &cell) in row.iter().enumerate() {
            if !cell && row[..c].iter().any(|&x| x) && (0..r).any(|above| rows[above][c]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl PermutationTableau {
    pub fn new(shape: Shape, rows: Vec<Vec<bool>>) -> Result<Self> {
        if !is_valid_tableau(&shape, &rows)? {
            return Err(Error::InvalidTableau);
        }
        Ok(PermutationTableau { shape, rows })
    }

    /// Build from 0/1 integer rows.
    pub fn from_bits(shape: &[usize], rows: &[&[u8]]) -> Result<Self> {
        let shape = Shape::new(shape.to_vec())?;
        let rows = rows.iter().map(|r| r.iter().map(|&b| b != 0).collect()).collect();
        Self::new(shape, rows)
    }

    /// The unique tableau of an all-zero-length shape with `n` rows.
    pub fn empty(n_rows: usize) -> Self {
        let shape = Shape::new(vec![0; n_rows]).expect("nonempty");
        PermutationTableau { shape, rows: vec![Vec::new(); n_rows] }
    }

    /// Callers guarantee validity.
    pub(crate) fn from_parts_unchecked(shape: Shape, rows: Vec<Vec<bool>>) -> Self {
        debug_assert_eq!(is_valid_tableau(&shape, &rows), Ok(true), "{shape} {rows:?}");
        PermutationTableau { shape, rows }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<bool>> {
        self.rows
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r][c]
    }

    pub fn half_perimeter(&self) -> usize {
        self.shape.half_perimeter()
    }

    /// `pr(T) = τ(λ)`.
    pub fn project(&self) -> Result<PasepState> {
        state_from_shape(&self.shape)
    }

    pub fn ones(&self) -> usize {
        self.rows.iter().flatten().filter(|&&x| x).count()
    }

    /// Row of the topmost 1 in column `c`.
    pub fn topmost_one(&self, c: usize) -> usize {
        (0..self.shape.col_len(c))
            .find(|&r| self.rows[r][c])
            .expect("every column of a tableau holds a 1")
    }

    pub fn is_topmost_one(&self, r: usize, c: usize) -> bool {
        self.rows[r][c] && self.topmost_one(c) == r
    }

    pub fn is_superfluous_one(&self, r: usize, c: usize) -> bool {
        self.rows[r][c] && self.topmost_one(c) < r
    }

    pub fn is_necessary_one(&self, r: usize, c: usize) -> bool {
        self.rows[r][c] && (0..self.shape.col_len(c)).filter(|&i| self.rows[i][c]).count() == 1
    }

    /// A 0 with a 1 above it in its column.
    pub fn is_restricted_zero(&self, r: usize, c: usize) -> bool {
        !self.rows[r][c] && (0..r).any(|above| self.rows[above][c])
    }

    pub fn is_unrestricted_row(&self, r: usize) -> bool {
        !(0..self.rows[r].len()).any(|c| self.is_restricted_zero(r, c))
    }

    pub fn stats(&self) -> TableauStats {
        let rank = self.ones() - self.shape.num_cols();
        let f = self.rows[0].iter().filter(|&&x| x).count();
        let unrestricted = (0..self.rows.len()).filter(|&r| self.is_unrestricted_row(r)).count();
        TableauStats { rank, f, u: unrestricted - 1 }
    }

    /// `wt(T) = q^rk α^-f β^-u`.
    pub fn weight(&self) -> Monomial<Rational> {
        Monomial::unit(self.stats().exponents())
    }

    /// The transpose, on the conjugate shape.
    pub fn conjugate(&self) -> ConjugateTableau {
        let cols = self.shape.conjugate_rows();
        let rows = cols
            .iter()
            .enumerate()
            .map(|(c, &h)| (0..h).map(|r| self.rows[r][c]).collect())
            .collect();
        ConjugateTableau { rows: cols, cells: rows }
    }
}

/// The transposed filling of a tableau. It is generally not itself a
/// permutation tableau, so it carries raw rows. The shape may be empty
/// when the tableau has no columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConjugateTableau {
    rows: Vec<usize>,
    cells: Vec<Vec<bool>>,
}

impl ConjugateTableau {
    pub fn row_lengths(&self) -> &[usize] {
        &self.rows
    }

    pub fn cells(&self) -> &[Vec<bool>] {
        &self.cells
    }

    /// Transpose back. `n_rows` restores the zero-length rows, which a
    /// transpose cannot see.
    pub fn transpose(&self, n_rows: usize) -> Result<PermutationTableau> {
        let mut row_lens = vec![0usize; n_rows];
        for &h in &self.rows {
            if h > n_rows {
                return Err(Error::DimensionMismatch(format!("column of height {h} exceeds {n_rows} rows")));
            }
            for len in row_lens.iter_mut().take(h) {
                *len += 1;
            }
        }
        let shape = Shape::new(row_lens)?;
        let cells = (0..n_rows)
            .map(|r| (0..shape.row_len(r)).map(|c| self.cells[c][r]).collect())
            .collect();
        PermutationTableau::new(shape, cells)
    }
}

impl fmt::Display for PermutationTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.shape)?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for &x in row {
                f.write_str(if x { "1" } else { "0" })?;
            }
        }
        f.write_str("]")
    }
}

/// Wire form: `{"shape":[4,4,4,3],"rows":[[1,1,0,0],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<u8>>,
}

impl From<&PermutationTableau> for TableauJson {
    fn from(t: &PermutationTableau) -> Self {
        TableauJson {
            shape: t.shape.rows().to_vec(),
            rows: t.rows.iter().map(|r| r.iter().map(|&x| x as u8).collect()).collect(),
        }
    }
}

impl TryFrom<TableauJson> for PermutationTableau {
    type Error = Error;

    fn try_from(j: TableauJson) -> Result<Self> {
        if j.rows.iter().flatten().any(|&b| b > 1) {
            return Err(Error::DimensionMismatch("entries must be 0 or 1".into()));
        }
        let shape = Shape::new(j.shape)?;
        PermutationTableau::new(shape, j.rows.iter().map(|r| r.iter().map(|&b| b == 1).collect()).collect())
    }
}

impl Serialize for PermutationTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PermutationTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        PermutationTableau::try_from(j).map_err(serde::de::Error::custom)
    }
}
