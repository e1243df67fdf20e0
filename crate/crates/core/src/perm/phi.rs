use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::permutation::Permutation;
use crate::tableaux::{enumerate_tableaux, PermutationTableau, Step};

/// Labels `1..n` on the boundary path, read north-east to south-west:
/// `(row labels, column labels)`, both 0-based by row/column index.
pub fn boundary_labels(t: &PermutationTableau) -> (Vec<usize>, Vec<usize>) {
    let shape = t.shape();
    let mut row_labels = Vec::with_capacity(shape.num_rows());
    let mut col_labels = vec![0; shape.num_cols()];
    let mut col = shape.num_cols();
    for (i, step) in shape.path().into_iter().enumerate() {
        match step {
            Step::South => row_labels.push(i + 1),
            Step::West => {
                col -= 1;
                col_labels[col] = i + 1;
            }
        }
    }
    (row_labels, col_labels)
}

/// `Φ(T)`: walk the diagram of `T` from each boundary label.
///
/// From the label of a row, go west to the leftmost 1 of that row (an empty
/// row is a fixed point); from the label of a column, go north to its
/// topmost 1. Then zig-zag south-east, turning at every 1, until the walk
/// leaves the diagram through a label.
pub fn phi(t: &PermutationTableau) -> Permutation {
    let (row_labels, col_labels) = boundary_labels(t);
    let shape = t.shape();
    let n = t.half_perimeter();
    let mut images = vec![0; n];

    let next_below = |r: usize, c: usize| (r + 1..shape.col_len(c)).find(|&i| t.get(i, c));
    let next_right = |r: usize, c: usize| (c + 1..shape.row_len(r)).find(|&j| t.get(r, j));
    // zig-zag from a 1 at (r, c), first moving south if `south`
    let zigzag = |mut r: usize, mut c: usize, mut south: bool| loop {
        if south {
            match next_below(r, c) {
                Some(i) => r = i,
                None => return col_labels[c],
            }
        } else {
            match next_right(r, c) {
                Some(j) => c = j,
                None => return row_labels[r],
            }
        }
        south = !south;
    };

    for (r, &label) in row_labels.iter().enumerate() {
        images[label - 1] = match (0..shape.row_len(r)).find(|&c| t.get(r, c)) {
            Some(c) => zigzag(r, c, true),
            None => label,
        };
    }
    for (c, &label) in col_labels.iter().enumerate() {
        images[label - 1] = zigzag(t.topmost_one(c), c, false);
    }
    Permutation::new(images).expect("the zig-zag walk is a bijection")
}

/// Both directions of `Φ` on half-perimeter `n`, built by enumeration.
#[derive(Debug)]
pub struct PhiTable {
    tableaux: Vec<PermutationTableau>,
    perms: Vec<Permutation>,
    by_perm: HashMap<Permutation, usize>,
}

impl PhiTable {
    pub fn build(n: usize) -> Self {
        let tableaux = enumerate_tableaux(n);
        let perms: Vec<Permutation> = tableaux.iter().map(phi).collect();
        let by_perm: HashMap<Permutation, usize> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        assert_eq!(by_perm.len(), perms.len(), "phi must be injective on half-perimeter {n}");
        PhiTable { tableaux, perms, by_perm }
    }

    /// Shared table for `n`, built on first use.
    pub fn cached(n: usize) -> Arc<PhiTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<PhiTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("cache lock").get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(PhiTable::build(n));
        Arc::clone(cache.lock().expect("cache lock").entry(n).or_insert(table))
    }

    pub fn tableaux(&self) -> &[PermutationTableau] {
        &self.tableaux
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn tableau_of(&self, p: &Permutation) -> Option<&PermutationTableau> {
        self.by_perm.get(p).map(|&i| &self.tableaux[i])
    }
}

/// `Φ⁻¹(π)`, by table lookup.
pub fn phi_inverse(p: &Permutation) -> PermutationTableau {
    PhiTable::cached(p.len())
        .tableau_of(p)
        .cloned()
        .expect("phi is a bijection onto S_n")
}
