//! The involution `I` extending particle-hole symmetry to permutations and
//! permutation tableaux.

use crate::perm::Permutation;
use crate::tableaux::{ConjugateTableau, PermutationTableau, Shape};

/// `π̄(1) = N+2-π(1)` and `π̄(i) = N+2-π(N+3-i)` for `i >= 2`.
pub fn invol_perm(p: &Permutation) -> Permutation {
    let n1 = p.len();
    let m = n1 + 1;
    let images = (1..=n1)
        .map(|i| if i == 1 { m - p.at(1) } else { m - p.at(n1 + 2 - i) })
        .collect();
    Permutation::new(images).expect("the reflection of a permutation is a permutation")
}

pub fn conjugate(t: &PermutationTableau) -> ConjugateTableau {
    t.conjugate()
}

/// `T̄` on shape `(K-1, λ'_1-1, …, λ'_{N+1-K}-1)`.
///
/// The top row records which rows of `T` below the first are unrestricted.
/// Below it, cell `(i, j)` copies cell `(j+1, i-1)` of `T`, complemented
/// when that cell is a topmost 1 or the rightmost restricted 0 of its row.
pub fn invol_tableau(t: &PermutationTableau) -> PermutationTableau {
    let k = t.shape().num_rows();
    let heights = t.shape().conjugate_rows();
    let rightmost_restricted: Vec<Option<usize>> = (0..k)
        .map(|r| (0..t.shape().row_len(r)).rev().find(|&c| t.is_restricted_zero(r, c)))
        .collect();

    let mut rows = Vec::with_capacity(heights.len() + 1);
    rows.push((1..k).map(|r| t.is_unrestricted_row(r)).collect::<Vec<bool>>());
    for (c, &h) in heights.iter().enumerate() {
        rows.push(
            (1..h)
                .map(|r| {
                    let flip = t.is_topmost_one(r, c) || rightmost_restricted[r] == Some(c);
                    t.get(r, c) ^ flip
                })
                .collect(),
        );
    }
    let shape = Shape::new(rows.iter().map(Vec::len).collect()).expect("conjugate heights decrease");
    PermutationTableau::new(shape, rows).expect("the involution yields a permutation tableau")
}
