use super::shape::Shape;
use super::tableau::PermutationTableau;
use crate::Poly;

/// Every valid filling of `shape`, in ascending binary order of the
/// concatenated row bits.
pub fn fillings(shape: &Shape) -> Vec<PermutationTableau> {
    let cells: Vec<(usize, usize)> = shape
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let heights = shape.conjugate_rows();
    let mut grid: Vec<Vec<bool>> = shape.rows().iter().map(|&len| vec![false; len]).collect();
    let mut col_has_one = vec![0usize; shape.num_cols()];
    let mut out = Vec::new();
    fill(shape, &cells, &heights, 0, &mut grid, &mut col_has_one, &mut out);
    out
}

fn fill(
    shape: &Shape,
    cells: &[(usize, usize)],
    heights: &[usize],
    k: usize,
    grid: &mut Vec<Vec<bool>>,
    col_ones: &mut Vec<usize>,
    out: &mut Vec<PermutationTableau>,
) {
    let Some(&(r, c)) = cells.get(k) else {
        out.push(PermutationTableau::from_parts_unchecked(shape.clone(), grid.clone()));
        return;
    };
    let one_left = grid[r][..c].iter().any(|&x| x);
    let bottom_of_column = r + 1 == heights[c];
    // a 0 here is forbidden if it would be a restricted zero with a 1 on its
    // left, or if it would leave the column without any 1
    let zero_ok = !(col_ones[c] > 0 && one_left) && !(bottom_of_column && col_ones[c] == 0);
    if zero_ok {
        grid[r][c] = false;
        fill(shape, cells, heights, k + 1, grid, col_ones, out);
    }
    grid[r][c] = true;
    col_ones[c] += 1;
    fill(shape, cells, heights, k + 1, grid, col_ones, out);
    col_ones[c] -= 1;
    grid[r][c] = false;
}

/// All permutation tableaux of half-perimeter `hp`: shapes in descending
/// lexicographic order, fillings within a shape in ascending binary order.
pub fn enumerate_tableaux(hp: usize) -> Vec<PermutationTableau> {
    Shape::all_with_half_perimeter(hp).iter().flat_map(fillings).collect()
}

/// `F_λ`: the weight generating function of the fillings of `shape`.
pub fn f_lambda(shape: &Shape) -> Poly {
    fillings(shape).iter().map(|t| Poly::from(t.weight())).sum()
}

/// Weight generating function of all tableaux of half-perimeter `hp`.
pub fn weight_sum(hp: usize) -> Poly {
    enumerate_tableaux(hp).iter().map(|t| Poly::from(t.weight())).sum()
}
