//! The PT chain on permutation tableaux of half-perimeter `N+1`, which
//! projects onto the PASEP on `N` sites through `pr(T) = τ(λ)`.
//!
//! Moves are found by reading the projected word: a leading hole gives an
//! entry move, each `•◦` pair a hop to the right, each `◦•` pair a hop to
//! the left and a trailing particle an exit move. Each of those positions
//! corresponds to exactly one corner or boundary row of the diagram, so
//! every PASEP transition out of `pr(T)` lifts to exactly one move out of
//! `T`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pasep::RateKind;
use crate::tableaux::{PasepState, PermutationTableau, Shape, Step};
use crate::{Mono, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    EnterLeft,
    HopRightCase1,
    HopRightCase2,
    HopRightCase3,
    ExitRight,
    HopLeft,
}

impl MoveKind {
    pub fn rate_kind(self) -> RateKind {
        match self {
            MoveKind::EnterLeft => RateKind::Alpha,
            MoveKind::ExitRight => RateKind::Beta,
            MoveKind::HopLeft => RateKind::Q,
            MoveKind::HopRightCase1 | MoveKind::HopRightCase2 | MoveKind::HopRightCase3 => RateKind::One,
        }
    }
}

/// A transition of the PT chain.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PtMove {
    pub kind: MoveKind,
    /// The PASEP site `k` of the pair `(k, k+1)` the move realizes; 1 for an
    /// entry and `N` for an exit.
    pub site_index: usize,
    /// 1-based tableau row the move acts on.
    pub row_index: usize,
    pub target: PermutationTableau,
    #[serde(skip)]
    pub rate: Mono,
}

/// `pr(T)`.
pub fn project(t: &PermutationTableau) -> Result<PasepState> {
    t.project()
}

/// 1-based position in the boundary path of the south step of each row.
fn south_step_positions(shape: &Shape) -> Vec<usize> {
    shape
        .path()
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Step::South)
        .map(|(i, _)| i + 1)
        .collect()
}

struct Editor {
    rows: Vec<Vec<bool>>,
}

impl Editor {
    fn new(t: &PermutationTableau) -> Self {
        Editor { rows: t.rows().to_vec() }
    }

    fn lens(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Insert an all-zero row of length `len` below every row at least as long.
    fn insert_zero_row(&mut self, len: usize) {
        let at = self.rows.iter().take_while(|r| r.len() >= len).count();
        self.rows.insert(at, vec![false; len]);
    }

    /// Remove column `c` (0-based) from every row that reaches it.
    fn delete_column(&mut self, c: usize) {
        for row in self.rows.iter_mut().filter(|r| r.len() > c) {
            row.remove(c);
        }
    }

    /// Insert a column of height `h` holding zeros above a single bottom 1,
    /// to the right of every column at least as tall.
    fn insert_column(&mut self, h: usize) {
        debug_assert!(h >= 1 && h <= self.rows.len());
        let at = (0..self.rows[0].len())
            .take_while(|&c| self.rows.iter().take_while(|r| r.len() > c).count() >= h)
            .count();
        for (r, row) in self.rows.iter_mut().take(h).enumerate() {
            row.insert(at, r + 1 == h);
        }
    }

    fn finish(self) -> PermutationTableau {
        let shape = Shape::new(self.lens()).expect("edits keep rows weakly decreasing");
        PermutationTableau::from_parts_unchecked(shape, self.rows)
    }
}

fn make_move(s: &PermutationTableau, kind: MoveKind, site_index: usize, row_index: usize, target: PermutationTableau) -> PtMove {
    let n_sites = s.half_perimeter() - 1;
    PtMove { kind, site_index, row_index, target, rate: kind.rate_kind().rate(n_sites) }
}

/// Particle enters from the left: present iff the rightmost column has
/// length 1. Deletes that column and inserts an all-zero row of length
/// `λ₁ - 1` as far south as possible.
pub fn enter_left(s: &PermutationTableau) -> Option<PtMove> {
    let shape = s.shape();
    let width = shape.num_cols();
    if width == 0 || shape.row_len(1) >= width {
        return None;
    }
    let mut ed = Editor::new(s);
    ed.delete_column(width - 1);
    ed.insert_zero_row(width - 1);
    Some(make_move(s, MoveKind::EnterLeft, 1, 1, ed.finish()))
}

/// Particle hops right out of the outer corner at the end of row `j`
/// (1-based, `j >= 2`, `λ_j > λ_{j+1}`).
pub fn hop_right(s: &PermutationTableau, j: usize) -> Result<PtMove> {
    let shape = s.shape();
    let ineligible = Error::IneligibleRow { kind: "hop-right", row: j };
    if j < 2 || j > shape.num_rows() {
        return Err(ineligible);
    }
    let r = j - 1;
    let len = shape.row_len(r);
    if len == 0 || len <= shape.row_len(r + 1) {
        return Err(ineligible);
    }
    let site = south_step_positions(shape)[r] - 1;
    let c = len - 1;
    let mut ed = Editor::new(s);
    let kind = if !s.get(r, c) {
        ed.rows.remove(r);
        ed.insert_zero_row(len - 1);
        MoveKind::HopRightCase1
    } else if s.is_superfluous_one(r, c) {
        ed.rows[r].pop();
        MoveKind::HopRightCase2
    } else {
        // necessary 1; the column has height j
        ed.delete_column(c);
        ed.insert_column(j - 1);
        MoveKind::HopRightCase3
    };
    Ok(make_move(s, kind, site, j, ed.finish()))
}

/// Particle exits to the right: present iff the last row has length 0.
/// Deletes that row and inserts a column of height `t - 1` with a single 1
/// at the bottom, as far east as possible.
pub fn exit_right(s: &PermutationTableau) -> Option<PtMove> {
    let shape = s.shape();
    let t = shape.num_rows();
    if t < 2 || shape.row_len(t - 1) != 0 {
        return None;
    }
    let mut ed = Editor::new(s);
    ed.rows.pop();
    ed.insert_column(t - 1);
    Some(make_move(s, MoveKind::ExitRight, s.half_perimeter() - 1, t, ed.finish()))
}

/// Particle hops left into the inner corner below row `j`
/// (1-based, `λ_j > λ_{j+1}`): row `j+1` grows by one cell holding a 1.
pub fn hop_left(s: &PermutationTableau, j: usize) -> Result<PtMove> {
    let shape = s.shape();
    if j < 1 || j >= shape.num_rows() || shape.row_len(j - 1) <= shape.row_len(j) {
        return Err(Error::IneligibleRow { kind: "hop-left", row: j });
    }
    let site = south_step_positions(shape)[j] - 2;
    let mut ed = Editor::new(s);
    ed.rows[j].push(true);
    Ok(make_move(s, MoveKind::HopLeft, site, j, ed.finish()))
}

/// Every move out of `s`, ordered by site like [`crate::pasep::pasep_transitions`].
pub fn pt_transitions(s: &PermutationTableau) -> Vec<PtMove> {
    let shape = s.shape();
    let Ok(x) = s.project() else {
        return Vec::new();
    };
    let n = x.len();
    // row (1-based) whose south step is path position k+1, i.e. site k
    let mut row_at_site = vec![0usize; n + 2];
    for (r, pos) in south_step_positions(shape).into_iter().enumerate() {
        if pos >= 2 {
            row_at_site[pos - 1] = r + 1;
        }
    }
    let mut out = Vec::new();
    if !x.occupied(1) {
        out.extend(enter_left(s));
    }
    for k in 1..n {
        match (x.occupied(k), x.occupied(k + 1)) {
            (true, false) => out.push(hop_right(s, row_at_site[k]).expect("•◦ marks an outer corner")),
            (false, true) => out.push(hop_left(s, row_at_site[k + 1] - 1).expect("◦• marks an inner corner")),
            _ => {}
        }
    }
    if x.occupied(n) {
        out.extend(exit_right(s));
    }
    out
}

/// The block class of a PASEP word, with `B` a run of particles and `W` a
/// run of holes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StateClass {
    /// `BW…BW`, `n` pairs.
    BlackToWhite,
    /// `BW…BWB`, `n` pairs then a final `B`.
    BlackToBlack,
    /// `WB…WBW`, `n` pairs then a final `W`.
    WhiteToWhite,
    /// `WB…WB`, `n` pairs.
    WhiteToBlack,
}

impl StateClass {
    /// Numbering 1 to 4.
    pub fn number(self) -> u8 {
        match self {
            StateClass::BlackToWhite => 1,
            StateClass::BlackToBlack => 2,
            StateClass::WhiteToWhite => 3,
            StateClass::WhiteToBlack => 4,
        }
    }

    /// Total out-rate of any state of this class with `n` pairs on
    /// `n_sites` sites, as a polynomial.
    pub fn out_rate(self, n: usize, n_sites: usize) -> Poly {
        let n = n as i64;
        let int = |k: i64| Rational::from_integer(k.into());
        let numerator = match self {
            StateClass::BlackToWhite => Poly::constant(int(n)) + Poly::q().scale(&int(n - 1)),
            StateClass::BlackToBlack => Poly::constant(int(n)) + Poly::q().scale(&int(n)) + Poly::beta(),
            StateClass::WhiteToWhite => Poly::constant(int(n)) + Poly::q().scale(&int(n)) + Poly::alpha(),
            StateClass::WhiteToBlack => {
                Poly::constant(int(n - 1)) + Poly::q().scale(&int(n)) + Poly::alpha() + Poly::beta()
            }
        };
        numerator.scale(&Rational::new(1.into(), (n_sites as i64 + 1).into()))
    }
}

/// Class and pair count `n` of a PASEP word.
pub fn state_class(x: &PasepState) -> Result<(StateClass, usize)> {
    let sites = x.sites();
    if sites.is_empty() {
        return Err(Error::NoSites(1));
    }
    let blocks = 1 + sites.windows(2).filter(|w| w[0] != w[1]).count();
    let first = sites[0];
    let last = sites[sites.len() - 1];
    Ok(match (first, last) {
        (true, false) => (StateClass::BlackToWhite, blocks / 2),
        (true, true) => (StateClass::BlackToBlack, blocks / 2),
        (false, false) => (StateClass::WhiteToWhite, blocks / 2),
        (false, true) => (StateClass::WhiteToBlack, blocks / 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, Exponents};
    use crate::tableaux::{enumerate_tableaux, is_valid_tableau};

    fn tab(shape: &[usize], rows: &[&[u8]]) -> PermutationTableau {
        PermutationTableau::from_bits(shape, rows).unwrap()
    }

    fn weight_ratio(m: &PtMove, s: &PermutationTableau) -> Exponents {
        let a = m.target.stats().exponents();
        let b = s.stats().exponents();
        Exponents::new(a.q - b.q, a.a - b.a, a.b - b.b)
    }

    #[test]
    fn projection_examples() {
        let t = tab(&[4, 4, 4, 3], &[&[1, 1, 0, 0], &[0, 0, 1, 0], &[1, 1, 1, 1], &[0, 0, 1]]);
        assert_eq!(project(&t).unwrap().to_string(), "1101000");
        assert_eq!(project(&PermutationTableau::empty(2)).unwrap().to_string(), "1");
        let t = tab(&[2, 1, 0], &[&[1, 1], &[0], &[]]);
        assert_eq!(project(&t).unwrap().to_string(), "0101");
    }

    #[test]
    fn enter_left_examples() {
        let m = enter_left(&tab(&[1], &[&[1]])).unwrap();
        assert_eq!(m.target, PermutationTableau::empty(2));
        assert_eq!(m.rate, RateKind::Alpha.rate(1));
        assert_eq!(m.rate.coeff, ratio(1, 2));
        let m = enter_left(&tab(&[1, 0], &[&[1], &[]])).unwrap();
        assert_eq!(m.target, PermutationTableau::empty(3));
        assert_eq!(m.rate.coeff, ratio(1, 3));
        assert!(enter_left(&tab(&[1, 1], &[&[1], &[1]])).is_none());
        assert!(enter_left(&PermutationTableau::empty(3)).is_none());
    }

    #[test]
    fn hop_right_examples() {
        let m = hop_right(&tab(&[2, 2], &[&[1, 1], &[0, 0]]), 2).unwrap();
        assert_eq!(m.kind, MoveKind::HopRightCase1);
        assert_eq!(m.target, tab(&[2, 1], &[&[1, 1], &[0]]));

        let s = tab(&[1, 1], &[&[1], &[1]]);
        let m = hop_right(&s, 2).unwrap();
        assert_eq!(m.kind, MoveKind::HopRightCase2);
        assert_eq!(m.target, tab(&[1, 0], &[&[1], &[]]));
        assert_eq!(weight_ratio(&m, &s), Exponents::new(-1, 0, 0));

        let s = tab(&[1, 1], &[&[0], &[1]]);
        let m = hop_right(&s, 2).unwrap();
        assert_eq!(m.kind, MoveKind::HopRightCase3);
        assert_eq!(m.target, tab(&[1, 0], &[&[1], &[]]));
        assert_eq!(weight_ratio(&m, &s), Exponents::new(0, -1, 0));

        assert!(hop_right(&s, 1).is_err());
        assert!(hop_right(&tab(&[2, 2], &[&[1, 1], &[0, 0]]), 1).is_err());
        assert!(hop_right(&PermutationTableau::empty(3), 2).is_err());
    }

    #[test]
    fn exit_right_examples() {
        let m = exit_right(&PermutationTableau::empty(2)).unwrap();
        assert_eq!(m.target, tab(&[1], &[&[1]]));
        assert_eq!(m.rate, RateKind::Beta.rate(1));
        let m = exit_right(&tab(&[1, 0], &[&[1], &[]])).unwrap();
        assert_eq!(m.target, tab(&[2], &[&[1, 1]]));
        assert_eq!(m.rate.coeff, ratio(1, 3));
        assert!(exit_right(&tab(&[1, 1], &[&[1], &[1]])).is_none());
    }

    #[test]
    fn hop_left_examples() {
        let s = tab(&[1, 0], &[&[1], &[]]);
        let m = hop_left(&s, 1).unwrap();
        assert_eq!(m.target, tab(&[1, 1], &[&[1], &[1]]));
        assert_eq!(project(&s).unwrap().to_string(), "01");
        assert_eq!(project(&m.target).unwrap().to_string(), "10");
        assert_eq!(weight_ratio(&m, &s), Exponents::new(1, 0, 0));

        for s in [tab(&[2, 1, 0], &[&[1, 1], &[0], &[]]), tab(&[2, 1, 0], &[&[0, 1], &[1], &[]])] {
            let m = hop_left(&s, 2).unwrap();
            assert_eq!(m.target.shape().rows(), &[2, 1, 1]);
            assert!(m.target.get(2, 0));
        }
        assert!(hop_left(&tab(&[2, 2], &[&[1, 1], &[0, 0]]), 1).is_err());
    }

    #[test]
    fn small_chains() {
        let moves = pt_transitions(&tab(&[1], &[&[1]]));
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].kind, MoveKind::EnterLeft);
        assert_eq!(moves[0].target, PermutationTableau::empty(2));
        let moves = pt_transitions(&PermutationTableau::empty(2));
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].kind, MoveKind::ExitRight);
        assert_eq!(moves[0].target, tab(&[1], &[&[1]]));
    }

    #[test]
    fn targets_are_valid_and_weight_laws_hold() {
        for hp in 2..=7 {
            for s in enumerate_tableaux(hp) {
                for m in pt_transitions(&s) {
                    assert!(is_valid_tableau(m.target.shape(), m.target.rows()).unwrap());
                    assert_eq!(m.target.half_perimeter(), hp);
                    let ratio = weight_ratio(&m, &s);
                    let r = m.row_index - 1;
                    let expected = match m.kind {
                        MoveKind::HopRightCase2 => Some(Exponents::new(-1, 0, 0)),
                        MoveKind::HopLeft => Some(Exponents::new(1, 0, 0)),
                        MoveKind::HopRightCase1 if s.shape().row_len(r) == 1 => Some(Exponents::new(0, 0, -1)),
                        MoveKind::HopRightCase1 => Some(Exponents::ZERO),
                        MoveKind::HopRightCase3 if m.row_index == 2 => Some(Exponents::new(0, -1, 0)),
                        MoveKind::HopRightCase3 => Some(Exponents::ZERO),
                        MoveKind::EnterLeft if s.shape().num_cols() > 1 => Some(Exponents::new(0, 1, 0)),
                        MoveKind::ExitRight if s.shape().num_rows() > 2 => Some(Exponents::new(0, 0, 1)),
                        _ => None,
                    };
                    if let Some(e) = expected {
                        assert_eq!(ratio, e, "{:?} from {s}", m.kind);
                    }
                }
            }
        }
    }

    #[test]
    fn class_examples() {
        let st = |s: &str| s.parse::<PasepState>().unwrap();
        assert_eq!(state_class(&st("10")).unwrap(), (StateClass::BlackToWhite, 1));
        assert_eq!(state_class(&st("101")).unwrap(), (StateClass::BlackToBlack, 1));
        assert_eq!(state_class(&st("01")).unwrap(), (StateClass::WhiteToBlack, 1));
        assert_eq!(state_class(&st("111")).unwrap(), (StateClass::BlackToBlack, 0));
        assert_eq!(state_class(&st("000")).unwrap(), (StateClass::WhiteToWhite, 0));
        assert_eq!(state_class(&st("0110100")).unwrap(), (StateClass::WhiteToWhite, 2));
        assert_eq!(
            StateClass::BlackToBlack.out_rate(1, 3),
            (Poly::one() + Poly::q() + Poly::beta()).scale(&ratio(1, 4))
        );
        assert_eq!(
            StateClass::WhiteToBlack.out_rate(1, 2),
            (Poly::q() + Poly::alpha() + Poly::beta()).scale(&ratio(1, 3))
        );
        assert_eq!(StateClass::BlackToWhite.out_rate(1, 2), Poly::one().scale(&ratio(1, 3)));
    }

    #[test]
    fn out_rates_match_class_formula() {
        for hp in 2..=7 {
            for s in enumerate_tableaux(hp) {
                let x = project(&s).unwrap();
                let (class, n) = state_class(&x).unwrap();
                let total: Poly = pt_transitions(&s).iter().map(|m| m.rate.to_poly()).sum();
                assert_eq!(total, class.out_rate(n, x.len()), "{s}");
            }
        }
    }
}
