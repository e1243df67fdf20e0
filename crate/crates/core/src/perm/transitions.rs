//! The PT chain transported to `S_{N+1}` through `Φ`, written directly in
//! terms of permutations: inserting an empty row is inserting a fixed
//! point, inserting a column with a single bottom 1 is inserting a
//! non-excedance `k+1/2 ↦ k`, and moving an outer corner swaps two
//! adjacent images.

use super::permutation::{Label, LabeledPermutation, Permutation};
use crate::pt_chain::MoveKind;
use crate::Mono;

#[derive(Clone, Debug, PartialEq)]
pub struct PermMove {
    pub kind: MoveKind,
    pub target: Permutation,
    pub rate: Mono,
}

/// Smallest non-excedance `k > after`, if any.
fn first_non_excedance_after(p: &Permutation, after: usize) -> Option<usize> {
    (after + 1..=p.len()).find(|&k| !p.is_weak_excedance(k))
}

/// Largest weak excedance `k < before` (1 always qualifies).
fn last_weak_excedance_before(p: &Permutation, before: usize) -> usize {
    (1..before).rev().find(|&k| p.is_weak_excedance(k)).expect("1 is a weak excedance")
}

fn swap_adjacent(p: &Permutation, i: usize) -> Permutation {
    let mut images = p.images().to_vec();
    images.swap(i - 1, i);
    Permutation::new(images).expect("swapping keeps a permutation")
}

/// Position of the new fixed point: just before the first non-excedance
/// after `after`, or at the very end.
fn fixed_point_slot(p: &Permutation, after: usize) -> Label {
    match first_non_excedance_after(p, after) {
        Some(k) => Label::half_after(k - 1),
        None => Label::half_after(p.len()),
    }
}

/// Every move out of `p ∈ S_{N+1}`, ordered by site.
pub fn perm_transitions(p: &Permutation) -> Vec<PermMove> {
    let n1 = p.len();
    if n1 < 2 {
        return Vec::new();
    }
    let n_sites = n1 - 1;
    let base = LabeledPermutation::from_permutation(p);
    let mut out = Vec::new();
    let mut push = |kind: MoveKind, target: Permutation| {
        out.push(PermMove { kind, target, rate: kind.rate_kind().rate(n_sites) });
    };

    // particle enters from the left
    if p.at(2) == 1 {
        let slot = fixed_point_slot(p, 2);
        let sigma = base
            .collapse(Label::int(2))
            .and_then(|s| s.insert_fixed_point(slot))
            .expect("collapse at a non-fixed point");
        push(MoveKind::EnterLeft, sigma.normalize());
    }

    for i in 2..n1 {
        let (pi, pnext) = (p.at(i), p.at(i + 1));
        if pi >= i && pnext < i + 1 {
            // particle hops right
            if pi == i {
                let slot = fixed_point_slot(p, i + 1);
                let sigma = base
                    .remove_fixed_point(Label::int(i))
                    .and_then(|s| s.insert_fixed_point(slot))
                    .expect("i is a fixed point");
                push(MoveKind::HopRightCase1, sigma.normalize());
            } else if pnext < i {
                push(MoveKind::HopRightCase2, swap_adjacent(p, i));
            } else {
                let j = last_weak_excedance_before(p, i);
                let collapsed = base.collapse(Label::int(i + 1)).expect("i+1 is not fixed");
                let b = p.inverse().at(j);
                let sigma = collapsed.splice(Label::int(b), Label::half_after(j)).expect("fresh label");
                push(MoveKind::HopRightCase3, sigma.normalize());
            }
        } else if pi < i && pnext > i {
            push(MoveKind::HopLeft, swap_adjacent(p, i));
        }
    }

    // particle exits to the right
    if p.at(n1) == n1 {
        let i = last_weak_excedance_before(p, n1);
        let a = p.inverse().at(i);
        let sigma = base
            .remove_fixed_point(Label::int(n1))
            .and_then(|s| s.splice(Label::int(a), Label::half_after(i)))
            .expect("n+1 is fixed");
        push(MoveKind::ExitRight, sigma.normalize());
    }
    out
}
