//! Conjugacy machinery for involutions and Klein four-groups.

use std::collections::HashSet;

use super::permutation::check_degree;
use super::{PermError, PermGroup, Permutation};

/// One representative (the lexicographically least) per `G`-conjugacy class
/// of involutions, optionally restricted to fixed-point-free ones.
pub fn involution_class_reps(g: &PermGroup, fpf_only: bool) -> Result<Vec<Permutation>, PermError> {
    involution_class_reps_where(g, super::DEFAULT_ENUMERATION_BOUND, |x| {
        !fpf_only || x.is_fixed_point_free()
    })
}

/// Class representatives of the involutions satisfying `keep`. `keep` must be
/// constant on `G`-conjugacy classes.
pub fn involution_class_reps_where(
    g: &PermGroup,
    bound: u64,
    keep: impl Fn(&Permutation) -> bool,
) -> Result<Vec<Permutation>, PermError> {
    let order = g.order();
    if order > num_bigint::BigUint::from(bound) {
        return Err(PermError::OrderExceedsBound {
            order: order.to_string(),
            bound,
        });
    }
    let mut invs: Vec<Permutation> = Vec::new();
    g.for_each_element(|x| {
        if x.is_involution() && keep(x) {
            invs.push(x.clone());
        }
        true
    });
    invs.sort();
    Ok(class_reps_of(&invs, g.generators()))
}

/// Partitions a conjugation-closed sorted set into classes under the group
/// generated by `gens`; returns the least element of each class.
pub(crate) fn class_reps_of(sorted: &[Permutation], gens: &[Permutation]) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::with_capacity(sorted.len());
    let mut reps = Vec::new();
    for x in sorted {
        if seen.contains(x) {
            continue;
        }
        reps.push(x.clone());
        seen.insert(x.clone());
        let mut stack = vec![x.clone()];
        while let Some(y) = stack.pop() {
            for s in gens {
                let z = y.conjugate(s);
                if seen.insert(z.clone()) {
                    stack.push(z);
                }
            }
        }
    }
    reps
}

/// Cycles sorted by (length, smallest point).
fn ordered_cycles(p: &Permutation) -> Vec<Vec<usize>> {
    let mut c = p.cycles();
    c.sort_by_key(|cyc| (cyc.len(), cyc[0]));
    c
}

/// Some `t` in `S_n` with `t^-1 sigma t = tau`, or `None` when the cycle
/// types differ. Cycles are matched in (length, smallest point) order.
pub fn conjugator_in_sym(sigma: &Permutation, tau: &Permutation) -> Result<Option<Permutation>, PermError> {
    check_degree(sigma.degree(), tau.degree())?;
    if sigma.cycle_type() != tau.cycle_type() {
        return Ok(None);
    }
    let mut t = vec![0usize; sigma.degree()];
    for (a, b) in ordered_cycles(sigma).iter().zip(ordered_cycles(tau).iter()) {
        for (x, y) in a.iter().zip(b) {
            t[*x] = *y;
        }
    }
    Ok(Some(Permutation::from_images(t)?))
}

/// Stabilizer type of a point under the action `a -> x, b -> y` of the
/// abstract Klein group: which of `a`, `b`, `ab` fix it.
fn klein_point_type(x: &Permutation, y: &Permutation, p: usize) -> (bool, bool, bool) {
    (x.image(p) == p, y.image(p) == p, x.image(p) == y.image(p))
}

fn klein_orbit_reps(x: &Permutation, y: &Permutation) -> Vec<((bool, bool, bool), usize)> {
    let n = x.degree();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for p in 0..n {
        if seen[p] {
            continue;
        }
        for q in [p, x.image(p), y.image(p), y.image(x.image(p))] {
            seen[q] = true;
        }
        out.push((klein_point_type(x, y, p), p));
    }
    out.sort();
    out
}

/// Some `t` with `t^-1 x' t = x` and `t^-1 y' t = y` for commuting involution
/// pairs `(x', y')` and `(x, y)`, or `None` if the two Klein actions are not
/// isomorphic. Orbits are matched by stabilizer type and smallest point.
pub fn klein_pair_conjugator(
    pair: (&Permutation, &Permutation),
    target: (&Permutation, &Permutation),
) -> Result<Option<Permutation>, PermError> {
    let (x1, y1) = pair;
    let (x2, y2) = target;
    let n = x1.degree();
    for p in [y1, x2, y2] {
        check_degree(n, p.degree())?;
    }
    for p in [x1, y1, x2, y2] {
        if !p.is_involution() {
            return Err(PermError::NotInvolution(p.to_string()));
        }
    }
    if !x1.commutes_with(y1) || !x2.commutes_with(y2) {
        return Err(PermError::NotCommuting);
    }
    let src = klein_orbit_reps(x1, y1);
    let dst = klein_orbit_reps(x2, y2);
    if src.len() != dst.len() || src.iter().zip(&dst).any(|(a, b)| a.0 != b.0) {
        return Ok(None);
    }
    let mut t = vec![usize::MAX; n];
    for ((_, p), (_, q)) in src.iter().zip(&dst) {
        let (p, q) = (*p, *q);
        t[p] = q;
        t[x1.image(p)] = x2.image(q);
        t[y1.image(p)] = y2.image(q);
        t[y1.image(x1.image(p))] = y2.image(x2.image(q));
    }
    let t = Permutation::from_images(t)?;
    debug_assert_eq!(x1.conjugate(&t), *x2);
    debug_assert_eq!(y1.conjugate(&t), *y2);
    Ok(Some(t))
}

/// True when `<x, y>` is a Klein four-group acting freely, i.e. `x`, `y` and
/// `xy` are all fixed-point-free commuting involutions.
pub fn is_free_klein_pair(x: &Permutation, y: &Permutation) -> bool {
    x.is_involution()
        && y.is_involution()
        && x.is_fixed_point_free()
        && y.is_fixed_point_free()
        && x.commutes_with(y)
        && x.compose(y).is_fixed_point_free()
}
