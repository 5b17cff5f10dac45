//! Fixed subcodes of automorphisms and the orbit projection maps.

use crate::gf2::{BitMatrix, BitVector};
use crate::perm::Permutation;

use super::{CodeError, LinearCode};

fn check_degree(c: &LinearCode, sigma: &Permutation) -> Result<(), CodeError> {
    if sigma.degree() != c.len() {
        return Err(CodeError::DegreeMismatch {
            expected: c.len(),
            found: sigma.degree(),
        });
    }
    Ok(())
}

fn check_fpf_involution(sigma: &Permutation) -> Result<(), CodeError> {
    if sigma.is_involution() && sigma.is_fixed_point_free() {
        Ok(())
    } else {
        Err(CodeError::NotFpfInvolution(sigma.to_string()))
    }
}

/// `C(sigma) = { c in C : c^sigma = c }`.
///
/// With `G` the generator matrix, `xG` is fixed iff `x (G^sigma - G) = 0`, so
/// the fixed subcode is the image of the left kernel of `G^sigma - G`.
pub fn fixed_subcode(c: &LinearCode, sigma: &Permutation) -> Result<LinearCode, CodeError> {
    check_degree(c, sigma)?;
    let g = c.generator();
    let diff: Vec<BitVector> = g.rows().iter().map(|r| sigma.apply(r).xor(r)).collect();
    let diff = BitMatrix::from_rows(c.len(), diff);
    let left_kernel = diff.transpose().kernel_basis();
    let rows = left_kernel.rows().iter().map(|x| g.combine(x)).collect();
    Ok(LinearCode::from_rows(c.len(), rows))
}

/// Orbits of a fixed-point-free involution as `(small, large)` pairs,
/// ordered by their smaller point.
pub(crate) fn orbit_pairs(sigma: &Permutation) -> Vec<(usize, usize)> {
    (0..sigma.degree())
        .filter(|&i| sigma.image(i) > i)
        .map(|i| (i, sigma.image(i)))
        .collect()
}

/// Keeps the smallest coordinate of each `sigma`-orbit.
pub fn pi_project(c_fixed: &LinearCode, sigma: &Permutation) -> Result<LinearCode, CodeError> {
    check_degree(c_fixed, sigma)?;
    check_fpf_involution(sigma)?;
    let pairs = orbit_pairs(sigma);
    let mut rows = Vec::with_capacity(c_fixed.dim());
    for r in c_fixed.generator().rows() {
        if pairs.iter().any(|&(a, b)| r.get(a) != r.get(b)) {
            return Err(CodeError::NotFixed(sigma.to_string()));
        }
        rows.push(BitVector::from_support(
            pairs.len(),
            pairs.iter().enumerate().filter(|(_, &(a, _))| r.get(a)).map(|(j, _)| j),
        ));
    }
    Ok(LinearCode::from_rows(pairs.len(), rows))
}

/// Inverse of [`pi_project`]: copies coordinate `j` onto both points of the
/// `j`-th orbit.
pub fn pi_lift(d: &LinearCode, sigma: &Permutation) -> Result<LinearCode, CodeError> {
    check_fpf_involution(sigma)?;
    let pairs = orbit_pairs(sigma);
    if d.len() != pairs.len() {
        return Err(CodeError::LengthMismatch {
            expected: pairs.len(),
            found: d.len(),
        });
    }
    let rows = d
        .generator()
        .rows()
        .iter()
        .map(|r| BitVector::from_support(sigma.degree(), r.iter_ones().flat_map(|j| [pairs[j].0, pairs[j].1])))
        .collect();
    Ok(LinearCode::from_rows(sigma.degree(), rows))
}

/// The permutation `rho` induces on the orbits of `sigma`.
pub fn eta(rho: &Permutation, sigma: &Permutation) -> Result<Permutation, CodeError> {
    check_fpf_involution(sigma)?;
    if rho.degree() != sigma.degree() {
        return Err(CodeError::DegreeMismatch {
            expected: sigma.degree(),
            found: rho.degree(),
        });
    }
    if !rho.commutes_with(sigma) {
        return Err(CodeError::NotCentralizing(rho.to_string(), sigma.to_string()));
    }
    let n = sigma.degree();
    let mut orbit_index = vec![0usize; n];
    let pairs = orbit_pairs(sigma);
    for (j, &(a, b)) in pairs.iter().enumerate() {
        orbit_index[a] = j;
        orbit_index[b] = j;
    }
    let images = pairs.iter().map(|&(a, _)| orbit_index[rho.image(a)]).collect();
    Ok(Permutation::from_images(images)?)
}

/// A preimage of `omega` under `eta(., sigma)`: orbit `j = {a < b}` goes to
/// orbit `omega(j) = {c < d}` by `a -> c`, `b -> d`.
pub fn lift_orbit_permutation(omega: &Permutation, sigma: &Permutation) -> Result<Permutation, CodeError> {
    check_fpf_involution(sigma)?;
    let pairs = orbit_pairs(sigma);
    if omega.degree() != pairs.len() {
        return Err(CodeError::DegreeMismatch {
            expected: pairs.len(),
            found: omega.degree(),
        });
    }
    let mut images = vec![0usize; sigma.degree()];
    for (j, &(a, b)) in pairs.iter().enumerate() {
        let (c, d) = pairs[omega.image(j)];
        images[a] = c;
        images[b] = d;
    }
    Ok(Permutation::from_images(images)?)
}
