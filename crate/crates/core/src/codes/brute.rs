//! Exhaustive searches over the full symmetric group, used as test oracles.

use crate::perm::{PermGroup, Permutation};

use super::{CodeError, LinearCode};

/// Longest code for which `n!` permutations are still tried one by one.
const BRUTE_FORCE_MAX_N: usize = 9;

fn check_len(n: usize) -> Result<(), CodeError> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(CodeError::LengthBound {
            n,
            bound: BRUTE_FORCE_MAX_N,
        });
    }
    Ok(())
}

/// `Aut(C)` by testing every permutation of the coordinates.
pub fn automorphism_group_brute_force(c: &LinearCode) -> Result<PermGroup, CodeError> {
    let n = c.len();
    check_len(n)?;
    let mut group = PermGroup::trivial(n);
    PermGroup::symmetric(n).for_each_element(|g| {
        if !group.contains(g) && c.is_automorphism(g) {
            group = group.with_generator(g.clone());
        }
        true
    });
    Ok(group)
}

/// Some `sigma` with `C^sigma = D`, by testing every permutation.
pub fn equivalence_brute_force(c: &LinearCode, d: &LinearCode) -> Result<Option<Permutation>, CodeError> {
    let n = c.len();
    check_len(n)?;
    if d.len() != n || d.dim() != c.dim() {
        return Ok(None);
    }
    let mut found = None;
    PermGroup::symmetric(n).for_each_element(|g| {
        if d.is_automorphism_image(c, g) {
            found = Some(g.clone());
            return false;
        }
        true
    });
    Ok(found)
}

impl LinearCode {
    /// True when `C^sigma = self` for the given `C`.
    pub(crate) fn is_automorphism_image(&self, c: &LinearCode, sigma: &Permutation) -> bool {
        let ech = crate::gf2::Echelon::new(self.generator());
        c.generator().rows().iter().all(|r| ech.contains(&sigma.apply(r)))
    }
}
