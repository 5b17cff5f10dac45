use std::collections::HashMap;

use super::permutation::check_degree;
use super::{PermError, PermGroup, Permutation};

/// Right transversal of `H` in `G`: one representative per coset `Hg`.
#[derive(Clone, Debug)]
pub struct Transversal {
    reps: Vec<Permutation>,
}

impl Transversal {
    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.reps.iter()
    }
}

/// The element of `Hx` with lexicographically least images of the base of `H`.
/// Two elements give the same result iff they lie in the same right coset.
pub fn canonical_coset_rep(h: &PermGroup, x: &Permutation) -> Permutation {
    let chain = h.chain();
    let mut y = x.clone();
    for level in &chain.levels {
        let best = level
            .orbit
            .iter()
            .copied()
            .min_by_key(|&d| y.image(d))
            .expect("orbit contains the base point");
        y = level.reps[best].as_ref().unwrap().compose(&y);
    }
    y
}

/// Enumerates right cosets `Hg` of `H` in `G` by closing `{H}` under right
/// multiplication by the generators of `G`. Representatives are the canonical
/// coset elements, listed in discovery order starting with the identity.
pub fn right_transversal(g: &PermGroup, h: &PermGroup) -> Result<Transversal, PermError> {
    check_degree(g.degree(), h.degree())?;
    if !h.is_subgroup_of(g) {
        return Err(PermError::NotSubgroup);
    }
    let id = Permutation::identity(g.degree());
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    let first = canonical_coset_rep(h, &id);
    seen.insert(first.clone(), ());
    let mut reps = vec![first];
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head].clone();
        head += 1;
        for s in g.generators() {
            let c = canonical_coset_rep(h, &r.compose(s));
            if seen.insert(c.clone(), ()).is_none() {
                reps.push(c);
            }
        }
    }
    Ok(Transversal { reps })
}
