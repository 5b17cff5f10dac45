//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use fixglue::codes::{automorphism_group_brute_force, LinearCode};
use fixglue::gf2::BitVector;
use fixglue::perm::{PermGroup, Permutation};
use rand::Rng;

/// Every element of `S_n`, for `n <= 8`.
pub fn symmetric_elements(n: usize) -> Vec<Permutation> {
    PermGroup::symmetric(n).elements_bounded(50_000).unwrap()
}

/// Codewords fixed by `sigma`, by filtering the whole code.
pub fn fixed_words(c: &LinearCode, sigma: &Permutation) -> BTreeSet<BitVector> {
    c.codewords().into_iter().filter(|w| sigma.apply(w) == *w).collect()
}

pub fn dim_of(words: &BTreeSet<BitVector>) -> usize {
    words.len().trailing_zeros() as usize
}

/// The set `D` of all codes equivalent to a library code and invariant under
/// `perms`, split into orbits of the elements of `S_m` centralizing `perms`.
/// Each orbit is keyed by its least member.
pub fn invariant_code_orbits(lib: &[LinearCode], perms: &[Permutation]) -> BTreeSet<LinearCode> {
    let m = perms[0].degree();
    let sym = symmetric_elements(m);
    let cent: Vec<&Permutation> = sym.iter().filter(|g| perms.iter().all(|p| p.commutes_with(g))).collect();
    let mut all = BTreeSet::new();
    for y in lib {
        for g in &sym {
            let d = y.image(g).unwrap();
            if perms.iter().all(|p| d.is_automorphism(p)) {
                all.insert(d);
            }
        }
    }
    all.iter()
        .map(|d| cent.iter().map(|g| d.image(g).unwrap()).min().unwrap())
        .collect()
}

/// Least member of the orbit of `d` under the centralizer of `perms`.
pub fn orbit_key(d: &LinearCode, perms: &[Permutation]) -> LinearCode {
    symmetric_elements(d.len())
        .iter()
        .filter(|g| perms.iter().all(|p| p.commutes_with(g)))
        .map(|g| d.image(g).unwrap())
        .min()
        .unwrap()
}

fn free_klein(x: &Permutation, y: &Permutation) -> bool {
    x != y
        && x.commutes_with(y)
        && [x.clone(), y.clone(), x.compose(y)]
            .iter()
            .all(|z| z.is_involution() && z.is_fixed_point_free())
}

/// `(triple_dim, pair_dims, glue_roles) -> number of ordered triples`, over
/// every element of the brute-force automorphism group.
pub fn brute_profiles(d: &LinearCode) -> BTreeMap<(usize, [usize; 3], bool), u128> {
    let aut = automorphism_group_brute_force(d).unwrap().elements().unwrap();
    let invs: Vec<&Permutation> = aut.iter().filter(|x| x.is_involution() && x.is_fixed_point_free()).collect();
    let fixed: Vec<BTreeSet<BitVector>> = invs.iter().map(|x| fixed_words(d, x)).collect();
    let all: BTreeSet<BitVector> = d.codewords().into_iter().collect();
    let mut out = BTreeMap::new();
    for a in 0..invs.len() {
        for b in 0..invs.len() {
            if !free_klein(invs[a], invs[b]) {
                continue;
            }
            let ab = invs[a].compose(invs[b]);
            let fab: BTreeSet<BitVector> = fixed[a].intersection(&fixed[b]).cloned().collect();
            let sum: BTreeSet<BitVector> = fixed[a].iter().flat_map(|x| fixed[b].iter().map(move |y| x.xor(y))).collect();
            let glue = sum == all;
            for c in 0..invs.len() {
                if !free_klein(invs[a], invs[c]) || !free_klein(invs[b], invs[c]) || !free_klein(&ab, invs[c]) {
                    continue;
                }
                let t = fab.intersection(&fixed[c]).count();
                let pac = fixed[a].intersection(&fixed[c]).count();
                let pbc = fixed[b].intersection(&fixed[c]).count();
                let key = (
                    dim_of_count(t),
                    [dim_of(&fab), dim_of_count(pac), dim_of_count(pbc)],
                    glue,
                );
                *out.entry(key).or_insert(0) += 1;
            }
        }
    }
    out
}

fn dim_of_count(count: usize) -> usize {
    count.trailing_zeros() as usize
}

/// Rows `(dim Y(x) cap Y(y), dims sorted)` over all free Klein pairs in the
/// brute-force automorphism group of each code.
pub fn brute_cases(lib: &[LinearCode]) -> BTreeSet<(usize, usize, usize)> {
    let mut rows = BTreeSet::new();
    for y in lib {
        let aut = automorphism_group_brute_force(y).unwrap().elements().unwrap();
        for x in &aut {
            for z in &aut {
                if free_klein(x, z) {
                    let (fx, fz) = (fixed_words(y, x), fixed_words(y, z));
                    let t = dim_of_count(fx.intersection(&fz).count());
                    let (p, q) = (dim_of(&fx), dim_of(&fz));
                    rows.insert((t, p.min(q), p.max(q)));
                }
            }
        }
    }
    rows
}

/// A random self-dual code invariant under the group generated by `gens`,
/// grown by adding whole orbits of random vectors from the dual.
pub fn random_invariant_self_dual(n: usize, gens: &[Permutation], rng: &mut impl Rng) -> LinearCode {
    let group = PermGroup::new(n, gens.to_vec()).unwrap().elements().unwrap();
    'restart: loop {
        let mut c = LinearCode::zero(n);
        let mut stalls = 0;
        while c.dim() < n / 2 {
            let dual = c.dual();
            let coeffs = BitVector::from_support(dual.dim(), (0..dual.dim()).filter(|_| rng.gen::<bool>()));
            let v = dual.generator().combine(&coeffs);
            let orbit = group.iter().map(|g| g.apply(&v)).collect();
            let w = c.sum(&LinearCode::from_rows(n, orbit));
            if w.dim() > c.dim() && w.is_self_orthogonal() {
                c = w;
            } else {
                stalls += 1;
                if stalls > 200 {
                    continue 'restart;
                }
            }
        }
        return c;
    }
}
