//! Backtrack searches over a stabilizer chain.

use super::group::orbit_of;
use super::{PermError, PermGroup, Permutation};

/// A partial injective map on points, closed under conjugation-compatibility
/// with a fixed set of permutations: if `p -> q` then `p^h -> q^h` for every
/// `h`. Any element commuting with all `h` must extend such a map.
struct CommutingMap<'a> {
    hgens: &'a [Permutation],
    img: Vec<Option<u16>>,
    pre: Vec<Option<u16>>,
    trail: Vec<usize>,
}

impl<'a> CommutingMap<'a> {
    fn new(degree: usize, hgens: &'a [Permutation]) -> Self {
        Self {
            hgens,
            img: vec![None; degree],
            pre: vec![None; degree],
            trail: Vec::new(),
        }
    }

    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let p = self.trail.pop().unwrap();
            let q = self.img[p].take().unwrap();
            self.pre[q as usize] = None;
        }
    }

    /// Adds `p -> q` and everything it forces; false on contradiction.
    fn assign(&mut self, p: usize, q: usize) -> bool {
        let mut stack = vec![(p, q)];
        while let Some((p, q)) = stack.pop() {
            match (self.img[p], self.pre[q]) {
                (Some(x), _) if x as usize == q => continue,
                (Some(_), _) | (_, Some(_)) => return false,
                (None, None) => {}
            }
            self.img[p] = Some(q as u16);
            self.pre[q] = Some(p as u16);
            self.trail.push(p);
            for h in self.hgens {
                stack.push((h.image(p), h.image(q)));
            }
        }
        true
    }
}

/// `C_G(H)`: elements of `G` commuting with every generator of `H`.
///
/// Walks the stabilizer chain of `G` from the deepest level up. At each level
/// only cosets not already reached by the centralizer elements found so far are
/// searched, and partial base images are pruned by the forced commuting map.
pub fn centralizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup, PermError> {
    super::permutation::check_degree(g.degree(), h.degree())?;
    if h.is_trivial() || g.is_trivial() {
        return Ok(g.clone());
    }
    let n = g.degree();
    let chain = g.chain();
    let hgens = h.generators();
    let levels = &chain.levels;
    let base: Vec<usize> = levels.iter().map(|l| l.base).collect();
    let mut found: Vec<(usize, Permutation)> = Vec::new();

    for i in (0..levels.len()).rev() {
        let mut orbit = levels[i].orbit.clone();
        orbit.sort_unstable();
        for &gamma in &orbit {
            if gamma == base[i] {
                continue;
            }
            let known: Vec<Permutation> = found
                .iter()
                .filter(|(l, _)| *l >= i)
                .map(|(_, p)| p.clone())
                .collect();
            if orbit_of(n, &known, base[i]).binary_search(&gamma).is_ok() {
                continue;
            }
            let mut map = CommutingMap::new(n, hgens);
            let consistent = base[..i].iter().all(|&b| map.assign(b, b)) && map.assign(base[i], gamma);
            if !consistent {
                continue;
            }
            let suffix = levels[i].reps[gamma].clone().unwrap();
            if let Some(x) = search_coset(chain, i + 1, &suffix, &mut map, hgens) {
                found.push((i, x));
            }
        }
    }
    Ok(PermGroup::from_parts(n, found.into_iter().map(|(_, p)| p).collect()))
}

fn search_coset(
    chain: &super::chain::StabChain,
    level: usize,
    suffix: &Permutation,
    map: &mut CommutingMap<'_>,
    hgens: &[Permutation],
) -> Option<Permutation> {
    if level == chain.levels.len() {
        return hgens.iter().all(|h| h.commutes_with(suffix)).then(|| suffix.clone());
    }
    let lvl = &chain.levels[level];
    for &delta in &lvl.orbit {
        let target = suffix.image(delta);
        let mark = map.mark();
        if map.assign(lvl.base, target) {
            let next = lvl.reps[delta].as_ref().unwrap().compose(suffix);
            if let Some(x) = search_coset(chain, level + 1, &next, map, hgens) {
                return Some(x);
            }
        }
        map.undo(mark);
    }
    None
}

/// Brute-force centralizer by filtering every element; test oracle only.
#[doc(hidden)]
pub fn centralizer_by_enumeration(g: &PermGroup, h: &PermGroup) -> Result<Vec<Permutation>, PermError> {
    let hgens = h.generators();
    Ok(g
        .elements()?
        .into_iter()
        .filter(|x| hgens.iter().all(|y| y.commutes_with(x)))
        .collect())
}
