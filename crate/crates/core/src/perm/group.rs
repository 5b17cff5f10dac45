use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::chain::StabChain;
use super::{PermError, Permutation};

/// Default cap on the number of elements `elements` will materialize.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

/// A permutation group given by generators, with a stabilizer chain built
/// lazily on first use.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        Self {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        for g in &generators {
            super::permutation::check_degree(degree, g.degree())?;
        }
        Ok(Self::from_parts(degree, generators))
    }

    pub(crate) fn from_parts(degree: usize, generators: Vec<Permutation>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Self {
            degree,
            generators,
            chain: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new())
    }

    /// The full symmetric group, generated by a transposition and an n-cycle.
    pub fn symmetric(degree: usize) -> Self {
        if degree < 2 {
            return Self::trivial(degree);
        }
        let t = Permutation::from_cycles(degree, &[vec![0, 1]]).unwrap();
        let c = Permutation::from_cycles(degree, &[(0..degree).collect()]).unwrap();
        Self::from_parts(degree, vec![t, c])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub(crate) fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators, &[]))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// The order if it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain().strong_generators()
    }

    /// True when every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// `t^-1 G t`.
    pub fn conjugate(&self, t: &Permutation) -> PermGroup {
        let gens = self.generators.iter().map(|g| g.conjugate(t)).collect();
        Self::from_parts(self.degree, gens)
    }

    /// Group generated by `self` and `extra`.
    pub fn with_generator(&self, extra: Permutation) -> PermGroup {
        let mut gens = self.generators.clone();
        gens.push(extra);
        Self::from_parts(self.degree, gens)
    }

    /// The subgroup fixing each of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let chain = StabChain::new(self.degree, &self.generators, points);
        let mut distinct = Vec::new();
        for &p in points {
            if !distinct.contains(&p) {
                distinct.push(p);
            }
        }
        let gens = chain
            .levels
            .get(distinct.len())
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        Self::from_parts(self.degree, gens)
    }

    /// Orbit of `point`, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit_of(self.degree, &self.generators, point)
    }

    /// All orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let o = self.orbit(p);
                for &x in &o {
                    seen[x] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// Calls `f` on each element once; `f` returning false stops the walk.
    pub fn for_each_element(&self, f: impl FnMut(&Permutation) -> bool) {
        self.chain().for_each_element(f)
    }

    pub fn elements(&self) -> Result<Vec<Permutation>, PermError> {
        self.elements_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn elements_bounded(&self, bound: u64) -> Result<Vec<Permutation>, PermError> {
        let order = self.order();
        if order > BigUint::from(bound) {
            return Err(PermError::OrderExceedsBound {
                order: order.to_string(),
                bound,
            });
        }
        let mut out = Vec::with_capacity(order.to_usize().unwrap_or(0));
        self.for_each_element(|g| {
            out.push(g.clone());
            true
        });
        Ok(out)
    }

    /// Checks that `order` and membership agree with brute-force closure.
    /// Only used by tests on small groups.
    #[doc(hidden)]
    pub fn closure_by_multiplication(&self) -> HashSet<Permutation> {
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in &self.generators {
                let y = x.compose(g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }
}

pub(crate) fn orbit_of(degree: usize, gens: &[Permutation], point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut orbit = vec![point];
    let mut head = 0;
    while head < orbit.len() {
        let b = orbit[head];
        head += 1;
        for g in gens {
            let c = g.image(b);
            if !seen[c] {
                seen[c] = true;
                orbit.push(c);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}
