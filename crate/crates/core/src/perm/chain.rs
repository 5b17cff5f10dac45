//! Stabilizer chains via the deterministic Schreier-Sims algorithm.

use num_bigint::BigUint;

use super::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    /// Strong generators fixing all earlier base points.
    pub gens: Vec<Permutation>,
    /// Orbit of `base` under `gens`, in discovery order.
    pub orbit: Vec<usize>,
    /// `reps[b]` maps `base` to `b`; `None` outside the orbit.
    pub reps: Vec<Option<Permutation>>,
    pub inv_reps: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: usize, gens: Vec<Permutation>) -> Self {
        let mut lvl = Level {
            base,
            gens,
            orbit: Vec::new(),
            reps: Vec::new(),
            inv_reps: Vec::new(),
        };
        lvl.rebuild(degree);
        lvl
    }

    fn rebuild(&mut self, degree: usize) {
        let id = Permutation::identity(degree);
        self.reps = vec![None; degree];
        self.inv_reps = vec![None; degree];
        self.reps[self.base] = Some(id.clone());
        self.inv_reps[self.base] = Some(id);
        self.orbit = vec![self.base];
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let c = g.image(b);
                if self.reps[c].is_none() {
                    let u = self.reps[b].as_ref().unwrap().compose(g);
                    self.inv_reps[c] = Some(u.inverse());
                    self.reps[c] = Some(u);
                    self.orbit.push(c);
                }
            }
        }
    }
}

/// Base and strong generating set with transversals.
#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain for `<gens>` whose base starts with `base_prefix`.
    pub fn new(degree: usize, gens: &[Permutation], base_prefix: &[usize]) -> Self {
        let mut gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        gens.sort();
        gens.dedup();

        let mut base: Vec<usize> = Vec::new();
        for &b in base_prefix {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        for g in &gens {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(g.moved_points().next().unwrap());
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let lg = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&x| g.image(x) == x))
                .cloned()
                .collect();
            levels.push(Level::new(degree, b, lg));
        }
        let mut chain = StabChain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match self.find_missing_schreier_gen(lvl) {
                Some((residue, j)) => {
                    if j == self.levels.len() {
                        let b = residue.moved_points().next().expect("nonidentity residue");
                        self.levels.push(Level::new(self.degree, b, Vec::new()));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild(self.degree);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// Returns a Schreier generator of level `lvl` that does not sift through
    /// the levels below it, along with the level where sifting stopped.
    fn find_missing_schreier_gen(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for &b in &level.orbit {
            let u = level.reps[b].as_ref().unwrap();
            for s in &level.gens {
                let c = s.image(b);
                let h = u.compose(s).compose(level.inv_reps[c].as_ref().unwrap());
                if h.is_identity() {
                    continue;
                }
                let (y, j) = self.strip(h, lvl + 1);
                if j < self.levels.len() || !y.is_identity() {
                    return Some((y, j));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `from..`; returns the residue and the index of
    /// the level where it left the orbit (or `levels.len()`).
    pub fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.image(level.base);
            match &level.inv_reps[b] {
                Some(inv) => g = g.compose(inv),
                None => return (g, l),
            }
        }
        let l = self.levels.len();
        (g, l)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (y, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && y.is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// Visits every group element exactly once. Stops early if `f` returns false.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation) -> bool) {
        let id = Permutation::identity(self.degree);
        if self.levels.is_empty() {
            f(&id);
            return;
        }
        // g = u_{L-1} ... u_0, built from the last level upward.
        fn rec(
            chain: &StabChain,
            depth: usize,
            prefix: &Permutation,
            f: &mut dyn FnMut(&Permutation) -> bool,
        ) -> bool {
            let level = &chain.levels[depth];
            for &b in &level.orbit {
                let g = prefix.compose(level.reps[b].as_ref().unwrap());
                let keep_going = if depth == 0 { f(&g) } else { rec(chain, depth - 1, &g, f) };
                if !keep_going {
                    return false;
                }
            }
            true
        }
        rec(self, self.levels.len() - 1, &id, &mut f);
    }
}
