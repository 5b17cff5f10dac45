//! Automorphism groups and canonical forms by partition backtrack.
//!
//! The object searched is a *structure*: a code together with a list of
//! permutations of its coordinates. A relabeling `l` sends `(C, p_1, ..)` to
//! `(C^l, l^-1 p_1 l, ..)`, so automorphisms of a structure are the code
//! automorphisms commuting with every `p_i`. With no permutations this is
//! plain code equivalence.
//!
//! Coordinates are refined by their incidence with a set of invariant
//! codewords: all words of the smallest weights, adding weights until the
//! words span the code. Each search node individualizes one point of the
//! first smallest non-singleton cell and refines again. A node trace
//! summarizes every split, so traces are label-invariant.


use crate::gf2::{BitMatrix, BitVector};
use crate::perm::{orbit_of, PermGroup, Permutation};

use super::distance::{pack, with_word, Packed, Word};

use super::{weight_enumerator_bounded, CodeError, LinearCode, DEFAULT_AUT_LENGTH_BOUND, DEFAULT_WORD_BOUND};
use crate::gf2::words_for;

/// Invariant words beyond this count are only kept for the smallest weight.
const WORD_CAP: u64 = 1 << 16;
/// Hard limit on the number of invariant words.
const WORD_HARD_CAP: u64 = 1 << 20;

#[inline]
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

type Cells = Vec<Vec<u16>>;

struct Refiner {
    n: usize,
    words: Vec<Vec<u16>>,
    point_words: Vec<Vec<u32>>,
    perms: Vec<(Vec<u16>, Vec<u16>)>,
}

impl Refiner {
    fn new(n: usize, words: Vec<Vec<u16>>, perms: &[Permutation]) -> Self {
        let mut point_words = vec![Vec::new(); n];
        for (i, w) in words.iter().enumerate() {
            for &x in w {
                point_words[x as usize].push(i as u32);
            }
        }
        let perms = perms
            .iter()
            .map(|p| {
                let img: Vec<u16> = (0..n).map(|x| p.image(x) as u16).collect();
                let inv = p.inverse();
                let pre: Vec<u16> = (0..n).map(|x| inv.image(x) as u16).collect();
                (img, pre)
            })
            .collect();
        Self {
            n,
            words,
            point_words,
            perms,
        }
    }

    /// Splits cells until stable; returns the trace of the splits.
    fn refine(&self, cells: &mut Cells) -> u64 {
        let n = self.n;
        let mut trace = 0x51ed_270b_2702_3c1bu64;
        let mut cell_of = vec![0u64; n];
        let mut word_h = vec![0u64; self.words.len()];
        let mut sig = vec![0u64; n];
        loop {
            if cells.len() == n {
                break;
            }
            for (ci, c) in cells.iter().enumerate() {
                for &x in c {
                    cell_of[x as usize] = ci as u64;
                }
            }
            for (h, w) in word_h.iter_mut().zip(&self.words) {
                *h = w.iter().fold(0u64, |a, &x| a.wrapping_add(mix(cell_of[x as usize])));
            }
            for x in 0..n {
                let mut s = self.point_words[x]
                    .iter()
                    .fold(0u64, |a, &w| a.wrapping_add(mix(word_h[w as usize] ^ 0xa5a5)));
                for (pi, (img, pre)) in self.perms.iter().enumerate() {
                    let tag = (pi as u64 + 1) << 40;
                    s = mix(s ^ mix(tag ^ cell_of[img[x] as usize]));
                    s = mix(s ^ mix(tag ^ (1 << 39) ^ cell_of[pre[x] as usize]));
                }
                sig[x] = s;
            }
            let mut next: Cells = Vec::with_capacity(cells.len() * 2);
            let mut changed = false;
            for (ci, c) in cells.iter().enumerate() {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut v: Vec<(u64, u16)> = c.iter().map(|&x| (sig[x as usize], x)).collect();
                v.sort_unstable();
                if v[0].0 == v[v.len() - 1].0 {
                    next.push(c.clone());
                    continue;
                }
                changed = true;
                trace = mix(trace ^ ci as u64);
                let mut start = 0;
                while start < v.len() {
                    let mut end = start + 1;
                    while end < v.len() && v[end].0 == v[start].0 {
                        end += 1;
                    }
                    trace = mix(trace ^ mix(v[start].0) ^ (end - start) as u64);
                    next.push(v[start..end].iter().map(|&(_, x)| x).collect());
                    start = end;
                }
            }
            *cells = next;
            if !changed {
                break;
            }
        }
        mix(trace ^ cells.len() as u64)
    }

    fn target_cell(&self, cells: &Cells) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, c) in cells.iter().enumerate() {
            if c.len() > 1 && best.map_or(true, |b| c.len() < cells[b].len()) {
                best = Some(i);
            }
        }
        best
    }

    /// Individualizes `u` in cell `t` and refines.
    fn child(&self, cells: &Cells, t: usize, u: u16) -> (Cells, u64) {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..t]);
        next.push(vec![u]);
        next.push(cells[t].iter().copied().filter(|&x| x != u).collect());
        next.extend_from_slice(&cells[t + 1..]);
        let tr = self.refine(&mut next);
        (next, mix(tr ^ ((t as u64) << 32) ^ cells[t].len() as u64))
    }
}

fn labeling(cells: &Cells) -> Permutation {
    let mut images = vec![0usize; cells.len()];
    for (j, c) in cells.iter().enumerate() {
        images[c[0] as usize] = j;
    }
    Permutation::from_images(images).expect("discrete partition")
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Cert {
    code: BitMatrix,
    perms: Vec<Permutation>,
}

struct Search<'a> {
    code: &'a LinearCode,
    perms: &'a [Permutation],
    refiner: Refiner,
}

impl<'a> Search<'a> {
    fn cert(&self, lambda: &Permutation) -> Cert {
        Cert {
            code: LinearCode::new(&lambda.apply_rows(self.code.generator()))
                .generator()
                .clone(),
            perms: self.perms.iter().map(|p| p.conjugate(lambda)).collect(),
        }
    }

    fn root(&self) -> (Cells, u64) {
        let mut cells: Cells = vec![(0..self.refiner.n as u16).collect()];
        if self.refiner.n == 0 {
            cells.clear();
        }
        let tr = self.refiner.refine(&mut cells);
        (cells, tr)
    }

    fn is_automorphism(&self, g: &Permutation) -> bool {
        self.code.is_automorphism(g) && self.perms.iter().all(|p| p.commutes_with(g))
    }

    /// Automorphism group: the leftmost path, then one search per level for
    /// leaves equivalent to the leftmost leaf.
    fn automorphisms(&self) -> PermGroup {
        let n = self.refiner.n;
        let (mut cells, tr) = self.root();
        let mut path: Vec<(Cells, u64, usize, u16)> = Vec::new();
        let mut traces = vec![tr];
        while let Some(t) = self.refiner.target_cell(&cells) {
            let v = cells[t][0];
            let (next, tr) = self.refiner.child(&cells, t, v);
            path.push((cells, tr, t, v));
            traces.push(tr);
            cells = next;
        }
        let lambda0 = labeling(&cells);
        let cert0 = self.cert(&lambda0);
        let lambda0_inv = lambda0.inverse();
        let mut found: Vec<(usize, Permutation)> = Vec::new();
        for i in (0..path.len()).rev() {
            let (node, _, t, v) = &path[i];
            for &w in &node[*t] {
                if w == *v {
                    continue;
                }
                let known: Vec<Permutation> = found.iter().filter(|(l, _)| *l >= i).map(|(_, g)| g.clone()).collect();
                if orbit_of(n, &known, *v as usize).binary_search(&(w as usize)).is_ok() {
                    continue;
                }
                let (child, tr) = self.refiner.child(node, *t, w);
                if tr != traces[i + 1] {
                    continue;
                }
                if let Some(lambda) = self.probe(child, i + 1, &traces, &cert0) {
                    let g = lambda.compose(&lambda0_inv);
                    debug_assert!(self.is_automorphism(&g));
                    found.push((i, g));
                }
            }
        }
        let gens: Vec<Permutation> = found.into_iter().map(|(_, g)| g).collect();
        assert!(gens.iter().all(|g| self.is_automorphism(g)), "backtrack produced a non-automorphism");
        PermGroup::new(n, gens).expect("degrees agree")
    }

    /// Depth-first search below a node whose trace matches the leftmost path,
    /// for a leaf with certificate `cert0`.
    fn probe(&self, cells: Cells, depth: usize, traces: &[u64], cert0: &Cert) -> Option<Permutation> {
        let Some(t) = self.refiner.target_cell(&cells) else {
            let lambda = labeling(&cells);
            return (self.cert(&lambda) == *cert0).then_some(lambda);
        };
        for &u in &cells[t] {
            let (child, tr) = self.refiner.child(&cells, t, u);
            if traces.get(depth + 1) != Some(&tr) {
                continue;
            }
            if let Some(l) = self.probe(child, depth + 1, traces, cert0) {
                return Some(l);
            }
        }
        None
    }

    fn canonical(&self, aut: &PermGroup) -> (Permutation, Cert) {
        let (cells, tr) = self.root();
        let mut best: Option<Best> = None;
        let mut traces = vec![tr];
        self.canon_dfs(cells, &mut traces, aut, &mut best);
        let b = best.expect("search reaches a leaf");
        (b.lambda, b.cert)
    }

    fn canon_dfs(&self, cells: Cells, traces: &mut Vec<u64>, group: &PermGroup, best: &mut Option<Best>) {
        let depth = traces.len() - 1;
        if let Some(b) = best.as_ref() {
            let end = b.traces.len().min(depth + 1);
            if traces[..=depth] > b.traces[..end] {
                return;
            }
        }
        let Some(t) = self.refiner.target_cell(&cells) else {
            let lambda = labeling(&cells);
            let cert = self.cert(&lambda);
            let replace = match best.as_ref() {
                None => true,
                Some(b) => (&traces[..], &cert) < (&b.traces[..], &b.cert),
            };
            if replace {
                *best = Some(Best {
                    traces: traces.clone(),
                    cert,
                    lambda,
                });
            }
            return;
        };
        let cell = &cells[t];
        let reps: Vec<u16> = if group.is_trivial() {
            cell.clone()
        } else {
            let mut taken = vec![false; self.refiner.n];
            let mut sorted = cell.clone();
            sorted.sort_unstable();
            let mut reps = Vec::new();
            for &u in &sorted {
                if taken[u as usize] {
                    continue;
                }
                reps.push(u);
                for x in group.orbit(u as usize) {
                    taken[x] = true;
                }
            }
            reps
        };
        for u in reps {
            let (child, tr) = self.refiner.child(&cells, t, u);
            let sub = if group.is_trivial() {
                group.clone()
            } else {
                group.pointwise_stabilizer(&[u as usize])
            };
            traces.push(tr);
            self.canon_dfs(child, traces, &sub, best);
            traces.pop();
        }
    }
}

struct Best {
    traces: Vec<u64>,
    cert: Cert,
    lambda: Permutation,
}

/// Codewords of the smallest weights, adding weights until they span `C`.
fn invariant_words(c: &LinearCode) -> Result<Vec<Vec<u16>>, CodeError> {
    let (n, k) = (c.len(), c.dim());
    if k == 0 {
        return Ok(Vec::new());
    }
    let we = weight_enumerator_bounded(c, DEFAULT_WORD_BOUND)?;
    let support = we.support();
    // Pick weights in ascending order until the cap; keep enough to span.
    let mut chosen = vec![false; n + 1];
    let mut total = 0u64;
    for (i, &w) in support.iter().enumerate() {
        let a = we.count(w);
        if i > 0 && total + a > WORD_CAP {
            break;
        }
        if total + a > WORD_HARD_CAP {
            break;
        }
        chosen[w] = true;
        total += a;
        if i == 0 {
            continue;
        }
        let words = collect_words(c, &chosen);
        if BitMatrix::from_rows(n, words.iter().map(|s| BitVector::from_support(n, s.iter().map(|&x| x as usize))).collect()).rank() == k {
            return Ok(words);
        }
    }
    Ok(collect_words(c, &chosen))
}

fn collect_words(c: &LinearCode, chosen: &[bool]) -> Vec<Vec<u16>> {
    let n = c.len();
    let mut out = Vec::new();
    with_word!(n, T => {
        let rows: Vec<T> = pack(c.generator());
        collect_into::<T>(&rows, n, chosen, &mut out);
    });
    out.sort();
    out
}

fn collect_into<T: Word + ToSupport>(rows: &[T], n: usize, chosen: &[bool], out: &mut Vec<Vec<u16>>) {
    let mut cur = {
        let mut z = rows[0].clone();
        z.xor_assign(&rows[0]);
        z
    };
    for i in 1u64..(1u64 << rows.len()) {
        cur.xor_assign(&rows[i.trailing_zeros() as usize]);
        if chosen[cur.weight()] {
            out.push(cur.support_u16(n));
        }
    }
}

pub(crate) trait ToSupport {
    fn support_u16(&self, n: usize) -> Vec<u16>;
}

impl<const W: usize> ToSupport for Packed<W> {
    fn support_u16(&self, n: usize) -> Vec<u16> {
        BitVector::from_words(n, self.0.to_vec()).iter_ones().map(|x| x as u16).collect()
    }
}

impl ToSupport for BitVector {
    fn support_u16(&self, _n: usize) -> Vec<u16> {
        self.iter_ones().map(|x| x as u16).collect()
    }
}

fn check_structure(c: &LinearCode, perms: &[Permutation]) -> Result<(), CodeError> {
    let n = c.len();
    if n > DEFAULT_AUT_LENGTH_BOUND {
        return Err(CodeError::LengthBound {
            n,
            bound: DEFAULT_AUT_LENGTH_BOUND,
        });
    }
    for p in perms {
        if p.degree() != n {
            return Err(CodeError::DegreeMismatch {
                expected: n,
                found: p.degree(),
            });
        }
    }
    Ok(())
}

fn search<'a>(c: &'a LinearCode, perms: &'a [Permutation]) -> Result<Search<'a>, CodeError> {
    check_structure(c, perms)?;
    let words = invariant_words(c)?;
    Ok(Search {
        code: c,
        perms,
        refiner: Refiner::new(c.len(), words, perms),
    })
}

/// `Aut(C)`, every generator checked against the code.
pub fn automorphism_group(c: &LinearCode) -> Result<PermGroup, CodeError> {
    automorphism_group_of_structure(c, &[])
}

/// Automorphisms of `C` commuting with each of `perms`.
pub fn automorphism_group_of_structure(c: &LinearCode, perms: &[Permutation]) -> Result<PermGroup, CodeError> {
    Ok(search(c, perms)?.automorphisms())
}

/// The outcome of canonical labeling: `labeling` sends the input structure
/// to the canonical one.
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    pub labeling: Permutation,
    pub code: LinearCode,
    pub perms: Vec<Permutation>,
    pub automorphisms: PermGroup,
}

pub fn canonical_labeling(c: &LinearCode, perms: &[Permutation]) -> Result<CanonicalLabeling, CodeError> {
    let s = search(c, perms)?;
    let aut = s.automorphisms();
    let (lambda, cert) = s.canonical(&aut);
    Ok(CanonicalLabeling {
        labeling: lambda,
        code: LinearCode::new(&cert.code),
        perms: cert.perms,
        automorphisms: aut,
    })
}

/// A representative constant on each `S_n`-orbit of codes.
pub fn canonical_form(c: &LinearCode) -> Result<LinearCode, CodeError> {
    Ok(canonical_labeling(c, &[])?.code)
}

/// Some `sigma` with `C^sigma = D`, or `None`.
pub fn equivalence(c: &LinearCode, d: &LinearCode) -> Result<Option<Permutation>, CodeError> {
    if c.len() != d.len() || c.dim() != d.dim() {
        return Err(CodeError::ParameterMismatch {
            n1: c.len(),
            k1: c.dim(),
            n2: d.len(),
            k2: d.dim(),
        });
    }
    if weight_enumerator_bounded(c, DEFAULT_WORD_BOUND)? != weight_enumerator_bounded(d, DEFAULT_WORD_BOUND)? {
        return Ok(None);
    }
    equivalence_of_structures(c, &[], d, &[])
}

/// Some `sigma` with `C^sigma = D` and `sigma^-1 p_i sigma = q_i`, or `None`.
pub fn equivalence_of_structures(
    c: &LinearCode,
    p: &[Permutation],
    d: &LinearCode,
    q: &[Permutation],
) -> Result<Option<Permutation>, CodeError> {
    if c.len() != d.len() || c.dim() != d.dim() || p.len() != q.len() {
        return Ok(None);
    }
    let lc = canonical_labeling(c, p)?;
    let ld = canonical_labeling(d, q)?;
    if lc.code != ld.code || lc.perms != ld.perms {
        return Ok(None);
    }
    let sigma = lc.labeling.compose(&ld.labeling.inverse());
    debug_assert_eq!(c.image(&sigma).unwrap(), *d);
    Ok(Some(sigma))
}
