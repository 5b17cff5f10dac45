//! Codeword enumeration: weight enumerators and minimum distance.
//!
//! Codewords are packed into fixed-size word arrays for lengths up to
//! [`MAX_FAST_LENGTH`]; longer codes fall back to heap vectors. Exhaustive
//! enumeration walks the code in Gray-code order, split into independent
//! chunks over the top generator bits so it can fan out across threads.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::gf2::{words_for, BitMatrix, BitVector};

use super::{CodeError, LinearCode, DEFAULT_WORD_BOUND};

/// Longest code handled by the stack-allocated fast path.
pub const MAX_FAST_LENGTH: usize = 256;

/// Exhaustive enumeration never goes beyond `2^MAX_EXHAUSTIVE_K` words.
const MAX_EXHAUSTIVE_K: usize = 48;

/// Below this dimension `auto` just enumerates everything.
const AUTO_EXHAUSTIVE_K: usize = 12;

const CHUNK_BITS: usize = 8;

pub(crate) trait Word: Clone + Send + Sync {
    fn from_bits(v: &BitVector) -> Self;
    fn xor_assign(&mut self, o: &Self);
    fn weight(&self) -> usize;
}

#[derive(Clone, Copy)]
pub(crate) struct Packed<const W: usize>(pub(crate) [u64; W]);

impl<const W: usize> Word for Packed<W> {
    #[inline]
    fn from_bits(v: &BitVector) -> Self {
        let mut a = [0u64; W];
        a[..v.words().len()].copy_from_slice(v.words());
        Packed(a)
    }
    #[inline]
    fn xor_assign(&mut self, o: &Self) {
        for i in 0..W {
            self.0[i] ^= o.0[i];
        }
    }
    #[inline]
    fn weight(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl Word for BitVector {
    fn from_bits(v: &BitVector) -> Self {
        v.clone()
    }
    fn xor_assign(&mut self, o: &Self) {
        BitVector::xor_assign(self, o)
    }
    fn weight(&self) -> usize {
        BitVector::weight(self)
    }
}

/// Runs `$body` with `$w` bound to the word type suited to length `$n`.
macro_rules! with_word {
    ($n:expr, $w:ident => $body:expr) => {
        match words_for($n) {
            0 | 1 => {
                type $w = Packed<1>;
                $body
            }
            2 => {
                type $w = Packed<2>;
                $body
            }
            3 => {
                type $w = Packed<3>;
                $body
            }
            4 => {
                type $w = Packed<4>;
                $body
            }
            _ => {
                type $w = BitVector;
                $body
            }
        }
    };
}
pub(crate) use with_word;

pub(crate) fn pack<T: Word>(m: &BitMatrix) -> Vec<T> {
    m.rows().iter().map(T::from_bits).collect()
}

/// Splits the code into chunks by the top generator bits; calls `walk` on
/// each chunk with its starting word and the rows to Gray-walk over.
fn chunk_starts<T: Word>(rows: &[T]) -> (Vec<T>, usize) {
    let k = rows.len();
    let t = k.min(CHUNK_BITS);
    let low = k - t;
    let zero = {
        let mut z = rows[0].clone();
        z.xor_assign(&rows[0]);
        z
    };
    let mut starts = Vec::with_capacity(1 << t);
    for c in 0usize..(1 << t) {
        let mut s = zero.clone();
        for j in 0..t {
            if c >> j & 1 == 1 {
                s.xor_assign(&rows[low + j]);
            }
        }
        starts.push(s);
    }
    (starts, low)
}

/// Visits every word of `start + span(rows)` in Gray order; stops when `f`
/// returns false.
#[inline]
fn gray_walk<T: Word>(rows: &[T], start: &T, mut f: impl FnMut(&T) -> bool) {
    let mut cur = start.clone();
    if !f(&cur) {
        return;
    }
    for i in 1u64..(1u64 << rows.len()) {
        cur.xor_assign(&rows[i.trailing_zeros() as usize]);
        if !f(&cur) {
            return;
        }
    }
}

/// Number of codewords of each Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightEnumerator {
    counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    /// Smallest positive weight present, if any.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Weights with a nonzero count, ascending, excluding zero.
    pub fn support(&self) -> Vec<usize> {
        (1..self.counts.len()).filter(|&w| self.counts[w] > 0).collect()
    }
}

pub fn weight_enumerator(c: &LinearCode) -> Result<WeightEnumerator, CodeError> {
    weight_enumerator_bounded(c, DEFAULT_WORD_BOUND)
}

pub fn weight_enumerator_bounded(c: &LinearCode, bound: u64) -> Result<WeightEnumerator, CodeError> {
    let (n, k) = (c.len(), c.dim());
    if k >= 64 || (1u64 << k) > bound {
        return Err(CodeError::EnumerationBound { k, bound });
    }
    let mut counts = vec![0u64; n + 1];
    if k == 0 {
        counts[0] = 1;
        return Ok(WeightEnumerator { counts });
    }
    with_word!(n, T => {
        let rows: Vec<T> = pack(c.generator());
        let (starts, low) = chunk_starts(&rows);
        let walk = &rows[..low];
        counts = starts
            .par_iter()
            .map(|s| {
                let mut local = vec![0u64; n + 1];
                gray_walk(walk, s, |w| {
                    local[w.weight()] += 1;
                    true
                });
                local
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
    });
    Ok(WeightEnumerator { counts })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DistanceMode {
    /// Enumerate all `2^k` codewords.
    Exhaustive,
    /// Brouwer-Zimmermann information-set enumeration for larger dimensions.
    #[default]
    Auto,
}

/// Minimum weight of a nonzero codeword. With `early_abort_at = Some(t)` the
/// search may stop at the first codeword of weight below `t` and return it.
pub fn min_distance(c: &LinearCode, mode: DistanceMode, early_abort_at: Option<usize>) -> Result<usize, CodeError> {
    min_distance_with(c.generator(), mode, early_abort_at)
}

/// As [`min_distance`], for the row space of an arbitrary full-rank matrix.
pub fn min_distance_with(
    gen: &BitMatrix,
    mode: DistanceMode,
    early_abort_at: Option<usize>,
) -> Result<usize, CodeError> {
    let (n, k) = (gen.ncols(), gen.nrows());
    if k == 0 {
        return Err(CodeError::ZeroDimension);
    }
    debug_assert_eq!(gen.rank(), k);
    let stop = early_abort_at.unwrap_or(0);
    let exhaustive = mode == DistanceMode::Exhaustive || k <= AUTO_EXHAUSTIVE_K;
    if exhaustive && k > MAX_EXHAUSTIVE_K {
        return Err(CodeError::EnumerationBound {
            k,
            bound: 1 << MAX_EXHAUSTIVE_K,
        });
    }
    Ok(with_word!(n, T => {
        let rows: Vec<T> = pack(gen);
        if exhaustive {
            exhaustive_min::<T>(&rows, n, stop)
        } else {
            bz_min::<T>(gen, n, stop)
        }
    }))
}

fn exhaustive_min<T: Word>(rows: &[T], n: usize, stop: usize) -> usize {
    let best = AtomicUsize::new(n + 1);
    let (starts, low) = chunk_starts(rows);
    let walk = &rows[..low];
    starts.par_iter().for_each(|s| {
        let mut local = n + 1;
        let mut steps = 0u32;
        gray_walk(walk, s, |w| {
            let wt = w.weight();
            if wt > 0 && wt < local {
                local = wt;
                best.fetch_min(wt, Ordering::Relaxed);
                if wt < stop {
                    return false;
                }
            }
            steps = steps.wrapping_add(1);
            !(steps & 0xfff == 0 && best.load(Ordering::Relaxed) < stop)
        });
        best.fetch_min(local, Ordering::Relaxed);
    });
    best.into_inner()
}

/// One information set: generator rows reduced on `k` pivot columns, of
/// which `fresh` were not pivots of any earlier set.
struct InfoSet<T> {
    rows: Vec<T>,
    fresh: usize,
}

/// Generator matrices with (partially) disjoint information sets.
fn information_sets<T: Word>(gen: &BitMatrix, n: usize) -> Vec<InfoSet<T>> {
    let k = gen.nrows();
    let mut used = vec![false; n];
    let mut out = Vec::new();
    loop {
        let order: Vec<usize> = (0..n).filter(|&c| !used[c]).chain((0..n).filter(|&c| used[c])).collect();
        let mut rows: Vec<BitVector> = gen.rows().to_vec();
        let mut r = 0;
        let mut fresh = 0;
        let mut pivots = Vec::with_capacity(k);
        for &c in &order {
            if r == k {
                break;
            }
            let Some(p) = (r..k).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot);
                }
            }
            if !used[c] {
                fresh += 1;
            }
            pivots.push(c);
            r += 1;
        }
        if fresh == 0 {
            break;
        }
        for c in pivots {
            used[c] = true;
        }
        out.push(InfoSet {
            rows: rows.iter().map(T::from_bits).collect(),
            fresh,
        });
    }
    out
}

/// Visits the sum of every `w`-subset of `rows[from..]` added to `acc`.
fn for_each_combination<T: Word>(rows: &[T], from: usize, w: usize, acc: &T, f: &mut impl FnMut(&T) -> bool) -> bool {
    if w == 0 {
        return f(acc);
    }
    for i in from..=rows.len() - w {
        let mut next = acc.clone();
        next.xor_assign(&rows[i]);
        if !for_each_combination(rows, i + 1, w - 1, &next, f) {
            return false;
        }
    }
    true
}

fn bz_min<T: Word>(gen: &BitMatrix, n: usize, stop: usize) -> usize {
    let k = gen.nrows();
    let sets: Vec<InfoSet<T>> = information_sets(gen, n);
    let best = AtomicUsize::new(n + 1);
    for w in 1..=k {
        for set in &sets {
            let rows = &set.rows;
            (0..=k - w).into_par_iter().for_each(|first| {
                let mut local = best.load(Ordering::Relaxed);
                if local < stop {
                    return;
                }
                let mut visit = |v: &T| {
                    let wt = v.weight();
                    if wt < local {
                        local = wt;
                        best.fetch_min(wt, Ordering::Relaxed);
                    }
                    local >= stop
                };
                for_each_combination(rows, first + 1, w - 1, &rows[first], &mut visit);
            });
            if best.load(Ordering::Relaxed) < stop {
                return best.into_inner();
            }
        }
        let lower: usize = sets.iter().map(|s| (w + 1).saturating_sub(k - s.fresh)).sum();
        let found = best.load(Ordering::Relaxed);
        if found <= lower {
            return found;
        }
    }
    best.into_inner()
}
