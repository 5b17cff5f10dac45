//! Named codes and generators of random or exhaustive code families.

use std::collections::HashSet;

use rand::Rng;

use crate::gf2::{BitMatrix, BitVector};

use super::LinearCode;

/// The `[n,1,n]` repetition code.
pub fn repetition(n: usize) -> LinearCode {
    LinearCode::from_rows(n, vec![BitVector::ones(n)])
}

/// `i_2^m`: the direct sum of `m` copies of `{00, 11}`.
pub fn i2(m: usize) -> LinearCode {
    let n = 2 * m;
    let rows = (0..m).map(|j| BitVector::from_support(n, [2 * j, 2 * j + 1])).collect();
    LinearCode::from_rows(n, rows)
}

/// The extended Hamming `[8,4,4]` code, coordinates indexed by `F_2^3` so
/// that every translation `x -> x + a` is an automorphism.
pub fn e8() -> LinearCode {
    LinearCode::from_strs(&["11111111", "01010101", "00110011", "00001111"])
}

/// `d_n^+` for `n = 0 mod 4`, `n >= 8`: the even code spanned by the
/// overlapping `1111` blocks plus the glue word `0101...01`.
pub fn d_plus(n: usize) -> LinearCode {
    assert!(n >= 8 && n % 4 == 0, "d_n^+ needs n = 0 mod 4, n >= 8");
    let mut rows: Vec<BitVector> = (0..n / 2 - 1)
        .map(|j| BitVector::from_support(n, 2 * j..2 * j + 4))
        .collect();
    rows.push(BitVector::from_support(n, (1..n).step_by(2)));
    LinearCode::from_rows(n, rows)
}

/// The extended binary Golay code: the length-23 quadratic residue code
/// with generator `1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11`, plus parity.
pub fn golay24() -> LinearCode {
    const G: [usize; 7] = [0, 2, 4, 5, 6, 10, 11];
    let rows = (0..12)
        .map(|s| {
            let mut v = BitVector::from_support(24, G.iter().map(|e| e + s));
            v.set(23, true);
            v
        })
        .collect();
    LinearCode::from_rows(24, rows)
}

/// A uniformly random `[n,k]` code, rejecting rank-deficient draws.
pub fn random_code(n: usize, k: usize, rng: &mut impl Rng) -> LinearCode {
    assert!(k <= n);
    loop {
        let rows = (0..k).map(|_| random_vector(n, rng)).collect();
        let c = LinearCode::from_rows(n, rows);
        if c.dim() == k {
            return c;
        }
    }
}

fn random_vector(n: usize, rng: &mut impl Rng) -> BitVector {
    BitVector::from_support(n, (0..n).filter(|_| rng.gen::<bool>()))
}

/// A random self-dual code of even length `n`, grown one even vector of
/// `C^perp \ C` at a time.
pub fn random_self_dual(n: usize, rng: &mut impl Rng) -> LinearCode {
    assert!(n % 2 == 0, "self-dual codes have even length");
    let mut c = LinearCode::zero(n);
    while c.dim() < n / 2 {
        let dual = c.dual();
        loop {
            let coeffs = random_vector(dual.dim(), rng);
            let v = dual.generator().combine(&coeffs);
            if v.weight() % 2 == 0 && !c.contains(&v) {
                c = c.sum(&LinearCode::from_rows(n, vec![v]));
                break;
            }
        }
    }
    c
}

/// Every self-dual code of length `n` (`n <= 10`), by breadth-first
/// extension of self-orthogonal codes. There are `prod_{i<n/2} (2^i + 1)`.
pub fn all_self_dual_codes(n: usize) -> Vec<LinearCode> {
    assert!(n % 2 == 0 && n <= 10, "exhaustive listing needs even n <= 10");
    let all: Vec<BitVector> = (0u64..1 << n)
        .map(|x| BitVector::from_words(n, vec![x]))
        .filter(|v| !v.is_zero() && v.weight() % 2 == 0)
        .collect();
    let mut layer: HashSet<LinearCode> = HashSet::from([LinearCode::zero(n)]);
    for _ in 0..n / 2 {
        let mut next = HashSet::new();
        for c in &layer {
            let dual = c.dual();
            for v in &all {
                if dual.contains(v) && !c.contains(v) {
                    next.insert(c.sum(&LinearCode::from_rows(n, vec![v.clone()])));
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<LinearCode> = layer.into_iter().collect();
    out.sort();
    out
}

/// Generator matrix helper for tests and callers holding raw rows.
pub fn from_matrix(m: &BitMatrix) -> LinearCode {
    LinearCode::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{min_distance, weight_enumerator, DistanceMode};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn named_codes_have_expected_parameters() {
        for (c, n, d) in [
            (e8(), 8, 4),
            (d_plus(12), 12, 4),
            (d_plus(16), 16, 4),
            (i2(5), 10, 2),
            (golay24(), 24, 8),
        ] {
            assert_eq!(c.len(), n);
            assert!(c.is_self_dual(), "{c:?}");
            assert_eq!(min_distance(&c, DistanceMode::Exhaustive, None).unwrap(), d);
        }
        assert_eq!(d_plus(8), e8());
        let w = weight_enumerator(&golay24()).unwrap();
        assert_eq!((w.count(8), w.count(12), w.count(16)), (759, 2576, 759));
    }

    #[test]
    fn random_self_dual_codes_are_self_dual() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [2, 8, 16, 36] {
            assert!(random_self_dual(n, &mut rng).is_self_dual());
        }
    }

    #[test]
    fn exhaustive_listing_counts() {
        assert_eq!(all_self_dual_codes(2).len(), 1);
        assert_eq!(all_self_dual_codes(4).len(), 3);
        assert_eq!(all_self_dual_codes(6).len(), 15);
        let eight = all_self_dual_codes(8);
        assert_eq!(eight.len(), 135);
        assert!(eight.iter().all(|c| c.is_self_dual()));
    }
}
