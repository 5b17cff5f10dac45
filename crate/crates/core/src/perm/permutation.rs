use std::fmt;
use std::str::FromStr;

use crate::gf2::{BitMatrix, BitVector};

use super::PermError;

/// A bijection of `{0, .., n-1}`. Text I/O uses 1-based points.
///
/// Products act on the right: `compose(p, q)` applies `p` first, then `q`,
/// matching the right action `v^sigma` on vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u16::MAX as usize, "degree {n} too large");
        Self {
            images: (0..n as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijection);
            }
            seen[x] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation of degree `n` from 0-based disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                if a >= n || touched[a] {
                    return Err(PermError::NotBijection);
                }
                touched[a] = true;
                images[a] = cyc[(i + 1) % cyc.len()];
            }
        }
        Self::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn try_compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        check_degree(self.degree(), other.degree())?;
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// `t^-1 * self * t`: relabels every cycle `(a b ..)` as `(a^t b^t ..)`.
    pub fn conjugate(&self, t: &Permutation) -> Permutation {
        assert_eq!(self.degree(), t.degree(), "degree mismatch");
        let mut out = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            out[t.images[i] as usize] = t.images[x as usize];
        }
        Permutation { images: out }
    }

    pub fn try_conjugate(&self, t: &Permutation) -> Result<Permutation, PermError> {
        check_degree(self.degree(), t.degree())?;
        Ok(self.conjugate(t))
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.degree() == other.degree()
            && (0..self.degree()).all(|i| other.image(self.image(i)) == self.image(other.image(i)))
    }

    /// Disjoint cycles including fixed points, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.image(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i != x as usize)
    }

    /// Order two (the identity is not an involution).
    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.images.iter().enumerate().all(|(i, &x)| self.images[x as usize] as usize == i)
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn moved_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().enumerate().filter(|(i, &x)| *i != x as usize).map(|(i, _)| i)
    }

    /// `v^sigma`: coordinate `i` of `v` moves to position `i^sigma`.
    pub fn apply(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.degree(), "vector length does not match degree");
        let mut out = BitVector::zeros(v.len());
        for i in v.iter_ones() {
            out.set(self.image(i), true);
        }
        out
    }

    pub fn try_apply(&self, v: &BitVector) -> Result<BitVector, PermError> {
        check_degree(self.degree(), v.len())?;
        Ok(self.apply(v))
    }

    /// Applies the permutation to every row.
    pub fn apply_rows(&self, m: &BitMatrix) -> BitMatrix {
        let rows = m.rows().iter().map(|r| self.apply(r)).collect();
        BitMatrix::from_rows(m.ncols(), rows)
    }

    /// 1-based image list, e.g. `[2,1,3]`.
    pub fn to_image_list(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Parses cycle notation `(1,2)(3,4)` or an image list `[2,1,4,3]`,
    /// both 1-based, at the given degree. `()` is the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Self, PermError> {
        let s = s.trim();
        if s.starts_with('[') {
            let p: Permutation = s.parse()?;
            check_degree(degree, p.degree())?;
            return Ok(p);
        }
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Parse(format!("expected '(' in {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| PermError::Parse(format!("unterminated cycle in {s:?}")))?;
            let body = open[..close].trim();
            if !body.is_empty() {
                let cyc = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| parse_point(t, degree))
                    .collect::<Result<Vec<_>, _>>()?;
                cycles.push(cyc);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }
}

fn parse_point(t: &str, degree: usize) -> Result<usize, PermError> {
    let x: usize = t
        .parse()
        .map_err(|_| PermError::Parse(format!("bad point {t:?}")))?;
    if x == 0 || x > degree {
        return Err(PermError::Parse(format!("point {x} outside 1..={degree}")));
    }
    Ok(x - 1)
}

pub(crate) fn check_degree(expected: usize, found: usize) -> Result<(), PermError> {
    if expected == found {
        Ok(())
    } else {
        Err(PermError::DegreeMismatch { expected, found })
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Parses a 1-based image list `[2,1,3]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| PermError::Parse(format!("expected image list, got {s:?}")))?;
        let images = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&x| x >= 1)
                    .map(|x| x - 1)
                    .ok_or_else(|| PermError::Parse(format!("bad image {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_images(images)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cyc in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let parts: Vec<String> = cyc.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn compose_inverse_conjugate() {
        let a = p("(1,2,3)", 4);
        assert!(a.compose(&a.inverse()).is_identity());
        let id = Permutation::identity(3);
        assert!(id.conjugate(&p("(2,3)", 3)).is_identity());
        assert_eq!(p("(1,2)", 3).conjugate(&p("(2,3)", 3)), p("(1,3)", 3));
    }

    #[test]
    fn apply_is_a_right_action() {
        let v: BitVector = "100".parse().unwrap();
        assert_eq!(p("(1,2,3)", 3).apply(&v).to_string(), "010");
        let s = p("(1,2,3)", 3);
        let t = p("(1,2)", 3);
        let w: BitVector = "110".parse().unwrap();
        assert_eq!(t.apply(&s.apply(&w)), s.compose(&t).apply(&w));
    }

    #[test]
    fn cycle_types_and_fpf() {
        let id = Permutation::identity(4);
        assert_eq!(id.cycle_type(), vec![1, 1, 1, 1]);
        assert!(!id.is_fixed_point_free());
        let x = p("(1,2)(3,4)", 4);
        assert_eq!(x.cycle_type(), vec![2, 2]);
        assert!(x.is_fixed_point_free());
        assert!(x.is_involution());
        assert!(!id.is_involution());
    }

    #[test]
    fn text_round_trip() {
        let x = p("(1,3)(2,4)", 5);
        assert_eq!(x.to_string(), "(1,3)(2,4)");
        assert_eq!(x.to_image_list(), "[3,4,1,2,5]");
        assert_eq!(Permutation::parse("[3,4,1,2,5]", 5).unwrap(), x);
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(p("()", 3), Permutation::identity(3));
        assert!(Permutation::parse("(1,9)", 4).is_err());
        assert!(Permutation::parse("(1,2)(2,3)", 4).is_err());
        assert!(Permutation::parse("[1,1]", 2).is_err());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(a.try_compose(&b), Err(PermError::DegreeMismatch { .. })));
        assert!(a.try_apply(&BitVector::zeros(2)).is_err());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn conjugation_preserves_cycle_type(a in arb_perm(9), t in arb_perm(9)) {
            prop_assert_eq!(a.conjugate(&t).cycle_type(), a.cycle_type());
            prop_assert_eq!(a.conjugate(&t), t.inverse().compose(&a).compose(&t));
        }

        #[test]
        fn apply_preserves_weight(a in arb_perm(12), bits in proptest::collection::vec(0u8..2, 12)) {
            let v = BitVector::from_bits(&bits);
            prop_assert_eq!(a.apply(&v).weight(), v.weight());
        }
    }
}
