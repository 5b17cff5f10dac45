use std::fmt;

use crate::gf2::{self, BitMatrix, BitVector, Echelon};
use crate::perm::Permutation;

use super::CodeError;

/// A binary linear code, stored by its generator matrix in reduced
/// row-echelon form. Equal codes have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearCode {
    n: usize,
    gen: BitMatrix,
}

impl LinearCode {
    /// The code spanned by `rows`.
    pub fn new(rows: &BitMatrix) -> Self {
        let gen = rows.rref().0;
        Self { n: rows.ncols(), gen }
    }

    pub fn from_rows(n: usize, rows: Vec<BitVector>) -> Self {
        Self::new(&BitMatrix::from_rows(n, rows))
    }

    /// Convenience constructor from '0'/'1' strings; panics on bad input.
    pub fn from_strs(rows: &[&str]) -> Self {
        Self::new(&BitMatrix::from_strs(rows))
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            gen: BitMatrix::empty(n),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            n,
            gen: BitMatrix::identity(n),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.gen.nrows()
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.gen
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode {
            n: self.n,
            gen: gf2::dual_basis(&self.gen, self.n),
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.n && Echelon::new(&self.gen).contains(v)
    }

    pub fn contains_code(&self, other: &LinearCode) -> bool {
        let ech = Echelon::new(&self.gen);
        other.n == self.n && other.gen.rows().iter().all(|r| ech.contains(r))
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let rows = self.gen.rows();
        rows.iter()
            .enumerate()
            .all(|(i, a)| rows[i..].iter().all(|b| !a.dot(b)))
    }

    pub fn is_self_dual(&self) -> bool {
        self.n == 2 * self.dim() && self.is_self_orthogonal()
    }

    pub fn sum(&self, other: &LinearCode) -> LinearCode {
        assert_eq!(self.n, other.n, "length mismatch");
        LinearCode {
            n: self.n,
            gen: gf2::sum_spaces(&self.gen, &other.gen),
        }
    }

    pub fn intersection(&self, other: &LinearCode) -> LinearCode {
        assert_eq!(self.n, other.n, "length mismatch");
        LinearCode {
            n: self.n,
            gen: gf2::intersect_spaces(&self.gen, &other.gen),
        }
    }

    /// `C^sigma = { c^sigma : c in C }`.
    pub fn image(&self, sigma: &Permutation) -> Result<LinearCode, CodeError> {
        if sigma.degree() != self.n {
            return Err(CodeError::DegreeMismatch {
                expected: self.n,
                found: sigma.degree(),
            });
        }
        Ok(LinearCode::new(&sigma.apply_rows(&self.gen)))
    }

    /// True when `sigma` maps the code onto itself.
    pub fn is_automorphism(&self, sigma: &Permutation) -> bool {
        if sigma.degree() != self.n {
            return false;
        }
        let ech = Echelon::new(&self.gen);
        self.gen.rows().iter().all(|r| ech.contains(&sigma.apply(r)))
    }

    /// Every codeword, for small dimensions only.
    pub fn codewords(&self) -> Vec<BitVector> {
        gf2::span_vectors(&self.gen)
    }

    pub fn direct_sum(&self, other: &LinearCode) -> LinearCode {
        let n = self.n + other.n;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in self.gen.rows() {
            rows.push(r.concat(&BitVector::zeros(other.n)));
        }
        for r in other.gen.rows() {
            rows.push(BitVector::zeros(self.n).concat(r));
        }
        LinearCode::from_rows(n, rows)
    }
}

/// `make_code(rows, n)`: canonical code of the row space.
pub fn make_code(rows: &BitMatrix, n: usize) -> Result<LinearCode, CodeError> {
    if rows.ncols() != n {
        return Err(CodeError::LengthMismatch {
            expected: n,
            found: rows.ncols(),
        });
    }
    Ok(LinearCode::new(rows))
}

pub fn is_self_dual(c: &LinearCode) -> bool {
    c.is_self_dual()
}

pub fn code_image(c: &LinearCode, sigma: &Permutation) -> Result<LinearCode, CodeError> {
    c.image(sigma)
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.n, self.dim())?;
        for r in self.gen.rows() {
            write!(f, " {r}")?;
        }
        Ok(())
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gen)
    }
}
