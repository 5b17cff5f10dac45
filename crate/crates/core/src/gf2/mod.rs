//! Dense linear algebra over the two-element field.
//!
//! Every function returning a basis returns it in reduced row-echelon form,
//! so two bases of the same space compare equal.

mod bitmatrix;
mod bitvec;

pub use bitmatrix::{BitMatrix, Echelon};
pub use bitvec::BitVector;

pub(crate) use bitvec::words_for;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid binary character {found:?} at position {position}")]
pub struct ParseBitsError {
    pub position: usize,
    pub found: char,
}

pub fn rref(m: &BitMatrix) -> (BitMatrix, Vec<usize>) {
    m.rref()
}

pub fn kernel_basis(m: &BitMatrix) -> BitMatrix {
    m.kernel_basis()
}

/// Basis of the orthogonal complement of the row space of `g` in F2^n.
pub fn dual_basis(g: &BitMatrix, n: usize) -> BitMatrix {
    assert_eq!(g.ncols(), n, "generator width {} does not match n = {n}", g.ncols());
    g.kernel_basis()
}

pub fn sum_spaces(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
    a.stack(b).rref().0
}

/// Basis of the intersection of two row spaces (Zassenhaus).
pub fn intersect_spaces(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
    assert_eq!(a.ncols(), b.ncols(), "column count mismatch");
    let n = a.ncols();
    let mut rows = Vec::with_capacity(a.nrows() + b.nrows());
    for r in a.rows() {
        rows.push(r.concat(r));
    }
    let zero = BitVector::zeros(n);
    for r in b.rows() {
        rows.push(r.concat(&zero));
    }
    let (red, pivots) = BitMatrix::from_rows(2 * n, rows).rref();
    let inter: Vec<BitVector> = red
        .rows()
        .iter()
        .zip(&pivots)
        .filter(|(_, &p)| p >= n)
        .map(|(r, _)| r.slice(n, n))
        .collect();
    BitMatrix::from_rows(n, inter).rref().0
}

/// True iff `v` lies in the row space of `s`.
pub fn contains(s: &BitMatrix, v: &BitVector) -> bool {
    assert_eq!(s.ncols(), v.len(), "length mismatch");
    Echelon::new(s).contains(v)
}

/// Every vector of the row space, in Gray-code order starting at zero.
/// Only sensible for small dimensions.
pub fn span_vectors(m: &BitMatrix) -> Vec<BitVector> {
    let basis = m.rref().0;
    let k = basis.nrows();
    assert!(k < 30, "span of dimension {k} is too large to enumerate");
    let mut out = Vec::with_capacity(1 << k);
    let mut cur = BitVector::zeros(m.ncols());
    out.push(cur.clone());
    for i in 1u64..(1u64 << k) {
        let bit = i.trailing_zeros() as usize;
        cur.xor_assign(basis.row(bit));
        out.push(cur.clone());
    }
    out
}
