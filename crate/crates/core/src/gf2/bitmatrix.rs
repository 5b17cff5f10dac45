use std::fmt;

use super::bitvec::BitVector;

/// A dense matrix over F2 stored as bit-packed rows.
///
/// A matrix with zero rows and `ncols = n` stands for the zero subspace of F2^n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    /// The empty (0-row) matrix with `ncols` columns.
    pub fn empty(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new() }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            ncols,
            rows: vec![BitVector::zeros(ncols); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| BitVector::from_support(n, [i])).collect();
        Self { ncols: n, rows }
    }

    pub fn from_rows(ncols: usize, rows: Vec<BitVector>) -> Self {
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols, "row {i} has length {} but ncols is {ncols}", r.len());
        }
        Self { ncols, rows }
    }

    /// Parses rows written as strings of '0'/'1'. Panics on malformed input;
    /// intended for literals in code and tests.
    pub fn from_strs(rows: &[&str]) -> Self {
        let parsed: Vec<BitVector> = rows.iter().map(|r| r.parse().expect("binary row")).collect();
        let ncols = parsed.first().map_or(0, |r| r.len());
        Self::from_rows(ncols, parsed)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    #[inline]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn push_row(&mut self, row: BitVector) {
        assert_eq!(row.len(), self.ncols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.ncols, other.ncols, "column count mismatch");
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        BitMatrix { ncols: self.ncols, rows }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.ncols, self.nrows());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                out.rows[c].set(r, true);
            }
        }
        out
    }

    /// Row vector times matrix: the combination of rows selected by `coeffs`.
    pub fn combine(&self, coeffs: &BitVector) -> BitVector {
        assert_eq!(coeffs.len(), self.nrows(), "coefficient length mismatch");
        let mut out = BitVector::zeros(self.ncols);
        for i in coeffs.iter_ones() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }

    /// `M * v^T`: one syndrome bit per row.
    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        let bits: Vec<u8> = self.rows.iter().map(|r| r.dot(v) as u8).collect();
        BitVector::from_bits(&bits)
    }

    /// Reduced row-echelon form and the pivot columns (strictly increasing).
    /// Zero rows are dropped, so the result has exactly `rank` rows.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.ncols);
        rows.truncate(pivots.len());
        (BitMatrix { ncols: self.ncols, rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        rref_in_place(&mut rows, self.ncols).len()
    }

    /// Basis (in RREF) of `{x : M x^T = 0}`.
    pub fn kernel_basis(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// True when the matrix is already in the canonical reduced form
    /// produced by [`BitMatrix::rref`].
    pub fn is_rref(&self) -> bool {
        let (r, _) = self.rref();
        r == *self
    }
}

pub(crate) fn rref_in_place(rows: &mut [BitVector], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref(r: &BitMatrix, pivots: &[usize]) -> BitMatrix {
    let n = r.ncols();
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::with_capacity(n - pivots.len());
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut x = BitVector::zeros(n);
        x.set(f, true);
        for (i, &p) in pivots.iter().enumerate() {
            if r.get(i, f) {
                x.set(p, true);
            }
        }
        basis.push(x);
    }
    BitMatrix::from_rows(n, basis).rref().0
}

/// A row space kept in reduced echelon form for repeated membership and
/// reduction queries.
#[derive(Clone, Debug)]
pub struct Echelon {
    basis: BitMatrix,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(m: &BitMatrix) -> Self {
        let (basis, pivots) = m.rref();
        Self { basis, pivots }
    }

    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` modulo the row space; the result is zero iff `v` lies in it.
    pub fn reduce(&self, v: &mut BitVector) {
        for (row, &p) in self.basis.rows().iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix[{}x{}]", self.nrows(), self.ncols)?;
        for r in &self.rows {
            write!(f, " {r}")?;
        }
        Ok(())
    }
}
