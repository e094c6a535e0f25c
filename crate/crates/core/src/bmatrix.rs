//! Matrices over the `q`-th roots of unity, stored by exponent.
//!
//! Entry `j` stands for `e^{2πi·j/q}`. Every check here is exact: inner products are
//! collected as multiplicity vectors of exponent differences and tested with
//! [`CycElem::is_zero`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclo::CycElem;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentMatrix {
    q: u32,
    n_rows: usize,
    n_cols: usize,
    entries: Vec<u32>,
}

impl ExponentMatrix {
    /// Row-major entries; every entry must lie in `0..q`.
    pub fn new(q: u32, n_rows: usize, n_cols: usize, entries: Vec<u32>) -> Result<Self> {
        if q == 0 {
            return Err(Error::invalid("root order q must be at least 1"));
        }
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::invalid("matrix dimensions must be positive"));
        }
        if entries.len() != n_rows * n_cols {
            return Err(Error::invalid(format!(
                "{} entries do not fill a {n_rows}x{n_cols} matrix",
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|&e| e >= q) {
            return Err(Error::invalid(format!(
                "entry {} at ({}, {}) is not an exponent modulo {q}",
                entries[pos],
                pos / n_cols,
                pos % n_cols
            )));
        }
        Ok(ExponentMatrix { q, n_rows, n_cols, entries })
    }

    pub fn from_rows<R: AsRef<[u32]>>(q: u32, rows: &[R]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if let Some(i) = rows.iter().position(|r| r.as_ref().len() != n_cols) {
            return Err(Error::invalid(format!(
                "row {i} has {} entries, expected {n_cols}",
                rows[i].as_ref().len()
            )));
        }
        let entries = rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect();
        ExponentMatrix::new(q, n_rows, n_cols, entries)
    }

    pub fn zeros(q: u32, n_rows: usize, n_cols: usize) -> Self {
        ExponentMatrix::new(q, n_rows, n_cols, vec![0; n_rows * n_cols])
            .expect("valid zero matrix")
    }

    /// Builds from a closure; values are reduced modulo `q`.
    pub fn from_fn(q: u32, n_rows: usize, n_cols: usize, f: impl Fn(usize, usize) -> u32) -> Self {
        let entries = (0..n_rows)
            .flat_map(|i| (0..n_cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j) % q)
            .collect();
        ExponentMatrix::new(q, n_rows, n_cols, entries).expect("valid dimensions")
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n_cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) -> Result<()> {
        if i >= self.n_rows || j >= self.n_cols {
            return Err(Error::invalid(format!("index ({i}, {j}) out of range")));
        }
        if value >= self.q {
            return Err(Error::invalid(format!("{value} is not an exponent modulo {}", self.q)));
        }
        self.entries[i * self.n_cols + j] = value;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.n_cols)
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows().map(<[u32]>::to_vec).collect()
    }

    pub fn submatrix(&self, r0: usize, c0: usize, height: usize, width: usize) -> Result<Self> {
        if r0 + height > self.n_rows || c0 + width > self.n_cols {
            return Err(Error::invalid(format!(
                "block {height}x{width} at ({r0}, {c0}) exceeds {}x{}",
                self.n_rows, self.n_cols
            )));
        }
        Ok(ExponentMatrix::from_fn(self.q, height, width, |i, j| self.get(r0 + i, c0 + j)))
    }

    /// `Σ_c ζ^{M[i,c] - M[k,c]}` as an unreduced multiplicity vector.
    pub fn inner_product(&self, i: usize, k: usize) -> Result<CycElem> {
        if i >= self.n_rows || k >= self.n_rows {
            return Err(Error::invalid(format!(
                "row index out of range: ({i}, {k}) with {} rows",
                self.n_rows
            )));
        }
        let mut acc = CycElem::zero(self.q);
        for (a, b) in self.row(i).iter().zip(self.row(k)) {
            acc.add_root(a + self.q - b)?;
        }
        Ok(acc)
    }

    /// `Σ_r ζ^{M[r,j] - M[r,l]}`.
    pub fn column_inner_product(&self, j: usize, l: usize) -> Result<CycElem> {
        if j >= self.n_cols || l >= self.n_cols {
            return Err(Error::invalid(format!(
                "column index out of range: ({j}, {l}) with {} columns",
                self.n_cols
            )));
        }
        let mut acc = CycElem::zero(self.q);
        for r in 0..self.n_rows {
            acc.add_root(self.get(r, j) + self.q - self.get(r, l))?;
        }
        Ok(acc)
    }

    /// Exact `BH(n, q)` test over all row pairs and, independently, all column pairs.
    pub fn verify_bh(&self) -> Result<VerificationReport> {
        if !self.is_square() {
            return Err(Error::invalid(format!(
                "Hadamard verification needs a square matrix, got {}x{}",
                self.n_rows, self.n_cols
            )));
        }
        let n = self.n_rows;
        let mut violations = Vec::new();
        let mut column_violations = Vec::new();
        for i in 0..n {
            for k in i + 1..n {
                let ip = self.inner_product(i, k)?;
                if !ip.is_zero() {
                    violations.push(Violation { i, k, residual: ip });
                }
                let cp = self.column_inner_product(i, k)?;
                if !cp.is_zero() {
                    column_violations.push(Violation { i, k, residual: cp });
                }
            }
        }
        Ok(VerificationReport {
            format_version: 1,
            is_hadamard: violations.is_empty() && column_violations.is_empty(),
            order: n,
            q: self.q,
            violations,
            column_violations,
        })
    }

    /// Subtracts the first row from every row, then the first column from every column.
    pub fn dephase(&self) -> ExponentMatrix {
        let q = self.q;
        let first_row = self.row(0).to_vec();
        let rows_fixed =
            ExponentMatrix::from_fn(q, self.n_rows, self.n_cols, |i, j| self.get(i, j) + q - first_row[j]);
        ExponentMatrix::from_fn(q, self.n_rows, self.n_cols, |i, j| {
            rows_fixed.get(i, j) + q - rows_fixed.get(i, 0)
        })
    }

    pub fn is_dephased(&self) -> bool {
        self.row(0).iter().all(|&e| e == 0) && (0..self.n_rows).all(|i| self.get(i, 0) == 0)
    }

    /// `M*`: transpose with every exponent negated.
    pub fn conj_transpose(&self) -> ExponentMatrix {
        let q = self.q;
        ExponentMatrix::from_fn(q, self.n_cols, self.n_rows, |i, j| (q - self.get(j, i)) % q)
    }

    pub fn apply(&self, mv: &Move) -> Result<ExponentMatrix> {
        let q = self.q;
        match mv {
            Move::PermuteRows(p) => {
                check_permutation(p, self.n_rows)?;
                Ok(ExponentMatrix::from_fn(q, self.n_rows, self.n_cols, |i, j| self.get(p[i], j)))
            }
            Move::PermuteCols(p) => {
                check_permutation(p, self.n_cols)?;
                Ok(ExponentMatrix::from_fn(q, self.n_rows, self.n_cols, |i, j| self.get(i, p[j])))
            }
            Move::SwapRows(a, b) => {
                let mut p: Vec<usize> = (0..self.n_rows).collect();
                if *a >= self.n_rows || *b >= self.n_rows {
                    return Err(Error::invalid(format!("row swap ({a}, {b}) out of range")));
                }
                p.swap(*a, *b);
                self.apply(&Move::PermuteRows(p))
            }
            Move::SwapCols(a, b) => {
                let mut p: Vec<usize> = (0..self.n_cols).collect();
                if *a >= self.n_cols || *b >= self.n_cols {
                    return Err(Error::invalid(format!("column swap ({a}, {b}) out of range")));
                }
                p.swap(*a, *b);
                self.apply(&Move::PermuteCols(p))
            }
            Move::ScaleRow { row, exponent } => {
                if *row >= self.n_rows {
                    return Err(Error::invalid(format!("row {row} out of range")));
                }
                Ok(ExponentMatrix::from_fn(q, self.n_rows, self.n_cols, |i, j| {
                    self.get(i, j) + if i == *row { exponent % q } else { 0 }
                }))
            }
            Move::ScaleCol { col, exponent } => {
                if *col >= self.n_cols {
                    return Err(Error::invalid(format!("column {col} out of range")));
                }
                Ok(ExponentMatrix::from_fn(q, self.n_rows, self.n_cols, |i, j| {
                    self.get(i, j) + if j == *col { exponent % q } else { 0 }
                }))
            }
        }
    }
}

fn check_permutation(p: &[usize], n: usize) -> Result<()> {
    if p.len() != n {
        return Err(Error::invalid(format!("permutation of length {} for {n} lines", p.len())));
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::invalid(format!("{p:?} is not a permutation of 0..{n}")));
        }
    }
    Ok(())
}

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Hadamard-equivalence moves. Permutations are given as `new[i] = old[p[i]]`;
/// scaling multiplies a line by `ζ^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    PermuteRows(Vec<usize>),
    PermuteCols(Vec<usize>),
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    ScaleRow { row: usize, exponent: u32 },
    ScaleCol { col: usize, exponent: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub i: usize,
    pub k: usize,
    pub residual: CycElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub format_version: u32,
    pub is_hadamard: bool,
    pub order: usize,
    pub q: u32,
    /// Row pairs `i < k` whose inner product is not zero, sorted.
    pub violations: Vec<Violation>,
    /// Column pairs `i < k` whose inner product is not zero, sorted.
    pub column_violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn rows_agree_with_columns(&self) -> bool {
        self.violations.is_empty() == self.column_violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fourier, w19};

    #[test]
    fn rejects_out_of_range_entries() {
        assert!(ExponentMatrix::from_rows(6, &[vec![0, 6]]).is_err());
        assert!(ExponentMatrix::from_rows(6, &[vec![0, 1], vec![2]]).is_err());
        assert!(ExponentMatrix::new(6, 2, 2, vec![0; 3]).is_err());
    }

    #[test]
    fn self_inner_product() {
        let w = w19();
        let ip = w.inner_product(4, 4).unwrap();
        let mut expected = vec![0; 6];
        expected[0] = 19;
        assert_eq!(ip.coeffs(), &expected[..]);
        assert!(w.inner_product(0, 19).is_err());
    }

    #[test]
    fn order_two() {
        let m = ExponentMatrix::from_rows(2, &[vec![0, 0], vec![0, 1]]).unwrap();
        let ip = m.inner_product(0, 1).unwrap();
        assert_eq!(ip.coeffs(), &[1, 1]);
        assert!(ip.is_zero());
        assert!(m.verify_bh().unwrap().is_hadamard);
    }

    #[test]
    fn fourier_matrices() {
        for n in 2..=8 {
            assert!(fourier(n).verify_bh().unwrap().is_hadamard, "F_{n}");
        }
    }

    #[test]
    fn verify_needs_square() {
        assert!(ExponentMatrix::zeros(6, 2, 3).verify_bh().is_err());
    }

    #[test]
    fn dephase_is_idempotent() {
        let d = w19().dephase();
        assert!(d.is_dephased());
        assert_eq!(d.dephase(), d);
        assert!(d.verify_bh().unwrap().is_hadamard);
    }

    #[test]
    fn conj_transpose_basics() {
        let m = ExponentMatrix::from_rows(6, &[vec![1]]).unwrap();
        assert_eq!(m.conj_transpose().entries(), &[5]);
        let z = ExponentMatrix::zeros(6, 6, 7);
        assert_eq!(z.conj_transpose(), ExponentMatrix::zeros(6, 7, 6));
        assert_eq!(w19().conj_transpose().conj_transpose(), w19());
    }

    #[test]
    fn moves() {
        let w = w19();
        for mv in [
            Move::SwapRows(0, 1),
            Move::SwapCols(3, 17),
            Move::ScaleCol { col: 3, exponent: 2 },
            Move::ScaleRow { row: 10, exponent: 5 },
        ] {
            assert!(w.apply(&mv).unwrap().verify_bh().unwrap().is_hadamard, "{mv:?}");
        }
        let id: Vec<usize> = (0..19).collect();
        assert_eq!(w.apply(&Move::PermuteRows(id.clone())).unwrap(), w);
        assert_eq!(w.apply(&Move::PermuteCols(id)).unwrap(), w);
        assert!(w.apply(&Move::SwapRows(0, 19)).is_err());
        assert!(w.apply(&Move::PermuteRows(vec![0; 19])).is_err());
        assert!(w.apply(&Move::ScaleCol { col: 19, exponent: 1 }).is_err());
    }
}
