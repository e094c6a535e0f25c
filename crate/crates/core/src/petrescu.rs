//! Petrescu's block array
//!
//! ```text
//!     [ X   Y   T ]
//! H = [ Y   X   T ]        X, Y: s×s   T: s×(s+1)   D: (s+1)×(s+1)
//!     [ T*  T*  D ]
//! ```
//!
//! and exact checks of the two equivalent orthogonality systems it must satisfy to be
//! complex Hadamard of order `3s+1`.

use serde::{Deserialize, Serialize};

use crate::bmatrix::ExponentMatrix;
use crate::cyclo::CycElem;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PetrescuBlocks {
    pub s: usize,
    pub q: u32,
    pub x: ExponentMatrix,
    pub y: ExponentMatrix,
    pub t: ExponentMatrix,
    pub d: ExponentMatrix,
}

fn expect_dims(name: &str, m: &ExponentMatrix, rows: usize, cols: usize, q: u32) -> Result<()> {
    if m.n_rows() != rows || m.n_cols() != cols {
        return Err(Error::invalid(format!(
            "block {name} is {}x{}, expected {rows}x{cols}",
            m.n_rows(),
            m.n_cols()
        )));
    }
    if m.q() != q {
        return Err(Error::invalid(format!("block {name} has q = {}, expected {q}", m.q())));
    }
    Ok(())
}

impl PetrescuBlocks {
    pub fn new(
        s: usize,
        x: ExponentMatrix,
        y: ExponentMatrix,
        t: ExponentMatrix,
        d: ExponentMatrix,
    ) -> Result<Self> {
        if s == 0 {
            return Err(Error::invalid("block size s must be positive"));
        }
        let q = x.q();
        expect_dims("X", &x, s, s, q)?;
        expect_dims("Y", &y, s, s, q)?;
        expect_dims("T", &t, s, s + 1, q)?;
        expect_dims("D", &d, s + 1, s + 1, q)?;
        Ok(PetrescuBlocks { s, q, x, y, t, d })
    }

    pub fn order(&self) -> usize {
        3 * self.s + 1
    }

    pub fn assemble(&self) -> ExponentMatrix {
        let s = self.s;
        let tc = self.t.conj_transpose();
        ExponentMatrix::from_fn(self.q, 3 * s + 1, 3 * s + 1, |r, c| {
            if r >= 2 * s {
                if c >= 2 * s {
                    self.d.get(r - 2 * s, c - 2 * s)
                } else {
                    tc.get(r - 2 * s, c % s)
                }
            } else if c >= 2 * s {
                self.t.get(r % s, c - 2 * s)
            } else if (r < s) == (c < s) {
                self.x.get(r % s, c % s)
            } else {
                self.y.get(r % s, c % s)
            }
        })
    }
}

/// Splits an order-`3s+1` matrix into blocks after checking that the repeated and
/// conjugated blocks agree with the first block row.
pub fn extract_blocks(m: &ExponentMatrix, s: usize) -> Result<PetrescuBlocks> {
    if s == 0 || !m.is_square() || m.n_rows() != 3 * s + 1 {
        return Err(Error::invalid(format!(
            "a Petrescu array with s = {s} has order {}, got {}x{}",
            3 * s + 1,
            m.n_rows(),
            m.n_cols()
        )));
    }
    let q = m.q();
    let n = 3 * s + 1;
    for r in s..n {
        for c in 0..n {
            let (expected, what) = if r < 2 * s {
                let i = r - s;
                if c < s {
                    (m.get(i, s + c), "second block row must repeat Y in its first block")
                } else if c < 2 * s {
                    (m.get(i, c - s), "second block row must repeat X in its second block")
                } else {
                    (m.get(i, c), "second block row must repeat T")
                }
            } else if c < 2 * s {
                let k = r - 2 * s;
                ((q - m.get(c % s, 2 * s + k)) % q, "bottom-left blocks must equal T*")
            } else {
                continue;
            };
            if m.get(r, c) != expected {
                return Err(Error::NotPetrescuForm {
                    row: r,
                    col: c,
                    reason: format!("{what} (found {}, expected {expected})", m.get(r, c)),
                });
            }
        }
    }
    PetrescuBlocks::new(
        s,
        m.submatrix(0, 0, s, s)?,
        m.submatrix(0, s, s, s)?,
        m.submatrix(0, 2 * s, s, s + 1)?,
        m.submatrix(2 * s, 2 * s, s + 1, s + 1)?,
    )
}

/// Matrix of exact cyclotomic values, e.g. the value of `X + Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumMatrix {
    q: u32,
    n_rows: usize,
    n_cols: usize,
    entries: Vec<CycElem>,
}

impl SumMatrix {
    pub fn new(q: u32, n_rows: usize, n_cols: usize, entries: Vec<CycElem>) -> Result<Self> {
        if entries.len() != n_rows * n_cols {
            return Err(Error::invalid("entry count does not match dimensions"));
        }
        if entries.iter().any(|e| e.q() != q) {
            return Err(Error::invalid(format!("every entry must have q = {q}")));
        }
        Ok(SumMatrix { q, n_rows, n_cols, entries })
    }

    pub fn from_exponents(m: &ExponentMatrix) -> Self {
        SumMatrix {
            q: m.q(),
            n_rows: m.n_rows(),
            n_cols: m.n_cols(),
            entries: m.entries().iter().map(|&e| CycElem::root(m.q(), e)).collect(),
        }
    }

    /// `a·I + b·J`.
    pub fn identity_plus_ones(q: u32, n: usize, a: i64, b: i64) -> Self {
        let entries = (0..n * n)
            .map(|p| CycElem::from_int(q, b + if p / n == p % n { a } else { 0 }))
            .collect();
        SumMatrix { q, n_rows: n, n_cols: n, entries }
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

    pub fn get(&self, i: usize, j: usize) -> &CycElem {
        &self.entries[i * self.n_cols + j]
    }

    pub fn entries(&self) -> &[CycElem] {
        &self.entries
    }

    fn zip_with(
        &self,
        other: &SumMatrix,
        f: impl Fn(&CycElem, &CycElem) -> Result<CycElem>,
    ) -> Result<SumMatrix> {
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols) {
            return Err(Error::invalid(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.n_rows, self.n_cols, other.n_rows, other.n_cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(SumMatrix { entries, ..*self })
    }

    pub fn add(&self, other: &SumMatrix) -> Result<SumMatrix> {
        self.zip_with(other, CycElem::add)
    }

    pub fn sub(&self, other: &SumMatrix) -> Result<SumMatrix> {
        self.zip_with(other, CycElem::sub)
    }

    pub fn scale(&self, k: i64) -> Result<SumMatrix> {
        let entries = self.entries.iter().map(|e| e.scale(k)).collect::<Result<_>>()?;
        Ok(SumMatrix { entries, ..*self })
    }

    pub fn mul(&self, other: &SumMatrix) -> Result<SumMatrix> {
        if self.n_cols != other.n_rows {
            return Err(Error::invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.n_rows, self.n_cols, other.n_rows, other.n_cols
            )));
        }
        let mut entries = Vec::with_capacity(self.n_rows * other.n_cols);
        for i in 0..self.n_rows {
            for j in 0..other.n_cols {
                let mut acc = CycElem::zero(self.q);
                for k in 0..self.n_cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(SumMatrix { q: self.q, n_rows: self.n_rows, n_cols: other.n_cols, entries })
    }

    pub fn adjoint(&self) -> SumMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.n_cols {
            for i in 0..self.n_rows {
                entries.push(self.get(i, j).conj());
            }
        }
        SumMatrix { q: self.q, n_rows: self.n_cols, n_cols: self.n_rows, entries }
    }

    /// Entries where `self - expected` is not exactly zero.
    fn violations_against(&self, expected: &SumMatrix) -> Result<Vec<EquationViolation>> {
        let diff = self.sub(expected)?;
        let mut out = Vec::new();
        for i in 0..diff.n_rows {
            for j in 0..diff.n_cols {
                let r = diff.get(i, j);
                if !r.is_zero() {
                    out.push(EquationViolation {
                        location: Location::Entry { row: i, col: j },
                        residual: r.clone(),
                    });
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Equation {
    /// `2T*T + DD* = (3s+1)I`
    TGramPlusDGram,
    /// `XX* + YY* + TT* = (3s+1)I`
    DiagonalBlockGram,
    /// `(X+Y)T + TD* = 0`
    CrossBlock,
    /// `XY* + YX* + TT* = 0`
    OffDiagonalBlockGram,
    /// `DD* = (s-1)I + 2J`
    DRowGram,
    /// `D*D = (s-1)I + 2J`
    DColumnGram,
    /// `DJ = JD`: one common value for all row and column sums
    DLineSums,
    /// `TT* = (s+1)I`
    TRowGram,
    /// `T*T = (s+1)I - J`
    TColumnGram,
    /// `(s+1)(X+Y) + TD*T* = 0`
    SumOfBlocks,
    /// `(X-Y)(X-Y)* = (3s+1)I`
    DifferenceGram,
}

impl Equation {
    pub fn label(self) -> &'static str {
        match self {
            Equation::TGramPlusDGram => "2T*T + DD* = (3s+1)I",
            Equation::DiagonalBlockGram => "XX* + YY* + TT* = (3s+1)I",
            Equation::CrossBlock => "(X+Y)T + TD* = 0",
            Equation::OffDiagonalBlockGram => "XY* + YX* + TT* = 0",
            Equation::DRowGram => "DD* = (s-1)I + 2J",
            Equation::DColumnGram => "D*D = (s-1)I + 2J",
            Equation::DLineSums => "DJ = JD",
            Equation::TRowGram => "TT* = (s+1)I",
            Equation::TColumnGram => "T*T = (s+1)I - J",
            Equation::SumOfBlocks => "X+Y = -TD*T*/(s+1)",
            Equation::DifferenceGram => "(X-Y)(X-Y)* = (3s+1)I",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Location {
    Entry { row: usize, col: usize },
    RowSum(usize),
    ColumnSum(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationViolation {
    pub location: Location,
    pub residual: CycElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationCheck {
    pub equation: Equation,
    pub violations: Vec<EquationViolation>,
}

impl EquationCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub checks: Vec<EquationCheck>,
}

impl BlockReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(EquationCheck::passed)
    }

    pub fn check(&self, eq: Equation) -> Option<&EquationCheck> {
        self.checks.iter().find(|c| c.equation == eq)
    }

    pub fn failed(&self) -> impl Iterator<Item = Equation> + '_ {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.equation)
    }

    fn push(&mut self, equation: Equation, violations: Vec<EquationViolation>) {
        self.checks.push(EquationCheck { equation, violations });
    }

    fn extend(&mut self, other: BlockReport) {
        self.checks.extend(other.checks);
    }
}

/// The four block identities equivalent to `HH* = (3s+1)I` for Petrescu's array.
pub fn check_system_a(b: &PetrescuBlocks) -> Result<BlockReport> {
    let (s, q) = (b.s, b.q);
    let n = (3 * s + 1) as i64;
    let x = SumMatrix::from_exponents(&b.x);
    let y = SumMatrix::from_exponents(&b.y);
    let t = SumMatrix::from_exponents(&b.t);
    let d = SumMatrix::from_exponents(&b.d);
    let (xs, ys, ts, ds) = (x.adjoint(), y.adjoint(), t.adjoint(), d.adjoint());
    let zero_ss = SumMatrix::identity_plus_ones(q, s, 0, 0);

    let mut report = BlockReport::default();
    let lhs = ts.mul(&t)?.scale(2)?.add(&d.mul(&ds)?)?;
    report.push(
        Equation::TGramPlusDGram,
        lhs.violations_against(&SumMatrix::identity_plus_ones(q, s + 1, n, 0))?,
    );
    let lhs = x.mul(&xs)?.add(&y.mul(&ys)?)?.add(&t.mul(&ts)?)?;
    report.push(
        Equation::DiagonalBlockGram,
        lhs.violations_against(&SumMatrix::identity_plus_ones(q, s, n, 0))?,
    );
    let lhs = x.add(&y)?.mul(&t)?.add(&t.mul(&ds)?)?;
    let zero_st = SumMatrix::new(q, s, s + 1, vec![CycElem::zero(q); s * (s + 1)])?;
    report.push(Equation::CrossBlock, lhs.violations_against(&zero_st)?);
    let lhs = x.mul(&ys)?.add(&y.mul(&xs)?)?.add(&t.mul(&ts)?)?;
    report.push(Equation::OffDiagonalBlockGram, lhs.violations_against(&zero_ss)?);
    Ok(report)
}

/// Normality and regularity of the lower-right block: `DD* = D*D = (s-1)I + 2J` and
/// equal line sums.
pub fn check_d(d: &ExponentMatrix, s: usize) -> Result<BlockReport> {
    if d.n_rows() != s + 1 || d.n_cols() != s + 1 {
        return Err(Error::invalid(format!(
            "D must be {0}x{0} for s = {s}, got {1}x{2}",
            s + 1,
            d.n_rows(),
            d.n_cols()
        )));
    }
    let q = d.q();
    let target = SumMatrix::identity_plus_ones(q, s + 1, s as i64 - 1, 2);
    let dm = SumMatrix::from_exponents(d);
    let ds = dm.adjoint();
    let mut report = BlockReport::default();
    report.push(Equation::DRowGram, dm.mul(&ds)?.violations_against(&target)?);
    report.push(Equation::DColumnGram, ds.mul(&dm)?.violations_against(&target)?);

    let row_sum = |i: usize| {
        let mut acc = CycElem::zero(q);
        d.row(i).iter().try_for_each(|&e| acc.add_root(e)).map(|_| acc)
    };
    let col_sum = |j: usize| {
        let mut acc = CycElem::zero(q);
        (0..=s).try_for_each(|i| acc.add_root(d.get(i, j))).map(|_| acc)
    };
    let reference = row_sum(0)?;
    let mut lines = Vec::new();
    for i in 1..=s {
        let r = row_sum(i)?.sub(&reference)?;
        if !r.is_zero() {
            lines.push(EquationViolation { location: Location::RowSum(i), residual: r });
        }
    }
    for j in 0..=s {
        let r = col_sum(j)?.sub(&reference)?;
        if !r.is_zero() {
            lines.push(EquationViolation { location: Location::ColumnSum(j), residual: r });
        }
    }
    report.push(Equation::DLineSums, lines);
    Ok(report)
}

/// `TT* = (s+1)I` and `T*T = (s+1)I - J`: `T` completes to a Hadamard matrix with an
/// all-ones row.
pub fn check_t(t: &ExponentMatrix) -> Result<BlockReport> {
    let s = t.n_rows();
    if t.n_cols() != s + 1 {
        return Err(Error::invalid(format!("T must be s x (s+1), got {s}x{}", t.n_cols())));
    }
    let q = t.q();
    let tm = SumMatrix::from_exponents(t);
    let ts = tm.adjoint();
    let mut report = BlockReport::default();
    report.push(
        Equation::TRowGram,
        tm.mul(&ts)?.violations_against(&SumMatrix::identity_plus_ones(q, s, s as i64 + 1, 0))?,
    );
    report.push(
        Equation::TColumnGram,
        ts.mul(&tm)?
            .violations_against(&SumMatrix::identity_plus_ones(q, s + 1, s as i64 + 1, -1))?,
    );
    Ok(report)
}

/// `-T·D*·T* / (s+1)`, the value `X + Y` is forced to take.
pub fn compute_x_plus_y(t: &ExponentMatrix, d: &ExponentMatrix, s: usize) -> Result<SumMatrix> {
    if t.n_rows() != s || t.n_cols() != s + 1 || d.n_rows() != s + 1 || d.n_cols() != s + 1 {
        return Err(Error::invalid(format!("T must be {s}x{0} and D {0}x{0}", s + 1)));
    }
    let tm = SumMatrix::from_exponents(t);
    let prod = tm.mul(&SumMatrix::from_exponents(d).adjoint())?.mul(&tm.adjoint())?;
    let entries = prod
        .entries()
        .iter()
        .map(|e| e.neg()?.div_exact(s as i64 + 1))
        .collect::<Result<_>>()?;
    SumMatrix::new(t.q(), s, s, entries)
}

/// Whether `ζ^X + ζ^Y` equals `sum` entrywise.
pub fn sum_matches(sum: &SumMatrix, x: &ExponentMatrix, y: &ExponentMatrix) -> bool {
    match SumMatrix::from_exponents(x).add(&SumMatrix::from_exponents(y)) {
        Ok(xy) => xy.violations_against(sum).map(|v| v.is_empty()).unwrap_or(false),
        Err(_) => false,
    }
}

/// All unordered pairs `{a, b}` with `ζ^a + ζ^b = c`, by brute force.
pub fn decompose_pair_sum(c: &CycElem) -> Vec<(u32, u32)> {
    let q = c.q();
    let mut out = Vec::new();
    for a in 0..q {
        for b in a..q {
            let mut cand = c.neg().expect("negation of a small element");
            cand.add_root(a).expect("small");
            cand.add_root(b).expect("small");
            if cand.is_zero() {
                out.push((a, b));
            }
        }
    }
    out
}

/// `(X-Y)(X-Y)* = (3s+1)I`.
pub fn check_difference(x: &ExponentMatrix, y: &ExponentMatrix, s: usize) -> Result<BlockReport> {
    expect_dims("X", x, s, s, x.q())?;
    expect_dims("Y", y, s, s, x.q())?;
    let diff = SumMatrix::from_exponents(x).sub(&SumMatrix::from_exponents(y))?;
    let gram = diff.mul(&diff.adjoint())?;
    let mut report = BlockReport::default();
    report.push(
        Equation::DifferenceGram,
        gram.violations_against(&SumMatrix::identity_plus_ones(x.q(), s, 3 * s as i64 + 1, 0))?,
    );
    Ok(report)
}

/// The second system: conditions on `D`, the forced value of `X+Y` (checked without
/// dividing, as `(s+1)(X+Y) + TD*T* = 0`) and the Gram identity of `X-Y`.
pub fn check_system_b(b: &PetrescuBlocks) -> Result<BlockReport> {
    let s = b.s;
    let mut report = check_d(&b.d, s)?;
    let tm = SumMatrix::from_exponents(&b.t);
    let rhs = tm.mul(&SumMatrix::from_exponents(&b.d).adjoint())?.mul(&tm.adjoint())?;
    let lhs = SumMatrix::from_exponents(&b.x)
        .add(&SumMatrix::from_exponents(&b.y))?
        .scale(s as i64 + 1)?
        .add(&rhs)?;
    let zero = SumMatrix::identity_plus_ones(b.q, s, 0, 0);
    report.push(Equation::SumOfBlocks, lhs.violations_against(&zero)?);
    report.extend(check_difference(&b.x, &b.y, s)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::w19;

    fn w19_blocks() -> PetrescuBlocks {
        extract_blocks(&w19(), 6).unwrap()
    }

    #[test]
    fn w19_round_trip() {
        let b = w19_blocks();
        assert_eq!(b.assemble(), w19());
        assert_eq!(b.t.row(0), &[1, 1, 3, 5, 4, 3, 0]);
        assert_eq!(b.d.row(0), &[0, 0, 0, 0, 1, 1, 3]);
    }

    #[test]
    fn assembled_order_and_layout() {
        for s in 1..=6 {
            let t = ExponentMatrix::from_fn(6, s, s + 1, |i, j| (i + 2 * j) as u32);
            let b = PetrescuBlocks::new(
                s,
                ExponentMatrix::from_fn(6, s, s, |i, j| (i * j) as u32),
                ExponentMatrix::from_fn(6, s, s, |i, j| (i + j) as u32),
                t.clone(),
                ExponentMatrix::from_fn(6, s + 1, s + 1, |i, j| (3 * i + j) as u32),
            )
            .unwrap();
            let m = b.assemble();
            assert_eq!(m.n_rows(), 3 * s + 1);
            assert_eq!(m.submatrix(2 * s, 0, s + 1, s).unwrap(), t.conj_transpose());
            assert_eq!(m.submatrix(2 * s, s, s + 1, s).unwrap(), t.conj_transpose());
            assert_eq!(extract_blocks(&m, s).unwrap(), b);
        }
    }

    #[test]
    fn perturbed_structure_is_rejected() {
        let mut m = w19();
        m.set(0, 6, (m.get(0, 6) + 1) % 6).unwrap();
        match extract_blocks(&m, 6) {
            Err(Error::NotPetrescuForm { row, col, .. }) => assert_eq!((row, col), (6, 0)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(extract_blocks(&w19(), 5), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn w19_satisfies_both_systems() {
        let b = w19_blocks();
        assert!(check_system_a(&b).unwrap().passed());
        assert!(check_system_b(&b).unwrap().passed());
        assert!(check_d(&b.d, 6).unwrap().passed());
        assert!(check_t(&b.t).unwrap().passed());
        let sum = compute_x_plus_y(&b.t, &b.d, 6).unwrap();
        assert!(sum_matches(&sum, &b.x, &b.y));
    }

    #[test]
    fn all_ones_blocks_fail() {
        let z = |r, c| ExponentMatrix::zeros(6, r, c);
        let b = PetrescuBlocks::new(6, z(6, 6), z(6, 6), z(6, 7), z(7, 7)).unwrap();
        let report = check_system_a(&b).unwrap();
        assert!(!report.passed());
        let gram = report.check(Equation::DiagonalBlockGram).unwrap();
        // diagonal: 6 + 6 + 7 = 19 matches; every off-diagonal entry is 19 instead of 0
        assert_eq!(gram.violations.len(), 30);
        assert!(gram.violations.iter().all(|v| matches!(v.location, Location::Entry { row, col } if row != col)));
        assert_eq!(gram.violations[0].residual, CycElem::from_int(6, 19));
    }

    #[test]
    fn d_checks() {
        let j7 = ExponentMatrix::zeros(6, 7, 7);
        let report = check_d(&j7, 6).unwrap();
        assert!(!report.check(Equation::DRowGram).unwrap().passed());
        assert!(report.check(Equation::DLineSums).unwrap().passed());
        let diag_reported = report.check(Equation::DRowGram).unwrap().violations.iter().any(
            |v| matches!(v.location, Location::Entry { row, col } if row == col),
        );
        // row self-products are s + 1 = (s - 1) + 2, so only off-diagonal entries fail
        assert!(!diag_reported);
        assert!(check_d(&j7, 5).is_err());
    }

    #[test]
    fn difference_checks() {
        let b = w19_blocks();
        assert!(check_difference(&b.x, &b.y, 6).unwrap().passed());
        assert!(!check_difference(&b.x, &b.x, 6).unwrap().passed());
        let x = ExponentMatrix::from_rows(6, &[[0]]).unwrap();
        let y = ExponentMatrix::from_rows(6, &[[3]]).unwrap();
        assert!(check_difference(&x, &y, 1).unwrap().passed());
    }

    #[test]
    fn pair_decompositions() {
        let c = |v: [i64; 6]| CycElem::new(6, v.to_vec()).unwrap();
        assert_eq!(decompose_pair_sum(&c([2, 0, 0, 0, 0, 0])), vec![(0, 0)]);
        assert_eq!(decompose_pair_sum(&c([0; 6])), vec![(0, 3), (1, 4), (2, 5)]);
        assert_eq!(decompose_pair_sum(&c([0, 1, 0, 0, 0, 0])), vec![(0, 2)]);
        assert!(decompose_pair_sum(&c([3, 0, 0, 0, 0, 0])).is_empty());
    }
}
