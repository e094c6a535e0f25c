//! Candidates for the block `T`: `s` rows that, together with an all-ones row, form a
//! `BH(s+1, q)`. Each row must have zero root sum and the rows must be pairwise
//! orthogonal; the first column is normalised to exponent 0 and rows are taken in
//! increasing lexicographic order.

use std::ops::ControlFlow;

use super::bits::{for_each_clique, Bits};
use super::tables::SumTable;
use crate::bmatrix::ExponentMatrix;
use crate::error::Result;
use crate::ring::{GenericRing, RootRing};

/// All length-`len` exponent vectors whose roots sum to zero, in lexicographic order.
pub fn zero_sum_rows_with<R: RootRing>(ring: &R, len: usize) -> Vec<Vec<u32>> {
    zero_sum_rows_from(ring, len, &[])
}

fn zero_sum_rows_from<R: RootRing>(ring: &R, len: usize, prefix: &[u32]) -> Vec<Vec<u32>> {
    let table = SumTable::new(ring, len);
    let mut out = Vec::new();
    let mut residual = ring.zero();
    for &p in prefix {
        ring.sub_root(&mut residual, p);
    }
    let mut row = prefix.to_vec();
    fn rec<R: RootRing>(
        ring: &R,
        len: usize,
        residual: &mut R::Elem,
        row: &mut Vec<u32>,
        table: &SumTable<R>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if row.len() == len {
            out.push(row.clone());
            return;
        }
        for v in 0..ring.q() {
            ring.sub_root(residual, v);
            if table.feasible(ring, residual, len - row.len() - 1) {
                row.push(v);
                rec(ring, len, residual, row, table, out);
                row.pop();
            }
            ring.add_root(residual, v);
        }
    }
    if prefix.len() <= len && table.feasible(ring, &residual, len - prefix.len()) {
        rec(ring, len, &mut residual, &mut row, &table, &mut out);
    }
    out
}

pub fn zero_sum_rows(len: usize, q: u32) -> Result<Vec<Vec<u32>>> {
    Ok(zero_sum_rows_with(&GenericRing::new(q)?, len))
}

/// The rows `T` may use: zero-sum rows of length `s+1` with leading exponent 0, together
/// with their orthogonality graph.
pub struct TRowPool {
    pub(crate) rows: Vec<Vec<u32>>,
    pub(crate) orth: Vec<Bits>,
}

impl TRowPool {
    pub fn new<R: RootRing>(ring: &R, s: usize) -> Self {
        let rows = zero_sum_rows_from(ring, s + 1, &[0]);
        let q = ring.q();
        let mut orth = vec![Bits::new(rows.len()); rows.len()];
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let ip = ring.sum_roots(rows[i].iter().zip(&rows[j]).map(|(a, b)| a + q - b));
                if ring.is_zero(&ip) {
                    orth[i].set(j);
                    orth[j].set(i);
                }
            }
        }
        TRowPool { rows, orth }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub(crate) fn matrix(&self, q: u32, picked: &[usize]) -> ExponentMatrix {
        let rows: Vec<&[u32]> = picked.iter().map(|&i| self.rows[i].as_slice()).collect();
        ExponentMatrix::from_rows(q, &rows).expect("pool rows share a length")
    }

    /// Streams every `T` built from this pool.
    pub fn enumerate(
        &self,
        q: u32,
        s: usize,
        limit: Option<usize>,
        visit: &mut dyn FnMut(&ExponentMatrix) -> ControlFlow<()>,
    ) {
        let mut count = 0usize;
        if limit == Some(0) {
            return;
        }
        let _ = for_each_clique(&self.orth, s, false, &mut |picked| {
            count += 1;
            visit(&self.matrix(q, picked))?;
            if limit.is_some_and(|l| count >= l) {
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
    }
}

pub fn enumerate_t_with<R: RootRing>(
    ring: &R,
    s: usize,
    limit: Option<usize>,
    visit: &mut dyn FnMut(&ExponentMatrix) -> ControlFlow<()>,
) {
    TRowPool::new(ring, s).enumerate(ring.q(), s, limit, visit);
}

pub fn enumerate_t(s: usize, q: u32, limit: Option<usize>) -> Result<Vec<ExponentMatrix>> {
    let ring = GenericRing::new(q)?;
    let mut out = Vec::new();
    enumerate_t_with(&ring, s, limit, &mut |t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    });
    Ok(out)
}
