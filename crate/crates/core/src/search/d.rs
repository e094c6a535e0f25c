//! Candidates for the lower-right block `D`: `(s+1)×(s+1)` exponent matrices with
//! `DD* = D*D = (s-1)I + 2J` and one common line sum `λ`.
//!
//! Symmetry breaking: `D[0,0] = 0` and rows in nondecreasing lexicographic order.
//! Once the first row fixes `λ` (which must satisfy `|λ|² = 3s+1`), every further row
//! is drawn from the lexicographically sorted pool of rows summing to `λ`, and a row is
//! only placed if its inner product with every earlier row is `2` and every partial
//! column sum can still be completed to `λ` by the rows left to place.

use std::collections::HashMap;
use std::ops::ControlFlow;

use super::bits::Bits;
use super::tables::SumTable;
use crate::bmatrix::ExponentMatrix;
use crate::error::Result;
use crate::petrescu::check_d;
use crate::ring::{GenericRing, RootRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DSearchOptions {
    pub pruning: bool,
    pub limit: Option<usize>,
}

impl Default for DSearchOptions {
    fn default() -> Self {
        DSearchOptions { pruning: true, limit: None }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DSearchStats {
    pub yielded: u64,
    pub pruned: u64,
}

struct RowPool {
    rows: Vec<Vec<u32>>,
    adj: Vec<Bits>,
}

/// All rows of length `n` with root sum `target`, in lexicographic order.
fn rows_with_sum<R: RootRing>(ring: &R, n: usize, target: &R::Elem, table: &SumTable<R>) -> Vec<Vec<u32>> {
    fn rec<R: RootRing>(
        ring: &R,
        n: usize,
        residual: &mut R::Elem,
        row: &mut Vec<u32>,
        table: &SumTable<R>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if row.len() == n {
            out.push(row.clone());
            return;
        }
        for v in 0..ring.q() {
            ring.sub_root(residual, v);
            if table.feasible(ring, residual, n - row.len() - 1) {
                row.push(v);
                rec(ring, n, residual, row, table, out);
                row.pop();
            }
            ring.add_root(residual, v);
        }
    }
    let mut out = Vec::new();
    let mut residual = target.clone();
    rec(ring, n, &mut residual, &mut Vec::with_capacity(n), table, &mut out);
    out
}

fn inner<R: RootRing>(ring: &R, a: &[u32], b: &[u32]) -> R::Elem {
    let q = ring.q();
    ring.sum_roots(a.iter().zip(b).map(|(x, y)| x + q - y))
}

impl RowPool {
    fn build<R: RootRing>(ring: &R, n: usize, lambda: &R::Elem, table: &SumTable<R>) -> Self {
        let rows = rows_with_sum(ring, n, lambda, table);
        let two = ring.from_int(2);
        let mut adj = vec![Bits::new(rows.len()); rows.len()];
        for i in 0..rows.len() {
            for j in i..rows.len() {
                if inner(ring, &rows[i], &rows[j]) == two {
                    adj[i].set(j);
                    adj[j].set(i);
                }
            }
        }
        RowPool { rows, adj }
    }
}

struct DSearch<'a, R: RootRing> {
    ring: &'a R,
    n: usize,
    s: usize,
    table: SumTable<R>,
    opts: DSearchOptions,
    stats: DSearchStats,
    visit: &'a mut dyn FnMut(&ExponentMatrix) -> ControlFlow<()>,
}

impl<R: RootRing> DSearch<'_, R> {
    /// Final exact gate before a matrix leaves the search.
    fn emit(&mut self, rows: &[&[u32]]) -> ControlFlow<()> {
        let d = ExponentMatrix::from_rows(self.ring.q(), rows).expect("rows have length n");
        if !check_d(&d, self.s).map(|r| r.passed()).unwrap_or(false) {
            self.stats.pruned += 1;
            return ControlFlow::Continue(());
        }
        self.stats.yielded += 1;
        (self.visit)(&d)?;
        if self.opts.limit.is_some_and(|l| self.stats.yielded as usize >= l) {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    }

    fn first_rows(&self) -> impl Iterator<Item = Vec<u32>> {
        let q = self.ring.q();
        let n = self.n;
        let total = (q as u64).pow(n as u32 - 1);
        (0..total).map(move |mut k| {
            let mut row = vec![0u32; n];
            for c in (1..n).rev() {
                row[c] = (k % q as u64) as u32;
                k /= q as u64;
            }
            row
        })
    }

    fn run_pruned(&mut self) {
        let ring = self.ring;
        let norm = 3 * self.s as i64 + 1;
        let mut pools: HashMap<R::Elem, RowPool> = HashMap::new();
        for row0 in self.first_rows().collect::<Vec<_>>() {
            let lambda = ring.sum_roots(row0.iter().copied());
            if !ring.norm_equals(&lambda, norm) {
                self.stats.pruned += 1;
                continue;
            }
            let pool = pools
                .entry(lambda.clone())
                .or_insert_with(|| RowPool::build(ring, self.n, &lambda, &self.table));
            let idx0 = pool.rows.binary_search(&row0).expect("first row sums to lambda");
            let mut col_res: Vec<R::Elem> = row0
                .iter()
                .map(|&v| {
                    let mut r = lambda.clone();
                    ring.sub_root(&mut r, v);
                    r
                })
                .collect();
            if !col_res.iter().all(|r| self.table.feasible(ring, r, self.n - 1)) {
                self.stats.pruned += 1;
                continue;
            }
            let mut cand = pool.adj[idx0].clone();
            cand.clear_below(idx0);
            let mut chosen = vec![idx0];
            let pool: &RowPool = pool;
            if self.extend(pool, &cand, &mut chosen, &mut col_res).is_break() {
                return;
            }
        }
    }

    fn extend(
        &mut self,
        pool: &RowPool,
        cand: &Bits,
        chosen: &mut Vec<usize>,
        col_res: &mut [R::Elem],
    ) -> ControlFlow<()> {
        let ring = self.ring;
        if chosen.len() == self.n {
            let rows: Vec<&[u32]> = chosen.iter().map(|&i| pool.rows[i].as_slice()).collect();
            return self.emit(&rows);
        }
        let remaining = self.n - chosen.len() - 1;
        for v in cand.ones() {
            let row = &pool.rows[v];
            for (r, &e) in col_res.iter_mut().zip(row) {
                ring.sub_root(r, e);
            }
            let ok = col_res.iter().all(|r| self.table.feasible(ring, r, remaining));
            if ok {
                let mut next = cand.and(&pool.adj[v]);
                next.clear_below(v);
                chosen.push(v);
                let flow = self.extend(pool, &next, chosen, col_res);
                chosen.pop();
                if flow.is_break() {
                    for (r, &e) in col_res.iter_mut().zip(row) {
                        ring.add_root(r, e);
                    }
                    return flow;
                }
            } else {
                self.stats.pruned += 1;
            }
            for (r, &e) in col_res.iter_mut().zip(row) {
                ring.add_root(r, e);
            }
        }
        ControlFlow::Continue(())
    }

    /// Every matrix with `D[0,0] = 0` and nondecreasing rows, tested only at the leaves.
    fn run_exhaustive(&mut self) {
        let ring = self.ring;
        let q = ring.q();
        let n = self.n;
        let all: Vec<Vec<u32>> = {
            let total = (q as u64).pow(n as u32);
            (0..total)
                .map(|mut k| {
                    let mut row = vec![0u32; n];
                    for c in (0..n).rev() {
                        row[c] = (k % q as u64) as u32;
                        k /= q as u64;
                    }
                    row
                })
                .collect()
        };
        let first_count = all.len() / q as usize;
        let two = ring.from_int(2);
        let mut idx = vec![0usize; n];
        // odometer over nondecreasing index tuples with idx[0] < first_count
        'outer: loop {
            let rows: Vec<&[u32]> = idx.iter().map(|&i| all[i].as_slice()).collect();
            let lambda = ring.sum_roots(rows[0].iter().copied());
            let ok = (1..n).all(|i| ring.sum_roots(rows[i].iter().copied()) == lambda)
                && (0..n).all(|c| ring.sum_roots(rows.iter().map(|r| r[c])) == lambda)
                && (0..n).all(|i| (i + 1..n).all(|k| inner(ring, rows[i], rows[k]) == two));
            if ok && self.emit(&rows).is_break() {
                return;
            }
            let mut pos = n;
            loop {
                if pos == 0 {
                    break 'outer;
                }
                pos -= 1;
                let cap = if pos == 0 { first_count } else { all.len() };
                if idx[pos] + 1 < cap {
                    idx[pos] += 1;
                    for p in pos + 1..n {
                        idx[p] = idx[pos];
                    }
                    break;
                }
            }
        }
    }
}

/// Streams `D` candidates to `visit` in lexicographic row order.
pub fn search_d_with<R: RootRing>(
    ring: &R,
    s: usize,
    opts: &DSearchOptions,
    visit: &mut dyn FnMut(&ExponentMatrix) -> ControlFlow<()>,
) -> DSearchStats {
    let mut search = DSearch {
        ring,
        n: s + 1,
        s,
        table: SumTable::new(ring, s + 1),
        opts: *opts,
        stats: DSearchStats::default(),
        visit,
    };
    if opts.limit == Some(0) {
        return search.stats;
    }
    if opts.pruning {
        search.run_pruned();
    } else {
        search.run_exhaustive();
    }
    search.stats
}

/// Collects `D` candidates using the generic cyclotomic backend.
pub fn search_d(s: usize, q: u32, opts: &DSearchOptions) -> Result<Vec<ExponentMatrix>> {
    let ring = GenericRing::new(q)?;
    let mut out = Vec::new();
    search_d_with(&ring, s, opts, &mut |d| {
        out.push(d.clone());
        ControlFlow::Continue(())
    });
    Ok(out)
}
