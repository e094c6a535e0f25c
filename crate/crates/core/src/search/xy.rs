//! Splitting the forced value of `X + Y` into exponent blocks `X`, `Y`, keeping only
//! splits for which `(X-Y)(X-Y)* = (3s+1)I`.

use std::ops::ControlFlow;

use crate::bmatrix::ExponentMatrix;
use crate::error::{Error, Result};
use crate::petrescu::{decompose_pair_sum, SumMatrix};
use crate::ring::{GenericRing, RootRing};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct XyStats {
    pub branches: u64,
    pub pruned: u64,
}

/// Ordered `(x, y)` choices per entry of an `s×s` sum matrix (row-major).
pub type PairOptions = Vec<Vec<(u32, u32)>>;

/// Ordered choices per entry, or `None` if some entry is not a sum of two roots.
pub fn pair_options(sum: &SumMatrix) -> Option<PairOptions> {
    sum.entries()
        .iter()
        .map(|c| {
            let unordered = decompose_pair_sum(c);
            if unordered.is_empty() {
                return None;
            }
            let mut ordered: Vec<(u32, u32)> = unordered
                .into_iter()
                .flat_map(|(a, b)| if a == b { vec![(a, a)] } else { vec![(a, b), (b, a)] })
                .collect();
            ordered.sort_unstable();
            Some(ordered)
        })
        .collect()
}

struct Assign<'a, R: RootRing> {
    ring: &'a R,
    s: usize,
    options: &'a [Vec<(u32, u32)>],
    pruning: bool,
    x: Vec<u32>,
    y: Vec<u32>,
    stats: XyStats,
    norm: R::Elem,
}

impl<R: RootRing> Assign<'_, R> {
    /// Row `i` of `X - Y` has squared norm `3s+1` and is orthogonal to rows `0..i`.
    fn row_ok(&self, i: usize) -> bool {
        let ring = self.ring;
        let q = ring.q();
        let s = self.s;
        let (xi, yi) = (&self.x[i * s..(i + 1) * s], &self.y[i * s..(i + 1) * s]);
        // Σ |ζ^a - ζ^b|² = Σ (2 - ζ^{a-b} - ζ^{b-a})
        let mut acc = ring.from_int(2 * s as i64);
        for (&a, &b) in xi.iter().zip(yi) {
            ring.sub_root(&mut acc, a + q - b);
            ring.sub_root(&mut acc, b + q - a);
        }
        if acc != self.norm {
            return false;
        }
        for k in 0..i {
            let (xk, yk) = (&self.x[k * s..(k + 1) * s], &self.y[k * s..(k + 1) * s]);
            let mut acc = ring.zero();
            for j in 0..s {
                ring.add_root(&mut acc, xi[j] + q - xk[j]);
                ring.sub_root(&mut acc, xi[j] + q - yk[j]);
                ring.sub_root(&mut acc, yi[j] + q - xk[j]);
                ring.add_root(&mut acc, yi[j] + q - yk[j]);
            }
            if !ring.is_zero(&acc) {
                return false;
            }
        }
        true
    }

    fn rec(
        &mut self,
        pos: usize,
        visit: &mut dyn FnMut(&ExponentMatrix, &ExponentMatrix) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let s = self.s;
        if pos == s * s {
            if !self.pruning && !(0..s).all(|i| self.row_ok(i)) {
                self.stats.pruned += 1;
                return ControlFlow::Continue(());
            }
            let q = self.ring.q();
            let x = ExponentMatrix::new(q, s, s, self.x.clone()).expect("exponents below q");
            let y = ExponentMatrix::new(q, s, s, self.y.clone()).expect("exponents below q");
            return visit(&x, &y);
        }
        for &(a, b) in &self.options[pos] {
            self.stats.branches += 1;
            self.x[pos] = a;
            self.y[pos] = b;
            let row_done = (pos + 1) % s == 0;
            if self.pruning && row_done && !self.row_ok(pos / s) {
                self.stats.pruned += 1;
                continue;
            }
            self.rec(pos + 1, visit)?;
        }
        ControlFlow::Continue(())
    }
}

/// Streams every `(X, Y)` consistent with the per-entry choices whose difference has
/// Gram matrix `(3s+1)I`. With pruning, partial grids are abandoned as soon as a
/// completed row breaks the Gram condition; without it, only full grids are tested.
pub fn assign_xy_with<R: RootRing>(
    ring: &R,
    s: usize,
    options: &[Vec<(u32, u32)>],
    pruning: bool,
    visit: &mut dyn FnMut(&ExponentMatrix, &ExponentMatrix) -> ControlFlow<()>,
) -> (XyStats, ControlFlow<()>) {
    assert_eq!(options.len(), s * s, "one option list per entry");
    let mut a = Assign {
        ring,
        s,
        options,
        pruning,
        x: vec![0; s * s],
        y: vec![0; s * s],
        stats: XyStats::default(),
        norm: ring.from_int(3 * s as i64 + 1),
    };
    let flow = a.rec(0, visit);
    (a.stats, flow)
}

/// All `(X, Y)` with `ζ^X + ζ^Y = sum` entrywise and `(X-Y)(X-Y)* = (3s+1)I`.
pub fn assign_xy(sum: &SumMatrix, s: usize) -> Result<Vec<(ExponentMatrix, ExponentMatrix)>> {
    if sum.n_rows() != s || sum.n_cols() != s {
        return Err(Error::invalid(format!("sum matrix must be {s}x{s}")));
    }
    let ring = GenericRing::new(sum.q())?;
    let Some(options) = pair_options(sum) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    let _ = assign_xy_with(&ring, s, &options, true, &mut |x, y| {
        out.push((x.clone(), y.clone()));
        ControlFlow::Continue(())
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycElem;
    use crate::fixtures::w19;
    use crate::petrescu::{check_difference, compute_x_plus_y, extract_blocks, sum_matches};

    #[test]
    fn w19_split_is_recovered() {
        let b = extract_blocks(&w19(), 6).unwrap();
        let sum = compute_x_plus_y(&b.t, &b.d, 6).unwrap();
        let all = assign_xy(&sum, 6).unwrap();
        assert!(all.contains(&(b.x.clone(), b.y.clone())));
        for (x, y) in &all {
            assert!(sum_matches(&sum, x, y));
            assert!(check_difference(x, y, 6).unwrap().passed());
        }
    }

    #[test]
    fn undecomposable_entry() {
        let sum = SumMatrix::new(6, 1, 1, vec![CycElem::from_int(6, 3)]).unwrap();
        assert!(pair_options(&sum).is_none());
        assert!(assign_xy(&sum, 1).unwrap().is_empty());
    }

    #[test]
    fn s1_zero_sum() {
        let sum = SumMatrix::new(6, 1, 1, vec![CycElem::zero(6)]).unwrap();
        // x - y antipodal: difference 2ζ^x, norm 4 = 3s+1
        let got = assign_xy(&sum, 1).unwrap();
        assert_eq!(got.len(), 6);
    }

    #[test]
    fn pruned_and_unpruned_agree() {
        let b = extract_blocks(&w19(), 6).unwrap();
        let sum = compute_x_plus_y(&b.t, &b.d, 6).unwrap();
        let options = pair_options(&sum).unwrap();
        // restrict to a 2x2 corner to keep the unpruned walk small
        let ring = GenericRing::new(6).unwrap();
        let corner: Vec<_> = [0, 1, 6, 7].iter().map(|&p| options[p].clone()).collect();
        let collect = |pruning| {
            let mut v = Vec::new();
            let _ = assign_xy_with(&ring, 2, &corner, pruning, &mut |x, y| {
                v.push((x.clone(), y.clone()));
                ControlFlow::Continue(())
            });
            v
        };
        assert_eq!(collect(true), collect(false));
    }
}
