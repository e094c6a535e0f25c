use std::collections::{BTreeMap, HashSet};
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{mpsc, Mutex};
use std::time::Instant;

use super::bits::{for_each_clique, Bits};
use super::d::{search_d_with, DSearchOptions};
use super::t::TRowPool;
use super::tables::PairTable;
use super::xy::assign_xy_with;
use super::{SearchConfig, SearchOutcome, SearchStats, Solution};
use crate::bmatrix::ExponentMatrix;
use crate::error::Result;
use crate::petrescu::PetrescuBlocks;
use crate::ring::RootRing;

struct Shared<'a, R: RootRing> {
    ring: &'a R,
    cfg: &'a SearchConfig,
    pool: TRowPool,
    pairs: PairTable<R>,
    deadline: Option<Instant>,
    stop: AtomicBool,
    timed_out: AtomicBool,
}

#[derive(Default)]
struct DResult {
    solutions: Vec<Solution>,
    stats: SearchStats,
}

impl<R: RootRing> Shared<'_, R> {
    fn out_of_time(&self) -> bool {
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out.store(true, Ordering::Relaxed);
        }
        self.timed_out.load(Ordering::Relaxed)
    }

    fn halted(&self) -> bool {
        self.stop.load(Ordering::Relaxed) || self.out_of_time()
    }

    /// `t·D*`, one entry per row of `D`.
    fn times_d_adjoint(&self, t: &[u32], d: &ExponentMatrix) -> Vec<R::Elem> {
        let q = self.ring.q();
        (0..d.n_rows())
            .map(|l| self.ring.sum_roots(t.iter().zip(d.row(l)).map(|(&a, &b)| a + q - b)))
            .collect()
    }

    /// Entry of `X + Y` in row `i`, column `k`: `-(u_i · t_k*) / (s+1)`.
    fn sum_entry(&self, u_i: &[R::Elem], t_k: &[u32]) -> Option<R::Elem> {
        let ring = self.ring;
        let q = ring.q();
        let mut acc = ring.zero();
        for (u, &e) in u_i.iter().zip(t_k) {
            ring.sub_assign(&mut acc, &ring.mul_root(u, (q - e) % q));
        }
        ring.div_exact(&acc, self.cfg.s as i64 + 1)
    }

    fn entry_splits(&self, u_i: &[R::Elem], t_k: &[u32]) -> Option<&[(u32, u32)]> {
        self.sum_entry(u_i, t_k).and_then(|v| self.pairs.options(&v))
    }

    fn process_d(&self, d: &ExponentMatrix) -> DResult {
        let cfg = self.cfg;
        let (s, q) = (cfg.s, self.ring.q());
        let cap = if cfg.max_solutions == 0 { usize::MAX } else { cfg.max_solutions };
        let mut res = DResult::default();
        res.stats.d_candidates = 1;

        let mut rows: Vec<usize> = Vec::new();
        let mut us: Vec<Vec<R::Elem>> = Vec::new();
        for (idx, t) in self.pool.rows.iter().enumerate() {
            let u = self.times_d_adjoint(t, d);
            if cfg.pruning && self.entry_splits(&u, t).is_none() {
                res.stats.prunes_by_phase.t += 1;
                continue;
            }
            rows.push(idx);
            us.push(u);
        }
        let mut adj = vec![Bits::new(rows.len()); rows.len()];
        for a in 0..rows.len() {
            for b in a + 1..rows.len() {
                let (ra, rb) = (rows[a], rows[b]);
                if !self.pool.orth[ra].get(rb) {
                    continue;
                }
                let pool = &self.pool.rows;
                if cfg.pruning
                    && (self.entry_splits(&us[a], &pool[rb]).is_none()
                        || self.entry_splits(&us[b], &pool[ra]).is_none())
                {
                    res.stats.prunes_by_phase.t += 1;
                    continue;
                }
                adj[a].set(b);
                adj[b].set(a);
            }
        }

        let mut seen: HashSet<ExponentMatrix> = HashSet::new();
        let _ = for_each_clique(&adj, s, false, &mut |picked| {
            if self.halted()
                || cfg.max_t_candidates.is_some_and(|m| res.stats.t_candidates as usize >= m)
            {
                return ControlFlow::Break(());
            }
            res.stats.t_candidates += 1;
            let t_rows: Vec<&[u32]> = picked.iter().map(|&p| self.pool.rows[rows[p]].as_slice()).collect();
            let mut options = Vec::with_capacity(s * s);
            for &i in picked {
                for t_k in &t_rows {
                    match self.entry_splits(&us[i], t_k) {
                        Some(o) => options.push(o.to_vec()),
                        None => {
                            res.stats.prunes_by_phase.x_plus_y += 1;
                            return ControlFlow::Continue(());
                        }
                    }
                }
            }
            let t = ExponentMatrix::from_rows(q, &t_rows).expect("pool rows share a length");
            let (xy, flow) = assign_xy_with(self.ring, s, &options, cfg.pruning, &mut |x, y| {
                let blocks = PetrescuBlocks::new(s, x.clone(), y.clone(), t.clone(), d.clone())
                    .expect("block shapes follow s");
                let matrix = blocks.assemble();
                if !matrix.verify_bh().map(|r| r.is_hadamard).unwrap_or(false) {
                    res.stats.prunes_by_phase.final_gate += 1;
                    return ControlFlow::Continue(());
                }
                if seen.insert(matrix.dephase()) {
                    res.solutions.push(Solution { blocks, matrix });
                    if res.solutions.len() >= cap {
                        return ControlFlow::Break(());
                    }
                }
                ControlFlow::Continue(())
            });
            res.stats.xy_branches += xy.branches;
            res.stats.prunes_by_phase.xy += xy.pruned;
            flow
        });
        res
    }
}

/// Folds per-`D` results, in the order they are pushed, into the final outcome.
struct Merger {
    cap: usize,
    solutions: Vec<Solution>,
    seen: HashSet<ExponentMatrix>,
    stats: SearchStats,
}

impl Merger {
    fn new(max_solutions: usize) -> Self {
        Merger {
            cap: if max_solutions == 0 { usize::MAX } else { max_solutions },
            solutions: Vec::new(),
            seen: HashSet::new(),
            stats: SearchStats::default(),
        }
    }

    fn push(&mut self, r: DResult) -> ControlFlow<()> {
        self.stats.absorb(&r.stats);
        for sol in r.solutions {
            if self.solutions.len() >= self.cap {
                break;
            }
            if self.seen.insert(sol.matrix.dephase()) {
                self.solutions.push(sol);
            }
        }
        if self.solutions.len() >= self.cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }
}

/// Runs the full search with the given root-of-unity arithmetic.
///
/// Each `D` candidate is processed independently and keeps at most `max_solutions`
/// distinct arrays; results are merged in `D` order (unless `deterministic_order` is
/// off and several threads are used), so a multi-threaded run reports the same
/// solutions as a single-threaded one.
pub fn run_pipeline<R: RootRing>(ring: &R, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    if ring.q() != cfg.q {
        return Err(crate::error::Error::invalid(format!(
            "arithmetic for q = {} cannot run a search with q = {}",
            ring.q(),
            cfg.q
        )));
    }
    let start = Instant::now();
    let shared = Shared {
        ring,
        cfg,
        pool: TRowPool::new(ring, cfg.s),
        pairs: PairTable::new(ring),
        deadline: cfg.time_budget.map(|b| start + b),
        stop: AtomicBool::new(false),
        timed_out: AtomicBool::new(false),
    };
    let dopts = DSearchOptions { pruning: cfg.pruning, limit: cfg.max_d_candidates };
    let mut merger = Merger::new(cfg.max_solutions);

    let dstats = if cfg.threads <= 1 {
        search_d_with(ring, cfg.s, &dopts, &mut |d| {
            if shared.out_of_time() {
                return ControlFlow::Break(());
            }
            merger.push(shared.process_d(d))
        })
    } else {
        run_parallel(&shared, &dopts, &mut merger)
    };

    let mut stats = merger.stats;
    stats.prunes_by_phase.d += dstats.pruned;
    stats.solutions = merger.solutions.len() as u64;
    stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(SearchOutcome {
        solutions: merger.solutions,
        stats,
        truncated: shared.timed_out.load(Ordering::Relaxed),
    })
}

fn run_parallel<R: RootRing>(
    shared: &Shared<'_, R>,
    dopts: &DSearchOptions,
    merger: &mut Merger,
) -> super::DSearchStats {
    let threads = shared.cfg.threads;
    let ordered = shared.cfg.deterministic_order;
    let (dtx, drx) = mpsc::sync_channel::<(usize, ExponentMatrix)>(threads * 2);
    let drx = Mutex::new(drx);
    let (rtx, rrx) = mpsc::channel::<(usize, DResult)>();
    std::thread::scope(|scope| {

        let producer = scope.spawn(move || {
            let mut next = 0usize;
            search_d_with(shared.ring, shared.cfg.s, dopts, &mut |d| {
                if shared.halted() || dtx.send((next, d.clone())).is_err() {
                    return ControlFlow::Break(());
                }
                next += 1;
                ControlFlow::Continue(())
            })
        });
        for _ in 0..threads {
            let rtx = rtx.clone();
            let drx = &drx;
            scope.spawn(move || loop {
                let msg = drx.lock().expect("queue lock").recv();
                let Ok((i, d)) = msg else { break };
                let r = if shared.halted() { DResult::default() } else { shared.process_d(&d) };
                if rtx.send((i, r)).is_err() {
                    break;
                }
            });
        }
        drop(rtx);

        let mut pending = BTreeMap::new();
        let mut next = 0usize;
        let mut done = false;
        for (i, r) in rrx {
            if done {
                continue;
            }
            if !ordered {
                if merger.push(r).is_break() {
                    done = true;
                }
            } else {
                pending.insert(i, r);
                while let Some(r) = pending.remove(&next) {
                    next += 1;
                    if merger.push(r).is_break() {
                        done = true;
                        break;
                    }
                }
            }
            if done {
                shared.stop.store(true, Ordering::Relaxed);
            }
        }
        producer.join().expect("D producer panicked")
    })
}
