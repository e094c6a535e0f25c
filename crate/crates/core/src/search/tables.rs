use std::collections::{HashMap, HashSet};

use crate::ring::RootRing;

/// Largest reachable-sum table kept per term count before falling back to the
/// coefficient bound.
const TABLE_CAP: usize = 200_000;

/// Decides whether a residual can still be written as a sum of `r` roots.
///
/// Exact for every `r` whose table of reachable sums fits under [`TABLE_CAP`]; beyond
/// that, a residual is kept when each canonical coefficient is at most `r` times the
/// largest coefficient of a single root, which never rejects a feasible residual.
pub(crate) struct SumTable<R: RootRing> {
    sets: Vec<HashSet<R::Elem>>,
    bound: i64,
}

impl<R: RootRing> SumTable<R> {
    pub(crate) fn new(ring: &R, max_terms: usize) -> Self {
        let q = ring.q();
        let bound = (0..q).map(|j| ring.max_abs_coeff(&ring.root(j))).max().unwrap_or(1);
        let mut sets = vec![HashSet::from([ring.zero()])];
        while sets.len() <= max_terms {
            let prev = sets.last().expect("non-empty");
            if prev.len() * q as usize > TABLE_CAP {
                break;
            }
            let mut next = HashSet::with_capacity(prev.len() * 2);
            for e in prev {
                for j in 0..q {
                    let mut v = e.clone();
                    ring.add_root(&mut v, j);
                    next.insert(v);
                }
            }
            sets.push(next);
        }
        SumTable { sets, bound }
    }

    #[inline]
    pub(crate) fn feasible(&self, ring: &R, residual: &R::Elem, terms: usize) -> bool {
        match self.sets.get(terms) {
            Some(set) => set.contains(residual),
            None => ring.max_abs_coeff(residual) <= terms as i64 * self.bound,
        }
    }
}

/// Ordered `(x, y)` exponent pairs with `ζ^x + ζ^y` equal to a given value.
pub(crate) struct PairTable<R: RootRing> {
    map: HashMap<R::Elem, Vec<(u32, u32)>>,
}

impl<R: RootRing> PairTable<R> {
    pub(crate) fn new(ring: &R) -> Self {
        let q = ring.q();
        let mut map: HashMap<R::Elem, Vec<(u32, u32)>> = HashMap::new();
        for a in 0..q {
            for b in a..q {
                let mut v = ring.root(a);
                ring.add_root(&mut v, b);
                let slot = map.entry(v).or_default();
                slot.push((a, b));
                if a != b {
                    slot.push((b, a));
                }
            }
        }
        for v in map.values_mut() {
            v.sort_unstable();
        }
        PairTable { map }
    }

    pub(crate) fn options(&self, value: &R::Elem) -> Option<&[(u32, u32)]> {
        self.map.get(value).map(Vec::as_slice)
    }
}
