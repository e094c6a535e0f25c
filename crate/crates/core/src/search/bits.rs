/// Fixed-size bitset used for candidate sets in the clique searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub(crate) fn new(len: usize) -> Self {
        Bits { words: vec![0; len.div_ceil(64)] }
    }

    pub(crate) fn full(len: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..len {
            b.set(i);
        }
        b
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn and(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    /// Clears every bit below `i`.
    pub(crate) fn clear_below(&mut self, i: usize) {
        let w = i / 64;
        let end = w.min(self.words.len());
        for word in &mut self.words[..end] {
            *word = 0;
        }
        if w < self.words.len() {
            self.words[w] &= !0u64 << (i % 64);
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + tz)
            })
        })
    }
}

use std::ops::ControlFlow;

/// Visits every `k`-subset `i_1 < … < i_k` of `0..adj.len()` that is pairwise adjacent,
/// in lexicographic order. With `allow_repeat`, indices may repeat (`i_1 <= … <= i_k`),
/// which requires the self-loop bit to be set.
pub(crate) fn for_each_clique(
    adj: &[Bits],
    k: usize,
    allow_repeat: bool,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn rec(
        adj: &[Bits],
        k: usize,
        allow_repeat: bool,
        cand: &Bits,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if chosen.len() == k {
            return visit(chosen);
        }
        for v in cand.ones() {
            let mut next = cand.and(&adj[v]);
            next.clear_below(if allow_repeat { v } else { v + 1 });
            if next.count() + chosen.len() + 1 < k && !(allow_repeat && next.get(v)) {
                continue;
            }
            chosen.push(v);
            let flow = rec(adj, k, allow_repeat, &next, chosen, visit);
            chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    let n = adj.len();
    let mut chosen = Vec::with_capacity(k);
    if k == 0 {
        return visit(&chosen);
    }
    rec(adj, k, allow_repeat, &Bits::full(n), &mut chosen, visit)
}
