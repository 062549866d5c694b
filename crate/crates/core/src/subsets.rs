//! Lexicographically ordered k-subsets of `{0, .., n-1}` as bitmasks.
//!
//! Exterior powers and cochain spaces both use this ordering for their bases.

use alloc::vec;
use alloc::vec::Vec;

/// Largest ground set size a `u64` mask can hold.
pub const MAX_GROUND: usize = 64;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).unwrap_or(usize::MAX)
}

/// The k-subsets of an n-set in lexicographic order, with O(n) ranking.
#[derive(Clone, Debug)]
pub struct SubsetIndex {
    n: usize,
    k: usize,
    masks: Vec<u64>,
    /// `binom[a][b]` = C(a, b) for a < n, b <= k.
    binom: Vec<Vec<usize>>,
}

impl SubsetIndex {
    pub fn new(n: usize, k: usize) -> SubsetIndex {
        assert!(n <= MAX_GROUND, "ground set of size {n} exceeds {MAX_GROUND}");
        let binom = (0..=n).map(|a| (0..=k).map(|b| binomial(a, b)).collect()).collect();
        let mut masks = Vec::with_capacity(binomial(n, k));
        if k <= n {
            let mut current: Vec<usize> = (0..k).collect();
            loop {
                masks.push(current.iter().fold(0u64, |m, &i| m | (1 << i)));
                // advance to the next combination in lexicographic order
                let Some(pos) = (0..k).rev().find(|&i| current[i] < n - k + i) else { break };
                current[pos] += 1;
                for i in pos + 1..k {
                    current[i] = current[i - 1] + 1;
                }
            }
        }
        SubsetIndex { n, k, masks, binom }
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn ground(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn mask(&self, index: usize) -> u64 {
        self.masks[index]
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    /// Lexicographic position of a k-subset mask.
    pub fn rank(&self, mask: u64) -> usize {
        debug_assert_eq!(mask.count_ones() as usize, self.k);
        let mut rank = 0;
        let mut prev: isize = -1;
        let mut chosen = 0;
        let mut rest = mask;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            chosen += 1;
            for x in (prev + 1) as usize..a {
                rank += self.binom[self.n - 1 - x][self.k - chosen];
            }
            prev = a as isize;
        }
        rank
    }
}

/// Elements of a mask in increasing order.
pub fn elements(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    core::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(a)
        }
    })
}

/// Number of elements of `mask` strictly below `a`.
#[inline]
pub fn count_below(mask: u64, a: usize) -> u32 {
    (mask & ((1u64 << a) - 1)).count_ones()
}

/// Number of elements of `mask` strictly between `a` and `b`.
#[inline]
pub fn count_between(mask: u64, a: usize, b: usize) -> u32 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    if hi <= lo + 1 {
        return 0;
    }
    let range = ((1u64 << hi) - 1) & !((1u64 << (lo + 1)) - 1);
    (mask & range).count_ones()
}

#[inline]
pub fn parity_sign(count: u32) -> i64 {
    if count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Replaces `old` by `new` in the sorted tuple `mask`. Returns the resulting
/// set and the sign of the permutation that re-sorts it, or `None` if `new`
/// already occurs elsewhere in the tuple.
pub fn replace(mask: u64, old: usize, new: usize) -> Option<(u64, i64)> {
    debug_assert!(mask & (1 << old) != 0);
    if old == new {
        return Some((mask, 1));
    }
    let rest = mask & !(1u64 << old);
    if rest & (1 << new) != 0 {
        return None;
    }
    Some((rest | (1 << new), parity_sign(count_between(rest, old, new))))
}

/// Lexicographic enumeration of all k-subsets of `items` (used by the brute
/// force plethysm), calling `f` with each subset's elements.
pub fn for_each_subset<T: Copy>(items: &[T], k: usize, mut f: impl FnMut(&[T])) {
    let n = items.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf = vec![items[0]; k.min(n)];
    loop {
        for (b, &i) in buf.iter_mut().zip(&idx) {
            *b = items[i];
        }
        f(&buf[..k]);
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else { break };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
}
