//! Fixed-width vertex bitsets stored as `u64` words.

/// Number of 64-bit words needed to hold `n` bits.
#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn test(set: &[u64], i: usize) -> bool {
    set[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub fn insert(set: &mut [u64], i: usize) {
    set[i >> 6] |= 1u64 << (i & 63);
}

#[inline]
pub fn remove(set: &mut [u64], i: usize) {
    set[i >> 6] &= !(1u64 << (i & 63));
}

#[inline]
pub fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

/// `dst &= src`
#[inline]
pub fn intersect_with(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= *s;
    }
}

/// `dst &= !src`
#[inline]
pub fn difference_with(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= !*s;
    }
}

/// Sets bits `0..n` and clears the rest.
pub fn fill(set: &mut [u64], n: usize) {
    for (w, word) in set.iter_mut().enumerate() {
        let lo = w * 64;
        *word = if n >= lo + 64 {
            u64::MAX
        } else if n > lo {
            (1u64 << (n - lo)) - 1
        } else {
            0
        };
    }
}

/// Clears every bit with index `<= i`.
pub fn clear_through(set: &mut [u64], i: usize) {
    let w = i >> 6;
    for word in set.iter_mut().take(w) {
        *word = 0;
    }
    if w < set.len() {
        let b = i & 63;
        set[w] &= if b == 63 { 0 } else { !((1u64 << (b + 1)) - 1) };
    }
}

/// Iterator over set bit indices in increasing order.
pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

pub fn ones(words: &[u64]) -> Ones<'_> {
    Ones {
        words,
        idx: 0,
        cur: words.first().copied().unwrap_or(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fill_and_iterate() {
        let mut s = vec![0u64; 3];
        fill(&mut s, 130);
        assert_eq!(count(&s), 130);
        assert_eq!(ones(&s).last(), Some(129));
        clear_through(&mut s, 63);
        assert_eq!(ones(&s).next(), Some(64));
        clear_through(&mut s, 64);
        assert_eq!(ones(&s).next(), Some(65));
    }

    #[test]
    fn set_ops() {
        let mut a = vec![0u64; 2];
        let mut b = vec![0u64; 2];
        for i in [1, 5, 70] {
            insert(&mut a, i);
        }
        for i in [5, 70, 90] {
            insert(&mut b, i);
        }
        let mut c = a.clone();
        intersect_with(&mut c, &b);
        assert_eq!(ones(&c).collect::<Vec<_>>(), vec![5, 70]);
        difference_with(&mut a, &b);
        assert_eq!(ones(&a).collect::<Vec<_>>(), vec![1]);
        remove(&mut a, 1);
        assert!(is_empty(&a));
    }
}
