//! Distinct-factor tables over a suffix array.
//!
//! For a fixed length `L`, the suffixes sharing a length-`L` prefix form a
//! contiguous run of the suffix array whose consecutive LCP values are all
//! `>= L`. Each such run is one distinct factor; its entries are the
//! factor's occurrence starts.

pub(crate) struct FactorIndex<'a> {
    text: &'a [u8],
    sa: Vec<usize>,
    /// `lcp[k]` = longest common prefix of suffixes `sa[k - 1]` and `sa[k]`;
    /// `lcp[0] = 0`.
    lcp: Vec<usize>,
}

impl<'a> FactorIndex<'a> {
    pub(crate) fn new(text: &'a [u8]) -> Self {
        let sa = suffix_array(text);
        let lcp = lcp_array(text, &sa);
        FactorIndex { text, sa, lcp }
    }

    pub(crate) fn len(&self) -> usize {
        self.text.len()
    }

    /// Calls `f` with the (unsorted) occurrence starts of every distinct
    /// factor of length `len`, in lexicographic order of the factors.
    /// Stops early and returns `false` as soon as `f` does.
    pub(crate) fn for_each_factor(&self, len: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
        let n = self.text.len();
        let mut k = 0;
        while k < n {
            if n - self.sa[k] < len {
                k += 1;
                continue;
            }
            let start = k;
            k += 1;
            while k < n && self.lcp[k] >= len {
                k += 1;
            }
            if !f(&self.sa[start..k]) {
                return false;
            }
        }
        true
    }
}

/// Prefix-doubling suffix array, `O(n log^2 n)`.
pub(crate) fn suffix_array(text: &[u8]) -> Vec<usize> {
    let n = text.len();
    let mut sa: Vec<usize> = (0..n).collect();
    if n <= 1 {
        return sa;
    }
    let mut rank: Vec<usize> = text.iter().map(|&b| b as usize).collect();
    let mut tmp = vec![0usize; n];
    let mut step = 1;
    loop {
        // Rank pair (rank[i], rank[i + step]); absent second half sorts first.
        let key = |i: usize| (rank[i], if i + step < n { rank[i + step] + 1 } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i));
        tmp[sa[0]] = 0;
        for k in 1..n {
            tmp[sa[k]] = tmp[sa[k - 1]] + usize::from(key(sa[k - 1]) != key(sa[k]));
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[sa[n - 1]] == n - 1 {
            break;
        }
        step *= 2;
    }
    sa
}

/// Kasai's algorithm.
pub(crate) fn lcp_array(text: &[u8], sa: &[usize]) -> Vec<usize> {
    let n = text.len();
    let mut rank = vec![0; n];
    for (k, &i) in sa.iter().enumerate() {
        rank[i] = k;
    }
    let mut lcp = vec![0; n];
    let mut h = 0;
    for i in 0..n {
        if rank[i] > 0 {
            let j = sa[rank[i] - 1];
            while i + h < n && j + h < n && text[i + h] == text[j + h] {
                h += 1;
            }
            lcp[rank[i]] = h;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}
