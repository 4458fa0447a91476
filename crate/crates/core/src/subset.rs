//! Small helpers for subsets of a finite carrier, stored as sorted index lists.

use std::fmt::Write;

/// Sorted, duplicate-free list of carrier indices.
pub type Subset = Vec<usize>;

pub fn from_mask(mask: &[bool]) -> Subset {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

pub fn to_mask(set: &[usize], n: usize) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &i in set {
        mask[i] = true;
    }
    mask
}

pub fn from_bits(bits: u64, n: usize) -> Subset {
    (0..n).filter(|i| bits >> i & 1 == 1).collect()
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
    }
    true
}

pub fn intersection(a: &[usize], b: &[usize]) -> Subset {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

pub fn union(a: &[usize], b: &[usize]) -> Subset {
    let mut out: Subset = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Ascending by cardinality, then lexicographic.
pub fn sort_canonical(sets: &mut [Subset]) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

pub fn render(set: &[usize], labels: &[String]) -> String {
    let mut out = String::from("{");
    for (k, &i) in set.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let _ = write!(out, "{}", labels[i]);
    }
    out.push('}');
    out
}
