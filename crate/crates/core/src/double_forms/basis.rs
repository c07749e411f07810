//! Bitmask bookkeeping for strictly increasing multi-indices on ℝⁿ, n ≤ 12.

use std::sync::OnceLock;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 12;

/// Subsets of `{0, .., n-1}` grouped by cardinality, with a reverse lookup
/// from mask to position inside its cardinality class.
pub(crate) struct Basis {
    by_degree: Vec<Vec<u16>>,
    rank: Vec<u32>,
}

impl Basis {
    fn build(n: usize) -> Self {
        let mut by_degree = vec![Vec::new(); n + 1];
        let mut rank = vec![0u32; 1 << n];
        for mask in 0..(1u32 << n) {
            let d = mask.count_ones() as usize;
            rank[mask as usize] = by_degree[d].len() as u32;
            by_degree[d].push(mask as u16);
        }
        Self { by_degree, rank }
    }

    #[inline]
    pub fn subsets(&self, degree: usize) -> &[u16] {
        self.by_degree.get(degree).map_or(&[], Vec::as_slice)
    }

    #[inline]
    pub fn rank(&self, mask: u16) -> usize {
        self.rank[mask as usize] as usize
    }
}

static BASES: OnceLock<Vec<Basis>> = OnceLock::new();

pub(crate) fn basis(n: usize) -> &'static Basis {
    &BASES.get_or_init(|| (0..=MAX_DIM).map(Basis::build).collect())[n]
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// Sign of the permutation that sorts the concatenation `a ++ b` of two
/// disjoint increasing index sets.
#[inline]
pub(crate) fn merge_sign(a: u16, b: u16) -> f64 {
    debug_assert_eq!(a & b, 0);
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Mask and sorting sign of an arbitrary index tuple; `None` on repeats.
pub(crate) fn mask_with_sign(indices: &[usize]) -> Option<(u16, f64)> {
    let mut mask = 0u16;
    let mut sign = 1.0;
    for &i in indices {
        let bit = 1u16 << i;
        if mask & bit != 0 {
            return None;
        }
        if (mask >> (i + 1)).count_ones() % 2 == 1 {
            sign = -sign;
        }
        mask |= bit;
    }
    Some((mask, sign))
}

pub(crate) fn mask_indices(mask: u16) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

/// All `(sub, rest, sign)` splittings of `mask` with `|sub| = degree`,
/// where `sign` sorts `sub ++ rest`.
pub(crate) fn splittings(mask: u16, degree: usize) -> Vec<(u16, u16, f64)> {
    let mut out = Vec::new();
    let mut sub = mask;
    loop {
        if sub.count_ones() as usize == degree {
            let rest = mask & !sub;
            out.push((sub, rest, merge_sign(sub, rest)));
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    out
}
