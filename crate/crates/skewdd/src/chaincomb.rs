//! Chain combinatorics of the Bruhat order.
//!
//! Saturated chains between comparable elements carry reflection labels:
//! `v ⋖ s_{α_1}v ⋖ s_{α_2}s_{α_1}v ⋖ … = w`. For a fixed reduced word of
//! `w` and `v ≤ w`, there are two canonical ways to delete `ℓ(w) − ℓ(v)`
//! letters one at a time so that every intermediate stage is reduced — one
//! re-inserting the deleted positions from the smallest upward, one from the
//! largest downward. Both deletion sequences exist and are unique; they are
//! generally different and induce the maps `r` and `r°` from reduced words
//! of `w` to reduced words of `v`.

use crate::rootsys::{Root, RootSystem};
use crate::weylgroup::{self, GroupElement, Word};
use crate::{Error, Result};

/// All `m`-element subsets of `{0, …, l−1}` as sorted index lists.
pub fn index_combinations(l: usize, m: usize) -> Vec<Vec<usize>> {
    if m > l {
        return vec![];
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    fn rec(start: usize, l: usize, m: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        let needed = m - current.len();
        for i in start..=(l - needed) {
            current.push(i);
            rec(i + 1, l, m, current, out);
            current.pop();
        }
    }
    rec(0, l, m, &mut current, &mut out);
    out
}

/// Label sequences `(α_1, …, α_m)` of all saturated chains
/// `v ⋖ s_{α_1}v ⋖ … ⋖ s_{α_m}⋯s_{α_1}v = w`, sorted.
pub fn saturated_chains(rs: &RootSystem, v: &GroupElement, w: &GroupElement) -> Vec<Vec<Root>> {
    let mut out = Vec::new();
    let mut labels = Vec::new();
    fn dfs(
        rs: &RootSystem,
        u: &GroupElement,
        w: &GroupElement,
        labels: &mut Vec<Root>,
        out: &mut Vec<Vec<Root>>,
    ) {
        if u == w {
            out.push(labels.clone());
            return;
        }
        for (alpha, up) in weylgroup::cocovers(rs, u) {
            if weylgroup::bruhat_leq(rs, &up, w) {
                labels.push(alpha);
                dfs(rs, &up, w, labels, out);
                labels.pop();
            }
        }
    }
    if weylgroup::bruhat_leq(rs, v, w) {
        dfs(rs, v, w, &mut labels, &mut out);
    }
    out.sort();
    out
}

/// Which positions a staged deletion removes at stage `i` (1-based,
/// `i = 1, …, m+1`): the first flavor removes the tail `{j_i, …, j_m}` and
/// re-inserts deleted positions smallest-first; the second removes the head
/// `{k_1, …, k_{m−i+1}}` and re-inserts largest-first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeletionFlavor {
    SmallestFirst,
    LargestFirst,
}

fn stage_is_valid(
    rs: &RootSystem,
    word: &[usize],
    deleted: &[usize],
    expect: Option<&GroupElement>,
) -> bool {
    let sub: Word = word
        .iter()
        .enumerate()
        .filter(|(p, _)| !deleted.contains(p))
        .map(|(_, &b)| b)
        .collect();
    let g = weylgroup::from_word(rs, &sub);
    if weylgroup::length(rs, &g) != sub.len() {
        return false;
    }
    expect.is_none_or(|e| g == *e)
}

/// Whether the sorted position set `positions` (0-based) is a valid staged
/// deletion from the reduced word `word` down to `v`.
pub fn staged_deletion_is_valid(
    rs: &RootSystem,
    word: &[usize],
    positions: &[usize],
    v: &GroupElement,
    flavor: DeletionFlavor,
) -> bool {
    let m = positions.len();
    for i in 1..=m + 1 {
        let deleted: Vec<usize> = match flavor {
            DeletionFlavor::SmallestFirst => positions[i - 1..].to_vec(),
            DeletionFlavor::LargestFirst => positions[..m + 1 - i].to_vec(),
        };
        let expect = if i == 1 { Some(v) } else { None };
        if !stage_is_valid(rs, word, &deleted, expect) {
            return false;
        }
    }
    true
}

/// All valid staged-deletion position sets (1-based, sorted) for a reduced
/// word of `w` down to `v ≤ w`. Empty when `v ≰ w`.
pub fn subsequences_all(
    rs: &RootSystem,
    word: &[usize],
    v: &GroupElement,
    flavor: DeletionFlavor,
) -> Vec<Vec<usize>> {
    let w = weylgroup::from_word(rs, word);
    if !weylgroup::bruhat_leq(rs, v, &w) {
        return vec![];
    }
    let m = word.len() - weylgroup::length(rs, v);
    index_combinations(word.len(), m)
        .into_iter()
        .filter(|pos| staged_deletion_is_valid(rs, word, pos, v, flavor))
        .map(|pos| pos.into_iter().map(|p| p + 1).collect())
        .collect()
}

/// The unique pair of staged-deletion sequences (smallest-first, then
/// largest-first flavor), both 1-based.
pub fn unique_subsequences(
    rs: &RootSystem,
    word: &[usize],
    v: &GroupElement,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let w = weylgroup::from_word(rs, word);
    if weylgroup::length(rs, &w) != word.len() {
        return Err(Error::NotReducedWordOf(word.to_vec()));
    }
    if !weylgroup::bruhat_leq(rs, v, &w) {
        return Err(Error::NotBruhatComparable);
    }
    let mut js = subsequences_all(rs, word, v, DeletionFlavor::SmallestFirst);
    let mut ks = subsequences_all(rs, word, v, DeletionFlavor::LargestFirst);
    if js.len() != 1 || ks.len() != 1 {
        return Err(Error::Usage(format!(
            "expected unique deletion sequences, found {} and {}",
            js.len(),
            ks.len()
        )));
    }
    Ok((js.remove(0), ks.remove(0)))
}

fn delete_positions(word: &[usize], positions_1b: &[usize]) -> Word {
    word.iter()
        .enumerate()
        .filter(|(p, _)| !positions_1b.contains(&(p + 1)))
        .map(|(_, &b)| b)
        .collect()
}

/// The reduced word of `v` obtained by deleting the smallest-first staged
/// deletion sequence from a reduced word of `w`.
pub fn r_map(rs: &RootSystem, word: &[usize], v: &GroupElement) -> Result<Word> {
    let (j, _) = unique_subsequences(rs, word, v)?;
    Ok(delete_positions(word, &j))
}

/// The reduced word of `v` obtained by deleting the largest-first staged
/// deletion sequence from a reduced word of `w`.
pub fn r_circ_map(rs: &RootSystem, word: &[usize], v: &GroupElement) -> Result<Word> {
    let (_, k) = unique_subsequences(rs, word, v)?;
    Ok(delete_positions(word, &k))
}
