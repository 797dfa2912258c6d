//! Weyl group elements as exact integer matrices on the simple-root basis.
//!
//! Column `i` of `matrix` holds the coordinates of `w(β_i)`. Every element
//! carries its inverse matrix alongside, so left descents (which live on the
//! inverse) cost a column sign check instead of a matrix inversion. Words are
//! plain vectors of 0-based simple-root indices; the left-to-right product of
//! a word is its group element.

use crate::rootsys::{CartanType, Root, RootSystem};
use crate::{Error, Result};
use std::collections::HashMap;

/// A word in the simple reflections, as 0-based simple-root indices.
pub type Word = Vec<usize>;

type Matrix = Vec<Vec<i64>>;

/// A Weyl group element. `matrix` acts on root coordinate columns;
/// `inv` is the matrix of the inverse element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub matrix: Matrix,
    inv: Matrix,
}

fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for (j, entry) in row.iter_mut().enumerate() {
                *entry += aik * b[k][j];
            }
        }
    }
    out
}

fn mat_apply(m: &Matrix, r: &Root) -> Root {
    let n = m.len();
    let mut c = vec![0i64; n];
    for (j, &rj) in r.coeffs.iter().enumerate() {
        if rj == 0 {
            continue;
        }
        for i in 0..n {
            c[i] += m[i][j] * rj;
        }
    }
    Root::new(c)
}

impl GroupElement {
    pub fn identity(rank: usize) -> Self {
        let m = identity_matrix(rank);
        GroupElement { inv: m.clone(), matrix: m }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity_matrix(self.matrix.len())
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement { matrix: self.inv.clone(), inv: self.matrix.clone() }
    }

    /// Image `w(γ)` of a root.
    pub fn act(&self, gamma: &Root) -> Root {
        mat_apply(&self.matrix, gamma)
    }

    /// Image `w⁻¹(γ)` of a root.
    pub fn act_inv(&self, gamma: &Root) -> Root {
        mat_apply(&self.inv, gamma)
    }
}

/// Composition `a∘b` (first apply `b`, then `a`).
pub fn multiply(a: &GroupElement, b: &GroupElement) -> GroupElement {
    GroupElement {
        matrix: mat_mul(&a.matrix, &b.matrix),
        inv: mat_mul(&b.inv, &a.inv),
    }
}

/// The simple reflection `s_{β_i}`.
pub fn simple_reflection(rs: &RootSystem, i: usize) -> GroupElement {
    reflection(rs, &rs.simple_root(i))
}

/// The reflection `s_α` for an arbitrary root `α`.
pub fn reflection(rs: &RootSystem, alpha: &Root) -> GroupElement {
    let n = rs.rank();
    let mut m = vec![vec![0i64; n]; n];
    for j in 0..n {
        let img = rs.reflect(alpha, &rs.simple_root(j));
        for i in 0..n {
            m[i][j] = img.coeffs[i];
        }
    }
    GroupElement { inv: m.clone(), matrix: m }
}

/// Left-to-right product of a word of simple-root indices.
pub fn from_word(rs: &RootSystem, word: &[usize]) -> GroupElement {
    let mut w = GroupElement::identity(rs.rank());
    for &i in word {
        w = multiply(&w, &simple_reflection(rs, i));
    }
    w
}

/// Coxeter length, computed as the number of inversions
/// `|{α ∈ R⁺ : w(α) < 0}|`.
pub fn length(rs: &RootSystem, w: &GroupElement) -> usize {
    rs.positive_roots
        .iter()
        .filter(|alpha| w.act(alpha).is_negative())
        .count()
}

/// Whether `ℓ(s_{β_i} w) < ℓ(w)`, i.e. `w⁻¹(β_i) < 0`.
pub fn is_left_descent(rs: &RootSystem, w: &GroupElement, i: usize) -> bool {
    w.act_inv(&rs.simple_root(i)).is_negative()
}

/// Whether `ℓ(w s_{β_i}) < ℓ(w)`, i.e. `w(β_i) < 0`.
pub fn is_right_descent(rs: &RootSystem, w: &GroupElement, i: usize) -> bool {
    w.act(&rs.simple_root(i)).is_negative()
}

/// The longest element, built by greedy right ascents.
pub fn longest_element(rs: &RootSystem) -> GroupElement {
    let mut w = GroupElement::identity(rs.rank());
    'outer: loop {
        for i in 0..rs.rank() {
            if !is_right_descent(rs, &w, i) {
                w = multiply(&w, &simple_reflection(rs, i));
                continue 'outer;
            }
        }
        return w;
    }
}

/// The lexicographically smallest reduced word of `w`: repeatedly strip the
/// smallest-index left descent. Satisfies `from_word(canonical_reduced_word(w)) == w`.
pub fn canonical_reduced_word(rs: &RootSystem, w: &GroupElement) -> Word {
    let mut w = w.clone();
    let mut out = Vec::new();
    'outer: loop {
        for i in 0..rs.rank() {
            if is_left_descent(rs, &w, i) {
                out.push(i);
                w = multiply(&simple_reflection(rs, i), &w);
                continue 'outer;
            }
        }
        return out;
    }
}

/// All reduced words of `w`, in lexicographic order.
pub fn all_reduced_words(rs: &RootSystem, w: &GroupElement) -> Vec<Word> {
    fn go(rs: &RootSystem, w: &GroupElement, memo: &mut HashMap<GroupElement, Vec<Word>>) -> Vec<Word> {
        if w.is_identity() {
            return vec![vec![]];
        }
        if let Some(ws) = memo.get(w) {
            return ws.clone();
        }
        let mut out = Vec::new();
        for i in 0..rs.rank() {
            if is_left_descent(rs, w, i) {
                let rest = multiply(&simple_reflection(rs, i), w);
                for mut sub in go(rs, &rest, memo) {
                    sub.insert(0, i);
                    out.push(sub);
                }
            }
        }
        memo.insert(w.clone(), out.clone());
        out
    }
    go(rs, w, &mut HashMap::new())
}

/// Bruhat order on `W`, via the descent recursion: with β the smallest-index
/// left descent of `w`, descend both sides by `s_β` when it also descends
/// `v`, else descend only `w`. Runs in `O(ℓ(w))` group operations.
pub fn bruhat_leq(rs: &RootSystem, v: &GroupElement, w: &GroupElement) -> bool {
    let mut v = v.clone();
    let mut w = w.clone();
    loop {
        if v.is_identity() {
            return true;
        }
        let Some(i) = (0..rs.rank()).find(|&i| is_left_descent(rs, &w, i)) else {
            return false; // w = 1 but v ≠ 1
        };
        let s = simple_reflection(rs, i);
        if is_left_descent(rs, &v, i) {
            v = multiply(&s, &v);
        }
        w = multiply(&s, &w);
    }
}

/// Covers of `w` from below: all `(α, s_α w)` with `ℓ(s_α w) = ℓ(w) − 1`,
/// in positive-root enumeration order.
pub fn covers(rs: &RootSystem, w: &GroupElement) -> Vec<(Root, GroupElement)> {
    let lw = length(rs, w);
    let mut out = Vec::new();
    for alpha in &rs.positive_roots {
        let u = multiply(&reflection(rs, alpha), w);
        if length(rs, &u) + 1 == lw {
            out.push((alpha.clone(), u));
        }
    }
    out
}

/// Cocovers of `v`: all `(α, s_α v)` with `ℓ(s_α v) = ℓ(v) + 1`.
pub fn cocovers(rs: &RootSystem, v: &GroupElement) -> Vec<(Root, GroupElement)> {
    let lv = length(rs, v);
    let mut out = Vec::new();
    for alpha in &rs.positive_roots {
        let u = multiply(&reflection(rs, alpha), v);
        if length(rs, &u) == lv + 1 {
            out.push((alpha.clone(), u));
        }
    }
    out
}

/// Left weak order: `v ≤ w` iff `ℓ(w v⁻¹) + ℓ(v) = ℓ(w)`.
pub fn weak_left_leq(rs: &RootSystem, v: &GroupElement, w: &GroupElement) -> bool {
    length(rs, &multiply(w, &v.inverse())) + length(rs, v) == length(rs, w)
}

/// Ascent/descent data of `v` (and of the pair `(v, w)`):
/// `a_ell` are the simple indices β with `v < s_β v`; `a` and `d` are the
/// indices (into `positive_roots`) of `A(v) = {α : v⁻¹(α) > 0}` and its
/// complement `D(v)`; `ad` indexes `AD(v, w) = A(v) ∩ D(w)`.
#[derive(Debug, Clone)]
pub struct AscentDescent {
    pub a_ell: Vec<usize>,
    pub a: Vec<usize>,
    pub d: Vec<usize>,
    pub ad: Vec<usize>,
}

pub fn ascent_descent(rs: &RootSystem, v: &GroupElement, w: &GroupElement) -> AscentDescent {
    let a_ell = left_ascents(rs, v);
    let mut a = Vec::new();
    let mut d = Vec::new();
    let mut ad = Vec::new();
    for (idx, alpha) in rs.positive_roots.iter().enumerate() {
        if v.act_inv(alpha).is_positive() {
            a.push(idx);
            if w.act_inv(alpha).is_negative() {
                ad.push(idx);
            }
        } else {
            d.push(idx);
        }
    }
    AscentDescent { a_ell, a, d, ad }
}

/// Simple indices β with `v < s_β v`.
pub fn left_ascents(rs: &RootSystem, v: &GroupElement) -> Vec<usize> {
    (0..rs.rank())
        .filter(|&i| v.act_inv(&rs.simple_root(i)).is_positive())
        .collect()
}

/// Prefix-twisted roots of a reduced word: `α_i = s_{β_1}⋯s_{β_{i−1}}(β_i)`.
/// Errs when the word is not reduced (the twists stay positive and distinct
/// exactly for reduced words).
pub fn reflection_ordering(rs: &RootSystem, word: &[usize]) -> Result<Vec<Root>> {
    let mut prefix = GroupElement::identity(rs.rank());
    let mut out: Vec<Root> = Vec::with_capacity(word.len());
    for &i in word {
        let alpha = prefix.act(&rs.simple_root(i));
        if !alpha.is_positive() || out.contains(&alpha) {
            return Err(Error::NotReducedWordOf(word.to_vec()));
        }
        out.push(alpha);
        prefix = multiply(&prefix, &simple_reflection(rs, i));
    }
    Ok(out)
}

/// Suffix-twisted roots of a reduced word: `α_i = s_{β_ℓ}⋯s_{β_{i+1}}(β_i)`.
pub fn suffix_twist(rs: &RootSystem, word: &[usize]) -> Result<Vec<Root>> {
    let mut suffix = GroupElement::identity(rs.rank());
    let mut out: Vec<Root> = Vec::with_capacity(word.len());
    for &i in word.iter().rev() {
        let alpha = suffix.act(&rs.simple_root(i));
        if !alpha.is_positive() || out.contains(&alpha) {
            return Err(Error::NotReducedWordOf(word.to_vec()));
        }
        out.push(alpha);
        suffix = multiply(&suffix, &simple_reflection(rs, i));
    }
    out.reverse();
    Ok(out)
}

/// The group order, from the classical product formulas per family.
pub fn weyl_order(ct: &CartanType) -> u128 {
    fn factorial(n: u128) -> u128 {
        (1..=n).product()
    }
    let n = ct.rank as u128;
    match ct.family {
        'A' => factorial(n + 1),
        'B' | 'C' => (1u128 << n) * factorial(n),
        'D' => (1u128 << (n - 1)) * factorial(n),
        'E' => match ct.rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        'F' => 1_152,
        _ => 12, // G2
    }
}

/// Every group element, sorted by length and then lexicographically by
/// canonical reduced word. This is the canonical element order used for
/// coinvariant coordinate vectors.
pub fn enumerate_group(rs: &RootSystem) -> Vec<GroupElement> {
    let mut seen: HashMap<GroupElement, Word> = HashMap::new();
    let id = GroupElement::identity(rs.rank());
    seen.insert(id.clone(), vec![]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in frontier {
            for i in 0..rs.rank() {
                if !is_right_descent(rs, &w, i) {
                    let u = multiply(&w, &simple_reflection(rs, i));
                    if !seen.contains_key(&u) {
                        seen.insert(u.clone(), canonical_reduced_word(rs, &u));
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut items: Vec<(Word, GroupElement)> = seen.into_iter().map(|(w, word)| (word, w)).collect();
    items.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    items.into_iter().map(|(_, w)| w).collect()
}
