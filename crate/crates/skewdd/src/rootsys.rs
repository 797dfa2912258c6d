//! Crystallographic root systems of types A–G with exact integer arithmetic.
//!
//! Roots are stored as integer coefficient vectors over the simple roots,
//! with Bourbaki labeling of the Dynkin diagrams (for the E family the chain
//! is 1–3–4–5–6(–7–8) and node 2 hangs off node 4). Short roots are
//! normalized to squared length 2; the symmetric bilinear form is an integer
//! matrix and the geometric Coxeter form is never materialized — bond orders
//! m(β, β′) are recovered from products of Cartan integers.

use crate::{Error, Result};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

/// A Cartan–Killing family letter together with a rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: char,
    pub rank: usize,
}

impl CartanType {
    /// Parses strings such as `"A3"`, `"b2"` or `"E8"` (case-insensitive).
    ///
    /// Rank bounds are enforced so that every accepted type names a distinct
    /// irreducible system: A≥1, B≥2, C≥3, D≥4, E∈{6,7,8}, F=4, G=2.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::InvalidCartanType(s.to_string()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidCartanType(s.to_string()))?;
        let ok = match family {
            'A' => rank >= 1,
            'B' => rank >= 2,
            'C' => rank >= 3,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => return Err(Error::InvalidCartanType(s.to_string())),
        };
        if !ok {
            return Err(Error::RankOutOfRange { family, rank });
        }
        Ok(CartanType { family, rank })
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, 'A' | 'D' | 'E')
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root, written in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c != 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0) && self.coeffs.iter().any(|&c| c != 0)
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coeffs.iter().map(|&c| -c).collect())
    }

    /// Coefficientwise partial order on roots: `self ≤ other` iff
    /// `other − self` has only nonnegative coefficients.
    pub fn leq(&self, other: &Root) -> bool {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(&a, &b)| a <= b)
    }

    /// Indices of the simple roots appearing with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// A finite crystallographic root system.
///
/// `positive_roots` is sorted by height, then lexicographically by
/// coefficient vector; this enumeration order is the canonical index order
/// used everywhere downstream (braided letters, witness searches, reports).
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// `cartan_matrix[i][j] = ⟨β_i, β_j⟩ = 2(β_i, β_j)/(β_j, β_j)`.
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Integer symmetric form `(β_i, β_j)` with short roots of squared length 2.
    pub symmetric_form: Vec<Vec<i64>>,
    pub positive_roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
}

/// Builds the root system for a type string such as `"A3"` or `"e7"` and
/// validates the positive-root count against the closed-form value.
pub fn build_root_system(type_str: &str) -> Result<RootSystem> {
    let ct = CartanType::parse(type_str)?;
    let n = ct.rank;
    let form = symmetric_form_matrix(ct);
    let mut cartan = vec![vec![0i64; n]; n];
    for (i, row) in cartan.iter_mut().enumerate() {
        for (j, a) in row.iter_mut().enumerate() {
            let num = 2 * form[i][j];
            let den = form[j][j];
            debug_assert_eq!(num % den, 0);
            *a = num / den;
        }
    }

    // Closure of the simple roots under simple reflections, restricted to
    // positive roots, reaches every positive root.
    let mut roots: Vec<Root> = (0..n)
        .map(|i| {
            let mut c = vec![0i64; n];
            c[i] = 1;
            Root::new(c)
        })
        .collect();
    let mut seen: HashMap<Vec<i64>, ()> = roots.iter().map(|r| (r.coeffs.clone(), ())).collect();
    let mut frontier = roots.clone();
    while let Some(gamma) = frontier.pop() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|k| 2 * gamma.coeffs[k] * form[k][i]).sum::<i64>() / form[i][i];
            let mut c = gamma.coeffs.clone();
            c[i] -= pairing;
            let refl = Root::new(c);
            if refl.is_positive() && !seen.contains_key(&refl.coeffs) {
                seen.insert(refl.coeffs.clone(), ());
                roots.push(refl.clone());
                frontier.push(refl);
            }
        }
    }
    roots.sort_by(|a, b| (a.height(), &a.coeffs).cmp(&(b.height(), &b.coeffs)));
    debug_assert_eq!(roots.len(), expected_positive_count(ct));

    let index = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.coeffs.clone(), i))
        .collect();
    Ok(RootSystem {
        cartan_type: ct,
        cartan_matrix: cartan,
        symmetric_form: form,
        positive_roots: roots,
        index,
    })
}

fn expected_positive_count(ct: CartanType) -> usize {
    let n = ct.rank;
    match ct.family {
        'A' => n * (n + 1) / 2,
        'B' | 'C' => n * n,
        'D' => n * (n - 1),
        'E' => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        'F' => 24,
        _ => 6,
    }
}

/// Integer symmetric form on the simple roots (short roots of length² 2).
fn symmetric_form_matrix(ct: CartanType) -> Vec<Vec<i64>> {
    let n = ct.rank;
    let mut m = vec![vec![0i64; n]; n];
    let set = |m: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        m[i][j] = v;
        m[j][i] = v;
    };
    match ct.family {
        'A' => {
            for i in 0..n {
                m[i][i] = 2;
            }
            for i in 0..n - 1 {
                set(&mut m, i, i + 1, -1);
            }
        }
        'B' => {
            for i in 0..n {
                m[i][i] = if i < n - 1 { 4 } else { 2 };
            }
            for i in 0..n - 1 {
                set(&mut m, i, i + 1, -2);
            }
        }
        'C' => {
            for i in 0..n {
                m[i][i] = if i < n - 1 { 2 } else { 4 };
            }
            for i in 0..n - 2 {
                set(&mut m, i, i + 1, -1);
            }
            set(&mut m, n - 2, n - 1, -2);
        }
        'D' => {
            for i in 0..n {
                m[i][i] = 2;
            }
            for i in 0..n - 3 {
                set(&mut m, i, i + 1, -1);
            }
            set(&mut m, n - 3, n - 2, -1);
            set(&mut m, n - 3, n - 1, -1);
        }
        'E' => {
            for i in 0..n {
                m[i][i] = 2;
            }
            // Chain 1–3–4–5–6(–7–8) with node 2 attached to node 4.
            set(&mut m, 0, 2, -1);
            for i in 2..n - 1 {
                set(&mut m, i, i + 1, -1);
            }
            set(&mut m, 1, 3, -1);
        }
        'F' => {
            m[0][0] = 4;
            m[1][1] = 4;
            m[2][2] = 2;
            m[3][3] = 2;
            set(&mut m, 0, 1, -2);
            set(&mut m, 1, 2, -2);
            set(&mut m, 2, 3, -1);
        }
        _ => {
            m[0][0] = 2;
            m[1][1] = 6;
            set(&mut m, 0, 1, -3);
        }
    }
    m
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut c = vec![0i64; self.rank()];
        c[i] = 1;
        Root::new(c)
    }

    /// Index of the i-th simple root inside `positive_roots`.
    pub fn simple_index(&self, i: usize) -> usize {
        self.index[&self.simple_root(i).coeffs]
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.coeffs).copied()
    }

    pub fn root_at(&self, idx: usize) -> &Root {
        &self.positive_roots[idx]
    }

    /// The symmetric form `(γ, δ)`.
    pub fn form(&self, gamma: &Root, delta: &Root) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if gamma.coeffs[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += gamma.coeffs[i] * self.symmetric_form[i][j] * delta.coeffs[j];
            }
        }
        s
    }

    /// The Cartan integer `⟨γ, α⟩ = 2(γ, α)/(α, α)`.
    pub fn pairing(&self, gamma: &Root, alpha: &Root) -> i64 {
        let num = 2 * self.form(gamma, alpha);
        let den = self.form(alpha, alpha);
        debug_assert_eq!(num % den, 0, "non-integral Cartan pairing");
        num / den
    }

    /// Reflection of `γ` in the hyperplane orthogonal to `α`:
    /// `s_α(γ) = γ − ⟨γ, α⟩ α`.
    pub fn reflect(&self, alpha: &Root, gamma: &Root) -> Root {
        let p = self.pairing(gamma, alpha);
        let coeffs = gamma
            .coeffs
            .iter()
            .zip(&alpha.coeffs)
            .map(|(&g, &a)| g - p * a)
            .collect();
        Root::new(coeffs)
    }

    /// Reflects the positive root with index `gamma_idx` by the reflection of
    /// the positive root with index `alpha_idx`, returning the index of the
    /// positive representative together with the sign of the result.
    pub fn reflect_signed(&self, alpha_idx: usize, gamma_idx: usize) -> (usize, i64) {
        let r = self.reflect(&self.positive_roots[alpha_idx], &self.positive_roots[gamma_idx]);
        if r.is_positive() {
            (self.index[&r.coeffs], 1)
        } else {
            (self.index[&r.negated().coeffs], -1)
        }
    }

    /// Bond order `m(β_i, β_j)` of the Coxeter presentation, recovered from
    /// the product of Cartan integers via 0↦2, 1↦3, 2↦4, 3↦6.
    pub fn coxeter_m(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.cartan_matrix[i][j] * self.cartan_matrix[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            c => unreachable!("invalid Cartan product {c}"),
        }
    }

    /// Coefficient `n_β(α)` of the simple root `β_i` in `α`.
    pub fn coefficient(&self, alpha: &Root, i: usize) -> i64 {
        alpha.coeffs[i]
    }

    /// The neighbor sets `(N⁺, N⁻, N)` of a positive root `α` at a simple
    /// root `β_i` of its support: simple roots `β′` of the support with
    /// `(β_i, β′) < 0`, split by the sign of `(α, β′)` (positive versus
    /// nonpositive). Errs when `β_i` is not in the support of `α`.
    pub fn neighbor_sets(&self, alpha: &Root, i: usize) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
        if i >= self.rank() {
            return Err(Error::SimpleOutOfRange(i, self.rank()));
        }
        if alpha.coeffs[i] == 0 {
            return Err(Error::NotInSupport(i));
        }
        let beta = self.simple_root(i);
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        let mut all = Vec::new();
        for j in alpha.support() {
            let bj = self.simple_root(j);
            if self.form(&beta, &bj) < 0 {
                all.push(j);
                if self.form(alpha, &bj) > 0 {
                    plus.push(j);
                } else {
                    minus.push(j);
                }
            }
        }
        Ok((plus, minus, all))
    }

    /// All pairs `(α, β_i)` with `β_i` in the support of `α`, `(α, β_i) < 0`
    /// and `n_{β_i}(α) > 1`, in enumeration order. Only meaningful (and only
    /// allowed) for simply laced systems.
    pub fn classify_negative_pairs(&self) -> Result<Vec<(Root, usize)>> {
        if !self.cartan_type.is_simply_laced() {
            return Err(Error::NotSimplyLaced(self.cartan_type.to_string()));
        }
        let mut out = Vec::new();
        for alpha in &self.positive_roots {
            for i in alpha.support() {
                if alpha.coeffs[i] > 1 && self.form(alpha, &self.simple_root(i)) < 0 {
                    out.push((alpha.clone(), i));
                }
            }
        }
        Ok(out)
    }

    /// Searches for a positive root `α′` with `n_{β_i}(α)·α′ ≤ α`
    /// (coefficientwise), `(α′, β_i) > 0` and `(α, α′) = 0`; returns the
    /// first match in enumeration order.
    pub fn find_orthogonal_witness(&self, alpha: &Root, i: usize) -> Option<Root> {
        let n_beta = alpha.coeffs[i];
        let beta = self.simple_root(i);
        self.positive_roots
            .iter()
            .find(|cand| {
                let scaled = Root::new(cand.coeffs.iter().map(|&c| n_beta * c).collect());
                scaled.leq(alpha) && self.form(cand, &beta) > 0 && self.form(alpha, cand) == 0
            })
            .cloned()
    }

    /// The highest root (the unique root of maximal height).
    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        build_root_system(t).unwrap()
    }

    #[test]
    fn parses_types_case_insensitively_and_validates_ranks() {
        assert_eq!(CartanType::parse("a3").unwrap().to_string(), "A3");
        assert_eq!(CartanType::parse("E8").unwrap().to_string(), "E8");
        assert_eq!(CartanType::parse(" g2 ").unwrap().to_string(), "G2");
        for bad in ["A0", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "H3", "", "A", "3A"] {
            assert!(CartanType::parse(bad).is_err(), "{bad} should be rejected");
        }
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        let expect = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A4", 10),
            ("A5", 15),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ];
        for (t, n) in expect {
            assert_eq!(rs(t).num_positive_roots(), n, "type {t}");
        }
    }

    #[test]
    fn highest_roots_match_the_standard_tables() {
        let expect: [(&str, &[i64]); 8] = [
            ("A4", &[1, 1, 1, 1]),
            ("B3", &[1, 2, 2]),
            ("C3", &[2, 2, 1]),
            ("D4", &[1, 2, 1, 1]),
            ("E6", &[1, 2, 2, 3, 2, 1]),
            ("E7", &[2, 2, 3, 4, 3, 2, 1]),
            ("E8", &[2, 3, 4, 6, 5, 4, 3, 2]),
            ("F4", &[2, 3, 4, 2]),
        ];
        for (t, coeffs) in expect {
            assert_eq!(rs(t).highest_root().coeffs, coeffs, "type {t}");
        }
        assert_eq!(rs("G2").highest_root().coeffs, vec![3, 2]);
    }

    #[test]
    fn small_rank_positive_roots_are_exact() {
        let b2: Vec<Vec<i64>> = rs("B2").positive_roots.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(b2, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        let g2: Vec<Vec<i64>> = rs("G2").positive_roots.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(
            g2,
            vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]]
        );
    }

    #[test]
    fn cartan_pairings_and_bond_orders() {
        let a2 = rs("A2");
        assert_eq!(a2.cartan_matrix[0][1], -1);
        assert_eq!(a2.coxeter_m(0, 1), 3);

        let b2 = rs("B2");
        assert_eq!(b2.cartan_matrix[0][1], -2);
        assert_eq!(b2.cartan_matrix[1][0], -1);
        assert_eq!(b2.coxeter_m(0, 1), 4);

        let g2 = rs("G2");
        assert_eq!(g2.cartan_matrix[0][1], -1);
        assert_eq!(g2.cartan_matrix[1][0], -3);
        assert_eq!(g2.coxeter_m(0, 1), 6);

        let f4 = rs("F4");
        assert_eq!(f4.coxeter_m(0, 1), 3);
        assert_eq!(f4.coxeter_m(1, 2), 4);
        assert_eq!(f4.coxeter_m(2, 3), 3);
        assert_eq!(f4.coxeter_m(0, 2), 2);
    }

    #[test]
    fn reflections_are_involutive_and_permute_the_roots() {
        for t in ["A3", "B3", "G2", "F4"] {
            let r = rs(t);
            for alpha in &r.positive_roots {
                for gamma in &r.positive_roots {
                    let image = r.reflect(alpha, gamma);
                    assert!(
                        image.is_positive() || image.is_negative(),
                        "reflection left the root set in {t}"
                    );
                    assert_eq!(&r.reflect(alpha, &image), gamma);
                }
            }
        }
    }

    #[test]
    fn neighbor_sets_of_the_e6_double_coefficient_root() {
        let e6 = rs("E6");
        let alpha = Root::new(vec![1, 1, 2, 2, 2, 1]);
        assert!(e6.root_index(&alpha).is_some());
        let (plus, minus, all) = e6.neighbor_sets(&alpha, 3).unwrap();
        assert_eq!(plus, vec![2, 4]);
        assert_eq!(minus, vec![1]);
        assert_eq!(all, vec![1, 2, 4]);
        assert!(matches!(e6.neighbor_sets(&Root::new(vec![0, 0, 0, 0, 0, 1]), 0), Err(Error::NotInSupport(0))));
    }

    #[test]
    fn classification_is_empty_in_types_a_and_d_and_rejected_otherwise() {
        assert!(rs("A5").classify_negative_pairs().unwrap().is_empty());
        assert!(rs("A3").classify_negative_pairs().unwrap().is_empty());
        assert!(rs("D4").classify_negative_pairs().unwrap().is_empty());
        assert!(matches!(rs("B3").classify_negative_pairs(), Err(Error::NotSimplyLaced(_))));
    }

    #[test]
    fn e6_classification_has_the_single_known_pair() {
        let e6 = rs("E6");
        let pairs = e6.classify_negative_pairs().unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].0.coeffs, vec![1, 1, 2, 2, 2, 1]);
        assert_eq!(pairs[0].1, 3);
    }

    #[test]
    fn e7_classification_lists_exactly_seven_pairs() {
        let e7 = rs("E7");
        let pairs = e7.classify_negative_pairs().unwrap();
        let got: Vec<(Vec<i64>, usize)> = pairs.iter().map(|(a, b)| (a.coeffs.clone(), *b)).collect();
        let mut expected = vec![
            (vec![1, 1, 2, 2, 2, 1, 0], 3),
            (vec![1, 1, 2, 2, 2, 1, 1], 3),
            (vec![1, 1, 2, 2, 2, 2, 1], 3),
            (vec![1, 1, 2, 3, 2, 2, 1], 4),
            (vec![1, 2, 2, 3, 2, 2, 1], 4),
            (vec![1, 2, 2, 3, 3, 2, 1], 3),
            (vec![1, 2, 2, 4, 3, 2, 1], 2),
        ];
        let mut got_sorted = got.clone();
        got_sorted.sort();
        expected.sort();
        assert_eq!(got_sorted, expected);
        // β is uniquely determined by α here.
        let mut alphas: Vec<_> = got.iter().map(|(a, _)| a.clone()).collect();
        alphas.dedup();
        assert_eq!(alphas.len(), 7);
    }

    #[test]
    fn e8_has_four_roots_with_two_betas_and_one_witness_free_pair() {
        let e8 = rs("E8");
        let pairs = e8.classify_negative_pairs().unwrap();
        let mut by_alpha: HashMap<Vec<i64>, usize> = HashMap::new();
        for (a, _) in &pairs {
            *by_alpha.entry(a.coeffs.clone()).or_insert(0) += 1;
        }
        assert_eq!(by_alpha.values().filter(|&&c| c == 2).count(), 4);
        assert!(by_alpha.values().all(|&c| c <= 2));

        let missing: Vec<_> = pairs
            .iter()
            .filter(|(a, i)| e8.find_orthogonal_witness(a, *i).is_none())
            .collect();
        assert_eq!(missing.len(), 1);
        assert_eq!(missing[0].0.coeffs, vec![2, 3, 4, 5, 4, 3, 2, 1]);
        assert_eq!(missing[0].1, 3);
        let (plus, _, _) = e8.neighbor_sets(&missing[0].0, missing[0].1).unwrap();
        let sum: i64 = plus.iter().map(|&j| missing[0].0.coeffs[j]).sum();
        assert_eq!(missing[0].0.coeffs[3], 5);
        assert_eq!(sum, 7);
    }

    #[test]
    fn witnesses_exist_and_obey_their_defining_conditions() {
        for t in ["E6", "E7"] {
            let r = rs(t);
            for (alpha, i) in r.classify_negative_pairs().unwrap() {
                let w = r
                    .find_orthogonal_witness(&alpha, i)
                    .unwrap_or_else(|| panic!("no witness for {:?} in {t}", alpha.coeffs));
                let scaled = Root::new(w.coeffs.iter().map(|&c| alpha.coeffs[i] * c).collect());
                assert!(scaled.leq(&alpha));
                assert!(r.form(&w, &r.simple_root(i)) > 0);
                assert_eq!(r.form(&alpha, &w), 0);
            }
        }
    }

    #[test]
    fn coefficient_one_negative_pairs_always_have_witnesses() {
        for t in ["A3", "D4", "E6"] {
            let r = rs(t);
            for alpha in &r.positive_roots {
                for i in alpha.support() {
                    if alpha.coeffs[i] == 1 && r.form(alpha, &r.simple_root(i)) < 0 {
                        assert!(
                            r.find_orthogonal_witness(alpha, i).is_some(),
                            "coefficient-1 pair without witness in {t}: {:?}",
                            alpha.coeffs
                        );
                    }
                }
            }
        }
    }
}
