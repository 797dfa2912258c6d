//! Divided difference and skew divided difference operators on the
//! coinvariant algebra.
//!
//! Polynomials live in the symmetric algebra on the reflection representation,
//! written in simple-root coordinates with exact rational coefficients.  The
//! coinvariant algebra is the quotient by the ideal generated by positive
//! degree invariants; we never construct that ideal.  Instead, equality of
//! homogeneous classes is decided by a normal form: the vector of constant
//! terms `ε(∂_u f)` over all group elements `u` of length `deg f`.  The rank
//! and kernel tests in this module validate that this vector characterizes
//! the class.
//!
//! Three independent routes compute the skew operator `∂_{w/v}`: the defining
//! signed sum over reduced subwords of a reduced word of `w`, a
//! positive-coefficient sum of products `∂_{α_j}` indexed by suffix twists of
//! a reduced word of `w_o v`, and a recursion along left ascents of `v`.
//! Their agreement, and the generalized Leibniz rule
//! `∂_w(fg) = Σ_{v≤w} (∂_v f)·(v ∂_{w/v} g)`, are the verification targets.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::chaincomb::index_combinations;
use crate::rootsys::{Root, RootSystem};
use crate::weylgroup::{
    bruhat_leq, canonical_reduced_word, enumerate_group, from_word, left_ascents, length,
    longest_element, multiply, reflection, simple_reflection, suffix_twist, GroupElement,
};
use crate::{Error, Result};

/// A polynomial in the simple-root coordinates: exponent vector (length =
/// rank) → exact rational coefficient, zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    pub terms: BTreeMap<Vec<u16>, BigRational>,
}

fn ratio(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial(expts: Vec<u16>, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(expts, coeff);
        }
        Self { terms }
    }

    pub fn constant(rank: usize, coeff: BigRational) -> Self {
        Self::monomial(vec![0; rank], coeff)
    }

    /// The linear form of a root in simple-root coordinates.
    pub fn linear(root: &Root) -> Self {
        let n = root.coeffs.len();
        let mut out = Self::zero();
        for (i, &c) in root.coeffs.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0u16; n];
                e[i] = 1;
                out.add_term(e, ratio(c));
            }
        }
        out
    }

    pub fn add_term(&mut self, expts: Vec<u16>, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(expts).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn negated(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u16) -> Self {
        let rank = self.terms.keys().next().map_or(0, |e| e.len());
        let mut out = Self::constant(rank, BigRational::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Total degree when homogeneous (`0` for the zero polynomial).
    pub fn homogeneous_degree(&self) -> Result<usize> {
        let mut degs = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        let Some(d) = degs.next() else {
            return Ok(0);
        };
        if degs.all(|x| x == d) {
            Ok(d)
        } else {
            Err(Error::Usage("inhomogeneous polynomial".into()))
        }
    }

    /// Constant term.
    pub fn epsilon(&self) -> BigRational {
        let rank = self.terms.keys().next().map_or(0, |e| e.len());
        self.terms
            .get(&vec![0u16; rank])
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }
}

impl fmt::Display for Polynomial {
    /// Sum of terms `c * b1^e1 ... bn^en`, factors with zero exponent omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let factors: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| {
                        if x == 1 {
                            format!("b{}", i + 1)
                        } else {
                            format!("b{}^{}", i + 1, x)
                        }
                    })
                    .collect();
                if factors.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c} * {}", factors.join(" "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// All exponent vectors of the given total degree.
pub fn monomials_of_degree(rank: usize, degree: usize) -> Vec<Vec<u16>> {
    fn rec(rank: usize, degree: usize, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if prefix.len() + 1 == rank {
            prefix.push(degree as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for d in 0..=degree {
            prefix.push(d as u16);
            rec(rank, degree - d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if rank > 0 {
        rec(rank, degree, &mut Vec::new(), &mut out);
    }
    out
}

/// A homogeneous polynomial with small random integer coefficients (some may
/// vanish; the result can be zero).
pub fn random_homogeneous<R: Rng>(rs: &RootSystem, degree: usize, rng: &mut R) -> Polynomial {
    let mut out = Polynomial::zero();
    for e in monomials_of_degree(rs.rank(), degree) {
        let c: i64 = rng.gen_range(-2..=2);
        out.add_term(e, ratio(c));
    }
    out
}

/// The natural action on polynomials: substitute `w(β_i)` for the `i`-th
/// variable.
pub fn act(rs: &RootSystem, w: &GroupElement, f: &Polynomial) -> Polynomial {
    let images: Vec<Polynomial> = (0..rs.rank())
        .map(|i| Polynomial::linear(&w.act(&rs.simple_root(i))))
        .collect();
    let mut out = Polynomial::zero();
    for (e, c) in &f.terms {
        let mut term = Polynomial::constant(rs.rank(), c.clone());
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                term = term.mul(&images[i].pow(k));
            }
        }
        out = out.add(&term);
    }
    out
}

/// Exact quotient of a polynomial by a nonzero linear form; panics when the
/// division leaves a remainder (impossible for the differences fed to it).
fn divide_by_linear(num: &Polynomial, alpha: &Root) -> Polynomial {
    let pivot = alpha
        .coeffs
        .iter()
        .position(|&c| c != 0)
        .expect("division by the zero form");
    let lead = ratio(alpha.coeffs[pivot]);
    let alpha_poly = Polynomial::linear(alpha);
    let mut rem = num.clone();
    let mut quot = Polynomial::zero();
    while let Some((m, c)) = rem
        .terms
        .iter()
        .next_back()
        .map(|(k, v)| (k.clone(), v.clone()))
    {
        assert!(
            m[pivot] > 0,
            "nonzero remainder in exact division by a linear form"
        );
        let mut e = m.clone();
        e[pivot] -= 1;
        let qterm = Polynomial::monomial(e, c / &lead);
        rem = rem.sub(&qterm.mul(&alpha_poly));
        quot = quot.add(&qterm);
    }
    quot
}

/// The divided difference `∂_α = (1 − s_α)/α` for any root `α` (so
/// `∂_{−α} = −∂_α`).
pub fn div_diff(rs: &RootSystem, alpha: &Root, f: &Polynomial) -> Polynomial {
    let s = reflection(rs, alpha);
    divide_by_linear(&f.sub(&act(rs, &s, f)), alpha)
}

/// `∂_w` along the canonical reduced word of `w` (independent of the word by
/// the nilCoxeter relations; the unit tests pin a braid instance).
pub fn div_diff_w(rs: &RootSystem, w: &GroupElement, f: &Polynomial) -> Polynomial {
    div_diff_word(rs, &canonical_reduced_word(rs, w), f)
}

/// `∂_{β_{i_1}}⋯∂_{β_{i_k}}` applied to `f` (rightmost factor first).
pub fn div_diff_word(rs: &RootSystem, word: &[usize], f: &Polynomial) -> Polynomial {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        if g.is_zero() {
            break;
        }
        g = div_diff(rs, &rs.simple_root(i), &g);
    }
    g
}

/// Homogeneous class in the coinvariant algebra: the vector of constant terms
/// `ε(∂_u f)` over the elements `u` of length `degree`, in canonical element
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoinvariantClass {
    pub degree: usize,
    pub coeffs: Vec<BigRational>,
}

impl CoinvariantClass {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Shared context: the group elements sorted by length then canonical word,
/// plus a cache of the reduced-subword masks that enter the skew operators.
pub struct Coinvariant<'a> {
    pub rs: &'a RootSystem,
    elements: Vec<GroupElement>,
    by_length: Vec<Vec<usize>>,
    masks: Mutex<HashMap<(GroupElement, GroupElement), Arc<Vec<u64>>>>,
}

impl<'a> Coinvariant<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let mut elements = enumerate_group(rs);
        elements.sort_by_key(|g| (length(rs, g), canonical_reduced_word(rs, g)));
        let top = rs.num_positive_roots();
        let mut by_length = vec![Vec::new(); top + 1];
        for (i, g) in elements.iter().enumerate() {
            by_length[length(rs, g)].push(i);
        }
        Coinvariant {
            rs,
            elements,
            by_length,
            masks: Mutex::new(HashMap::new()),
        }
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn elements_of_length(&self, d: usize) -> impl Iterator<Item = &GroupElement> {
        self.by_length
            .get(d)
            .into_iter()
            .flatten()
            .map(move |&i| &self.elements[i])
    }

    /// Number of elements of each length (the Poincaré coefficients).
    pub fn length_counts(&self) -> Vec<usize> {
        self.by_length.iter().map(Vec::len).collect()
    }

    /// Normal form of a homogeneous polynomial; errs on inhomogeneous input.
    pub fn normal_form(&self, f: &Polynomial) -> Result<CoinvariantClass> {
        let degree = f.homogeneous_degree()?;
        let coeffs = self
            .elements_of_length(degree)
            .map(|u| div_diff_w(self.rs, u, f).epsilon())
            .collect();
        Ok(CoinvariantClass { degree, coeffs })
    }

    /// Bit masks (over positions of the canonical reduced word of `w`) whose
    /// selected letters multiply, in increasing position order, to a reduced
    /// word of `v`.
    fn valid_masks(&self, w: &GroupElement, v: &GroupElement) -> Arc<Vec<u64>> {
        let key = (w.clone(), v.clone());
        if let Some(m) = self.masks.lock().unwrap().get(&key) {
            return Arc::clone(m);
        }
        let word = canonical_reduced_word(self.rs, w);
        let lv = length(self.rs, v);
        let mut out = Vec::new();
        if lv <= word.len() {
            for combo in index_combinations(word.len(), lv) {
                let sub: Vec<usize> = combo.iter().map(|&j| word[j]).collect();
                if from_word(self.rs, &sub) == *v {
                    out.push(combo.iter().fold(0u64, |m, &j| m | (1 << j)));
                }
            }
        }
        let arc = Arc::new(out);
        self.masks.lock().unwrap().insert(key, Arc::clone(&arc));
        arc
    }

    /// `Σ_J ∂_J^𝛃(f)` over the valid masks for `(word, v)`: position `j` acts
    /// as the reflection `s_{β_j}` when `j ∈ J` and as `∂_{β_j}` otherwise,
    /// rightmost position first.  This is `v · ∂_{w/v}(f)` at the polynomial
    /// level.
    fn skew_sum_word(&self, word: &[usize], masks: &[u64], f: &Polynomial) -> Polynomial {
        let mut total = Polynomial::zero();
        for &mask in masks {
            let mut g = f.clone();
            for j in (0..word.len()).rev() {
                if g.is_zero() {
                    break;
                }
                let beta = self.rs.simple_root(word[j]);
                if mask & (1 << j) != 0 {
                    g = act(self.rs, &reflection(self.rs, &beta), &g);
                } else {
                    g = div_diff(self.rs, &beta, &g);
                }
            }
            total = total.add(&g);
        }
        total
    }

    fn masks_for_word(&self, word: &[usize], v: &GroupElement) -> Vec<u64> {
        let lv = length(self.rs, v);
        let mut out = Vec::new();
        if lv <= word.len() {
            for combo in index_combinations(word.len(), lv) {
                let sub: Vec<usize> = combo.iter().map(|&j| word[j]).collect();
                if from_word(self.rs, &sub) == *v {
                    out.push(combo.iter().fold(0u64, |m, &j| m | (1 << j)));
                }
            }
        }
        out
    }

    /// The defining route for `∂_{w/v}(f)`: `v⁻¹ Σ_J ∂_J^𝛃(f)` along the
    /// canonical reduced word of `w`; the zero class when `v ≰ w`.
    pub fn skew_div_diff(
        &self,
        w: &GroupElement,
        v: &GroupElement,
        f: &Polynomial,
    ) -> Result<CoinvariantClass> {
        if !bruhat_leq(self.rs, v, w) {
            return self.normal_form(&Polynomial::zero());
        }
        let word = canonical_reduced_word(self.rs, w);
        let masks = self.valid_masks(w, v);
        let sum = self.skew_sum_word(&word, &masks, f);
        self.normal_form(&act(self.rs, &v.inverse(), &sum))
    }

    /// Same operator along an explicit reduced word of `w` (no cache); used
    /// to verify independence of the chosen word.
    pub fn skew_div_diff_with_word(
        &self,
        w_word: &[usize],
        v: &GroupElement,
        f: &Polynomial,
    ) -> Result<CoinvariantClass> {
        let w = from_word(self.rs, w_word);
        if length(self.rs, &w) != w_word.len() {
            return Err(Error::NotReducedWordOf(w_word.to_vec()));
        }
        if !bruhat_leq(self.rs, v, &w) {
            return self.normal_form(&Polynomial::zero());
        }
        let masks = self.masks_for_word(w_word, v);
        let sum = self.skew_sum_word(w_word, &masks, f);
        self.normal_form(&act(self.rs, &v.inverse(), &sum))
    }

    /// The positive route: `Σ_J Π_{j∈J} ∂_{α_j}(f)` with `α` the suffix
    /// twists of the canonical reduced word of `w_o v`, summed over `J` whose
    /// complement multiplies to `w_o w`.  Errs when `v ≰ w`.
    pub fn skew_positive_operator(
        &self,
        w: &GroupElement,
        v: &GroupElement,
        f: &Polynomial,
    ) -> Result<CoinvariantClass> {
        if !bruhat_leq(self.rs, v, w) {
            return Err(Error::NotBruhatComparable);
        }
        let w_o = longest_element(self.rs);
        let word = canonical_reduced_word(self.rs, &multiply(&w_o, v));
        let twists = suffix_twist(self.rs, &word)?;
        let target = multiply(&w_o, w);
        let lt = length(self.rs, &target);
        let m = word.len() - lt;
        let mut total = Polynomial::zero();
        for combo in index_combinations(word.len(), m) {
            let mut in_j = vec![false; word.len()];
            for &j in &combo {
                in_j[j] = true;
            }
            let comp: Vec<usize> = (0..word.len()).filter(|&j| !in_j[j]).map(|j| word[j]).collect();
            if from_word(self.rs, &comp) != target {
                continue;
            }
            let mut g = f.clone();
            for &j in combo.iter().rev() {
                if g.is_zero() {
                    break;
                }
                g = div_diff(self.rs, &twists[j], &g);
            }
            total = total.add(&g);
        }
        self.normal_form(&total)
    }

    /// The recursive route at the polynomial level: peel left ascents of `v`,
    /// `∂_{w/v} = ∂_α ∂_{w/s_βv} (+ ∂_{s_βw/s_βv}` when `s_βw > w)` with
    /// `α = v⁻¹(β)`; zero when `v ≰ w`.
    pub fn skew_recursive_apply(
        &self,
        w: &GroupElement,
        v: &GroupElement,
        f: &Polynomial,
    ) -> Polynomial {
        if !bruhat_leq(self.rs, v, w) {
            return Polynomial::zero();
        }
        if v == w {
            return f.clone();
        }
        let beta = *left_ascents(self.rs, v)
            .first()
            .expect("only the longest element has no ascent, and then v = w");
        let vp = multiply(&simple_reflection(self.rs, beta), v);
        let wp = multiply(&simple_reflection(self.rs, beta), w);
        let alpha = v.act_inv(&self.rs.simple_root(beta));
        let mut out = div_diff(self.rs, &alpha, &self.skew_recursive_apply(w, &vp, f));
        if length(self.rs, &wp) > length(self.rs, w) {
            out = out.add(&self.skew_recursive_apply(&wp, &vp, f));
        }
        out
    }

    /// The generalized Leibniz rule
    /// `∂_w(fg) = Σ_{v≤w} (∂_v f) · (v ∂_{w/v} g)`, decided in the coinvariant
    /// algebra.
    pub fn leibniz_check(
        &self,
        w: &GroupElement,
        f: &Polynomial,
        g: &Polynomial,
    ) -> Result<bool> {
        let lhs = div_diff_w(self.rs, w, &f.mul(g));
        let word = canonical_reduced_word(self.rs, w);
        let mut rhs = Polynomial::zero();
        for v in &self.elements {
            if !bruhat_leq(self.rs, v, w) {
                continue;
            }
            let masks = self.valid_masks(w, v);
            let skew = self.skew_sum_word(&word, &masks, g);
            if skew.is_zero() {
                continue;
            }
            rhs = rhs.add(&div_diff_w(self.rs, v, f).mul(&skew));
        }
        Ok(self.normal_form(&lhs)? == self.normal_form(&rhs)?)
    }
}
