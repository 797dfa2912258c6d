//! The braided vector space on positive roots and its calculus.
//!
//! A basis letter `x_α` is indexed by a positive root; words of letters span
//! the tensor algebra, and a [`BraidedVector`] is an integer linear
//! combination of words. Letters at negative roots are normalized away via
//! `x_{−α} = −x_α`, so every operation tracks signs through reflections.
//!
//! The braiding is `Ψ(x_α ⊗ x_γ) = x_{s_α(γ)} ⊗ x_α`. Zero-testing in the
//! Nichols quotient uses the braided symmetrizer, evaluated through the
//! factorization `[m]! = [m]'_Ψ ∘ ([m−1]! ⊗ 1)` with
//! `[m]'_Ψ = 1 + Ψ_{m−1} + Ψ_{m−2}Ψ_{m−1} + … + Ψ_1⋯Ψ_{m−1}`,
//! validated against the full symmetric-group sum in tests.
//!
//! The duality pairing evaluates the i-th letter from the right of the first
//! argument against the i-th letter from the left of the symmetrized second
//! argument; the orientation is pinned by a saturated-chain test below.

use crate::rootsys::RootSystem;
use crate::weylgroup::{self, GroupElement};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A word of positive-root indices (into `rs.positive_roots`).
pub type RootWord = Vec<u8>;

/// An integer linear combination of root words; only nonzero coefficients
/// are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BraidedVector {
    pub terms: BTreeMap<RootWord, BigInt>,
}

impl BraidedVector {
    pub fn zero() -> Self {
        BraidedVector::default()
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        let mut v = BraidedVector::zero();
        v.add_term(vec![], BigInt::one());
        v
    }

    pub fn basis(word: RootWord) -> Self {
        let mut v = BraidedVector::zero();
        v.add_term(word, BigInt::one());
        v
    }

    pub fn is_structurally_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, word: RootWord, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, c)| c.is_zero())
                .map(|(w, _)| w.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &BraidedVector) -> BraidedVector {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BraidedVector) -> BraidedVector {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn negated(&self) -> BraidedVector {
        BraidedVector {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    /// Concatenation product of the tensor algebra.
    pub fn mul(&self, other: &BraidedVector) -> BraidedVector {
        let mut out = BraidedVector::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    /// Word lengths present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|w| w.len()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// The sub-sum of words of length `m`.
    pub fn component(&self, m: usize) -> BraidedVector {
        BraidedVector {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == m)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of the empty word (the counit on representatives).
    pub fn counit(&self) -> BigInt {
        self.terms.get(&vec![]).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// An integer linear combination of split words, representing an element of
/// the tensor square.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorSplit {
    pub terms: BTreeMap<(RootWord, RootWord), BigInt>,
}

impl TensorSplit {
    fn add_term(&mut self, key: (RootWord, RootWord), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
}

/// The basis letter at a positive-root index.
pub fn x_at(idx: usize) -> BraidedVector {
    BraidedVector::basis(vec![idx as u8])
}

/// The word of letters for a sequence of simple-root indices.
pub fn x_word_simple(rs: &RootSystem, word: &[usize]) -> BraidedVector {
    BraidedVector::basis(word.iter().map(|&i| rs.simple_index(i) as u8).collect())
}

/// The canonical representative `x_w`, along the canonical reduced word.
pub fn x_of_element(rs: &RootSystem, w: &GroupElement) -> BraidedVector {
    x_word_simple(rs, &weylgroup::canonical_reduced_word(rs, w))
}

/// All reflection matrices, indexed like `rs.positive_roots`.
pub fn reflection_table(rs: &RootSystem) -> Vec<GroupElement> {
    rs.positive_roots
        .iter()
        .map(|alpha| weylgroup::reflection(rs, alpha))
        .collect()
}

/// Applies a group element to a letter, returning the positive-root index
/// and the sign picked up by the normalization `x_{−α} = −x_α`.
fn act_on_letter(rs: &RootSystem, g: &GroupElement, letter: u8) -> (u8, i8) {
    let img = g.act(rs.root_at(letter as usize));
    if img.is_positive() {
        (rs.root_index(&img).unwrap() as u8, 1)
    } else {
        (rs.root_index(&img.negated()).unwrap() as u8, -1)
    }
}

/// The braiding `Ψ_i` acting at (1-based) positions `i, i+1`:
/// `Ψ(x_α ⊗ x_γ) = x_{s_α(γ)} ⊗ x_α` with sign normalization.
pub fn braiding(rs: &RootSystem, i: usize, v: &BraidedVector) -> Result<BraidedVector> {
    if i == 0 {
        return Err(Error::BraidingOutOfRange(i, 2));
    }
    let p = i - 1;
    let mut out = BraidedVector::zero();
    for (word, c) in &v.terms {
        if word.len() < i + 1 {
            return Err(Error::BraidingOutOfRange(i, i + 1));
        }
        let (idx, sign) = rs.reflect_signed(word[p] as usize, word[p + 1] as usize);
        let mut w = word.clone();
        w[p] = idx as u8;
        w[p + 1] = word[p];
        out.add_term(w, c * BigInt::from(sign));
    }
    Ok(out)
}

/// Diagonal action of the group: every letter `x_α ↦ x_{g(α)}`, normalized.
pub fn w_act(rs: &RootSystem, g: &GroupElement, v: &BraidedVector) -> BraidedVector {
    let mut out = BraidedVector::zero();
    for (word, c) in &v.terms {
        let mut sign = 1i64;
        let w: RootWord = word
            .iter()
            .map(|&l| {
                let (idx, s) = act_on_letter(rs, g, l);
                sign *= i64::from(s);
                idx
            })
            .collect();
        out.add_term(w, c * BigInt::from(sign));
    }
    out
}

/// Word reversal, extended linearly (an algebra antihomomorphism).
pub fn rho(v: &BraidedVector) -> BraidedVector {
    let mut out = BraidedVector::zero();
    for (word, c) in &v.terms {
        let mut w = word.clone();
        w.reverse();
        out.add_term(w, c.clone());
    }
    out
}

/// The group-like element of a word: the product of its letters' reflections.
pub fn w_degree_of_word(rs: &RootSystem, refl: &[GroupElement], word: &[u8]) -> GroupElement {
    let mut g = GroupElement::identity(rs.rank());
    for &l in word {
        g = weylgroup::multiply(&g, &refl[l as usize]);
    }
    g
}

/// The bar antipode on representatives: a word `(α_1, …, α_m)` maps to
/// `(γ_1, …, γ_m)` with `γ_i = s_{α_1}⋯s_{α_{i−1}}(α_i)`, signs normalized.
pub fn sbar(rs: &RootSystem, v: &BraidedVector) -> BraidedVector {
    let refl = reflection_table(rs);
    let mut out = BraidedVector::zero();
    for (word, c) in &v.terms {
        let mut g = GroupElement::identity(rs.rank());
        let mut sign = 1i64;
        let mut w = RootWord::with_capacity(word.len());
        for &l in word {
            let (idx, s) = act_on_letter(rs, &g, l);
            sign *= i64::from(s);
            w.push(idx);
            g = weylgroup::multiply(&g, &refl[l as usize]);
        }
        out.add_term(w, c * BigInt::from(sign));
    }
    out
}

/// The braided symmetrizer `[m]!` on a vector all of whose words have
/// length `m`, via the coset factorization (see the module docs).
pub fn symmetrizer(rs: &RootSystem, m: usize, v: &BraidedVector) -> Result<BraidedVector> {
    debug_assert!(v.terms.keys().all(|w| w.len() == m), "inhomogeneous symmetrizer input");
    let mut acc = v.clone();
    for k in 2..=m {
        let mut sum = acc.clone();
        let mut r = acc;
        for j in (1..k).rev() {
            r = braiding(rs, j, &r)?;
            sum = sum.add(&r);
        }
        acc = sum;
    }
    Ok(acc)
}

/// Whether `v` is zero in the Nichols quotient: every homogeneous component
/// must lie in the kernel of its symmetrizer.
pub fn is_zero_in_nichols(rs: &RootSystem, v: &BraidedVector) -> bool {
    v.degrees().iter().all(|&m| {
        symmetrizer(rs, m, &v.component(m))
            .map(|s| s.is_structurally_zero())
            .unwrap_or(false)
    })
}

/// Exact integer duality pairing. Degree-mismatched components pair to zero;
/// within degree `m`, `⟨φ, x⟩ = Σ_u φ_u · ([m]! x)_{reverse(u)}`.
pub fn pairing_int(rs: &RootSystem, phi: &BraidedVector, x: &BraidedVector) -> BigInt {
    let mut total = BigInt::zero();
    for m in phi.degrees() {
        let xm = x.component(m);
        if xm.is_structurally_zero() {
            continue;
        }
        let sym = symmetrizer(rs, m, &xm).expect("homogeneous component");
        for (u, c) in &phi.component(m).terms {
            let mut rev = u.clone();
            rev.reverse();
            if let Some(s) = sym.terms.get(&rev) {
                total += c * s;
            }
        }
    }
    total
}

/// The duality pairing as an exact rational (always an integer on integral
/// arguments; kept rational at the interface).
pub fn pairing(rs: &RootSystem, phi: &BraidedVector, x: &BraidedVector) -> BigRational {
    BigRational::from_integer(pairing_int(rs, phi, x))
}

/// The iterated coproduct split into two tensor factors. Letters sent right
/// stay as they are; letters sent left are twisted by the group-like element
/// of the right word accumulated so far.
pub fn coproduct(rs: &RootSystem, v: &BraidedVector) -> TensorSplit {
    let refl = reflection_table(rs);
    let mut out = TensorSplit::default();
    for (word, c) in &v.terms {
        // (left word, right word, group-like of right word, coefficient)
        let mut partial: Vec<(RootWord, RootWord, GroupElement, BigInt)> =
            vec![(vec![], vec![], GroupElement::identity(rs.rank()), c.clone())];
        for &letter in word {
            let mut next = Vec::with_capacity(partial.len() * 2);
            for (l, r, g, coeff) in partial {
                let (idx, sign) = act_on_letter(rs, &g, letter);
                let mut l2 = l.clone();
                l2.push(idx);
                next.push((l2, r.clone(), g.clone(), &coeff * BigInt::from(sign)));
                let mut r2 = r;
                r2.push(letter);
                next.push((l, r2, weylgroup::multiply(&g, &refl[letter as usize]), coeff));
            }
            partial = next;
        }
        for (l, r, _, coeff) in partial {
            out.add_term((l, r), coeff);
        }
    }
    out
}

/// Left derivative `D→_ξ(x) = ⟨ξ, x₍₁₎⟩ x₍₂₎`.
pub fn left_derivative(rs: &RootSystem, xi: &BraidedVector, x: &BraidedVector) -> BraidedVector {
    let xi_degrees = xi.degrees();
    let cop = coproduct(rs, x);
    // Group the splits by left factor so each distinct left word is paired once.
    let mut by_left: BTreeMap<RootWord, BraidedVector> = BTreeMap::new();
    for ((l, r), c) in &cop.terms {
        if xi_degrees.contains(&l.len()) {
            by_left.entry(l.clone()).or_default().add_term(r.clone(), c.clone());
        }
    }
    let mut out = BraidedVector::zero();
    for (l, rvec) in by_left {
        let p = pairing_int(rs, xi, &BraidedVector::basis(l));
        if p.is_zero() {
            continue;
        }
        for (r, c) in rvec.terms {
            out.add_term(r, c * &p);
        }
    }
    out
}

/// Right derivative `(φ) D←_x = φ₍₁₎ ⟨φ₍₂₎, x⟩`.
pub fn right_derivative(rs: &RootSystem, phi: &BraidedVector, x: &BraidedVector) -> BraidedVector {
    let x_degrees = x.degrees();
    let cop = coproduct(rs, phi);
    let mut out = BraidedVector::zero();
    for ((l, r), c) in &cop.terms {
        if !x_degrees.contains(&r.len()) {
            continue;
        }
        let p = pairing_int(rs, &BraidedVector::basis(r.clone()), x);
        if p.is_zero() {
            continue;
        }
        out.add_term(l.clone(), c * p);
    }
    out
}

/// Opposite left derivative `D→°_x(φ) = (φ) D←_{ρ(x)}`.
pub fn opposite_left_derivative(rs: &RootSystem, x: &BraidedVector, phi: &BraidedVector) -> BraidedVector {
    right_derivative(rs, phi, &rho(x))
}

/// Opposite right derivative `D°←_ξ(x) = D→_{ρ(ξ)}(x)`.
pub fn opposite_right_derivative(rs: &RootSystem, xi: &BraidedVector, x: &BraidedVector) -> BraidedVector {
    left_derivative(rs, &rho(xi), x)
}
