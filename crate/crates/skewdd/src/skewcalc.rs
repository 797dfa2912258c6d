//! Skew elements `x_{w/v}` of the Nichols algebra and their calculus.
//!
//! For `v ≤ w` the skew element is the part of `x_w` whose coproduct right
//! factor lands on `x_v`; it is nonzero, homogeneous of word length
//! `ℓ(w) − ℓ(v)` and of group degree `wv⁻¹`. Five independent computation
//! routes are provided and cross-checked in tests:
//!
//! * `coproduct` — split `x_w` and collect left factors over reduced right
//!   subwords evaluating to `v`;
//! * `positive` — subset expansion over the reflection ordering of a
//!   reduced word of `v·w_o`, complements evaluating to `w·w_o`;
//! * `positive_circ` — the reversed variant through `x°_{w/v} = ρ(x_{w⁻¹/v⁻¹})`;
//! * `sbar` — the analogous expansion for `S̄(x_{w/v})` over a reduced word
//!   of `w`, un-done by the involution `S̄`;
//! * `recursive` — peel a right ascent of `v` off both arguments.
//!
//! On top of the routes: the pairing invariant `c = ⟨x_{w/v}, S̄(x_{w'/v'})⟩`
//! with its equivalent count of labeled saturated chains, an equality
//! criterion for skew elements in terms of chain label sets, and the
//! order-two monomial factorization `x°_{w/v} = x_{α°}x_{γ°}` for length-2
//! intervals.

use crate::braided::{self, BraidedVector};
use crate::chaincomb::{self, index_combinations};
use crate::rootsys::{Root, RootSystem};
use crate::weylgroup::{self, GroupElement};
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::HashMap;

/// A computation route for `x_{w/v}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Coproduct,
    Positive,
    PositiveCirc,
    Sbar,
    Recursive,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::Coproduct,
        Route::Positive,
        Route::PositiveCirc,
        Route::Sbar,
        Route::Recursive,
    ];

    pub fn parse(s: &str) -> Result<Route> {
        match s {
            "coproduct" => Ok(Route::Coproduct),
            "positive" => Ok(Route::Positive),
            "positive_circ" => Ok(Route::PositiveCirc),
            "sbar" => Ok(Route::Sbar),
            "recursive" => Ok(Route::Recursive),
            other => Err(Error::Usage(format!("unknown route `{other}`"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Route::Coproduct => "coproduct",
            Route::Positive => "positive",
            Route::PositiveCirc => "positive_circ",
            Route::Sbar => "sbar",
            Route::Recursive => "recursive",
        }
    }
}

/// The simple index of a letter of a simple-root word, if it is one.
fn simple_letter(rs: &RootSystem, letter: u8) -> Option<usize> {
    let root = rs.root_at(letter as usize);
    if root.height() == 1 {
        root.coeffs.iter().position(|&c| c == 1)
    } else {
        None
    }
}

/// A representative of `x_{w/v}` on the requested route; the zero vector
/// when `v ≰ w`.
pub fn skew(rs: &RootSystem, w: &GroupElement, v: &GroupElement, route: Route) -> Result<BraidedVector> {
    if !weylgroup::bruhat_leq(rs, v, w) {
        return Ok(BraidedVector::zero());
    }
    match route {
        Route::Coproduct => Ok(skew_from_coproduct(rs, w, v)),
        Route::Positive => skew_positive(rs, w, v),
        Route::PositiveCirc => Ok(braided::rho(&skew_positive_circ(rs, &w.inverse(), &v.inverse())?)),
        Route::Sbar => skew_via_sbar(rs, w, v),
        Route::Recursive => Ok(skew_recursive(rs, w, v)),
    }
}

/// Coproduct route: split `x_w` along its canonical reduced word and keep
/// the left factors whose right word is a reduced word of `v`.
pub fn skew_from_coproduct(rs: &RootSystem, w: &GroupElement, v: &GroupElement) -> BraidedVector {
    let word = weylgroup::canonical_reduced_word(rs, w);
    let xw = braided::x_word_simple(rs, &word);
    let target_len = weylgroup::length(rs, v);
    let mut acc = BraidedVector::zero();
    for ((l, r), c) in braided::coproduct(rs, &xw).terms {
        if r.len() != target_len {
            continue;
        }
        let right_word: Vec<usize> = r.iter().map(|&b| simple_letter(rs, b).expect("simple letter")).collect();
        let g = weylgroup::from_word(rs, &right_word);
        if g == *v && weylgroup::length(rs, &g) == right_word.len() {
            acc.add_term(l, c);
        }
    }
    acc
}

/// Shared subset expansion: prefix or suffix twists of `word`, summing the
/// products over index sets whose complements multiply to `complement`.
fn subset_expansion(
    rs: &RootSystem,
    word: &[usize],
    twists: &[Root],
    m: usize,
    complement: &GroupElement,
) -> BraidedVector {
    let letters: Vec<u8> = twists
        .iter()
        .map(|a| rs.root_index(a).expect("positive twist") as u8)
        .collect();
    let mut acc = BraidedVector::zero();
    for j_set in index_combinations(word.len(), m) {
        let mut in_j = vec![false; word.len()];
        for &j in &j_set {
            in_j[j] = true;
        }
        let rest: Vec<usize> = (0..word.len()).filter(|&p| !in_j[p]).map(|p| word[p]).collect();
        if weylgroup::from_word(rs, &rest) == *complement {
            acc.add_term(j_set.iter().map(|&j| letters[j]).collect(), 1.into());
        }
    }
    acc
}

/// Positive route: expand over the reflection ordering of the canonical
/// reduced word of `v·w_o`; complements must multiply to `w·w_o`.
pub fn skew_positive(rs: &RootSystem, w: &GroupElement, v: &GroupElement) -> Result<BraidedVector> {
    if !weylgroup::bruhat_leq(rs, v, w) {
        return Err(Error::NotBruhatComparable);
    }
    let wo = weylgroup::longest_element(rs);
    let vwo = weylgroup::multiply(v, &wo);
    let wwo = weylgroup::multiply(w, &wo);
    let word = weylgroup::canonical_reduced_word(rs, &vwo);
    let twists = weylgroup::reflection_ordering(rs, &word)?;
    let m = weylgroup::length(rs, w) - weylgroup::length(rs, v);
    Ok(subset_expansion(rs, &word, &twists, m, &wwo))
}

/// Reversed positive route, computing `x°_{w/v} = ρ(x_{w⁻¹/v⁻¹})` directly:
/// suffix twists of the canonical reduced word of `w_o·v`, complements
/// multiplying to `w_o·w`.
pub fn skew_positive_circ(rs: &RootSystem, w: &GroupElement, v: &GroupElement) -> Result<BraidedVector> {
    if !weylgroup::bruhat_leq(rs, v, w) {
        return Err(Error::NotBruhatComparable);
    }
    let wo = weylgroup::longest_element(rs);
    let wov = weylgroup::multiply(&wo, v);
    let wow = weylgroup::multiply(&wo, w);
    let word = weylgroup::canonical_reduced_word(rs, &wov);
    let twists = weylgroup::suffix_twist(rs, &word)?;
    let m = weylgroup::length(rs, w) - weylgroup::length(rs, v);
    Ok(subset_expansion(rs, &word, &twists, m, &wow))
}

/// A representative of `S̄(x_{w/v})` from any reduced word of `w`: expand
/// over the word's reflection ordering; complements must multiply to `v`.
pub fn sbar_skew_from_word(rs: &RootSystem, w_word: &[usize], v: &GroupElement) -> Result<BraidedVector> {
    let w = weylgroup::from_word(rs, w_word);
    if weylgroup::length(rs, &w) != w_word.len() {
        return Err(Error::NotReducedWordOf(w_word.to_vec()));
    }
    let lv = weylgroup::length(rs, v);
    if lv > w_word.len() {
        return Ok(BraidedVector::zero());
    }
    let twists = weylgroup::reflection_ordering(rs, w_word)?;
    Ok(subset_expansion(rs, w_word, &twists, w_word.len() - lv, v))
}

/// Antipode route: compute `S̄(x_{w/v})` combinatorially and undo it with
/// the involution `S̄`.
pub fn skew_via_sbar(rs: &RootSystem, w: &GroupElement, v: &GroupElement) -> Result<BraidedVector> {
    let word = weylgroup::canonical_reduced_word(rs, w);
    Ok(braided::sbar(rs, &sbar_skew_from_word(rs, &word, v)?))
}

/// Recursive route, peeling the smallest right ascent of `v`:
/// for `v < vs_β`, `v' = vs_β`, `w' = ws_β`, `α = v(β)`,
/// `x_{w/v} = x_{w/v'} x_α` if `w > w'`, plus `x_{w'/v'}` if `w < w'`.
pub fn skew_recursive(rs: &RootSystem, w: &GroupElement, v: &GroupElement) -> BraidedVector {
    let mut memo: HashMap<(GroupElement, GroupElement), BraidedVector> = HashMap::new();
    fn rec(
        rs: &RootSystem,
        w: &GroupElement,
        v: &GroupElement,
        memo: &mut HashMap<(GroupElement, GroupElement), BraidedVector>,
    ) -> BraidedVector {
        if !weylgroup::bruhat_leq(rs, v, w) {
            return BraidedVector::zero();
        }
        if weylgroup::length(rs, v) == rs.num_positive_roots() {
            return BraidedVector::one();
        }
        let key = (w.clone(), v.clone());
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let beta = (0..rs.rank())
            .find(|&i| !weylgroup::is_right_descent(rs, v, i))
            .expect("proper element has a right ascent");
        let s = weylgroup::simple_reflection(rs, beta);
        let vp = weylgroup::multiply(v, &s);
        let wp = weylgroup::multiply(w, &s);
        let alpha = v.act(&rs.simple_root(beta));
        let x_alpha = braided::x_at(rs.root_index(&alpha).expect("ascent image is positive"));
        let mut res = rec(rs, w, &vp, memo).mul(&x_alpha);
        if weylgroup::length(rs, &wp) > weylgroup::length(rs, w) {
            res = res.add(&rec(rs, &wp, &vp, memo));
        }
        memo.insert(key, res.clone());
        res
    }
    rec(rs, w, v, &mut memo)
}

/// Recursive route for `x°_{w/v}`, peeling the smallest left ascent of `v`:
/// for `v < s_βv`, `v' = s_βv`, `w' = s_βw`, `α = v⁻¹(β)`,
/// `x°_{w/v} = x_α x°_{w/v'}` if `w > w'`, plus `x°_{w'/v'}` if `w < w'`.
pub fn skew_recursive_circ(rs: &RootSystem, w: &GroupElement, v: &GroupElement) -> BraidedVector {
    let mut memo: HashMap<(GroupElement, GroupElement), BraidedVector> = HashMap::new();
    fn rec(
        rs: &RootSystem,
        w: &GroupElement,
        v: &GroupElement,
        memo: &mut HashMap<(GroupElement, GroupElement), BraidedVector>,
    ) -> BraidedVector {
        if !weylgroup::bruhat_leq(rs, v, w) {
            return BraidedVector::zero();
        }
        if weylgroup::length(rs, v) == rs.num_positive_roots() {
            return BraidedVector::one();
        }
        let key = (w.clone(), v.clone());
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let beta = (0..rs.rank())
            .find(|&i| !weylgroup::is_left_descent(rs, v, i))
            .expect("proper element has a left ascent");
        let s = weylgroup::simple_reflection(rs, beta);
        let vp = weylgroup::multiply(&s, v);
        let wp = weylgroup::multiply(&s, w);
        let alpha = v.act_inv(&rs.simple_root(beta));
        let x_alpha = braided::x_at(rs.root_index(&alpha).expect("ascent image is positive"));
        let mut res = x_alpha.mul(&rec(rs, w, &vp, memo));
        if weylgroup::length(rs, &wp) > weylgroup::length(rs, w) {
            res = res.add(&rec(rs, &wp, &vp, memo));
        }
        memo.insert(key, res.clone());
        res
    }
    rec(rs, w, v, &mut memo)
}

/// Whether two representatives are equal in the Nichols quotient.
pub fn nichols_equal(rs: &RootSystem, a: &BraidedVector, b: &BraidedVector) -> bool {
    braided::is_zero_in_nichols(rs, &a.sub(b))
}

/// The pairing invariant `⟨x_{w/v}, S̄(x_{w'/v'})⟩`.
pub fn c_invariant_pairing(
    rs: &RootSystem,
    w: &GroupElement,
    v: &GroupElement,
    wp: &GroupElement,
    vp: &GroupElement,
) -> BigRational {
    let x = skew_from_coproduct(rs, w, v);
    let y = braided::sbar(rs, &skew_from_coproduct(rs, wp, vp));
    braided::pairing(rs, &x, &y)
}

/// The chain count equal to the pairing invariant: index sets `J` (1-based)
/// in a reduced word of `w'` whose complements multiply to `v'` and whose
/// reflection-ordering labels climb a saturated chain from `v` to `w`.
pub fn c_invariant_chains(
    rs: &RootSystem,
    w: &GroupElement,
    v: &GroupElement,
    wp_word: &[usize],
    vp: &GroupElement,
) -> Vec<Vec<usize>> {
    let wp = weylgroup::from_word(rs, wp_word);
    debug_assert_eq!(weylgroup::length(rs, &wp), wp_word.len());
    let (lv, lw) = (weylgroup::length(rs, v), weylgroup::length(rs, w));
    let (lvp, lwp) = (weylgroup::length(rs, vp), wp_word.len());
    if !weylgroup::bruhat_leq(rs, v, w)
        || !weylgroup::bruhat_leq(rs, vp, &wp)
        || lw - lv != lwp - lvp
        || weylgroup::multiply(w, &v.inverse()) != weylgroup::multiply(&wp, &vp.inverse())
    {
        return vec![];
    }
    let m = lw - lv;
    let twists = weylgroup::reflection_ordering(rs, wp_word).expect("reduced word");
    let mut out = Vec::new();
    'sets: for j_set in index_combinations(lwp, m) {
        let mut in_j = vec![false; lwp];
        for &j in &j_set {
            in_j[j] = true;
        }
        let rest: Vec<usize> = (0..lwp).filter(|&p| !in_j[p]).map(|p| wp_word[p]).collect();
        if weylgroup::from_word(rs, &rest) != *vp {
            continue;
        }
        let mut u = v.clone();
        for &j in &j_set {
            let up = weylgroup::multiply(&weylgroup::reflection(rs, &twists[j]), &u);
            if weylgroup::length(rs, &up) != weylgroup::length(rs, &u) + 1 {
                continue 'sets;
            }
            u = up;
        }
        if u == *w {
            out.push(j_set.iter().map(|&j| j + 1).collect());
        }
    }
    out
}

/// Equality test for skew elements through chain combinatorics: equal word
/// and group degrees, and the same set of saturated-chain label sequences.
pub fn skew_equal_criterion(
    rs: &RootSystem,
    w: &GroupElement,
    v: &GroupElement,
    wp: &GroupElement,
    vp: &GroupElement,
) -> bool {
    let cmp = weylgroup::bruhat_leq(rs, v, w);
    let cmp_p = weylgroup::bruhat_leq(rs, vp, wp);
    if !cmp || !cmp_p {
        return cmp == cmp_p;
    }
    let ld = weylgroup::length(rs, w) - weylgroup::length(rs, v);
    let ld_p = weylgroup::length(rs, wp) - weylgroup::length(rs, vp);
    if ld != ld_p {
        return false;
    }
    if weylgroup::multiply(w, &v.inverse()) != weylgroup::multiply(wp, &vp.inverse()) {
        return false;
    }
    chaincomb::saturated_chains(rs, v, w) == chaincomb::saturated_chains(rs, vp, wp)
}

/// The order-two monomial factorization `x°_{w/v} = x_{α°} x_{γ°}` for a
/// length-2 interval, found constructively and verified in the Nichols
/// quotient; `None` when no such factorization exists.
pub fn monomial_factor_order2(rs: &RootSystem, w: &GroupElement, v: &GroupElement) -> Option<(Root, Root)> {
    if !weylgroup::bruhat_leq(rs, v, w)
        || weylgroup::length(rs, w) != weylgroup::length(rs, v) + 2
    {
        return None;
    }
    let (mut mv, mut mw) = (v.clone(), w.clone());
    // Translate the interval up while some ascent of v escapes [v, w].
    loop {
        let moved = (0..rs.rank()).find(|&i| {
            if weylgroup::is_left_descent(rs, &mv, i) {
                return false;
            }
            let sv = weylgroup::multiply(&weylgroup::simple_reflection(rs, i), &mv);
            !weylgroup::bruhat_leq(rs, &sv, &mw)
        });
        match moved {
            Some(i) => {
                let s = weylgroup::simple_reflection(rs, i);
                mv = weylgroup::multiply(&s, &mv);
                mw = weylgroup::multiply(&s, &mw);
            }
            None => break,
        }
    }
    let beta = (0..rs.rank()).find(|&i| {
        !weylgroup::is_left_descent(rs, &mv, i) && weylgroup::is_left_descent(rs, &mw, i)
    })?;
    let alpha = {
        let a = mv.act_inv(&rs.simple_root(beta));
        debug_assert!(a.is_positive());
        a
    };
    let t = weylgroup::multiply(
        &mw.inverse(),
        &weylgroup::multiply(&weylgroup::simple_reflection(rs, beta), &mv),
    );
    let gamma = rs
        .positive_roots
        .iter()
        .find(|d| weylgroup::reflection(rs, d) == t)?
        .clone();
    let candidate = braided::x_at(rs.root_index(&alpha).unwrap())
        .mul(&braided::x_at(rs.root_index(&gamma).unwrap()));
    let circ = skew_positive_circ(rs, w, v).ok()?;
    if nichols_equal(rs, &circ, &candidate) {
        Some((alpha, gamma))
    } else {
        None
    }
}

/// All ordered pairs `(α, γ)` with a scalar `λ` such that `λ x_α x_γ` equals
/// `x°_{w/v}` (or `x_{w/v}` when `circ` is false) in the Nichols quotient.
pub fn monomial_factorizations(
    rs: &RootSystem,
    w: &GroupElement,
    v: &GroupElement,
    circ: bool,
) -> Vec<(Root, Root, BigRational)> {
    if !weylgroup::bruhat_leq(rs, v, w) {
        return vec![];
    }
    let target = if circ {
        skew_positive_circ(rs, w, v).expect("comparable")
    } else {
        skew_positive(rs, w, v).expect("comparable")
    };
    let w_degree = if circ {
        weylgroup::multiply(&v.inverse(), w)
    } else {
        weylgroup::multiply(w, &v.inverse())
    };
    let sym_target = braided::symmetrizer(rs, 2, &target.component(2)).unwrap();
    let mut out = Vec::new();
    for a in &rs.positive_roots {
        for g in &rs.positive_roots {
            let prod = weylgroup::multiply(&weylgroup::reflection(rs, a), &weylgroup::reflection(rs, g));
            if prod != w_degree {
                continue;
            }
            let cand = braided::x_at(rs.root_index(a).unwrap()).mul(&braided::x_at(rs.root_index(g).unwrap()));
            let sym_cand = braided::symmetrizer(rs, 2, &cand).unwrap();
            let Some((key, base)) = sym_cand.terms.iter().next() else {
                continue;
            };
            let num = sym_target.terms.get(key).cloned().unwrap_or_else(num_bigint::BigInt::zero);
            let lambda = BigRational::new(num, base.clone());
            if lambda.is_zero() {
                continue;
            }
            let consistent = {
                let mut keys: Vec<_> = sym_target.terms.keys().chain(sym_cand.terms.keys()).collect();
                keys.sort();
                keys.dedup();
                keys.into_iter().all(|k| {
                    let t = sym_target.terms.get(k).cloned().unwrap_or_else(num_bigint::BigInt::zero);
                    let c = sym_cand.terms.get(k).cloned().unwrap_or_else(num_bigint::BigInt::zero);
                    BigRational::from_integer(t) == &lambda * BigRational::from_integer(c)
                })
            };
            if consistent {
                out.push((a.clone(), g.clone(), lambda));
            }
        }
    }
    out
}

/// The positive roots `α` with `v ⋖ s_α v ≤ w`, together with the necessary
/// inequality `#{α} ≤ ℓ(w) − ℓ(v)` that any monomial `x°_{w/v}` must obey.
pub fn monomial_necessary_check(rs: &RootSystem, w: &GroupElement, v: &GroupElement) -> (Vec<Root>, bool) {
    let mut roots: Vec<Root> = weylgroup::cocovers(rs, v)
        .into_iter()
        .filter(|(_, u)| weylgroup::bruhat_leq(rs, u, w))
        .map(|(a, _)| a)
        .collect();
    roots.sort();
    let bound = weylgroup::length(rs, w) - weylgroup::length(rs, v);
    let ok = roots.len() <= bound;
    (roots, ok)
}

/// Left derivative of a skew element along `ξ`.
pub fn derivative_of_skew(
    rs: &RootSystem,
    xi: &BraidedVector,
    w: &GroupElement,
    v: &GroupElement,
) -> BraidedVector {
    braided::left_derivative(rs, xi, &skew_from_coproduct(rs, w, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::{is_zero_in_nichols, pairing_int, rho, x_at, x_of_element};
    use crate::rootsys::build_root_system;
    use crate::weylgroup::{
        bruhat_leq, canonical_reduced_word, covers, enumerate_group, from_word, length,
        multiply, reflection,
    };
    use num_bigint::BigInt;
    use num_traits::One;

    fn rs(t: &str) -> RootSystem {
        build_root_system(t).unwrap()
    }

    fn idx(r: &RootSystem, coeffs: &[i64]) -> usize {
        r.root_index(&Root::new(coeffs.to_vec())).unwrap()
    }

    #[test]
    fn all_routes_agree_and_are_nonzero_in_rank_two() {
        for t in ["A2", "B2"] {
            let r = rs(t);
            let elements = enumerate_group(&r);
            for w in &elements {
                for v in &elements {
                    if !bruhat_leq(&r, v, w) {
                        for route in Route::ALL {
                            assert!(skew(&r, w, v, route).unwrap().is_structurally_zero());
                        }
                        continue;
                    }
                    let base = skew(&r, w, v, Route::Coproduct).unwrap();
                    assert!(!is_zero_in_nichols(&r, &base), "x_(w/v) = 0 in {t}");
                    for route in Route::ALL {
                        let other = skew(&r, w, v, route).unwrap();
                        assert!(
                            nichols_equal(&r, &base, &other),
                            "route {} disagrees in {t}",
                            route.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cover_skews_are_single_letters() {
        for t in ["A2", "B2"] {
            let r = rs(t);
            for w in enumerate_group(&r) {
                for (_, v) in covers(&r, &w) {
                    // left quotient: v = s_α w
                    let alpha = r
                        .positive_roots
                        .iter()
                        .find(|a| reflection(&r, a) == multiply(&w, &v.inverse()))
                        .unwrap();
                    let x = skew_from_coproduct(&r, &w, &v);
                    assert!(nichols_equal(&r, &x, &x_at(r.root_index(alpha).unwrap())));
                    // right quotient: v = w s_α'
                    let alpha_p = r
                        .positive_roots
                        .iter()
                        .find(|a| reflection(&r, a) == multiply(&w.inverse(), &v))
                        .unwrap();
                    let xc = skew_positive_circ(&r, &w, &v).unwrap();
                    assert!(nichols_equal(&r, &xc, &x_at(r.root_index(alpha_p).unwrap())));
                }
            }
        }
    }

    #[test]
    fn skew_against_the_identity_recovers_the_element_word() {
        let r = rs("B2");
        let e = GroupElement::identity(r.rank());
        for w in enumerate_group(&r) {
            let x = skew_from_coproduct(&r, &w, &e);
            assert!(nichols_equal(&r, &x, &x_of_element(&r, &w)));
            let top = skew_from_coproduct(&r, &w, &w);
            assert_eq!(top, BraidedVector::one());
        }
    }

    #[test]
    fn reversal_links_the_two_skew_families() {
        for t in ["A2", "B2"] {
            let r = rs(t);
            let elements = enumerate_group(&r);
            for w in &elements {
                for v in &elements {
                    if !bruhat_leq(&r, v, w) {
                        continue;
                    }
                    let circ = skew_positive_circ(&r, w, v).unwrap();
                    let via_rho = rho(&skew(&r, &w.inverse(), &v.inverse(), Route::Coproduct).unwrap());
                    assert!(nichols_equal(&r, &circ, &via_rho));
                    let rec = skew_recursive_circ(&r, w, v);
                    assert!(nichols_equal(&r, &circ, &rec));
                }
            }
        }
    }

    #[test]
    fn skew_terms_carry_the_group_degree() {
        for t in ["A2", "B2"] {
            let r = rs(t);
            let refl = braided::reflection_table(&r);
            let elements = enumerate_group(&r);
            for w in &elements {
                for v in &elements {
                    if !bruhat_leq(&r, v, w) {
                        continue;
                    }
                    let quot = multiply(w, &v.inverse());
                    for word in skew_from_coproduct(&r, w, v).terms.keys() {
                        assert_eq!(braided::w_degree_of_word(&r, &refl, word), quot);
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_against_root_monomials_detects_saturated_chains() {
        for t in ["A2", "B2"] {
            let r = rs(t);
            let n = r.num_positive_roots();
            let elements = enumerate_group(&r);
            for w in &elements {
                for v in &elements {
                    if !bruhat_leq(&r, v, w) {
                        continue;
                    }
                    let m = length(&r, w) - length(&r, v);
                    let x = skew_from_coproduct(&r, w, v);
                    let mut seq = vec![0usize; m];
                    loop {
                        let phi = seq.iter().fold(BraidedVector::one(), |acc, &a| acc.mul(&x_at(a)));
                        let mut u = v.clone();
                        let mut chain = true;
                        for &a in &seq {
                            let up = multiply(&reflection(&r, r.root_at(a)), &u);
                            if length(&r, &up) != length(&r, &u) + 1 {
                                chain = false;
                                break;
                            }
                            u = up;
                        }
                        chain = chain && u == *w;
                        assert_eq!(
                            pairing_int(&r, &phi, &x),
                            BigInt::from(i64::from(chain)),
                            "{t}: sequence {seq:?}"
                        );
                        // advance the odometer
                        let mut p = 0;
                        while p < m {
                            seq[p] += 1;
                            if seq[p] < n {
                                break;
                            }
                            seq[p] = 0;
                            p += 1;
                        }
                        if p == m {
                            break;
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn self_pairing_invariant_is_one_on_intervals() {
        for t in ["A2", "B2"] {
            let r = rs(t);
            let elements = enumerate_group(&r);
            for w in &elements {
                for v in &elements {
                    if bruhat_leq(&r, v, w) {
                        assert!(c_invariant_pairing(&r, w, v, w, v).is_one(), "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn chain_count_matches_the_pairing_invariant() {
        let r = rs("A2");
        let elements = enumerate_group(&r);
        let mut pairs = Vec::new();
        for w in &elements {
            for v in &elements {
                if bruhat_leq(&r, v, w) {
                    pairs.push((w.clone(), v.clone()));
                }
            }
        }
        for (w, v) in &pairs {
            for (wp, vp) in &pairs {
                let count = c_invariant_chains(&r, w, v, &canonical_reduced_word(&r, wp), vp).len();
                let paired = c_invariant_pairing(&r, w, v, wp, vp);
                assert_eq!(BigRational::from_integer(BigInt::from(count)), paired);
            }
        }
    }

    #[test]
    fn equality_criterion_matches_nichols_equality() {
        let r = rs("A2");
        let elements = enumerate_group(&r);
        let mut pairs = Vec::new();
        for w in &elements {
            for v in &elements {
                if bruhat_leq(&r, v, w) {
                    pairs.push((w.clone(), v.clone()));
                }
            }
        }
        for (w, v) in &pairs {
            let x = skew_from_coproduct(&r, w, v);
            for (wp, vp) in &pairs {
                let y = skew_from_coproduct(&r, wp, vp);
                assert_eq!(
                    skew_equal_criterion(&r, w, v, wp, vp),
                    nichols_equal(&r, &x, &y),
                    "criterion mismatch"
                );
            }
        }
    }

    #[test]
    fn the_distinct_interval_pair_with_common_invariant() {
        let r = rs("A3");
        let v = from_word(&r, &[1, 0]);
        let w = from_word(&r, &[0, 1, 2, 1, 0]);
        let vp = from_word(&r, &[1, 0, 1]);
        let wp_word = [0usize, 1, 2, 1, 0, 1];
        let wp = from_word(&r, &wp_word);
        assert!(bruhat_leq(&r, &v, &w) && bruhat_leq(&r, &vp, &wp));
        assert_eq!(multiply(&w, &v.inverse()), multiply(&wp, &vp.inverse()));
        assert_eq!(multiply(&w, &v.inverse()), from_word(&r, &[0, 1, 2]));
        assert_eq!(length(&r, &w) - length(&r, &v), 3);
        assert_eq!(length(&r, &wp) - length(&r, &vp), 3);

        let js = c_invariant_chains(&r, &w, &v, &wp_word, &vp);
        assert_eq!(js, vec![vec![1, 3, 4]]);
        assert!(c_invariant_pairing(&r, &w, &v, &wp, &vp).is_one());

        // α = β₁ ascends from v inside [v, w] but is not a cover of v'.
        let s1 = weylgroup::simple_reflection(&r, 0);
        let sv = multiply(&s1, &v);
        assert!(length(&r, &sv) == length(&r, &v) + 1 && bruhat_leq(&r, &sv, &w));
        let svp = multiply(&s1, &vp);
        assert!(length(&r, &svp) != length(&r, &vp) + 1);

        assert!(!skew_equal_criterion(&r, &w, &v, &wp, &vp));
        let x = skew_from_coproduct(&r, &w, &v);
        let y = skew_from_coproduct(&r, &wp, &vp);
        assert!(!nichols_equal(&r, &x, &y));
    }

    #[test]
    fn rank_two_interval_without_monomial_form() {
        let r = rs("B2");
        // First arrangement: v = s₂, w = s₂s₁s₂.
        let v = from_word(&r, &[1]);
        let w = from_word(&r, &[1, 0, 1]);
        let x = skew_positive(&r, &w, &v).unwrap();
        let mut expected = BraidedVector::zero();
        expected.add_term(vec![idx(&r, &[1, 1]) as u8, idx(&r, &[1, 2]) as u8], 1.into());
        expected.add_term(vec![idx(&r, &[1, 0]) as u8, idx(&r, &[1, 1]) as u8], 1.into());
        assert_eq!(x, expected);
        assert!(monomial_factor_order2(&r, &w, &v).is_none());
        assert!(monomial_factorizations(&r, &w, &v, false).is_empty());
        assert!(monomial_factorizations(&r, &w, &v, true).is_empty());

        // Second arrangement: v = s₁, w = s₁s₂s₁.
        let v2 = from_word(&r, &[0]);
        let w2 = from_word(&r, &[0, 1, 0]);
        let x2 = skew_positive(&r, &w2, &v2).unwrap();
        let mut expected2 = BraidedVector::zero();
        expected2.add_term(vec![idx(&r, &[1, 2]) as u8, idx(&r, &[1, 1]) as u8], 1.into());
        expected2.add_term(vec![idx(&r, &[0, 1]) as u8, idx(&r, &[1, 2]) as u8], 1.into());
        assert_eq!(x2, expected2);
        assert!(monomial_factor_order2(&r, &w2, &v2).is_none());
        assert!(monomial_factorizations(&r, &w2, &v2, false).is_empty());
    }

    #[test]
    fn length_two_intervals_factor_in_the_small_simply_laced_group() {
        let r = rs("A3");
        let elements = enumerate_group(&r);
        for w in &elements {
            for v in &elements {
                if !bruhat_leq(&r, v, w) || length(&r, w) != length(&r, v) + 2 {
                    continue;
                }
                let (alpha, gamma) = monomial_factor_order2(&r, w, v).expect("factorization exists");
                assert_ne!(alpha, gamma);
                let all = monomial_factorizations(&r, w, v, true);
                assert!(!all.is_empty());
                for (a, g, lambda) in &all {
                    assert!(lambda.is_one());
                    let mut set = [a.clone(), g.clone()];
                    set.sort();
                    let mut expect = [alpha.clone(), gamma.clone()];
                    expect.sort();
                    assert_eq!(set, expect, "ambiguous factor set");
                }
            }
        }
    }

    #[test]
    fn ascent_count_blocks_the_longer_interval() {
        let r = rs("A3");
        let v = from_word(&r, &[0, 2]);
        let w = from_word(&r, &[0, 1, 2, 1, 0]);
        let (roots, ok) = monomial_necessary_check(&r, &w, &v);
        let expected: Vec<Root> = [
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![1, 1, 0],
            vec![1, 1, 1],
        ]
        .into_iter()
        .map(Root::new)
        .collect();
        assert_eq!(roots, expected);
        assert!(!ok);
        assert_eq!(length(&r, &w) - length(&r, &v), 3);
    }

    #[test]
    fn derivatives_of_skews_reduce_the_interval() {
        // D→_{x_α}(x_{w/v}) pairs the leading letter away: for a cover
        // w' = s_α w with v ≤ w', the result is x_{w'/v}.
        let r = rs("A2");
        let elements = enumerate_group(&r);
        for w in &elements {
            for v in &elements {
                if !bruhat_leq(&r, v, w) {
                    continue;
                }
                for (alpha, wp) in covers(&r, w) {
                    if !bruhat_leq(&r, v, &wp) {
                        continue;
                    }
                    let d = derivative_of_skew(&r, &x_at(r.root_index(&alpha).unwrap()), w, v);
                    let expect = skew_from_coproduct(&r, &wp, v);
                    assert!(nichols_equal(&r, &d, &expect));
                }
            }
        }
    }

    #[test]
    fn route_tokens_round_trip() {
        for route in Route::ALL {
            assert_eq!(Route::parse(route.name()).unwrap(), route);
        }
        assert!(Route::parse("bogus").is_err());
    }
}
