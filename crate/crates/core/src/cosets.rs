//! Double coset equations in a free group.
//!
//! Everything here reduces to one solver: find all integer pairs `(p, q)`
//! with `alpha^p * g * beta^q = target`, inside an explicit search window
//! whose size is derived from the word lengths. Nielsen equivalence of
//! intersection points, triviality and the various special point predicates
//! are thin wrappers choosing `alpha`, `g`, `beta`, `target` appropriately.
//!
//! Words are freely reduced by construction, so a word represents the
//! trivial element exactly when it is empty; the trivial-base cases below
//! rely on that.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::surface::{orientation_character, SurfaceSpec};
use crate::words::{cyclic_reduce, Word};

/// Exponent pairs solving `alpha^p * g * beta^q = target` within the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSolution {
    /// All `(p, q)` witnesses with `|p| <= bound_p`, `|q| <= bound_q`,
    /// sorted by `(p, q)`.
    pub witnesses: Vec<(i64, i64)>,
    /// Witness minimizing `(|p| + |q|, p, q)`, if any exist.
    pub minimal: Option<(i64, i64)>,
    pub bound_p: i64,
    pub bound_q: i64,
}

impl CosetSolution {
    pub fn exists(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

fn ceil_div(a: usize, b: usize) -> i64 {
    ((a + b - 1) / b) as i64
}

/// Window bound for the exponent of `base` in an equation whose other words
/// have combined length `other_len`. A witness exponent beyond this bound
/// would force more letters of `base^p` to survive reduction than the rest
/// of the equation can supply.
fn exponent_bound(base: &Word, other_len: usize, margin: i64) -> Result<i64> {
    let (core, _) = cyclic_reduce(base);
    if core.is_empty() {
        return Err(Error::Unsupported(
            "coset equations need nontrivial cyclic words".into(),
        ));
    }
    Ok(ceil_div(other_len + 2 * base.len(), core.len()) + 2 + margin)
}

/// Solves `alpha^p * g * beta^q = target` by exhausting the window.
///
/// `margin` widens both exponent bounds; solving again with a positive
/// margin and comparing answers is the intended stability check.
pub fn solve_double_coset_with_margin(
    alpha: &Word,
    g: &Word,
    beta: &Word,
    target: &Word,
    margin: i64,
) -> Result<CosetSolution> {
    let other = target.len() + g.len();
    let bound_p = exponent_bound(alpha, other, margin)?;
    let bound_q = exponent_bound(beta, other, margin)?;

    // beta powers are pairwise distinct (free groups are torsion free), so a
    // reduced word determines its exponent.
    let mut beta_powers: HashMap<Word, i64> = HashMap::new();
    let beta_inv = beta.inverse();
    let mut pos = Word::empty();
    let mut neg = Word::empty();
    beta_powers.insert(pos.clone(), 0);
    for q in 1..=bound_q {
        pos = pos.concat(beta);
        neg = neg.concat(&beta_inv);
        beta_powers.insert(pos.clone(), q);
        beta_powers.insert(neg.clone(), -q);
    }

    let g_inv = g.inverse();
    let alpha_inv = alpha.inverse();
    let mut witnesses = Vec::new();
    // left runs through alpha^{-p} as p goes from -bound_p to bound_p
    let mut left = alpha.pow(bound_p);
    for p in -bound_p..=bound_p {
        let residue = g_inv.concat(&left).concat(target);
        if let Some(&q) = beta_powers.get(&residue) {
            witnesses.push((p, q));
        }
        left = left.concat(&alpha_inv);
    }

    let minimal = witnesses
        .iter()
        .copied()
        .min_by_key(|&(p, q)| (p.abs() + q.abs(), p, q));
    Ok(CosetSolution {
        witnesses,
        minimal,
        bound_p,
        bound_q,
    })
}

pub fn solve_double_coset(
    alpha: &Word,
    g: &Word,
    beta: &Word,
    target: &Word,
) -> Result<CosetSolution> {
    solve_double_coset_with_margin(alpha, g, beta, target, 0)
}

/// Whether `x` is a power of `w` (the zeroth power included).
pub fn is_power_of(w: &Word, x: &Word) -> bool {
    if w.is_empty() {
        return x.is_empty();
    }
    let core_len = cyclic_reduce(w).0.len();
    let bound = ceil_div(x.len() + 2 * w.len(), core_len) + 2;
    let mut pow = w.pow(-bound);
    for _p in -bound..=bound {
        if &pow == x {
            return true;
        }
        pow = pow.concat(w);
    }
    false
}

/// Whether two intersection points, recorded as based loops `d1`, `d2`, lie
/// in the same Nielsen class for the curve pair `(w1, w2)`; for
/// self-intersection pass the same word twice. True exactly when
/// `d1 = w1^p * d2 * w2^q` for some integers.
pub fn nielsen_equivalent(w1: &Word, w2: &Word, d1: &Word, d2: &Word) -> Result<bool> {
    match (w1.is_empty(), w2.is_empty()) {
        (true, true) => Ok(d1 == d2),
        (true, false) => Ok(is_power_of(w2, &d2.inverse().concat(d1))),
        (false, true) => Ok(is_power_of(w1, &d1.concat(&d2.inverse()))),
        (false, false) => Ok(solve_double_coset(w1, d2, w2, d1)?.exists()),
    }
}

/// Whether the point `d` is a trivial self-intersection of `w`: the two
/// loop segments at the point bound, i.e. `d` is a power of `w`.
pub fn is_trivial_point(w: &Word, d: &Word) -> Result<bool> {
    Ok(is_power_of(w, d))
}

/// Exponent pairs `(p, q) != (0, 0)` with `d = w1^p * d * w2^q`, i.e.
/// witnesses that the Nielsen class of the point `d` is special. When the
/// witness set is infinite only generating witnesses are reported.
pub fn special_witnesses(w1: &Word, w2: &Word, d: &Word) -> Result<Vec<(i64, i64)>> {
    match (w1.is_empty(), w2.is_empty()) {
        (true, true) => Ok(vec![(0, 1), (1, 0)]),
        (true, false) => Ok(vec![(1, 0)]),
        (false, true) => Ok(vec![(0, 1)]),
        (false, false) => {
            let sol = solve_double_coset(w1, d, w2, d)?;
            Ok(sol
                .witnesses
                .into_iter()
                .filter(|&pq| pq != (0, 0))
                .collect())
        }
    }
}

pub fn is_special_point(w1: &Word, w2: &Word, d: &Word) -> Result<bool> {
    Ok(!special_witnesses(w1, w2, d)?.is_empty())
}

/// A special point whose class index can drop: some witness has an
/// orientation reversing first factor.
pub fn is_self_cancelling_point(
    s: &SurfaceSpec,
    w1: &Word,
    w2: &Word,
    d: &Word,
) -> Result<bool> {
    let chi1 = orientation_character(s, w1)?;
    let chi2 = orientation_character(s, w2)?;
    for (p, q) in special_witnesses(w1, w2, d)? {
        let sign1 = if chi1 == -1 && p % 2 != 0 { -1 } else { 1 };
        let sign2 = if chi2 == -1 && q % 2 != 0 { -1 } else { 1 };
        debug_assert_eq!(sign1 * sign2, 1, "special witnesses preserve character");
        if sign1 == -1 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Witnesses `(p, q)` with `d = w^p * d^{-1} * w^q`: the point is fixed by
/// reversing the parameterization of one branch.
pub fn geometric_special_witnesses(w: &Word, d: &Word) -> Result<Vec<(i64, i64)>> {
    if w.is_empty() {
        return Ok(if d.is_empty() { vec![(0, 0)] } else { Vec::new() });
    }
    Ok(solve_double_coset(w, &d.inverse(), w, d)?.witnesses)
}

pub fn is_geometric_special_point(w: &Word, d: &Word) -> Result<bool> {
    Ok(!geometric_special_witnesses(w, d)?.is_empty())
}

pub fn is_geometric_self_cancelling_point(
    s: &SurfaceSpec,
    w: &Word,
    d: &Word,
) -> Result<bool> {
    let chi_w = orientation_character(s, w)?;
    let chi_d = orientation_character(s, d)?;
    for (_p, q) in geometric_special_witnesses(w, d)? {
        let sign_wq = if chi_w == -1 && q % 2 != 0 { -1 } else { 1 };
        if sign_wq * chi_d == 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Relative position of the two branch endpoints of `d2` around those of
/// `d1` on the boundary of a regular neighbourhood, for the strict variants
/// of the predicates below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CyclicCase {
    Forward,
    Backward,
    Other,
}

impl CyclicCase {
    pub fn parse(s: &str) -> Result<CyclicCase> {
        match s {
            "forward" => Ok(CyclicCase::Forward),
            "backward" => Ok(CyclicCase::Backward),
            "other" => Ok(CyclicCase::Other),
            _ => Err(Error::Parse(format!("unknown cyclic case {s:?}"))),
        }
    }

    fn offset(self) -> i64 {
        match self {
            CyclicCase::Forward => -1,
            CyclicCase::Backward => 1,
            CyclicCase::Other => 0,
        }
    }
}

fn check_eta(eta: i8) -> Result<i64> {
    match eta {
        1 | -1 => Ok(eta as i64),
        _ => Err(Error::Parse(format!("eta must be +1 or -1, got {eta}"))),
    }
}

fn strict_bound(w: &Word, d1: &Word, d2: &Word) -> Result<i64> {
    exponent_bound(w, d1.len() + d2.len(), 2)
}

/// Strict equivalence of parameterized points: `d1 = w^{-qh} * d2 * w^q`
/// where `qh` is coupled to `q` through the branch orderings.
pub fn equivalent_star(
    w: &Word,
    d1: &Word,
    d2: &Word,
    eta1: i8,
    eta2: i8,
    case: CyclicCase,
) -> Result<bool> {
    let (e1, e2) = (check_eta(eta1)?, check_eta(eta2)?);
    if w.is_empty() {
        return Ok(d1 == d2);
    }
    let bound = strict_bound(w, d1, d2)?;
    for q in -bound..=bound {
        let qh = q + (e1 - e2) / 2 + case.offset();
        if &w.pow(-qh).concat(d2).concat(&w.pow(q)) == d1 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Strict special point: `d = w^{-q} * d * w^q` for some `q != 0`.
pub fn special_star_witnesses(w: &Word, d: &Word) -> Result<Vec<i64>> {
    if w.is_empty() {
        return Ok(vec![1]);
    }
    let bound = strict_bound(w, d, d)?;
    let mut out = Vec::new();
    for q in -bound..=bound {
        if q != 0 && &w.pow(-q).concat(d).concat(&w.pow(q)) == d {
            out.push(q);
        }
    }
    Ok(out)
}

pub fn special_star(w: &Word, d: &Word) -> Result<bool> {
    Ok(!special_star_witnesses(w, d)?.is_empty())
}

pub fn self_cancelling_star(s: &SurfaceSpec, w: &Word, d: &Word) -> Result<bool> {
    let chi = orientation_character(s, w)?;
    for q in special_star_witnesses(w, d)? {
        if chi == -1 && q % 2 != 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Strict geometric special point: `d = w^{eta - q} * d^{-1} * w^q`.
pub fn geom_special_star_witnesses(w: &Word, d: &Word, eta: i8) -> Result<Vec<i64>> {
    let e = check_eta(eta)?;
    if w.is_empty() {
        return Ok(if d.is_empty() { vec![0] } else { Vec::new() });
    }
    let bound = strict_bound(w, d, d)?;
    let d_inv = d.inverse();
    let mut out = Vec::new();
    for q in -bound..=bound {
        if &w.pow(e - q).concat(&d_inv).concat(&w.pow(q)) == d {
            out.push(q);
        }
    }
    Ok(out)
}

pub fn geom_special_star(w: &Word, d: &Word, eta: i8) -> Result<bool> {
    Ok(!geom_special_star_witnesses(w, d, eta)?.is_empty())
}

pub fn geom_self_cancelling_star(
    s: &SurfaceSpec,
    w: &Word,
    d: &Word,
    eta: i8,
) -> Result<bool> {
    let chi_w = orientation_character(s, w)?;
    let chi_d = orientation_character(s, d)?;
    for q in geom_special_star_witnesses(w, d, eta)? {
        let sign_wq = if chi_w == -1 && q % 2 != 0 { -1 } else { 1 };
        if sign_wq * chi_d == 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Representatives of the double cosets `<w1> d <w2>` met by reduced words of
/// length at most `max_len` over the surface generators. For the curve pair
/// `(w1, w2)` these are the Reidemeister classes such a word can represent.
pub fn reidemeister_enumerate(
    s: &SurfaceSpec,
    w1: &Word,
    w2: &Word,
    max_len: usize,
) -> Result<Vec<Word>> {
    s.check_word(w1)?;
    s.check_word(w2)?;
    match s {
        SurfaceSpec::Plane | SurfaceSpec::Sphere => Ok(vec![Word::empty()]),
        SurfaceSpec::ProjectivePlane => {
            // pi1 is {1, a}; the coset relation identifies the two elements
            // exactly when w1 or w2 is homotopically nontrivial.
            let one_class = w1.len() % 2 == 1 || w2.len() % 2 == 1;
            if one_class || max_len == 0 {
                Ok(vec![Word::empty()])
            } else {
                Ok(vec![Word::empty(), Word::parse("a").expect("letter")])
            }
        }
        SurfaceSpec::Fatgraph(f) => {
            let mut letters = f.letters();
            letters.sort();
            let mut reps: Vec<Word> = Vec::new();
            // breadth first in (length, lexicographic) order
            let mut layer: Vec<Word> = vec![Word::empty()];
            for len in 0..=max_len {
                for d in &layer {
                    let mut known = false;
                    for rep in &reps {
                        if nielsen_equivalent(w1, w2, rep, d)? {
                            known = true;
                            break;
                        }
                    }
                    if !known {
                        reps.push(d.clone());
                    }
                }
                if len == max_len {
                    break;
                }
                let mut next = Vec::new();
                for d in &layer {
                    for &l in &letters {
                        if d.letters().last().is_some_and(|t| t.is_inverse_of(l)) {
                            continue;
                        }
                        let mut ls = d.letters().to_vec();
                        ls.push(l);
                        next.push(Word::from_letters(ls));
                    }
                }
                layer = next;
            }
            Ok(reps)
        }
    }
}
