//! Numeric counting engine.
//!
//! Curves on an orientable fat graph surface are realized as hyperbolic
//! isometries acting on the real line (the boundary of the hyperbolic plane
//! minus a point). Crossings of closed geodesics then become linked pairs of
//! axis endpoints, which this module counts with plain floating point
//! arithmetic and interval bookkeeping. It shares no logic with the
//! combinatorial counter in [`crate::geodesic`], so agreement between the two
//! is a meaningful check.

use std::collections::{HashMap, HashSet, VecDeque};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::surface::{Dart, SurfaceSpec};
use crate::words::{conjugate_eq, primitive_root, CyclicWord, Letter, Word};

type Mat = [[f64; 2]; 2];

const IDENT: Mat = [[1.0, 0.0], [0.0, 1.0]];

/// Orbits whose best representative still has an endpoint this close to an
/// axis endpoint are numerically unresolvable and are dropped. The parity
/// check and the second stretch factor run downstream turn a wrongly dropped
/// orbit into a hard error instead of a silent miscount.
const RESOLVE_FLOOR: f64 = 1e-12;

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

fn mat_det(m: &Mat) -> f64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

fn mat_inv(m: &Mat) -> Mat {
    let det = mat_det(m);
    [
        [m[1][1] / det, -m[0][1] / det],
        [-m[1][0] / det, m[0][0] / det],
    ]
}

fn mat_apply(m: &Mat, x: f64) -> Result<f64> {
    let den = m[1][0] * x + m[1][1];
    if den == 0.0 || !den.is_finite() {
        return Err(Error::Degenerate("pole hit while mapping interval".into()));
    }
    let y = (m[0][0] * x + m[0][1]) / den;
    if !y.is_finite() {
        return Err(Error::Degenerate("interval image overflow".into()));
    }
    Ok(y)
}

/// Both fixed points of a hyperbolic matrix on the real line, ascending.
fn fixed_points(m: &Mat) -> Result<(f64, f64)> {
    let (a, b) = (m[0][0], m[0][1]);
    let (c, d) = (m[1][0], m[1][1]);
    let scale = a.abs().max(b.abs()).max(c.abs()).max(d.abs());
    // the discriminant is a conjugation invariant, so compare it against the
    // invariant trace scale rather than the (growing) entry scale
    let tr = a + d;
    let disc = tr * tr - 4.0 * mat_det(m);
    if !(disc > 1e-9 * (tr * tr + 4.0 * mat_det(m).abs())) {
        return Err(Error::Degenerate("matrix is not clearly hyperbolic".into()));
    }
    if c.abs() <= 1e-14 * scale {
        return Err(Error::Degenerate("fixed point at infinity".into()));
    }
    let s = a - d;
    let root = disc.sqrt();
    let z1 = if s >= 0.0 {
        (s + root) / (2.0 * c)
    } else {
        (s - root) / (2.0 * c)
    };
    let z2 = -b / (c * z1);
    Ok(if z1 < z2 { (z1, z2) } else { (z2, z1) })
}

/// A concrete action of the surface group on the real line: one hyperbolic
/// matrix per generator, with a guard interval around each fixed point slot
/// certifying the ping pong property.
#[derive(Clone, Debug)]
pub struct IsometryRep {
    surface: SurfaceSpec,
    lambda: f64,
    letter_mats: HashMap<Letter, Mat>,
    letter_intervals: HashMap<Letter, (f64, f64)>,
}

impl IsometryRep {
    pub fn surface(&self) -> &SurfaceSpec {
        &self.surface
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    fn letters(&self) -> Vec<Letter> {
        let mut ls: Vec<Letter> = self.letter_mats.keys().copied().collect();
        ls.sort();
        ls
    }

    fn mat(&self, l: Letter) -> &Mat {
        &self.letter_mats[&l]
    }

    fn interval(&self, l: Letter) -> (f64, f64) {
        self.letter_intervals[&l]
    }

    fn word_mat(&self, w: &Word) -> Mat {
        let mut m = IDENT;
        for &l in w.letters() {
            m = mat_mul(&m, self.mat(l));
        }
        m
    }
}

/// Builds the standard representation at stretch factor `lambda = 3`.
pub fn realize(s: &SurfaceSpec) -> Result<IsometryRep> {
    realize_with_lambda(s, 3.0)
}

/// Builds a representation with a chosen stretch factor. Larger factors give
/// stronger contraction; factors too close to 1 fail the ping pong check.
pub fn realize_with_lambda(s: &SurfaceSpec, lambda: f64) -> Result<IsometryRep> {
    let Some(f) = s.fatgraph() else {
        return Err(Error::Unsupported(
            "the numeric engine needs a fat graph surface".into(),
        ));
    };
    if f.has_twists() {
        return Err(Error::Unsupported(
            "the numeric engine needs an orientable surface".into(),
        ));
    }
    if !(lambda > 1.0) || !lambda.is_finite() {
        return Err(Error::Degenerate("stretch factor must exceed 1".into()));
    }

    let n = f.darts().len();
    let center = |t: usize| (PI * ((t as f64 + 0.5) / n as f64 - 0.5)).tan();
    // wide slots keep the ping pong cross ratios small; interleaved dart
    // orders (one holed torus) are the tight case and need most of the slot
    let halfw = 0.48 / n as f64;
    let edge = |t: usize, side: f64| {
        (PI * ((t as f64 + 0.5) / n as f64 + side * halfw - 0.5)).tan()
    };

    const MARGIN: f64 = 1e-6;

    let mut letter_intervals = HashMap::new();
    for (t, d) in f.darts().iter().enumerate() {
        let letter = Letter::new(d.gen, !d.outgoing);
        letter_intervals.insert(letter, (edge(t, -1.0), edge(t, 1.0)));
    }
    let mut spans: Vec<(f64, f64)> = letter_intervals.values().copied().collect();
    spans.sort_by(|a, b| a.0.total_cmp(&b.0));
    for pair in spans.windows(2) {
        if pair[0].1 + MARGIN >= pair[1].0 {
            return Err(Error::Degenerate("slot intervals touch".into()));
        }
    }

    let mut letter_mats = HashMap::new();
    for (t, d) in f.darts().iter().enumerate() {
        if !d.outgoing {
            continue;
        }
        let fwd = Letter::new(d.gen, false);
        // attracting fixed point q at the x+ slot, repelling p at x-
        let q = center(t);
        let p = center(f.dart_position(Dart {
            gen: d.gen,
            outgoing: false,
        }));
        let den = q - p;
        let m: Mat = [
            [
                (q * lambda - p / lambda) / den,
                (p * q * (1.0 / lambda - lambda)) / den,
            ],
            [
                (lambda - 1.0 / lambda) / den,
                (q / lambda - p * lambda) / den,
            ],
        ];

        // Certify ping pong: the generator must map the complement of its
        // repelling interval strictly inside its attracting interval. In the
        // model coordinate sending p to 0 and q to infinity the map is
        // multiplication by lambda^2, so this is an endpoint comparison.
        let model = |z: f64| (z - p) / (q - z);
        let (rlo, rhi) = letter_intervals[&fwd.inverted()];
        let (alo, ahi) = sorted(model(rlo), model(rhi));
        let (flo, fhi) = letter_intervals[&fwd];
        let (glo, ghi) = sorted(model(flo), model(fhi));
        if !(alo < 0.0 && 0.0 < ahi && glo < 0.0 && 0.0 < ghi) {
            return Err(Error::Internal("model intervals misplaced".into()));
        }
        let l2 = lambda * lambda;
        if !(l2 * ahi >= ghi * (1.0 + MARGIN) && l2 * (-alo) >= (-glo) * (1.0 + MARGIN)) {
            return Err(Error::Degenerate(
                "stretch factor too small for ping pong".into(),
            ));
        }

        letter_mats.insert(fwd, m);
        letter_mats.insert(fwd.inverted(), mat_inv(&m));
    }

    Ok(IsometryRep {
        surface: s.clone(),
        lambda,
        letter_mats,
        letter_intervals,
    })
}

fn sorted(a: f64, b: f64) -> (f64, f64) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Distance from the nearest of `y1, y2` to the nearest of `lo, hi`: how
/// well separated a conjugate's endpoints are from the axis endpoints, and
/// so how much the in/out verdict below can be trusted.
fn endpoint_gap(y1: f64, y2: f64, lo: f64, hi: f64) -> f64 {
    let d = |y: f64, e: f64| (y - e).abs();
    d(y1, lo).min(d(y1, hi)).min(d(y2, lo)).min(d(y2, hi))
}

/// The lexicographically least among the shortest words in the deck orbit
/// `{ c^t h c^-t }` of a conjugate `h`: an exact, numerics free name for the
/// orbit. Translates beyond `|t| > |h| / |c| + 1` move the conjugating point
/// further from the axis of `h` than `h` itself sits, hence are strictly
/// longer, so the window below is exhaustive.
fn deck_canonical(axis_word: &Word, axis_inv: &Word, h: &Word) -> Word {
    let t_max = h.len() / axis_word.len() + 1;
    let mut best = h.clone();
    for (fwd, back) in [(axis_word, axis_inv), (axis_inv, axis_word)] {
        let mut cur = h.clone();
        for _ in 0..t_max {
            cur = fwd.concat(&cur).concat(back);
            if (cur.len(), cur.letters()) < (best.len(), best.letters()) {
                best = cur.clone();
            }
        }
    }
    best
}

/// Counts orbits of conjugates of `cand` whose axes cross the axis of
/// `axis`, up to the deck action of `axis` itself.
///
/// The walk explores conjugators in breadth first order, keeping a word `u`
/// only while the interval it carves on the line still contains an endpoint
/// of the reference axis: an interval containing boundary points on both
/// sides of the axis span must contain one of its endpoints, so every
/// divergence vertex of a linked conjugate survives the prune.
///
/// Conjugates are grouped into deck orbits by the exact word form of their
/// canonical translate, and each orbit is judged by the member whose
/// endpoints are best separated from the axis endpoints. Deck translation
/// squeezes endpoints against the axis endpoints at a geometric rate, so
/// only that best member is ever numerically trustworthy.
fn crossing_orbit_count(
    rep: &IsometryRep,
    axis: &CyclicWord,
    cand: &CyclicWord,
    skip_axis_word: bool,
    radius: usize,
) -> Result<usize> {
    let axis_word = axis.linear();
    let axis_inv = axis_word.inverse();
    let (lo, hi) = fixed_points(&rep.word_mat(&axis_word))?;

    // Each conjugate u r u^-1 of a rotation r has axis endpoints at the
    // Moebius image under M(u) of the endpoints of r, so the endpoints of r
    // are extracted once here from a small matrix and only ever mapped
    // forward. Conjugated matrices themselves are never formed: their entries
    // grow with depth and drown the fixed point computation in cancellation.
    let rotations: Vec<(Word, (f64, f64))> = (0..cand.len())
        .map(|j| {
            let w = cand.rotation(j);
            let fix = fixed_points(&rep.word_mat(&w))?;
            Ok((w, fix))
        })
        .collect::<Result<_>>()?;

    let letters = rep.letters();
    let mut seen: HashSet<Word> = HashSet::new();
    // per orbit: the linked verdict at the best separated member found
    let mut orbits: HashMap<Word, (f64, bool)> = HashMap::new();
    let mut queue: VecDeque<(Word, Mat)> = VecDeque::new();
    queue.push_back((Word::empty(), IDENT));

    while let Some((u, mu)) = queue.pop_front() {
        let u_inv = u.inverse();
        for (rw, rfix) in &rotations {
            let h = u.concat(rw).concat(&u_inv);
            if skip_axis_word && h == axis_word {
                continue;
            }
            if !seen.insert(h.clone()) {
                continue;
            }
            let y1 = mat_apply(&mu, rfix.0)?;
            let y2 = mat_apply(&mu, rfix.1)?;
            let gap = endpoint_gap(y1, y2, lo, hi);
            let inside = |y: f64| lo < y && y < hi;
            let verdict = inside(y1) != inside(y2);
            let entry = orbits
                .entry(deck_canonical(&axis_word, &axis_inv, &h))
                .or_insert((f64::NEG_INFINITY, false));
            if gap > entry.0 {
                *entry = (gap, verdict);
            }
        }
        if u.len() >= radius {
            continue;
        }
        for &l in &letters {
            if u.letters().last().is_some_and(|t| t.is_inverse_of(l)) {
                continue;
            }
            let (dlo, dhi) = rep.interval(l);
            let (ilo, ihi) = sorted(mat_apply(&mu, dlo)?, mat_apply(&mu, dhi)?);
            if (ilo <= lo && lo <= ihi) || (ilo <= hi && hi <= ihi) {
                let mut ls = u.letters().to_vec();
                ls.push(l);
                queue.push_back((Word::from_letters(ls), mat_mul(&mu, rep.mat(l))));
            }
        }
    }

    Ok(orbits
        .values()
        .filter(|(gap, linked)| *gap >= RESOLVE_FLOOR && *linked)
        .count())
}

fn check_curve(rep: &IsometryRep, c: &CyclicWord) -> Result<()> {
    rep.surface.check_word(&c.linear())?;
    if c.is_empty() {
        return Err(Error::Unsupported(
            "the numeric engine needs a noncontractible curve".into(),
        ));
    }
    Ok(())
}

fn self_orbit_pairs(rep: &IsometryRep, c: &CyclicWord, radius: usize) -> Result<u64> {
    check_curve(rep, c)?;
    if primitive_root(c)?.k != 1 {
        return Err(Error::Unsupported(
            "the numeric engine counts primitive curves only".into(),
        ));
    }
    let orbits = crossing_orbit_count(rep, c, c, true, radius)?;
    if orbits % 2 != 0 {
        return Err(Error::Internal(format!(
            "crossing orbits of {c} not paired: {orbits}"
        )));
    }
    Ok((orbits / 2) as u64)
}

fn other_lambda(lambda: f64) -> f64 {
    if (lambda - 3.0).abs() < 0.5 {
        5.0
    } else {
        3.0
    }
}

/// Geometric self-intersection count of a primitive curve, by counting
/// linked axis pairs numerically. The count is recomputed at a second
/// stretch factor and the two runs must agree.
pub fn count_self_numeric(rep: &IsometryRep, c: &CyclicWord) -> Result<u64> {
    let radius = c.len() + 4;
    let n1 = self_orbit_pairs(rep, c, radius)?;
    let rep2 = realize_with_lambda(&rep.surface, other_lambda(rep.lambda))?;
    let n2 = self_orbit_pairs(&rep2, c, radius)?;
    if n1 != n2 {
        return Err(Error::Internal(format!(
            "stretch factors disagree on {c}: {n1} vs {n2}"
        )));
    }
    Ok(n1)
}

/// Like [`count_self_numeric`] but with an explicit conjugator radius and no
/// second run; intended for stability experiments.
pub fn count_self_numeric_with_radius(
    rep: &IsometryRep,
    c: &CyclicWord,
    radius: usize,
) -> Result<u64> {
    self_orbit_pairs(rep, c, radius)
}

fn pair_crossings(
    rep: &IsometryRep,
    c1: &CyclicWord,
    c2: &CyclicWord,
    radius: usize,
) -> Result<u64> {
    check_curve(rep, c1)?;
    check_curve(rep, c2)?;
    let d1 = primitive_root(c1)?;
    let d2 = primitive_root(c2)?;
    if conjugate_eq(&d1.root.linear(), &d2.root.linear())
        || conjugate_eq(&d1.root.linear(), &d2.root.inverse().linear())
    {
        return Err(Error::Unsupported(
            "curves sharing a primitive root have no crossing count here".into(),
        ));
    }
    let x = crossing_orbit_count(rep, &d1.root, &d2.root, false, radius)?;
    Ok(d1.k as u64 * d2.k as u64 * x as u64)
}

/// Minimal crossing count of two curves with distinct primitive roots,
/// counted numerically and cross-checked at a second stretch factor.
pub fn count_pair_numeric(rep: &IsometryRep, c1: &CyclicWord, c2: &CyclicWord) -> Result<u64> {
    let d1 = primitive_root(c1)?;
    let d2 = primitive_root(c2)?;
    let radius = d1.root.len().max(d2.root.len()) + 4;
    let n1 = pair_crossings(rep, c1, c2, radius)?;
    let rep2 = realize_with_lambda(&rep.surface, other_lambda(rep.lambda))?;
    let n2 = pair_crossings(&rep2, c1, c2, radius)?;
    if n1 != n2 {
        return Err(Error::Internal(format!(
            "stretch factors disagree on ({c1}, {c2}): {n1} vs {n2}"
        )));
    }
    Ok(n1)
}

/// Pair count at an explicit radius, single run; for stability experiments.
pub fn count_pair_numeric_with_radius(
    rep: &IsometryRep,
    c1: &CyclicWord,
    c2: &CyclicWord,
    radius: usize,
) -> Result<u64> {
    pair_crossings(rep, c1, c2, radius)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(s: &str) -> SurfaceSpec {
        SurfaceSpec::parse(s).unwrap()
    }

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    #[test]
    fn realize_presets() {
        for lambda in [2.0, 3.0, 5.0] {
            realize_with_lambda(&surf("annulus"), lambda).unwrap();
        }
        for name in ["pants", "torus1"] {
            for lambda in [3.0, 5.0] {
                let rep = realize_with_lambda(&surf(name), lambda).unwrap();
                assert_eq!(rep.lambda(), lambda);
            }
        }
        // two geodesics crossing once cannot both be this short, so the
        // ping pong certificate must fail on the one holed torus
        assert!(realize_with_lambda(&surf("torus1"), 2.0).is_err());
    }

    #[test]
    fn realize_rejections() {
        assert!(realize(&surf("plane")).is_err());
        assert!(realize(&surf("rp2")).is_err());
        assert!(realize(&surf("moebius")).is_err());
        assert!(realize_with_lambda(&surf("pants"), 1.0).is_err());
    }

    #[test]
    fn generator_matrices_fix_their_slots() {
        let rep = realize(&surf("pants")).unwrap();
        let a = Letter::from_char('a').unwrap();
        let m = rep.mat(a);
        let (lo, hi) = fixed_points(m).unwrap();
        let (alo, ahi) = rep.interval(a);
        let (ilo, ihi) = rep.interval(a.inverted());
        // one fixed point per slot interval
        let in_a = |y: f64| alo < y && y < ahi;
        let in_inv = |y: f64| ilo < y && y < ihi;
        assert!((in_a(lo) && in_inv(hi)) || (in_a(hi) && in_inv(lo)));
        assert!((mat_det(m) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn word_matrices_compose() {
        let rep = realize(&surf("pants")).unwrap();
        let w = Word::parse("aBab").unwrap();
        let m = rep.word_mat(&w);
        let m_inv = rep.word_mat(&w.inverse());
        let prod = mat_mul(&m, &m_inv);
        assert!((prod[0][0] - 1.0).abs() < 1e-9);
        assert!((prod[1][1] - 1.0).abs() < 1e-9);
        assert!(prod[0][1].abs() < 1e-9);
        assert!(prod[1][0].abs() < 1e-9);
    }

    #[test]
    fn simple_loops_are_embedded() {
        let rep = realize(&surf("pants")).unwrap();
        assert_eq!(count_self_numeric(&rep, &cw("a")).unwrap(), 0);
        assert_eq!(count_self_numeric(&rep, &cw("b")).unwrap(), 0);
        assert_eq!(count_self_numeric(&rep, &cw("ab")).unwrap(), 0);
        let rep = realize(&surf("torus1")).unwrap();
        assert_eq!(count_self_numeric(&rep, &cw("a")).unwrap(), 0);
        assert_eq!(count_self_numeric(&rep, &cw("aB")).unwrap(), 0);
    }

    #[test]
    fn figure_eight_crosses_once() {
        let rep = realize(&surf("pants")).unwrap();
        assert_eq!(count_self_numeric(&rep, &cw("aB")).unwrap(), 1);
    }

    #[test]
    fn torus_generators_cross_once() {
        let rep = realize(&surf("torus1")).unwrap();
        assert_eq!(
            count_pair_numeric(&rep, &cw("a"), &cw("b")).unwrap(),
            1
        );
    }

    #[test]
    fn pants_cuffs_disjoint() {
        let rep = realize(&surf("pants")).unwrap();
        assert_eq!(
            count_pair_numeric(&rep, &cw("a"), &cw("b")).unwrap(),
            0
        );
    }

    #[test]
    fn powers_rejected_for_self() {
        let rep = realize(&surf("pants")).unwrap();
        assert!(count_self_numeric(&rep, &cw("abab")).is_err());
    }

    #[test]
    fn common_roots_rejected_for_pairs() {
        let rep = realize(&surf("pants")).unwrap();
        assert!(count_pair_numeric(&rep, &cw("ab"), &cw("abab")).is_err());
        assert!(count_pair_numeric(&rep, &cw("ab"), &cw("BA")).is_err());
    }

    #[test]
    fn annulus_core_is_embedded() {
        let rep = realize(&surf("annulus")).unwrap();
        assert_eq!(count_self_numeric(&rep, &cw("a")).unwrap(), 0);
    }

    #[test]
    fn radius_stability() {
        let rep = realize(&surf("pants")).unwrap();
        for word in ["aB", "aaB", "abaB"] {
            let c = cw(word);
            let base = count_self_numeric_with_radius(&rep, &c, c.len() + 4).unwrap();
            let wide = count_self_numeric_with_radius(&rep, &c, c.len() + 6).unwrap();
            assert_eq!(base, wide, "radius instability for {word}");
        }
    }
}
