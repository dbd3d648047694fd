//! Exact crossing counts from the circular order at infinity.
//!
//! A closed curve on a one-vertex ribbon graph lifts to a family of lines in
//! the universal cover tree, one line per conjugate of its cyclic word. Two
//! lines cross exactly when their endpoint pairs link in the circular order
//! on the boundary of the tree, and crossings of the projected curves are
//! linked pairs up to the deck action of the curve word. Everything here is
//! word arithmetic; the floating point engine in [`crate::oracle`] computes
//! the same counts from hyperbolic matrices and serves as an independent
//! check on orientable surfaces.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::surface::{Dart, Fatgraph, SurfaceSpec};
use crate::words::{conjugate_eq, primitive_root, CyclicWord, Letter, Word};

/// One end of a lifted line, read as an infinite reduced ray from a vertex
/// it passes through. Forward rays spell the cyclic word from `base`;
/// backward rays spell inverted letters before `base`.
struct Ray<'a> {
    word: &'a CyclicWord,
    base: i64,
    forward: bool,
}

impl Ray<'_> {
    fn letter(&self, k: i64) -> Letter {
        if self.forward {
            self.word.letter_mod(self.base + k)
        } else {
            self.word.letter_mod(self.base - 1 - k).inverted()
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Orders two distinct rays from the same vertex in the boundary circle,
/// cut at the reference point of that vertex.
///
/// The rays are walked together; transporting the vertex's dart order along
/// a twisted letter reverses it, which `flipped` tracks. At the divergence
/// the continuations are ranked from the dart pointing back along the common
/// prefix, matching the order their endpoints appear at infinity. Both rays
/// are periodic, so agreement past one common period means equal rays, and
/// equal rays mean two lines sharing an endpoint, which distinct lines of a
/// free group never do.
fn compare_rays(g: &Fatgraph, r1: &Ray, r2: &Ray) -> Result<Ordering> {
    let n = g.darts().len();
    let (l1, l2) = (r1.word.len(), r2.word.len());
    let bound = (2 * l1 * l2 / gcd(l1, l2) + l1.max(l2)) as i64;
    let mut flipped = false;
    let mut entry: Option<Letter> = None;
    for k in 0..bound {
        let (x, y) = (r1.letter(k), r2.letter(k));
        if x == y {
            if g.is_twisted(x.gen) {
                flipped = !flipped;
            }
            entry = Some(x.inverted());
            continue;
        }
        let pos = |l: Letter| {
            let p = g.dart_position(Dart::for_letter(l));
            if flipped {
                n - 1 - p
            } else {
                p
            }
        };
        let (px, py) = (pos(x), pos(y));
        return Ok(match entry {
            Some(e) => {
                let pe = pos(e);
                ((px + n - pe) % n).cmp(&((py + n - pe) % n))
            }
            None => px.cmp(&py),
        });
    }
    Err(Error::Internal(
        "distinct lines agree beyond their periodicity bound".into(),
    ))
}

/// Vertex on the line of `c` at signed position `m` from its base vertex.
fn vertex_word(c: &CyclicWord, m: i64) -> Word {
    if m >= 0 {
        Word::from_letters((0..m).map(|t| c.letter_mod(t)))
    } else {
        Word::from_letters((1..=-m).map(|t| c.letter_mod(-t).inverted()))
    }
}

/// Whether the vertex `q` lies on the line of `h`: conjugating `h` back by
/// `q` is cyclically reduced exactly on the line, where it has the cyclic
/// length of the class.
fn on_line(h: &Word, q: &Word, cyclen: usize) -> bool {
    q.inverse().concat(h).concat(q).len() == cyclen
}

/// Whether the line of the conjugate `cand` rotated by `j` at the axis
/// vertex `i` crosses the axis, by linking of endpoint pairs.
fn linked_at_vertex(
    g: &Fatgraph,
    axis: &CyclicWord,
    i: i64,
    cand: &CyclicWord,
    j: usize,
) -> Result<bool> {
    let p_fwd = Ray { word: axis, base: i, forward: true };
    let p_back = Ray { word: axis, base: i, forward: false };
    let q_fwd = Ray { word: cand, base: j as i64, forward: true };
    let q_back = Ray { word: cand, base: j as i64, forward: false };
    let (lo, hi) = match compare_rays(g, &p_fwd, &p_back)? {
        Ordering::Less => (&p_fwd, &p_back),
        Ordering::Greater => (&p_back, &p_fwd),
        Ordering::Equal => return Err(Error::Internal("line ends coincide".into())),
    };
    let mut inside = [false; 2];
    for (slot, q) in [&q_fwd, &q_back].into_iter().enumerate() {
        let above = compare_rays(g, lo, q)? == Ordering::Less;
        let below = compare_rays(g, q, hi)? == Ordering::Less;
        inside[slot] = above && below;
    }
    Ok(inside[0] != inside[1])
}

/// Counts deck orbits of conjugates of `cand` whose lines cross the line of
/// `axis`, with both words cyclically reduced and primitive.
///
/// Crossing lines in a tree share a vertex, so every crossing conjugate
/// shows up as a rotation of `cand` conjugated to some axis vertex, and the
/// shared vertex set is a path along the axis. Conjugation by the axis word
/// shifts that path by the word length, so keeping only conjugates whose
/// lowest shared vertex falls in one fundamental window picks exactly one
/// representative per orbit.
fn crossing_orbits(
    g: &Fatgraph,
    axis: &CyclicWord,
    cand: &CyclicWord,
    skip_axis: bool,
) -> Result<usize> {
    let la = axis.len() as i64;
    let lc = cand.len();
    let axis_word = axis.linear();
    let scan_cap = 2 * (la as usize + lc) + 4;
    let mut seen: HashSet<Word> = HashSet::new();
    let mut linked = 0usize;
    for i in 0..la {
        let qi = vertex_word(axis, i);
        let qi_inv = qi.inverse();
        for j in 0..lc {
            let h = qi.concat(&cand.rotation(j)).concat(&qi_inv);
            if skip_axis && h == axis_word {
                continue;
            }
            if !seen.insert(h.clone()) {
                continue;
            }
            let mut m_lo = i;
            while on_line(&h, &vertex_word(axis, m_lo - 1), lc) {
                m_lo -= 1;
                if (i - m_lo) as usize > scan_cap {
                    return Err(Error::Internal(
                        "shared segment exceeds the primitivity bound".into(),
                    ));
                }
            }
            if m_lo < 0 {
                continue;
            }
            if linked_at_vertex(g, axis, i, cand, j)? {
                linked += 1;
            }
        }
    }
    Ok(linked)
}

fn require_graph(s: &SurfaceSpec) -> Result<&Fatgraph> {
    s.fatgraph().ok_or_else(|| {
        Error::Unsupported("crossing counts need a fat graph surface".into())
    })
}

fn check_curve(s: &SurfaceSpec, c: &CyclicWord) -> Result<()> {
    s.check_word(&c.linear())?;
    if c.is_empty() {
        return Err(Error::Unsupported(
            "crossing counts need a noncontractible curve".into(),
        ));
    }
    Ok(())
}

/// Geometric self-crossing count of a primitive closed curve.
///
/// Each crossing of the curve with itself lifts to two deck orbits of
/// crossing lines, one per branch, so the orbit count is halved. Free
/// groups are bi-orderable, hence no conjugate equals its own inverse and
/// the orbit count is always even.
pub fn count_self(s: &SurfaceSpec, c: &CyclicWord) -> Result<u64> {
    let g = require_graph(s)?;
    check_curve(s, c)?;
    if primitive_root(c)?.k != 1 {
        return Err(Error::Unsupported(
            "self-crossing counts take primitive curves only".into(),
        ));
    }
    let orbits = crossing_orbits(g, c, c, true)?;
    if orbits % 2 != 0 {
        return Err(Error::Internal(format!(
            "crossing orbits of {c} not paired: {orbits}"
        )));
    }
    Ok((orbits / 2) as u64)
}

/// Geometric crossing count of two closed curves whose unoriented primitive
/// roots differ; proper powers traverse the same line repeatedly, so the
/// root count scales by both exponents.
pub fn count_pair(s: &SurfaceSpec, c1: &CyclicWord, c2: &CyclicWord) -> Result<u64> {
    let g = require_graph(s)?;
    check_curve(s, c1)?;
    check_curve(s, c2)?;
    let r1 = primitive_root(c1)?;
    let r2 = primitive_root(c2)?;
    let w1 = r1.root.linear();
    let w2 = r2.root.linear();
    if conjugate_eq(&w1, &w2) || conjugate_eq(&w1, &w2.inverse()) {
        return Err(Error::Unsupported(
            "pair crossing counts need curves without a common root".into(),
        ));
    }
    let x = crossing_orbits(g, &r1.root, &r2.root, false)? as u64;
    Ok(u64::from(r1.k) * u64::from(r2.k) * x)
}
