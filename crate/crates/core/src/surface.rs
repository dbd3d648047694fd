//! Combinatorial surfaces.
//!
//! A surface with free fundamental group is described by a fat graph with one
//! vertex: a cyclic order on the `2g` dart ends of `g` band edges, plus a
//! twist flag per band. Reading a letter `x` travels through band `x` from
//! its `x+` end; reading `X` enters at the `x-` end. Three closed low-genus
//! surfaces (plane, sphere, projective plane) are carried as explicit cases
//! because their fundamental groups are not free of positive rank.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// One dart end at the fat graph vertex. `outgoing` is the `x+` end.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Dart {
    pub gen: u8,
    pub outgoing: bool,
}

impl Dart {
    /// The dart a curve leaves through when reading this letter.
    pub fn for_letter(l: Letter) -> Dart {
        Dart {
            gen: l.gen,
            outgoing: !l.inverse,
        }
    }
}

/// A one-vertex fat graph: the cyclic order of darts and the twisted bands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fatgraph {
    vertex_order: Vec<Dart>,
    twisted: Vec<bool>,
    /// position of (gen, outgoing) and (gen, incoming) in `vertex_order`
    positions: BTreeMap<(u8, bool), usize>,
}

impl Fatgraph {
    pub fn new(vertex_order: Vec<Dart>, twisted_gens: &[u8]) -> Result<Fatgraph> {
        if vertex_order.is_empty() {
            return Err(Error::NotAdmissible("fat graph with no bands".into()));
        }
        let mut positions = BTreeMap::new();
        for (i, d) in vertex_order.iter().enumerate() {
            if positions.insert((d.gen, d.outgoing), i).is_some() {
                return Err(Error::NotAdmissible(format!(
                    "dart {}{} listed twice",
                    (b'a' + d.gen) as char,
                    if d.outgoing { '+' } else { '-' }
                )));
            }
        }
        let gens: Vec<u8> = {
            let mut gs: Vec<u8> = positions.keys().map(|&(g, _)| g).collect();
            gs.dedup();
            gs
        };
        for &g in &gens {
            if !positions.contains_key(&(g, true)) || !positions.contains_key(&(g, false)) {
                return Err(Error::NotAdmissible(format!(
                    "band {} needs both a + and a - end",
                    (b'a' + g) as char
                )));
            }
        }
        let max_gen = gens.iter().copied().max().unwrap() as usize;
        let mut twisted = vec![false; max_gen + 1];
        for &g in twisted_gens {
            if !positions.contains_key(&(g, true)) {
                return Err(Error::NotAdmissible(format!(
                    "twist names unknown band {}",
                    (b'a' + g) as char
                )));
            }
            twisted[g as usize] = true;
        }
        Ok(Fatgraph {
            vertex_order,
            twisted,
            positions,
        })
    }

    pub fn rank(&self) -> usize {
        self.vertex_order.len() / 2
    }

    pub fn darts(&self) -> &[Dart] {
        &self.vertex_order
    }

    pub fn is_twisted(&self, gen: u8) -> bool {
        self.twisted.get(gen as usize).copied().unwrap_or(false)
    }

    pub fn has_twists(&self) -> bool {
        self.twisted.iter().any(|&t| t)
    }

    pub fn has_generator(&self, gen: u8) -> bool {
        self.positions.contains_key(&(gen, true))
    }

    /// Position of a dart in the cyclic vertex order.
    pub fn dart_position(&self, d: Dart) -> usize {
        self.positions[&(d.gen, d.outgoing)]
    }

    /// All letters readable on this surface, in vertex order of their darts.
    pub fn letters(&self) -> Vec<Letter> {
        self.vertex_order
            .iter()
            .map(|d| Letter::new(d.gen, !d.outgoing))
            .collect()
    }

    /// Number of boundary circles, by tracing the boundary along band sides
    /// and vertex corners.
    pub fn boundary_components(&self) -> usize {
        // Nodes are (dart index, side), side 0 just before the dart in the
        // cyclic order and side 1 just after. Corner arcs join (i, after) to
        // (i+1, before); band sides join the two ends of a band, exchanging
        // before/after exactly when the band is untwisted.
        let n = self.vertex_order.len();
        let node = |i: usize, side: usize| 2 * i + side;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
        for i in 0..n {
            let j = (i + 1) % n;
            adj[node(i, 1)].push(node(j, 0));
            adj[node(j, 0)].push(node(i, 1));
        }
        for (&(g, outgoing), &i) in &self.positions {
            if !outgoing {
                continue;
            }
            let j = self.positions[&(g, false)];
            if self.is_twisted(g) {
                adj[node(i, 0)].push(node(j, 0));
                adj[node(j, 0)].push(node(i, 0));
                adj[node(i, 1)].push(node(j, 1));
                adj[node(j, 1)].push(node(i, 1));
            } else {
                adj[node(i, 0)].push(node(j, 1));
                adj[node(j, 1)].push(node(i, 0));
                adj[node(i, 1)].push(node(j, 0));
                adj[node(j, 0)].push(node(i, 1));
            }
        }
        let mut seen = vec![false; 2 * n];
        let mut components = 0;
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if seen[v] {
                    continue;
                }
                seen[v] = true;
                stack.extend(adj[v].iter().copied().filter(|&u| !seen[u]));
            }
        }
        components
    }
}

/// A surface the library can compute on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SurfaceSpec {
    Plane,
    Sphere,
    ProjectivePlane,
    Fatgraph(Fatgraph),
}

/// Description of the fundamental group of a surface.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Pi1 {
    Trivial,
    OrderTwo,
    InfiniteCyclic,
    Free(usize),
}

/// Topological summary of a surface.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceProfile {
    pub boundary_components: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
    /// Genus when the surface is orientable and compact.
    pub genus: Option<usize>,
    pub pi1: Pi1,
}

impl SurfaceSpec {
    /// Parses a surface description.
    ///
    /// Accepted forms: the named surfaces `plane`, `sphere`, `rp2`,
    /// `annulus`, `moebius`, `pants`, `torus1`, and the general
    /// `fatgraph:order=a+,a-,b+,b-;twists=a` syntax (the `twists` part may be
    /// omitted). The closed names `torus` and `klein` are recognized but
    /// rejected: their fundamental groups fall outside the engine.
    pub fn parse(s: &str) -> Result<SurfaceSpec> {
        match s {
            "plane" => return Ok(SurfaceSpec::Plane),
            "sphere" => return Ok(SurfaceSpec::Sphere),
            "rp2" => return Ok(SurfaceSpec::ProjectivePlane),
            "annulus" => return SurfaceSpec::parse("fatgraph:order=a+,a-"),
            "moebius" => return SurfaceSpec::parse("fatgraph:order=a+,a-;twists=a"),
            "pants" => return SurfaceSpec::parse("fatgraph:order=a+,a-,b+,b-"),
            "torus1" => return SurfaceSpec::parse("fatgraph:order=a+,b+,a-,b-"),
            "torus" | "klein" => {
                return Err(Error::NotAdmissible(format!(
                    "closed surface {s:?} is not supported"
                )))
            }
            _ => {}
        }
        let Some(body) = s.strip_prefix("fatgraph:") else {
            return Err(Error::Parse(format!("unknown surface {s:?}")));
        };
        let mut order: Option<Vec<Dart>> = None;
        let mut twists: Vec<u8> = Vec::new();
        for part in body.split(';') {
            if let Some(list) = part.strip_prefix("order=") {
                let mut darts = Vec::new();
                for item in list.split(',') {
                    let item = item.trim();
                    let mut chars = item.chars();
                    let (Some(g), Some(sign), None) =
                        (chars.next(), chars.next(), chars.next())
                    else {
                        return Err(Error::Parse(format!("bad dart {item:?}")));
                    };
                    if !g.is_ascii_lowercase() {
                        return Err(Error::Parse(format!("bad dart generator {item:?}")));
                    }
                    let outgoing = match sign {
                        '+' => true,
                        '-' => false,
                        _ => return Err(Error::Parse(format!("bad dart sign {item:?}"))),
                    };
                    darts.push(Dart {
                        gen: g as u8 - b'a',
                        outgoing,
                    });
                }
                order = Some(darts);
            } else if let Some(list) = part.strip_prefix("twists=") {
                for item in list.split(',') {
                    let item = item.trim();
                    if item.is_empty() {
                        continue;
                    }
                    let mut chars = item.chars();
                    let (Some(g), None) = (chars.next(), chars.next()) else {
                        return Err(Error::Parse(format!("bad twist {item:?}")));
                    };
                    if !g.is_ascii_lowercase() {
                        return Err(Error::Parse(format!("bad twist {item:?}")));
                    }
                    twists.push(g as u8 - b'a');
                }
            } else if !part.is_empty() {
                return Err(Error::Parse(format!("unknown fatgraph field {part:?}")));
            }
        }
        let Some(order) = order else {
            return Err(Error::Parse("fatgraph needs an order= field".into()));
        };
        Ok(SurfaceSpec::Fatgraph(Fatgraph::new(order, &twists)?))
    }

    pub fn fatgraph(&self) -> Option<&Fatgraph> {
        match self {
            SurfaceSpec::Fatgraph(f) => Some(f),
            _ => None,
        }
    }

    /// Checks that a word only uses letters that exist on this surface.
    ///
    /// The plane and the sphere accept any letters (every loop is trivial
    /// there anyway); the projective plane accepts only powers of `a`.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        match self {
            SurfaceSpec::Plane | SurfaceSpec::Sphere => Ok(()),
            SurfaceSpec::ProjectivePlane => {
                if w.generators().iter().all(|&g| g == 0) {
                    Ok(())
                } else {
                    Err(Error::NotAdmissible(
                        "projective plane words use only the letter a".into(),
                    ))
                }
            }
            SurfaceSpec::Fatgraph(f) => {
                for g in w.generators() {
                    if !f.has_generator(g) {
                        return Err(Error::NotAdmissible(format!(
                            "generator {} does not exist on this surface",
                            (b'a' + g) as char
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    pub fn profile(&self) -> SurfaceProfile {
        match self {
            SurfaceSpec::Plane => SurfaceProfile {
                boundary_components: 0,
                euler_characteristic: 1,
                orientable: true,
                genus: None,
                pi1: Pi1::Trivial,
            },
            SurfaceSpec::Sphere => SurfaceProfile {
                boundary_components: 0,
                euler_characteristic: 2,
                orientable: true,
                genus: Some(0),
                pi1: Pi1::Trivial,
            },
            SurfaceSpec::ProjectivePlane => SurfaceProfile {
                boundary_components: 0,
                euler_characteristic: 1,
                orientable: false,
                genus: None,
                pi1: Pi1::OrderTwo,
            },
            SurfaceSpec::Fatgraph(f) => {
                let rank = f.rank();
                let b = f.boundary_components();
                let chi = 1 - rank as i64;
                let orientable = !f.has_twists();
                let genus = if orientable {
                    Some(((2 - chi - b as i64) / 2) as usize)
                } else {
                    None
                };
                SurfaceProfile {
                    boundary_components: b,
                    euler_characteristic: chi,
                    orientable,
                    genus,
                    pi1: if rank == 1 {
                        Pi1::InfiniteCyclic
                    } else {
                        Pi1::Free(rank)
                    },
                }
            }
        }
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceSpec::Plane => write!(f, "plane"),
            SurfaceSpec::Sphere => write!(f, "sphere"),
            SurfaceSpec::ProjectivePlane => write!(f, "rp2"),
            SurfaceSpec::Fatgraph(g) => {
                write!(f, "fatgraph:order=")?;
                for (i, d) in g.darts().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(
                        f,
                        "{}{}",
                        (b'a' + d.gen) as char,
                        if d.outgoing { '+' } else { '-' }
                    )?;
                }
                let twisted: Vec<char> = g
                    .darts()
                    .iter()
                    .filter(|d| d.outgoing && g.is_twisted(d.gen))
                    .map(|d| (b'a' + d.gen) as char)
                    .collect();
                if !twisted.is_empty() {
                    write!(f, ";twists=")?;
                    for (i, ch) in twisted.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{ch}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Whether a loop is orientation preserving (+1) or reversing (-1).
///
/// On a fat graph this is a homomorphism to {+1,-1} sending each twisted
/// band generator to -1. On the projective plane the generator itself
/// reverses orientation.
pub fn orientation_character(s: &SurfaceSpec, w: &Word) -> Result<i8> {
    s.check_word(w)?;
    match s {
        SurfaceSpec::Plane | SurfaceSpec::Sphere => Ok(1),
        SurfaceSpec::ProjectivePlane => Ok(if w.len() % 2 == 0 { 1 } else { -1 }),
        SurfaceSpec::Fatgraph(f) => {
            let twists = w.letters().iter().filter(|l| f.is_twisted(l.gen)).count();
            Ok(if twists % 2 == 0 { 1 } else { -1 })
        }
    }
}
