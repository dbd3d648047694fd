//! Full invariant reports for closed curves on surfaces.
//!
//! A report combines the minimal crossing numbers of a free homotopy class
//! (or a pair of classes) with the matching equivalence-class counts and a
//! structural inventory of those classes. Counting happens once, on the
//! primitive root, through [`crate::geodesic`]; everything else follows
//! closed formulas driven by the power exponent, the orientation behavior
//! of the root, and the surface type.

use std::fmt;

use crate::error::{Error, Result};
use crate::geodesic;
use crate::surface::{orientation_character, Pi1, SurfaceSpec};
use crate::words::{primitive_root, CyclicWord};

/// A class count that may be infinite: free groups of rank at least two
/// have infinitely many double cosets of a pair of cyclic subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl Count {
    pub fn is_finite(self) -> bool {
        matches!(self, Count::Finite(_))
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => write!(f, "infinite"),
        }
    }
}

/// Which formula family produced a report. The label is part of the
/// machine-readable output contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Contractible,
    FinitePi1,
    ProjectivePair,
    RankOneClosedForm,
    SelfPlain,
    SelfSpecial,
    PairDistinctRoots,
    PairCommonRoot,
    PairSpecial,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::Contractible => "contractible",
            Branch::FinitePi1 => "finite-pi1",
            Branch::ProjectivePair => "rp2-pair",
            Branch::RankOneClosedForm => "rank1-closed-form",
            Branch::SelfPlain => "thm5a",
            Branch::SelfSpecial => "thm5b",
            Branch::PairDistinctRoots => "thm6a-no-common-root",
            Branch::PairCommonRoot => "thm6a-common-root",
            Branch::PairSpecial => "thm6b",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Primitive decomposition and orientation data of one curve class.
#[derive(Clone, Debug)]
pub struct CurveClass {
    pub surface: SurfaceSpec,
    pub word: CyclicWord,
    pub root: CyclicWord,
    pub k: u32,
    pub orientation: i8,
    pub special: bool,
}

/// Structure of the equivalence classes behind a report. Quantities the
/// formulas only bound from below are stored as explicit lower bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassInventory {
    pub essential_nonspecial: u64,
    pub essential_special: u64,
    pub nonessential_special_lower_bound: u64,
    pub geometrically_special: u64,
    pub trivial_class_present: bool,
    pub defective_special: bool,
    pub min_points_per_special_class: u64,
}

impl ClassInventory {
    fn empty() -> ClassInventory {
        ClassInventory {
            essential_nonspecial: 0,
            essential_special: 0,
            nonessential_special_lower_bound: 0,
            geometrically_special: 0,
            trivial_class_present: false,
            defective_special: false,
            min_points_per_special_class: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SelfReport {
    pub mi: u64,
    pub ni: u64,
    pub ni_star: u64,
    pub mi_geom: u64,
    pub ni_geom: u64,
    pub ni_star_geom: u64,
    pub ri: Count,
    pub ri_geom: Count,
    pub wecken: bool,
    pub wecken_geom: bool,
    pub inventory: ClassInventory,
    pub k_prime: Option<u32>,
    pub branch: Branch,
}

#[derive(Clone, Debug)]
pub struct PairReport {
    pub mi: u64,
    pub ni: u64,
    pub ni_star: u64,
    pub ri: Count,
    pub wecken: bool,
    pub special_pair: bool,
    pub inventory: ClassInventory,
    pub branch: Branch,
}

/// Common-root structure of a pair of curve classes. `l` is negative when
/// the second root matches the first only after inversion.
#[derive(Clone, Debug)]
pub struct PairClassification {
    pub special_pair: bool,
    pub common_root: Option<CyclicWord>,
    pub k: i64,
    pub l: i64,
}

fn delta(k: u64) -> u64 {
    u64::from(k % 2 == 0)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn rp2_nontrivial(c: &CyclicWord) -> bool {
    c.len() % 2 == 1
}

/// Primitive decomposition, orientation behavior and speciality of a curve.
///
/// A class is special when it preserves orientation, is noncontractible and
/// is a proper power. On the plane, the sphere and the projective plane no
/// class is special; projective plane words are first reduced modulo the
/// order-two relation.
pub fn classify_curve(s: &SurfaceSpec, c: &CyclicWord) -> Result<CurveClass> {
    s.check_word(&c.linear())?;
    let (root, k) = match s {
        SurfaceSpec::Plane | SurfaceSpec::Sphere => (CyclicWord::parse("")?, 1),
        SurfaceSpec::ProjectivePlane => {
            if rp2_nontrivial(c) {
                (CyclicWord::parse("a")?, 1)
            } else {
                (CyclicWord::parse("")?, 1)
            }
        }
        SurfaceSpec::Fatgraph(_) => {
            if c.is_empty() {
                (CyclicWord::parse("")?, 1)
            } else {
                let d = primitive_root(c)?;
                (d.root, d.k)
            }
        }
    };
    let orientation = orientation_character(s, &c.linear())?;
    let special = matches!(s, SurfaceSpec::Fatgraph(_))
        && orientation == 1
        && !c.is_empty()
        && k > 1;
    Ok(CurveClass {
        surface: s.clone(),
        word: c.clone(),
        root,
        k,
        orientation,
        special,
    })
}

/// Common-root detection for a pair of classes. A pair is special when the
/// roots agree up to inversion and both curves reverse orientation; on the
/// projective plane, when both classes are nontrivial.
pub fn classify_pair(
    s: &SurfaceSpec,
    c1: &CyclicWord,
    c2: &CyclicWord,
) -> Result<PairClassification> {
    s.check_word(&c1.linear())?;
    s.check_word(&c2.linear())?;
    match s {
        SurfaceSpec::Plane | SurfaceSpec::Sphere => Ok(PairClassification {
            special_pair: false,
            common_root: None,
            k: 0,
            l: 0,
        }),
        SurfaceSpec::ProjectivePlane => {
            let (t1, t2) = (rp2_nontrivial(c1), rp2_nontrivial(c2));
            Ok(PairClassification {
                special_pair: t1 && t2,
                common_root: if t1 && t2 {
                    Some(CyclicWord::parse("a")?)
                } else {
                    None
                },
                k: i64::from(t1),
                l: i64::from(t2),
            })
        }
        SurfaceSpec::Fatgraph(_) => {
            if c1.is_empty() || c2.is_empty() {
                return Ok(PairClassification {
                    special_pair: false,
                    common_root: None,
                    k: (c1.len() > 0) as i64 * exponent_of(c1)?,
                    l: (c2.len() > 0) as i64 * exponent_of(c2)?,
                });
            }
            let r1 = primitive_root(c1)?;
            let r2 = primitive_root(c2)?;
            let (common, l) = if r1.root == r2.root {
                (Some(r1.root.clone()), i64::from(r2.k))
            } else if r1.root == r2.root.inverse() {
                (Some(r1.root.clone()), -i64::from(r2.k))
            } else {
                (None, i64::from(r2.k))
            };
            let both_reverse = orientation_character(s, &c1.linear())? == -1
                && orientation_character(s, &c2.linear())? == -1;
            Ok(PairClassification {
                special_pair: common.is_some() && both_reverse,
                common_root: common,
                k: i64::from(r1.k),
                l,
            })
        }
    }
}

fn exponent_of(c: &CyclicWord) -> Result<i64> {
    if c.is_empty() {
        Ok(0)
    } else {
        Ok(i64::from(primitive_root(c)?.k))
    }
}

struct TheoremFields {
    mi: u64,
    ni: u64,
    mi_geom: u64,
    ni_geom: u64,
    inventory: ClassInventory,
    k_prime: Option<u32>,
}

/// Crossing-count formulas for one curve, driven by the ordered count of
/// the primitive root. Nonspecial classes reach their class count exactly;
/// special ones overshoot it by twice k'-1, where k' halves for an
/// orientation-reversing root.
fn theorem_fields(s: &SurfaceSpec, class: &CurveClass) -> Result<TheoremFields> {
    let n = geodesic::count_self(s, &class.root)?;
    let ni0 = 2 * n;
    let k = u64::from(class.k);
    if !class.special {
        // a nonspecial power has odd exponent: either the curve is
        // primitive or the root reverses orientation
        debug_assert!(k % 2 == 1);
        let mi = k * k * ni0 + (k - 1);
        let mi_geom = k * k * n + (k - 1) / 2;
        Ok(TheoremFields {
            mi,
            ni: mi,
            mi_geom,
            ni_geom: mi_geom,
            inventory: ClassInventory {
                essential_nonspecial: k * k * ni0,
                essential_special: k - 1,
                nonessential_special_lower_bound: 0,
                geometrically_special: 0,
                trivial_class_present: false,
                defective_special: k > 1,
                min_points_per_special_class: 1,
            },
            k_prime: None,
        })
    } else {
        let root_reverses = orientation_character(s, &class.root.linear())? == -1;
        let kp = if root_reverses { k / 2 } else { k };
        let mi = k * k * ni0 + 2 * (kp - 1);
        let ni = k * k * ni0;
        Ok(TheoremFields {
            mi,
            ni,
            mi_geom: k * k * n + (kp - 1),
            ni_geom: k * k * n + delta(kp),
            inventory: ClassInventory {
                essential_nonspecial: ni,
                essential_special: 0,
                nonessential_special_lower_bound: kp - 1,
                geometrically_special: delta(kp),
                trivial_class_present: false,
                defective_special: kp > 1,
                min_points_per_special_class: 2,
            },
            k_prime: Some(kp as u32),
        })
    }
}

struct RankOneForms {
    mi: u64,
    ni: u64,
    mi_geom: u64,
    ni_geom: u64,
    ri: u64,
    ri_geom: u64,
}

/// Closed forms on the two rank-one surfaces, written independently of the
/// general formulas; the report constructor requires both routes to agree.
fn rank_one_forms(twisted: bool, k: u64) -> RankOneForms {
    let common = RankOneForms {
        mi: 0,
        ni: 0,
        mi_geom: 0,
        ni_geom: 0,
        ri: k,
        ri_geom: k / 2 + 1,
    };
    if !twisted {
        RankOneForms {
            mi: 2 * k - 2,
            mi_geom: k - 1,
            ni_geom: delta(k),
            ..common
        }
    } else if k % 2 == 1 {
        RankOneForms {
            mi: k - 1,
            ni: k - 1,
            mi_geom: (k - 1) / 2,
            ni_geom: (k - 1) / 2,
            ..common
        }
    } else {
        RankOneForms {
            mi: k - 2,
            mi_geom: (k - 1) / 2,
            ni_geom: delta(k / 2),
            ..common
        }
    }
}

fn zero_self(ri: Count, branch: Branch) -> SelfReport {
    SelfReport {
        mi: 0,
        ni: 0,
        ni_star: 0,
        mi_geom: 0,
        ni_geom: 0,
        ni_star_geom: 0,
        ri,
        ri_geom: ri,
        wecken: true,
        wecken_geom: true,
        inventory: ClassInventory::empty(),
        k_prime: None,
        branch,
    }
}

/// Full invariant report for the self-intersection of one curve class.
pub fn self_report(s: &SurfaceSpec, c: &CyclicWord) -> Result<SelfReport> {
    let class = classify_curve(s, c)?;
    let rank = match s.profile().pi1 {
        Pi1::Trivial => return Ok(zero_self(Count::Finite(1), Branch::FinitePi1)),
        Pi1::OrderTwo => {
            let ri = if rp2_nontrivial(c) { 1 } else { 2 };
            return Ok(zero_self(Count::Finite(ri), Branch::FinitePi1));
        }
        Pi1::InfiniteCyclic => 1,
        Pi1::Free(r) => r,
    };
    if c.is_empty() {
        return Ok(zero_self(Count::Infinite, Branch::Contractible));
    }
    if rank == 0 {
        return Ok(zero_self(Count::Finite(1), Branch::FinitePi1));
    }
    let t = theorem_fields(s, &class)?;
    let (ri, ri_geom, branch) = if rank == 1 {
        let twisted = s.fatgraph().is_some_and(|g| g.has_twists());
        let forms = rank_one_forms(twisted, u64::from(class.k));
        if (forms.mi, forms.ni, forms.mi_geom, forms.ni_geom)
            != (t.mi, t.ni, t.mi_geom, t.ni_geom)
        {
            return Err(Error::Internal(format!(
                "closed forms disagree with the general formulas for {c}"
            )));
        }
        (
            Count::Finite(forms.ri),
            Count::Finite(forms.ri_geom),
            Branch::RankOneClosedForm,
        )
    } else {
        let branch = if class.special {
            Branch::SelfSpecial
        } else {
            Branch::SelfPlain
        };
        (Count::Infinite, Count::Infinite, branch)
    };
    let report = SelfReport {
        mi: t.mi,
        ni: t.ni,
        ni_star: t.ni,
        mi_geom: t.mi_geom,
        ni_geom: t.ni_geom,
        ni_star_geom: t.ni_geom,
        ri,
        ri_geom,
        wecken: t.mi == t.ni,
        wecken_geom: t.mi_geom == t.ni_geom,
        inventory: t.inventory,
        k_prime: t.k_prime,
        branch,
    };
    debug_assert_eq!(report.mi, 2 * report.mi_geom);
    debug_assert!(report.mi >= report.ni_star && report.ni_star >= report.ni);
    debug_assert!(2 * report.ni_geom >= report.ni);
    Ok(report)
}

fn zero_pair(ri: Count, branch: Branch) -> PairReport {
    PairReport {
        mi: 0,
        ni: 0,
        ni_star: 0,
        ri,
        wecken: true,
        special_pair: false,
        inventory: ClassInventory::empty(),
        branch,
    }
}

/// Full invariant report for the intersection of two curve classes.
pub fn pair_report(s: &SurfaceSpec, c1: &CyclicWord, c2: &CyclicWord) -> Result<PairReport> {
    let pc = classify_pair(s, c1, c2)?;
    let rank = match s.profile().pi1 {
        Pi1::Trivial => return Ok(zero_pair(Count::Finite(1), Branch::FinitePi1)),
        Pi1::OrderTwo => {
            if pc.special_pair {
                return Ok(PairReport {
                    mi: 1,
                    ni: 1,
                    ni_star: 1,
                    ri: Count::Finite(1),
                    wecken: true,
                    special_pair: true,
                    inventory: ClassInventory {
                        essential_special: 1,
                        trivial_class_present: true,
                        defective_special: true,
                        ..ClassInventory::empty()
                    },
                    branch: Branch::ProjectivePair,
                });
            }
            let trivial = usize::from(!rp2_nontrivial(c1)) + usize::from(!rp2_nontrivial(c2));
            let ri = if trivial == 2 { 2 } else { 1 };
            return Ok(zero_pair(Count::Finite(ri), Branch::FinitePi1));
        }
        Pi1::InfiniteCyclic => 1,
        Pi1::Free(r) => r,
    };
    if rank == 0 {
        return Ok(zero_pair(Count::Finite(1), Branch::FinitePi1));
    }
    let rank_one_ri = |k: u64, l: u64| {
        let g = gcd(k, l);
        if g == 0 {
            Count::Infinite
        } else {
            Count::Finite(g)
        }
    };
    if c1.is_empty() || c2.is_empty() {
        let ri = if rank == 1 {
            rank_one_ri(c1.len() as u64, c2.len() as u64)
        } else {
            Count::Infinite
        };
        return Ok(zero_pair(ri, Branch::Contractible));
    }
    let (k, l) = (pc.k.unsigned_abs(), pc.l.unsigned_abs());
    let ri = if rank == 1 {
        rank_one_ri(k, l)
    } else {
        Count::Infinite
    };
    let report = match &pc.common_root {
        None => {
            let mi = geodesic::count_pair(s, c1, c2)?;
            PairReport {
                mi,
                ni: mi,
                ni_star: mi,
                ri,
                wecken: true,
                special_pair: false,
                inventory: ClassInventory {
                    essential_nonspecial: mi,
                    ..ClassInventory::empty()
                },
                branch: Branch::PairDistinctRoots,
            }
        }
        Some(root) => {
            let ni0 = 2 * geodesic::count_self(s, root)?;
            let base = k * l * ni0;
            if pc.special_pair {
                let g = gcd(k, l);
                let m = k.min(l);
                PairReport {
                    mi: base + m,
                    ni: base + g,
                    ni_star: base + g,
                    ri,
                    wecken: m == g,
                    special_pair: true,
                    inventory: ClassInventory {
                        essential_nonspecial: base,
                        essential_special: g,
                        nonessential_special_lower_bound: 0,
                        geometrically_special: 0,
                        trivial_class_present: true,
                        defective_special: true,
                        min_points_per_special_class: m / g,
                    },
                    branch: Branch::PairSpecial,
                }
            } else {
                PairReport {
                    mi: base,
                    ni: base,
                    ni_star: base,
                    ri,
                    wecken: true,
                    special_pair: false,
                    inventory: ClassInventory {
                        essential_nonspecial: base,
                        ..ClassInventory::empty()
                    },
                    branch: Branch::PairCommonRoot,
                }
            }
        }
    };
    debug_assert!(report.mi >= report.ni_star && report.ni_star >= report.ni);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(name: &str) -> SurfaceSpec {
        SurfaceSpec::parse(name).unwrap()
    }

    fn cyc(w: &str) -> CyclicWord {
        CyclicWord::parse(w).unwrap()
    }

    fn power(base: &str, k: usize) -> CyclicWord {
        CyclicWord::parse(&base.repeat(k)).unwrap()
    }

    #[test]
    fn cylinder_table() {
        let s = surf("annulus");
        for k in 1..=8u64 {
            let r = self_report(&s, &power("a", k as usize)).unwrap();
            assert_eq!(r.mi, 2 * k - 2, "k={k}");
            assert_eq!(r.ni, 0);
            assert_eq!(r.ni_star, 0);
            assert_eq!(r.mi_geom, k - 1);
            assert_eq!(r.ni_geom, delta(k));
            assert_eq!(r.ri, Count::Finite(k));
            assert_eq!(r.ri_geom, Count::Finite(k / 2 + 1));
            assert_eq!(r.wecken, k == 1);
            assert_eq!(r.wecken_geom, k <= 2);
            assert_eq!(r.branch, Branch::RankOneClosedForm);
            assert_eq!(r.k_prime, if k > 1 { Some(k as u32) } else { None });
        }
    }

    #[test]
    fn moebius_table() {
        let s = surf("moebius");
        for k in 1..=8u64 {
            let r = self_report(&s, &power("a", k as usize)).unwrap();
            if k % 2 == 1 {
                assert_eq!(r.mi, k - 1, "k={k}");
                assert_eq!(r.ni, k - 1);
                assert_eq!(r.mi_geom, (k - 1) / 2);
                assert_eq!(r.ni_geom, (k - 1) / 2);
                assert!(r.wecken);
                assert_eq!(r.k_prime, None);
            } else {
                assert_eq!(r.mi, k - 2, "k={k}");
                assert_eq!(r.ni, 0);
                assert_eq!(r.mi_geom, k / 2 - 1);
                assert_eq!(r.ni_geom, delta(k / 2));
                assert_eq!(r.wecken, k == 2);
                assert_eq!(r.k_prime, Some((k / 2) as u32));
            }
            assert_eq!(r.ri, Count::Finite(k));
            assert_eq!(r.ri_geom, Count::Finite(k / 2 + 1));
            assert_eq!(r.branch, Branch::RankOneClosedForm);
        }
    }

    #[test]
    fn annulus_cube_inventory() {
        let r = self_report(&surf("annulus"), &cyc("aaa")).unwrap();
        assert_eq!((r.mi, r.ni, r.mi_geom, r.ni_geom), (4, 0, 2, 0));
        assert_eq!(r.ri, Count::Finite(3));
        assert!(!r.wecken);
        assert_eq!(r.inventory.nonessential_special_lower_bound, 2);
        assert_eq!(r.inventory.min_points_per_special_class, 2);
        assert_eq!(r.inventory.geometrically_special, 0);
    }

    #[test]
    fn moebius_cube_inventory() {
        let r = self_report(&surf("moebius"), &cyc("aaa")).unwrap();
        assert_eq!((r.mi, r.ni, r.ni_star), (2, 2, 2));
        assert_eq!((r.mi_geom, r.ni_geom), (1, 1));
        assert_eq!(r.ri, Count::Finite(3));
        assert_eq!(r.ri_geom, Count::Finite(2));
        assert!(r.wecken);
        assert_eq!(r.inventory.essential_special, 2);
        assert_eq!(r.inventory.essential_nonspecial, 0);
        assert!(r.inventory.defective_special);
        assert!(!r.inventory.trivial_class_present);
    }

    #[test]
    fn moebius_fourth_power() {
        let r = self_report(&surf("moebius"), &cyc("aaaa")).unwrap();
        assert_eq!((r.mi, r.ni), (2, 0));
        assert_eq!((r.mi_geom, r.ni_geom), (1, 1));
        assert_eq!(r.k_prime, Some(2));
        assert_eq!(r.inventory.geometrically_special, 1);
        assert!(!r.wecken);
        assert!(r.wecken_geom);
    }

    #[test]
    fn pants_figure_eight_primitive() {
        let r = self_report(&surf("pants"), &cyc("aB")).unwrap();
        assert_eq!((r.mi, r.ni, r.ni_star), (2, 2, 2));
        assert_eq!((r.mi_geom, r.ni_geom), (1, 1));
        assert_eq!(r.ri, Count::Infinite);
        assert_eq!(r.branch, Branch::SelfPlain);
        assert!(r.wecken);
        assert_eq!(r.inventory.essential_nonspecial, 2);
        assert_eq!(r.inventory.essential_special, 0);
    }

    #[test]
    fn pants_figure_eight_squared() {
        let r = self_report(&surf("pants"), &cyc("aBaB")).unwrap();
        assert_eq!((r.mi, r.ni, r.ni_star), (10, 8, 8));
        assert_eq!((r.mi_geom, r.ni_geom), (5, 5));
        assert_eq!(r.k_prime, Some(2));
        assert_eq!(r.branch, Branch::SelfSpecial);
        assert!(!r.wecken);
        assert!(r.wecken_geom);
        assert_eq!(r.inventory.nonessential_special_lower_bound, 1);
        assert_eq!(r.inventory.min_points_per_special_class, 2);
    }

    #[test]
    fn trivial_and_small_pi1_cases() {
        let r = self_report(&surf("plane"), &cyc("a")).unwrap();
        assert_eq!((r.mi, r.ni), (0, 0));
        assert_eq!(r.ri, Count::Finite(1));
        assert_eq!(r.branch, Branch::FinitePi1);

        let r = self_report(&surf("rp2"), &cyc("a")).unwrap();
        assert_eq!((r.mi, r.ni), (0, 0));
        assert_eq!(r.ri, Count::Finite(1));

        let r = self_report(&surf("rp2"), &cyc("")).unwrap();
        assert_eq!(r.ri, Count::Finite(2));

        let r = self_report(&surf("pants"), &cyc("")).unwrap();
        assert_eq!(r.branch, Branch::Contractible);
        assert_eq!(r.ri, Count::Infinite);
        assert_eq!((r.mi, r.ni), (0, 0));
    }

    #[test]
    fn speciality_classification() {
        let c = classify_curve(&surf("annulus"), &cyc("aaa")).unwrap();
        assert!(c.special);
        assert_eq!((c.k, c.orientation), (3, 1));

        let c = classify_curve(&surf("moebius"), &cyc("aaa")).unwrap();
        assert!(!c.special);
        assert_eq!(c.orientation, -1);

        let c = classify_curve(&surf("moebius"), &cyc("aa")).unwrap();
        assert!(c.special);
        assert_eq!(c.orientation, 1);

        let c = classify_curve(&surf("pants"), &cyc("aB")).unwrap();
        assert!(!c.special);
        assert_eq!(c.k, 1);
    }

    #[test]
    fn pair_classification() {
        let pc = classify_pair(&surf("moebius"), &cyc("a"), &cyc("aaa")).unwrap();
        assert!(pc.special_pair);
        assert_eq!((pc.k, pc.l), (1, 3));

        let pc = classify_pair(&surf("annulus"), &cyc("a"), &cyc("aa")).unwrap();
        assert!(!pc.special_pair);
        assert!(pc.common_root.is_some());

        let pc = classify_pair(&surf("pants"), &cyc("aB"), &cyc("ab")).unwrap();
        assert!(!pc.special_pair);
        assert!(pc.common_root.is_none());

        let pc = classify_pair(&surf("pants"), &cyc("ab"), &cyc("BABA")).unwrap();
        assert!(pc.common_root.is_some());
        assert_eq!((pc.k, pc.l), (1, -2));
    }

    #[test]
    fn moebius_pair_reports() {
        let s = surf("moebius");
        let r = pair_report(&s, &cyc("a"), &cyc("aaa")).unwrap();
        assert_eq!((r.mi, r.ni, r.ni_star), (1, 1, 1));
        assert_eq!(r.ri, Count::Finite(1));
        assert!(r.wecken);
        assert_eq!(r.branch, Branch::PairSpecial);
        assert_eq!(r.inventory.essential_special, 1);
        assert!(r.inventory.defective_special);

        let r = pair_report(&s, &cyc("aaa"), &power("a", 5)).unwrap();
        assert_eq!((r.mi, r.ni), (3, 1));
        assert!(!r.wecken);
        assert_eq!(r.inventory.min_points_per_special_class, 3);

        let r = pair_report(&s, &cyc("a"), &cyc("aa")).unwrap();
        assert_eq!((r.mi, r.ni), (0, 0));
        assert_eq!(r.branch, Branch::PairCommonRoot);
        assert_eq!(r.ri, Count::Finite(1));
    }

    #[test]
    fn annulus_pair_reports() {
        let s = surf("annulus");
        let r = pair_report(&s, &cyc("a"), &cyc("aa")).unwrap();
        assert_eq!((r.mi, r.ni), (0, 0));
        assert_eq!(r.ri, Count::Finite(1));
        assert!(!r.special_pair);

        let r = pair_report(&s, &power("a", 4), &power("a", 6)).unwrap();
        assert_eq!(r.ri, Count::Finite(2));

        let r = pair_report(&s, &cyc(""), &cyc("aa")).unwrap();
        assert_eq!(r.branch, Branch::Contractible);
        assert_eq!(r.ri, Count::Finite(2));

        let r = pair_report(&s, &cyc(""), &cyc("")).unwrap();
        assert_eq!(r.ri, Count::Infinite);
    }

    #[test]
    fn projective_pair_reports() {
        let s = surf("rp2");
        let r = pair_report(&s, &cyc("a"), &cyc("a")).unwrap();
        assert_eq!((r.mi, r.ni, r.ni_star), (1, 1, 1));
        assert_eq!(r.ri, Count::Finite(1));
        assert!(r.special_pair);
        assert_eq!(r.branch, Branch::ProjectivePair);
        assert!(r.inventory.trivial_class_present);

        let r = pair_report(&s, &cyc("a"), &cyc("aa")).unwrap();
        assert_eq!((r.mi, r.ni), (0, 0));
        assert_eq!(r.ri, Count::Finite(1));
        assert_eq!(r.branch, Branch::FinitePi1);
    }

    #[test]
    fn rank_two_pair_reports() {
        let t = surf("torus1");
        let r = pair_report(&t, &cyc("a"), &cyc("b")).unwrap();
        assert_eq!((r.mi, r.ni, r.ni_star), (1, 1, 1));
        assert_eq!(r.ri, Count::Infinite);
        assert!(r.wecken);
        assert_eq!(r.branch, Branch::PairDistinctRoots);

        let r = pair_report(&t, &cyc("aa"), &cyc("bbb")).unwrap();
        assert_eq!(r.mi, 6);

        let r = pair_report(&t, &cyc("aabb"), &power("aabb", 2)).unwrap();
        assert_eq!(r.branch, Branch::PairCommonRoot);
        assert_eq!((r.mi, r.ni), (4, 4));

        let p = surf("pants");
        let r = pair_report(&p, &cyc("aB"), &cyc("ab")).unwrap();
        assert_eq!((r.mi, r.ni), (0, 0));
        assert_eq!(r.branch, Branch::PairDistinctRoots);
    }

    #[test]
    fn twisted_rank_two_special_pair() {
        let s = surf("fatgraph:order=a+,a-,b+,b-;twists=a");
        let r = pair_report(&s, &cyc("a"), &cyc("aaa")).unwrap();
        assert_eq!((r.mi, r.ni), (1, 1));
        assert_eq!(r.ri, Count::Infinite);
        assert_eq!(r.branch, Branch::PairSpecial);

        let r = pair_report(&s, &cyc("a"), &power("a", 5)).unwrap();
        assert_eq!((r.mi, r.ni), (1, 1));
        assert!(r.wecken);
    }

    #[test]
    fn power_law_on_rank_two() {
        let p = surf("pants");
        for k in 2..=3u64 {
            let r = self_report(&p, &power("aB", k as usize)).unwrap();
            let n = 1;
            assert_eq!(r.mi, k * k * 2 * n + 2 * (k - 1));
            assert_eq!(r.ni, k * k * 2 * n);
            assert_eq!(r.mi_geom, k * k * n + (k - 1));
            assert_eq!(r.ni_geom, k * k * n + delta(k));
        }
    }

    #[test]
    fn report_chain_inequalities() {
        for (s, w) in [
            ("annulus", "aaaa"),
            ("moebius", "aaaaa"),
            ("pants", "aB"),
            ("pants", "aBaB"),
            ("pants", "aabb"),
            ("torus1", "aabb"),
        ] {
            let r = self_report(&surf(s), &cyc(w)).unwrap();
            assert_eq!(r.mi, 2 * r.mi_geom, "{s} {w}");
            assert!(r.mi >= r.ni_star && r.ni_star >= r.ni);
            assert!(2 * r.ni_geom >= r.ni);
            assert_eq!(
                r.ni,
                r.inventory.essential_nonspecial + r.inventory.essential_special
            );
        }
    }
}
