//! Frozen crossing counts from the numeric engine on small curves.
//!
//! Every value here was computed once and checked against the geometry by
//! hand (cuffs and simple loops are embedded, the figure eight crosses once,
//! one-holed-torus pairs meet in their homological intersection number).

use curves_core::oracle::{count_pair_numeric, count_self_numeric, realize};
use curves_core::{CyclicWord, SurfaceSpec};

fn self_count(surface: &str, word: &str) -> u64 {
    let s = SurfaceSpec::parse(surface).unwrap();
    let rep = realize(&s).unwrap();
    count_self_numeric(&rep, &CyclicWord::parse(word).unwrap()).unwrap()
}

fn pair_count(surface: &str, w1: &str, w2: &str) -> u64 {
    let s = SurfaceSpec::parse(surface).unwrap();
    let rep = realize(&s).unwrap();
    count_pair_numeric(
        &rep,
        &CyclicWord::parse(w1).unwrap(),
        &CyclicWord::parse(w2).unwrap(),
    )
    .unwrap()
}

#[test]
fn pants_self_counts() {
    assert_eq!(self_count("pants", "a"), 0);
    assert_eq!(self_count("pants", "b"), 0);
    assert_eq!(self_count("pants", "ab"), 0);
    assert_eq!(self_count("pants", "aB"), 1);
    assert_eq!(self_count("pants", "aaB"), 2);
    assert_eq!(self_count("pants", "abaB"), 2);
    assert_eq!(self_count("pants", "aabb"), 2);
    assert_eq!(self_count("pants", "aabab"), 2);
    assert_eq!(self_count("pants", "aabAB"), 4);
    // length seven curve whose deepest crossing orbit sits within a hair of
    // the axis endpoints at both stretch factors
    assert_eq!(self_count("pants", "aaBaBaB"), 12);
}

#[test]
fn torus_self_counts() {
    assert_eq!(self_count("torus1", "a"), 0);
    assert_eq!(self_count("torus1", "ab"), 0);
    assert_eq!(self_count("torus1", "aB"), 0);
    // the boundary class of the one-holed torus is embedded
    assert_eq!(self_count("torus1", "abAB"), 0);
    // primitive homology classes have simple representatives
    assert_eq!(self_count("torus1", "aab"), 0);
    assert_eq!(self_count("torus1", "aaB"), 0);
    assert_eq!(self_count("torus1", "aabb"), 1);
}

#[test]
fn pants_pair_counts() {
    assert_eq!(pair_count("pants", "a", "b"), 0);
    assert_eq!(pair_count("pants", "a", "ab"), 0);
    assert_eq!(pair_count("pants", "aB", "ab"), 0);
    assert_eq!(pair_count("pants", "a", "aB"), 0);
    assert_eq!(pair_count("pants", "ab", "aabb"), 0);
}

#[test]
fn torus_pair_counts() {
    // pairs on the one-holed torus realize |det| of their homology classes
    assert_eq!(pair_count("torus1", "a", "b"), 1);
    assert_eq!(pair_count("torus1", "a", "ab"), 1);
    assert_eq!(pair_count("torus1", "ab", "aB"), 2);
    assert_eq!(pair_count("torus1", "aab", "ab"), 1);
}

#[test]
fn pair_counts_scale_with_powers() {
    let s = SurfaceSpec::parse("torus1").unwrap();
    let rep = realize(&s).unwrap();
    let a2 = CyclicWord::parse("aa").unwrap();
    let b3 = CyclicWord::parse("bbb").unwrap();
    assert_eq!(count_pair_numeric(&rep, &a2, &b3).unwrap(), 6);
    let ab2 = CyclicWord::parse("abab").unwrap();
    let ab_inv = CyclicWord::parse("aB").unwrap();
    assert_eq!(count_pair_numeric(&rep, &ab2, &ab_inv).unwrap(), 4);
}
