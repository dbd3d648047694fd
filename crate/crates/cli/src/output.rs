//! Report documents and their two renderings (text table, JSON).
//!
//! The JSON field names and their order are a stable output contract;
//! parsing an emitted document and re-serializing it reproduces the bytes.

use std::fmt::{Display, Write as _};

use curves_core::{ClassInventory, Count, PairReport, SelfReport};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
#[serde(untagged)]
pub enum CountValue {
    Finite(u64),
    Infinite(String),
}

impl From<Count> for CountValue {
    fn from(c: Count) -> CountValue {
        match c {
            Count::Finite(n) => CountValue::Finite(n),
            Count::Infinite => CountValue::Infinite("infinite".to_owned()),
        }
    }
}

impl Display for CountValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CountValue::Finite(n) => write!(f, "{n}"),
            CountValue::Infinite(s) => f.write_str(s),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct InventoryDocument {
    pub essential_nonspecial: u64,
    pub essential_special: u64,
    pub nonessential_special_lower_bound: u64,
    pub geometrically_special: u64,
    pub trivial_class_present: bool,
    pub defective_special: bool,
    pub min_points_per_special_class: u64,
}

impl From<&ClassInventory> for InventoryDocument {
    fn from(inv: &ClassInventory) -> InventoryDocument {
        InventoryDocument {
            essential_nonspecial: inv.essential_nonspecial,
            essential_special: inv.essential_special,
            nonessential_special_lower_bound: inv.nonessential_special_lower_bound,
            geometrically_special: inv.geometrically_special,
            trivial_class_present: inv.trivial_class_present,
            defective_special: inv.defective_special,
            min_points_per_special_class: inv.min_points_per_special_class,
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SelfDocument {
    pub surface: String,
    pub word: String,
    pub mi: u64,
    pub ni: u64,
    pub ni_star: u64,
    pub mi_geom: u64,
    pub ni_geom: u64,
    pub ni_star_geom: u64,
    pub ri: CountValue,
    pub ri_geom: CountValue,
    pub wecken: bool,
    pub wecken_geom: bool,
    pub k_prime: Option<u32>,
    pub inventory: InventoryDocument,
    pub branch: String,
}

impl SelfDocument {
    pub fn new(surface: &str, word: &str, r: &SelfReport) -> SelfDocument {
        SelfDocument {
            surface: surface.to_owned(),
            word: word.to_owned(),
            mi: r.mi,
            ni: r.ni,
            ni_star: r.ni_star,
            mi_geom: r.mi_geom,
            ni_geom: r.ni_geom,
            ni_star_geom: r.ni_star_geom,
            ri: r.ri.into(),
            ri_geom: r.ri_geom.into(),
            wecken: r.wecken,
            wecken_geom: r.wecken_geom,
            k_prime: r.k_prime,
            inventory: (&r.inventory).into(),
            branch: r.branch.label().to_owned(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        line(&mut out, "surface", &self.surface);
        line(&mut out, "word", &self.word);
        line(&mut out, "branch", &self.branch);
        line(&mut out, "mi", self.mi);
        line(&mut out, "ni", self.ni);
        line(&mut out, "ni_star", self.ni_star);
        line(&mut out, "mi_geom", self.mi_geom);
        line(&mut out, "ni_geom", self.ni_geom);
        line(&mut out, "ni_star_geom", self.ni_star_geom);
        line(&mut out, "ri", &self.ri);
        line(&mut out, "ri_geom", &self.ri_geom);
        line(&mut out, "wecken", self.wecken);
        line(&mut out, "wecken_geom", self.wecken_geom);
        match self.k_prime {
            Some(kp) => line(&mut out, "k_prime", kp),
            None => line(&mut out, "k_prime", "-"),
        }
        render_inventory(&mut out, &self.inventory);
        out
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct PairDocument {
    pub surface: String,
    pub word1: String,
    pub word2: String,
    pub mi: u64,
    pub ni: u64,
    pub ni_star: u64,
    pub ri: CountValue,
    pub wecken: bool,
    pub special_pair: bool,
    pub inventory: InventoryDocument,
    pub branch: String,
}

impl PairDocument {
    pub fn new(surface: &str, word1: &str, word2: &str, r: &PairReport) -> PairDocument {
        PairDocument {
            surface: surface.to_owned(),
            word1: word1.to_owned(),
            word2: word2.to_owned(),
            mi: r.mi,
            ni: r.ni,
            ni_star: r.ni_star,
            ri: r.ri.into(),
            wecken: r.wecken,
            special_pair: r.special_pair,
            inventory: (&r.inventory).into(),
            branch: r.branch.label().to_owned(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        line(&mut out, "surface", &self.surface);
        line(&mut out, "word1", &self.word1);
        line(&mut out, "word2", &self.word2);
        line(&mut out, "branch", &self.branch);
        line(&mut out, "mi", self.mi);
        line(&mut out, "ni", self.ni);
        line(&mut out, "ni_star", self.ni_star);
        line(&mut out, "ri", &self.ri);
        line(&mut out, "wecken", self.wecken);
        line(&mut out, "special_pair", self.special_pair);
        render_inventory(&mut out, &self.inventory);
        out
    }
}

fn line(out: &mut String, key: &str, value: impl Display) {
    let _ = writeln!(out, "{key:<34}{value}");
}

fn render_inventory(out: &mut String, inv: &InventoryDocument) {
    out.push_str("inventory\n");
    let mut sub = |key: &str, value: &dyn Display| {
        let _ = writeln!(out, "  {key:<34}{value}");
    };
    sub("essential_nonspecial", &inv.essential_nonspecial);
    sub("essential_special", &inv.essential_special);
    sub(
        "nonessential_special_lower_bound",
        &inv.nonessential_special_lower_bound,
    );
    sub("geometrically_special", &inv.geometrically_special);
    sub("trivial_class_present", &inv.trivial_class_present);
    sub("defective_special", &inv.defective_special);
    sub(
        "min_points_per_special_class",
        &inv.min_points_per_special_class,
    );
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}
