//! Point-record files and the per-point Nielsen class table.
//!
//! A record file holds one intersection point per line, given by the
//! connecting word `g`, optionally with branch-ordering data:
//!
//! ```text
//! g=<word>[;eta=+1|-1][;eta1=+1|-1][;eta2=+1|-1][;case=forward|backward|other]
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. The strict
//! (parameterization-sensitive) columns appear only when every record
//! carries the ordering data they need; the pairwise fields `eta1`, `eta2`
//! and `case` of a comparison are read from the first record of the pair.

use std::fmt::Write as _;

use curves_core::cosets::{self, CyclicCase};
use curves_core::{Error, Result, SurfaceSpec, Word};
use serde::Serialize;

pub struct PointRecord {
    pub g: Word,
    pub spelled: String,
    pub eta: Option<i8>,
    pub eta1: Option<i8>,
    pub eta2: Option<i8>,
    pub case: Option<CyclicCase>,
}

pub fn parse_records(text: &str) -> Result<Vec<PointRecord>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(
            parse_record(line)
                .map_err(|e| Error::Parse(format!("record line {}: {e}", idx + 1)))?,
        );
    }
    Ok(out)
}

fn parse_sign(v: &str) -> Result<i8> {
    match v {
        "+1" | "1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(Error::Parse(format!("expected +1 or -1, got {v:?}"))),
    }
}

fn parse_record(line: &str) -> Result<PointRecord> {
    let mut g = None;
    let mut rec = PointRecord {
        g: Word::empty(),
        spelled: String::new(),
        eta: None,
        eta1: None,
        eta2: None,
        case: None,
    };
    for field in line.split(';') {
        let field = field.trim();
        let Some((key, value)) = field.split_once('=') else {
            return Err(Error::Parse(format!("field {field:?} is not key=value")));
        };
        match key.trim() {
            "g" => {
                rec.spelled = value.trim().to_owned();
                g = Some(Word::parse(value.trim())?);
            }
            "eta" => rec.eta = Some(parse_sign(value.trim())?),
            "eta1" => rec.eta1 = Some(parse_sign(value.trim())?),
            "eta2" => rec.eta2 = Some(parse_sign(value.trim())?),
            "case" => rec.case = Some(CyclicCase::parse(value.trim())?),
            other => return Err(Error::Parse(format!("unknown field {other:?}"))),
        }
    }
    match g {
        Some(w) => {
            rec.g = w;
            Ok(rec)
        }
        None => Err(Error::Parse("missing g=<word> field".into())),
    }
}

/// One analyzed point. Options mirror the table columns that apply to the
/// current mode and the supplied ordering data.
#[derive(Serialize, PartialEq, Eq, Debug)]
pub struct PointRow {
    pub g: String,
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_class: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trivial: Option<bool>,
    pub special: bool,
    pub self_cancelling: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub geom_special: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub geom_self_cancelling: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_special: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_self_cancelling: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_geom_special: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_geom_self_cancelling: Option<bool>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let r = self.find(self.0[i]);
            self.0[i] = r;
        }
        self.0[i]
    }

    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        self.0[ri] = rj;
    }

    /// Class labels `C1, C2, ...` in order of first appearance.
    fn labels(&mut self) -> Vec<String> {
        let n = self.0.len();
        let mut names: Vec<Option<String>> = vec![None; n];
        let mut next = 0;
        (0..n)
            .map(|i| {
                let r = self.find(i);
                names[r]
                    .get_or_insert_with(|| {
                        next += 1;
                        format!("C{next}")
                    })
                    .clone()
            })
            .collect()
    }
}

/// Runs the class predicates on every record. `w2` selects pair mode; the
/// unordered and geometric columns only make sense for one curve against
/// itself and are omitted for pairs.
pub fn analyze(
    s: &SurfaceSpec,
    w1: &Word,
    w2: Option<&Word>,
    records: &[PointRecord],
) -> Result<Vec<PointRow>> {
    let self_mode = w2.is_none();
    let second = w2.unwrap_or(w1);
    let n = records.len();

    let mut classes = UnionFind::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if classes.find(i) == classes.find(j) {
                continue;
            }
            if cosets::nielsen_equivalent(w1, second, &records[i].g, &records[j].g)? {
                classes.union(i, j);
            }
        }
    }
    let labels = classes.labels();

    let has_eta = self_mode && records.iter().all(|r| r.eta.is_some());
    let has_pairwise = self_mode
        && records
            .iter()
            .all(|r| r.eta1.is_some() && r.eta2.is_some() && r.case.is_some());

    let strict_labels = if has_pairwise {
        let mut strict = UnionFind::new(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if strict.find(i) == strict.find(j) {
                    continue;
                }
                let r = &records[i];
                if cosets::equivalent_star(
                    w1,
                    &records[i].g,
                    &records[j].g,
                    r.eta1.expect("checked"),
                    r.eta2.expect("checked"),
                    r.case.expect("checked"),
                )? {
                    strict.union(i, j);
                }
            }
        }
        Some(strict.labels())
    } else {
        None
    };

    let mut rows = Vec::with_capacity(n);
    for (i, rec) in records.iter().enumerate() {
        let mut row = PointRow {
            g: rec.spelled.clone(),
            class: labels[i].clone(),
            strict_class: strict_labels.as_ref().map(|l| l[i].clone()),
            trivial: None,
            special: cosets::is_special_point(w1, second, &rec.g)?,
            self_cancelling: cosets::is_self_cancelling_point(s, w1, second, &rec.g)?,
            geom_special: None,
            geom_self_cancelling: None,
            strict_special: None,
            strict_self_cancelling: None,
            strict_geom_special: None,
            strict_geom_self_cancelling: None,
        };
        if self_mode {
            row.trivial = Some(cosets::is_trivial_point(w1, &rec.g)?);
            row.geom_special = Some(cosets::is_geometric_special_point(w1, &rec.g)?);
            row.geom_self_cancelling =
                Some(cosets::is_geometric_self_cancelling_point(s, w1, &rec.g)?);
            if has_eta {
                let eta = rec.eta.expect("checked");
                row.strict_special = Some(cosets::special_star(w1, &rec.g)?);
                row.strict_self_cancelling = Some(cosets::self_cancelling_star(s, w1, &rec.g)?);
                row.strict_geom_special = Some(cosets::geom_special_star(w1, &rec.g, eta)?);
                row.strict_geom_self_cancelling =
                    Some(cosets::geom_self_cancelling_star(s, w1, &rec.g, eta)?);
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn render_table(rows: &[PointRow]) -> String {
    let mut columns: Vec<(&str, Vec<String>)> = vec![
        ("point", rows.iter().map(|r| display_word(&r.g)).collect()),
        ("class", rows.iter().map(|r| r.class.clone()).collect()),
    ];
    let mut optional = |name: &'static str, get: &dyn Fn(&PointRow) -> Option<String>| {
        if rows.iter().all(|r| get(r).is_some()) {
            columns.push((
                name,
                rows.iter().map(|r| get(r).expect("all present")).collect(),
            ));
        }
    };
    optional("strict_class", &|r| r.strict_class.clone());
    optional("trivial", &|r| r.trivial.map(bool_str));
    optional("special", &|r| Some(bool_str(r.special)));
    optional("self_cancelling", &|r| Some(bool_str(r.self_cancelling)));
    optional("geom_special", &|r| r.geom_special.map(bool_str));
    optional("geom_self_cancelling", &|r| {
        r.geom_self_cancelling.map(bool_str)
    });
    optional("strict_special", &|r| r.strict_special.map(bool_str));
    optional("strict_self_cancelling", &|r| {
        r.strict_self_cancelling.map(bool_str)
    });
    optional("strict_geom_special", &|r| {
        r.strict_geom_special.map(bool_str)
    });
    optional("strict_geom_self_cancelling", &|r| {
        r.strict_geom_self_cancelling.map(bool_str)
    });

    let widths: Vec<usize> = columns
        .iter()
        .map(|(name, vals)| {
            vals.iter()
                .map(String::len)
                .chain([name.len()])
                .max()
                .expect("nonempty")
        })
        .collect();
    let mut out = String::new();
    for (w, (name, _)) in widths.iter().zip(&columns) {
        let _ = write!(out, "{name:<w$}  ");
    }
    out.truncate(out.trim_end().len());
    out.push('\n');
    for i in 0..rows.len() {
        for (w, (_, vals)) in widths.iter().zip(&columns) {
            let _ = write!(out, "{:<w$}  ", vals[i]);
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
    out
}

fn bool_str(b: bool) -> String {
    b.to_string()
}

fn display_word(g: &str) -> String {
    if g.is_empty() {
        "(empty)".to_owned()
    } else {
        g.to_owned()
    }
}
