//! Command line front end for the curve intersection invariants.
//!
//! Subcommands: `self` and `pair` print full invariant reports, `points`
//! classifies user-supplied intersection points, and `oracle-check` replays
//! the combinatorial counts against the numeric engine. Exit codes: 0 on
//! success, 2 for unparseable input, 3 for input outside a command's
//! domain, 4 for an internal inconsistency.

mod output;
mod points;

use std::collections::{BTreeSet, HashSet};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use curves_core::{
    geodesic, is_primitive, oracle, pair_report, self_report, CyclicWord, Error, Fatgraph,
    SurfaceSpec, Word,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "curves", version, about = "Intersection invariants of closed curves on surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Self-intersection report for one free homotopy class
    #[command(name = "self")]
    SelfIntersection {
        /// Surface preset (plane, sphere, rp2, annulus, moebius, pants,
        /// torus1) or a fatgraph:... description
        surface: String,
        /// Closed curve as a word in the surface generators
        word: String,
        /// Emit a JSON document instead of the text report
        #[arg(long)]
        json: bool,
    },
    /// Intersection report for a pair of free homotopy classes
    Pair {
        surface: String,
        word1: String,
        word2: String,
        #[arg(long)]
        json: bool,
    },
    /// Nielsen class data for intersection points listed in a file
    Points {
        surface: String,
        word1: String,
        /// Second curve; omit to study self-intersection points of word1
        word2: Option<String>,
        /// File with one `g=<word>[;eta=...]` record per line
        #[arg(long, value_name = "FILE")]
        points: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Replay the combinatorial counts against the numeric engine
    OracleCheck {
        surface: String,
        /// Longest curve word to enumerate
        #[arg(long, default_value_t = 5)]
        max_len: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.is_parse() {
        2
    } else if e.is_admissibility() {
        3
    } else {
        4
    }
}

fn run(cmd: Command) -> curves_core::Result<()> {
    match cmd {
        Command::SelfIntersection { surface, word, json } => {
            let s = SurfaceSpec::parse(&surface)?;
            let c = CyclicWord::parse(&word)?;
            let doc = output::SelfDocument::new(&surface, &word, &self_report(&s, &c)?);
            if json {
                println!("{}", output::to_json(&doc));
            } else {
                print!("{}", doc.render_text());
            }
            Ok(())
        }
        Command::Pair { surface, word1, word2, json } => {
            let s = SurfaceSpec::parse(&surface)?;
            let c1 = CyclicWord::parse(&word1)?;
            let c2 = CyclicWord::parse(&word2)?;
            let doc =
                output::PairDocument::new(&surface, &word1, &word2, &pair_report(&s, &c1, &c2)?);
            if json {
                println!("{}", output::to_json(&doc));
            } else {
                print!("{}", doc.render_text());
            }
            Ok(())
        }
        Command::Points { surface, word1, word2, points, json } => {
            cmd_points(&surface, &word1, word2.as_deref(), &points, json)
        }
        Command::OracleCheck { surface, max_len } => cmd_oracle_check(&surface, max_len),
    }
}

#[derive(Serialize)]
struct PointsDocument {
    surface: String,
    word1: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    word2: Option<String>,
    points: Vec<points::PointRow>,
}

/// Image of a based word in the fundamental group, for the surfaces whose
/// group is not free: everything dies on the plane and the sphere, and the
/// projective plane keeps only the parity of the length.
fn project(s: &SurfaceSpec, w: &Word) -> curves_core::Result<Word> {
    s.check_word(w)?;
    match s {
        SurfaceSpec::Plane | SurfaceSpec::Sphere => Ok(Word::empty()),
        SurfaceSpec::ProjectivePlane => {
            if w.len() % 2 == 1 {
                Word::parse("a")
            } else {
                Ok(Word::empty())
            }
        }
        SurfaceSpec::Fatgraph(_) => Ok(w.clone()),
    }
}

fn cmd_points(
    surface: &str,
    word1: &str,
    word2: Option<&str>,
    file: &PathBuf,
    json: bool,
) -> curves_core::Result<()> {
    let s = SurfaceSpec::parse(surface)?;
    let w1 = project(&s, &Word::parse(word1)?)?;
    let w2 = match word2 {
        Some(w) => Some(project(&s, &Word::parse(w)?)?),
        None => None,
    };
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", file.display())))?;
    let mut records = points::parse_records(&text)?;
    for rec in &mut records {
        rec.g = project(&s, &rec.g)?;
    }
    let rows = points::analyze(&s, &w1, w2.as_ref(), &records)?;
    if json {
        let doc = PointsDocument {
            surface: surface.to_owned(),
            word1: word1.to_owned(),
            word2: word2.map(str::to_owned),
            points: rows,
        };
        println!("{}", output::to_json(&doc));
    } else {
        print!("{}", points::render_table(&rows));
    }
    Ok(())
}

fn cmd_oracle_check(surface: &str, max_len: usize) -> curves_core::Result<()> {
    let s = SurfaceSpec::parse(surface)?;
    let Some(graph) = s.fatgraph() else {
        return Err(Error::Unsupported(
            "oracle requires orientable fat graph surfaces".into(),
        ));
    };
    if graph.has_twists() {
        return Err(Error::Unsupported(
            "oracle requires orientable surfaces".into(),
        ));
    }
    let rep = oracle::realize(&s)?;
    let words = primitive_words(graph, max_len)?;
    let mut bad = Vec::new();
    for c in &words {
        let combinatorial = geodesic::count_self(&s, c)?;
        let numeric = oracle::count_self_numeric(&rep, c)?;
        if combinatorial != numeric {
            bad.push(format!("self {c}: {combinatorial} vs {numeric}"));
        }
    }
    // pair counts grow quadratically in the word inventory, so replay them
    // on the short words only
    let short: Vec<&CyclicWord> = words.iter().filter(|c| c.len() <= 3).collect();
    let mut pairs = 0usize;
    for (i, &c1) in short.iter().enumerate() {
        for &c2 in &short[i + 1..] {
            let combinatorial = match geodesic::count_pair(&s, c1, c2) {
                Ok(v) => v,
                Err(e) if e.is_admissibility() => continue,
                Err(e) => return Err(e),
            };
            pairs += 1;
            let numeric = oracle::count_pair_numeric(&rep, c1, c2)?;
            if combinatorial != numeric {
                bad.push(format!("pair {c1} {c2}: {combinatorial} vs {numeric}"));
            }
        }
    }
    println!(
        "{surface}: checked {} words of length <= {max_len} and {pairs} short pairs",
        words.len()
    );
    if bad.is_empty() {
        println!("all counts agree");
        Ok(())
    } else {
        for b in &bad {
            println!("MISMATCH {b}");
        }
        Err(Error::Internal(format!(
            "{} of {} checks disagree",
            bad.len(),
            words.len() + pairs
        )))
    }
}

/// All primitive cyclic words over the graph generators up to `max_len`,
/// one representative per cyclic word.
fn primitive_words(graph: &Fatgraph, max_len: usize) -> curves_core::Result<Vec<CyclicWord>> {
    let gens: BTreeSet<u8> = graph.letters().iter().map(|l| l.gen).collect();
    let alphabet: Vec<char> = gens
        .iter()
        .flat_map(|&g| {
            let plain = curves_core::Letter::new(g, false).to_char();
            [plain, plain.to_ascii_uppercase()]
        })
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for stem in &layer {
            for &ch in &alphabet {
                let mut t = stem.clone();
                t.push(ch);
                next.push(t);
            }
        }
        for spelling in &next {
            let c = CyclicWord::parse(spelling)?;
            // keep cyclically reduced spellings only; every class has one
            if c.len() == spelling.len() && is_primitive(&c)? && seen.insert(c.clone()) {
                out.push(c);
            }
        }
        layer = next;
    }
    Ok(out)
}
