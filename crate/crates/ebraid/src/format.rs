//! Text and JSON renderings of polynomials, homology tables, cubes and
//! covering complexes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use ebraid_core::covering::PiComplex;
use ebraid_core::cube::{SaddleKind, ShiftedCube};
use ebraid_core::homology::{HomologyGroup, HomologyTable, Mod2Table};
use ebraid_core::TauLaurent;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::error::{AppError, Result};

fn number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("integers are valid JSON numbers")
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    c: Number,
    tau: u8,
    q: i64,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

pub fn poly_to_json(p: &TauLaurent) -> Value {
    let terms = p
        .monomials()
        .map(|(q, tau, c)| TermJson { c: number(c), tau, q })
        .collect();
    serde_json::to_value(PolyJson { terms }).expect("serializable")
}

pub fn poly_from_json(v: &Value) -> Result<TauLaurent> {
    let p: PolyJson = serde_json::from_value(v.clone())?;
    let mut terms = Vec::with_capacity(p.terms.len());
    for t in p.terms {
        if t.tau > 3 {
            return Err(AppError::Polynomial(format!("tau exponent {} is not in 0..4", t.tau)));
        }
        let c = BigInt::from_str(&t.c.to_string()).map_err(|e| AppError::Polynomial(e.to_string()))?;
        terms.push((t.tau as i64, t.q, c));
    }
    Ok(TauLaurent::from_terms(terms))
}

pub fn poly_text(p: &TauLaurent) -> String {
    p.to_string()
}

#[derive(Serialize)]
struct HomologyRow {
    i: i64,
    q: i64,
    tau: u8,
    rank: usize,
    torsion: Vec<Number>,
}

#[derive(Serialize)]
struct FlatRow {
    i: i64,
    q: i64,
    rank: usize,
    torsion: Vec<Number>,
}

#[derive(Serialize)]
struct Mod2Row {
    i: i64,
    q: i64,
    tau: u8,
    dim: usize,
}

#[derive(Serialize)]
struct FlatMod2Row {
    i: i64,
    q: i64,
    dim: usize,
}

fn torsion(g: &HomologyGroup) -> Vec<Number> {
    g.torsion.iter().map(number).collect()
}

fn torsion_text(g: &HomologyGroup) -> String {
    if g.torsion.is_empty() {
        "-".into()
    } else {
        g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// A homology-shaped result in either grading.
pub enum Table {
    Graded(HomologyTable),
    Flat(BTreeMap<(i64, i64), HomologyGroup>),
    GradedMod2(Mod2Table),
    FlatMod2(BTreeMap<(i64, i64), usize>),
}

impl Table {
    pub fn to_json(&self) -> Value {
        let v = match self {
            Table::Graded(t) => serde_json::to_value(
                t.iter()
                    .map(|(&(i, q, tau), g)| HomologyRow {
                        i,
                        q,
                        tau,
                        rank: g.rank,
                        torsion: torsion(g),
                    })
                    .collect::<Vec<_>>(),
            ),
            Table::Flat(t) => serde_json::to_value(
                t.iter()
                    .map(|(&(i, q), g)| FlatRow {
                        i,
                        q,
                        rank: g.rank,
                        torsion: torsion(g),
                    })
                    .collect::<Vec<_>>(),
            ),
            Table::GradedMod2(t) => serde_json::to_value(
                t.iter()
                    .map(|(&(i, q, tau), &dim)| Mod2Row { i, q, tau, dim })
                    .collect::<Vec<_>>(),
            ),
            Table::FlatMod2(t) => serde_json::to_value(
                t.iter()
                    .map(|(&(i, q), &dim)| FlatMod2Row { i, q, dim })
                    .collect::<Vec<_>>(),
            ),
        };
        v.expect("serializable")
    }

    /// Tab-separated, one row per nonzero group, header first.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self {
            Table::Graded(t) => {
                s.push_str("i\tq\ttau\trank\ttorsion\n");
                for (&(i, q, tau), g) in t {
                    let _ = writeln!(s, "{i}\t{q}\t{tau}\t{}\t{}", g.rank, torsion_text(g));
                }
            }
            Table::Flat(t) => {
                s.push_str("i\tq\trank\ttorsion\n");
                for (&(i, q), g) in t {
                    let _ = writeln!(s, "{i}\t{q}\t{}\t{}", g.rank, torsion_text(g));
                }
            }
            Table::GradedMod2(t) => {
                s.push_str("i\tq\ttau\tdim\n");
                for (&(i, q, tau), d) in t {
                    let _ = writeln!(s, "{i}\t{q}\t{tau}\t{d}");
                }
            }
            Table::FlatMod2(t) => {
                s.push_str("i\tq\tdim\n");
                for (&(i, q), d) in t {
                    let _ = writeln!(s, "{i}\t{q}\t{d}");
                }
            }
        }
        s
    }
}

#[derive(Serialize)]
struct VertexJson {
    state: String,
    index: i64,
    circles: usize,
}

#[derive(Serialize)]
struct EdgeJson {
    from: String,
    to: String,
    crossing: usize,
    kind: &'static str,
    sign: i8,
}

#[derive(Serialize)]
struct CubeJson {
    crossings: usize,
    global_shift: [i64; 2],
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
}

/// State text has crossing 0 first.
fn state_text(bits: u64, m: usize) -> String {
    (0..m).map(|j| if bits >> j & 1 == 1 { '1' } else { '0' }).collect()
}

pub fn cube_to_json(c: &ShiftedCube) -> Value {
    let m = c.crossings;
    let cube = CubeJson {
        crossings: m,
        global_shift: [c.global_shift.0, c.global_shift.1],
        vertices: c
            .vertices
            .iter()
            .map(|v| VertexJson {
                state: state_text(v.state.bits(), m),
                index: v.index,
                circles: v.circle_count(),
            })
            .collect(),
        edges: c
            .edges
            .iter()
            .map(|e| EdgeJson {
                from: state_text(e.from, m),
                to: state_text(e.to, m),
                crossing: e.crossing,
                kind: match e.kind() {
                    SaddleKind::Merge => "merge",
                    SaddleKind::Split => "split",
                },
                sign: e.sign,
            })
            .collect(),
    };
    serde_json::to_value(cube).expect("serializable")
}

#[derive(Serialize)]
struct PiEntry {
    row: usize,
    col: usize,
    a: i64,
    b: i64,
}

#[derive(Serialize)]
struct GeneratorJson {
    state: u64,
    word: u32,
    q: i64,
    tau: u8,
    parity: u8,
}

#[derive(Serialize)]
struct PiDifferential {
    from_index: i64,
    rows: usize,
    cols: usize,
    entries: Vec<PiEntry>,
}

#[derive(Serialize)]
struct PiComplexJson {
    min_index: i64,
    groups: Vec<Vec<GeneratorJson>>,
    differentials: Vec<PiDifferential>,
}

/// The generic covering complex, entries `{"a", "b"}` meaning `a + bπ`.
pub fn pi_complex_to_json(c: &PiComplex) -> Value {
    let doc = PiComplexJson {
        min_index: c.min_index,
        groups: c
            .groups
            .iter()
            .map(|g| {
                g.iter()
                    .map(|x| GeneratorJson {
                        state: x.vertex,
                        word: x.word,
                        q: x.q,
                        tau: x.tau,
                        parity: (x.x_count() % 2) as u8,
                    })
                    .collect()
            })
            .collect(),
        differentials: c
            .differentials
            .iter()
            .enumerate()
            .map(|(k, d)| PiDifferential {
                from_index: c.min_index + k as i64,
                rows: d.rows(),
                cols: d.cols(),
                entries: d
                    .entries()
                    .map(|(row, col, x)| PiEntry {
                        row,
                        col,
                        a: x.a,
                        b: x.b,
                    })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("serializable")
}
