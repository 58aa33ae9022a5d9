//! Text, CSV, JSON and DOT renderings of library objects.
//!
//! Every renderer returns a complete `String` so the caller can write it in
//! one go. All JSON documents carry `"schema": 1`.

use std::fmt::Write;

use opdet::permutahedron::{euler_characteristic, FaceSet};
use opdet::{CoefficientTable, EndoFunction, OrderedPartition};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Direction {
    /// Edges from a partition to each partition that refines it (coarse to fine).
    Up,
    /// Edges from a partition to each adjacent-block merge (fine to coarse).
    Down,
}

fn table_words(f: &EndoFunction) -> String {
    f.table().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn coeffs_csv(table: &CoefficientTable) -> String {
    let mut out = String::from("function,coefficient,is_bijective,domain_size\n");
    for (f, c) in table.iter() {
        let _ = writeln!(out, "{},{},{},{}", table_words(f), c, f.is_bijective(), f.cycles().domain_size());
    }
    out
}

#[derive(Serialize)]
struct CoeffRow {
    function: Vec<usize>,
    coefficient: i64,
    is_bijective: bool,
    domain_size: usize,
}

#[derive(Serialize)]
struct CoeffDoc {
    schema: u32,
    n: usize,
    rows: Vec<CoeffRow>,
}

pub fn coeffs_json(table: &CoefficientTable) -> String {
    let rows = table
        .iter()
        .map(|(f, c)| CoeffRow {
            function: f.table().to_vec(),
            coefficient: c,
            is_bijective: f.is_bijective(),
            domain_size: f.cycles().domain_size(),
        })
        .collect();
    to_json(&CoeffDoc { schema: SCHEMA, n: table.n(), rows })
}

#[derive(Serialize)]
struct PartitionRow {
    blocks: Vec<Vec<usize>>,
    parts: usize,
}

impl From<&OrderedPartition> for PartitionRow {
    fn from(b: &OrderedPartition) -> Self {
        PartitionRow { blocks: b.blocks(), parts: b.num_blocks() }
    }
}

#[derive(Serialize)]
struct PartitionsDoc {
    schema: u32,
    n: usize,
    count: usize,
    partitions: Vec<PartitionRow>,
}

pub fn partitions_text(partitions: &[OrderedPartition]) -> String {
    let mut out = String::new();
    for b in partitions {
        let _ = writeln!(out, "{b}");
    }
    out
}

pub fn partitions_json(n: usize, partitions: &[OrderedPartition]) -> String {
    to_json(&PartitionsDoc {
        schema: SCHEMA,
        n,
        count: partitions.len(),
        partitions: partitions.iter().map(PartitionRow::from).collect(),
    })
}

fn poset_edges(partitions: &[OrderedPartition], direction: Direction) -> Vec<(String, String)> {
    let mut edges = Vec::new();
    for b in partitions {
        for below in b.lower_covers() {
            let pair = match direction {
                Direction::Down => (b.to_string(), below.to_string()),
                Direction::Up => (below.to_string(), b.to_string()),
            };
            edges.push(pair);
        }
    }
    edges
}

/// Hasse diagram of the merge poset.
pub fn poset_dot(n: usize, partitions: &[OrderedPartition], direction: Direction) -> String {
    let mut out = format!("digraph ordered_partitions_{n} {{\n  rankdir=BT;\n");
    for b in partitions {
        let _ = writeln!(out, "  \"{b}\" [rank={}];", b.num_blocks());
    }
    for (from, to) in poset_edges(partitions, direction) {
        let _ = writeln!(out, "  \"{from}\" -> \"{to}\";");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct PosetDoc {
    schema: u32,
    n: usize,
    direction: &'static str,
    nodes: Vec<String>,
    edges: Vec<(String, String)>,
}

pub fn poset_json(n: usize, partitions: &[OrderedPartition], direction: Direction) -> String {
    to_json(&PosetDoc {
        schema: SCHEMA,
        n,
        direction: match direction {
            Direction::Up => "up",
            Direction::Down => "down",
        },
        nodes: partitions.iter().map(ToString::to_string).collect(),
        edges: poset_edges(partitions, direction),
    })
}

#[derive(Serialize)]
struct FaceRow {
    face: String,
    blocks: Vec<Vec<usize>>,
    dimension: usize,
    in_gamma: bool,
}

#[derive(Serialize)]
struct PolytopeDoc {
    schema: u32,
    function: String,
    n: usize,
    rules: Vec<(usize, usize)>,
    gamma_size: usize,
    euler_characteristic: i64,
    faces: Vec<FaceRow>,
}

pub fn polytope_json(f: &EndoFunction, all: &FaceSet, gamma: &FaceSet) -> String {
    let n = f.n();
    let rules = f.rules().map(|r| r.iter().collect()).unwrap_or_default();
    to_json(&PolytopeDoc {
        schema: SCHEMA,
        function: f.to_string(),
        n,
        rules,
        gamma_size: gamma.len(),
        euler_characteristic: euler_characteristic(gamma),
        faces: all
            .faces()
            .iter()
            .map(|b| FaceRow {
                face: b.to_string(),
                blocks: b.blocks(),
                dimension: n - b.num_blocks(),
                in_gamma: gamma.contains(b),
            })
            .collect(),
    })
}

/// Faces in `gamma` drawn bold, the rest dashed.
pub fn polytope_dot(f: &EndoFunction, all: &FaceSet, gamma: &FaceSet) -> String {
    let mut out = String::from("digraph gamma {\n  rankdir=BT;\n");
    let _ = writeln!(out, "  label=\"{f}  chi={}\";", euler_characteristic(gamma));
    for b in all.faces() {
        let style = if gamma.contains(b) { "bold" } else { "dashed" };
        let _ = writeln!(out, "  \"{b}\" [style={style}];");
    }
    for b in all.faces() {
        for below in b.lower_covers() {
            let style = if gamma.contains(b) && gamma.contains(&below) { "bold" } else { "dashed" };
            let _ = writeln!(out, "  \"{below}\" -> \"{b}\" [style={style}];");
        }
    }
    out.push_str("}\n");
    out
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
