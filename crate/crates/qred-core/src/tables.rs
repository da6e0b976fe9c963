//! Regenerated reference tables, written as CSV and markdown and compared
//! with the golden copies vendored under `data/golden`.

use std::fs;
use std::path::Path;

use crate::cascade::kostant_cascade;
use crate::classify::{enumerate_index_zero, enumerate_verdicts, single_root_test, Verdict};
use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem, SimpleType};
use crate::subset::RootSubset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(name: &str, header: &[&str]) -> Self {
        Table { name: name.into(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    /// Markdown table with columns padded to a common width.
    pub fn to_markdown(&self) -> String {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| {
                std::iter::once(&self.header)
                    .chain(&self.rows)
                    .map(|r| r[c].chars().count())
                    .max()
                    .unwrap_or(0)
                    .max(3)
            })
            .collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> =
                cells.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
            format!("| {} |\n", padded.join(" | "))
        };
        let mut s = line(&self.header);
        s.push_str(&format!("|{}|\n", widths.iter().map(|w| "-".repeat(w + 2)).collect::<Vec<_>>().join("|")));
        for r in &self.rows {
            s.push_str(&line(r));
        }
        s
    }
}

fn labels(s: &[usize]) -> String {
    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Sort key for subsets: by size, then lexicographically by labels.
fn by_size(v: &[usize]) -> (usize, Vec<usize>) {
    (v.len(), v.to_vec())
}

fn rs(f: Family, l: usize) -> RootSystem {
    RootSystem::new(SimpleType::new(f, l).expect("table types are valid"))
}

pub fn cascade_size_types() -> Vec<SimpleType> {
    let mut v = Vec::new();
    let mut add = |f: Family, r: std::ops::RangeInclusive<usize>| {
        v.extend(r.map(|l| SimpleType::new(f, l).expect("valid")));
    };
    add(Family::A, 1..=10);
    add(Family::B, 2..=10);
    add(Family::C, 3..=10);
    add(Family::D, 4..=10);
    add(Family::G, 2..=2);
    add(Family::F, 4..=4);
    add(Family::E, 6..=8);
    v
}

pub fn cascade_sizes() -> Table {
    let mut t = Table::new("cascade_sizes", &["type", "k"]);
    for ty in cascade_size_types() {
        let r = RootSystem::new(ty);
        let k = kostant_cascade(&r, RootSubset::full(ty.rank())).len();
        t.rows.push(vec![ty.to_string(), k.to_string()]);
    }
    t
}

pub fn single_root_types() -> Vec<SimpleType> {
    let mut v: Vec<SimpleType> = (3..=8).map(|l| SimpleType::new(Family::B, l).expect("valid")).collect();
    v.extend((4..=8).map(|l| SimpleType::new(Family::D, l).expect("valid")));
    v.extend([(Family::G, 2), (Family::F, 4), (Family::E, 6), (Family::E, 7), (Family::E, 8)].map(|(f, l)| {
        SimpleType::new(f, l).expect("valid")
    }));
    v
}

/// Simple roots failing the single-root test, per type.
pub fn single_root_non_qr() -> Result<Table> {
    let mut t = Table::new("single_root_non_qr", &["type", "roots"]);
    for ty in single_root_types() {
        let r = RootSystem::new(ty);
        let mut failing = Vec::new();
        for i in 0..ty.rank() {
            if !single_root_test(&r, i)? {
                failing.push(i + 1);
            }
        }
        t.rows.push(vec![ty.to_string(), labels(&failing)]);
    }
    Ok(t)
}

fn non_qr_verdicts(r: &RootSystem) -> Result<Vec<Verdict>> {
    let mut v: Vec<Verdict> = enumerate_verdicts(r)?.into_iter().filter(|v| !v.qr).collect();
    v.sort_by_key(|v| by_size(&v.subset));
    Ok(v)
}

fn torus(v: &Verdict) -> String {
    v.torus_dim.map(|d| d.to_string()).unwrap_or_default()
}

/// Connected non-quasi-reductive parabolics of F4, E7, E8.
pub fn connected_non_qr() -> Result<Table> {
    let mut t = Table::new("connected_non_qr", &["type", "subset", "index", "torus_dim"]);
    for (f, l) in [(Family::F, 4), (Family::E, 7), (Family::E, 8)] {
        let r = rs(f, l);
        for v in non_qr_verdicts(&r)? {
            let s = RootSubset::from_labels(&v.subset, l)?;
            if r.is_connected(s) {
                t.rows.push(vec![r.simple_type().to_string(), labels(&v.subset), v.index.to_string(), torus(&v)]);
            }
        }
    }
    Ok(t)
}

pub fn e6_non_qr() -> Result<Table> {
    let mut t = Table::new("e6_non_qr", &["subset", "index", "torus_dim"]);
    for v in non_qr_verdicts(&rs(Family::E, 6))? {
        t.rows.push(vec![labels(&v.subset), v.index.to_string(), torus(&v)]);
    }
    Ok(t)
}

pub fn e6_index_zero() -> Result<Table> {
    let mut t = Table::new("e6_index_zero", &["subset"]);
    let mut subsets: Vec<Vec<usize>> = enumerate_index_zero(&rs(Family::E, 6))?.iter().map(|s| s.labels()).collect();
    subsets.sort_by_key(|s| by_size(s));
    t.rows = subsets.iter().map(|s| vec![labels(s)]).collect();
    Ok(t)
}

/// All non-quasi-reductive parabolics of one type.
pub fn non_qr_table(ty: SimpleType) -> Result<Table> {
    let name = format!("{}_non_qr", ty.to_string().to_lowercase());
    let mut t = Table::new(&name, &["subset"]);
    for v in non_qr_verdicts(&RootSystem::new(ty))? {
        t.rows.push(vec![labels(&v.subset)]);
    }
    Ok(t)
}

/// Every reproduced table, in a fixed order.
pub fn reference_tables() -> Result<Vec<Table>> {
    Ok(vec![
        cascade_sizes(),
        single_root_non_qr()?,
        connected_non_qr()?,
        e6_non_qr()?,
        e6_index_zero()?,
        non_qr_table(SimpleType::new(Family::D, 6)?)?,
    ])
}

/// Golden CSV for a table name, if one is vendored.
pub fn golden(name: &str) -> Option<&'static str> {
    Some(match name {
        "cascade_sizes" => include_str!("../data/golden/cascade_sizes.csv"),
        "single_root_non_qr" => include_str!("../data/golden/single_root_non_qr.csv"),
        "connected_non_qr" => include_str!("../data/golden/connected_non_qr.csv"),
        "e6_non_qr" => include_str!("../data/golden/e6_non_qr.csv"),
        "e6_index_zero" => include_str!("../data/golden/e6_index_zero.csv"),
        "d6_non_qr" => include_str!("../data/golden/d6_non_qr.csv"),
        _ => return None,
    })
}

/// Result of comparing one regenerated table with its golden copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoldenStatus {
    Match,
    Missing,
    /// First differing line (1-based) with the expected and actual text.
    Differs { line: usize, expected: String, actual: String },
}

/// Compares line by line, ignoring the line terminator style.
pub fn compare_golden(t: &Table) -> GoldenStatus {
    let Some(g) = golden(&t.name) else { return GoldenStatus::Missing };
    let ours = t.to_csv();
    let a: Vec<&str> = g.lines().map(|l| l.trim_end_matches('\r')).collect();
    let b: Vec<&str> = ours.lines().map(|l| l.trim_end_matches('\r')).collect();
    for i in 0..a.len().max(b.len()) {
        let (x, y) = (a.get(i).copied().unwrap_or(""), b.get(i).copied().unwrap_or(""));
        if x != y {
            return GoldenStatus::Differs { line: i + 1, expected: x.into(), actual: y.into() };
        }
    }
    GoldenStatus::Match
}

/// Writes `<name>.csv` and `<name>.md` into `dir`.
pub fn write_table(t: &Table, dir: &Path) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(format!("writing {}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    fs::write(dir.join(format!("{}.csv", t.name)), t.to_csv()).map_err(io)?;
    fs::write(dir.join(format!("{}.md", t.name)), t.to_markdown()).map_err(io)?;
    Ok(())
}
