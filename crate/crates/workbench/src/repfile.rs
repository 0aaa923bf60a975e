//! Text formats for modules.
//!
//! Modular representations: a header `dade-rep/1 group-sha256=<hex> p=<p> dim=<n>`,
//! then for each generator a line `gen <i>` followed by `n` rows of residues in `[0, p)`.
//! Rational representations: a header `dade-qrep/1 dim=<n>`, then the same generator
//! blocks with entries written as integers or fractions `a/b`.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::Arc;

use dade_core::fp::FpMat;
use dade_core::grp::Group;
use dade_core::modrep::Rep;
use dade_core::qmat::QMat;
use dade_core::repchar::RealRep;

use crate::error::{Result, WorkbenchError};
use crate::input::{parse_rational, LoadedGroup};

pub const REP_HEADER: &str = "dade-rep/1";
pub const QREP_HEADER: &str = "dade-qrep/1";

pub fn write_rep(group: &LoadedGroup, m: &Rep) -> String {
    let mut out = format!("{REP_HEADER} group-sha256={} p={} dim={}\n", group.hash(), m.p(), m.dim());
    for (i, g) in m.generators().iter().enumerate() {
        writeln!(out, "gen {i}").unwrap();
        for r in 0..g.rows() {
            let row: Vec<String> = g.row(r).iter().map(u32::to_string).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    out
}

struct Parsed {
    fields: BTreeMap<String, String>,
    blocks: Vec<Vec<Vec<String>>>,
}

fn parse_blocks(text: &str, header: &str, what: &'static str) -> Result<Parsed> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let head = lines.next().ok_or_else(|| WorkbenchError::parse(what, "empty file"))?;
    let mut words = head.split_whitespace();
    if words.next() != Some(header) {
        return Err(WorkbenchError::parse(what, format!("expected header {header}")));
    }
    let fields = words
        .map(|w| w.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())).ok_or_else(|| WorkbenchError::parse(what, format!("bad header field {w:?}"))))
        .collect::<Result<_>>()?;
    let mut blocks: Vec<Vec<Vec<String>>> = Vec::new();
    for line in lines {
        if let Some(i) = line.strip_prefix("gen ") {
            if i.trim().parse::<usize>().ok() != Some(blocks.len()) {
                return Err(WorkbenchError::parse(what, format!("generator blocks out of order at {line:?}")));
            }
            blocks.push(Vec::new());
            continue;
        }
        let block = blocks.last_mut().ok_or_else(|| WorkbenchError::parse(what, "matrix row before any `gen` line"))?;
        block.push(line.split_whitespace().map(str::to_string).collect());
    }
    Ok(Parsed { fields, blocks })
}

fn field<T: std::str::FromStr>(p: &Parsed, key: &str, what: &'static str) -> Result<T> {
    p.fields
        .get(key)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| WorkbenchError::parse(what, format!("missing or bad header field {key}")))
}

fn check_shape(block: &[Vec<String>], dim: usize, what: &'static str) -> Result<()> {
    if block.len() != dim || block.iter().any(|r| r.len() != dim) {
        return Err(WorkbenchError::parse(what, format!("each generator needs {dim} rows of {dim} entries")));
    }
    Ok(())
}

pub fn read_rep(group: &LoadedGroup, text: &str) -> Result<Rep> {
    const WHAT: &str = "rep file";
    let parsed = parse_blocks(text, REP_HEADER, WHAT)?;
    let hash: String = field(&parsed, "group-sha256", WHAT)?;
    if hash != group.hash() {
        return Err(WorkbenchError::parse(WHAT, "module was written for a different group"));
    }
    let p: u32 = field(&parsed, "p", WHAT)?;
    let dim: usize = field(&parsed, "dim", WHAT)?;
    let mut gens = Vec::new();
    for block in &parsed.blocks {
        check_shape(block, dim, WHAT)?;
        let rows: Vec<Vec<i64>> = block
            .iter()
            .map(|r| r.iter().map(|x| x.parse::<i64>().map_err(|_| WorkbenchError::parse(WHAT, format!("bad residue {x:?}")))).collect())
            .collect::<Result<_>>()?;
        gens.push(FpMat::from_rows(p, &rows));
    }
    Ok(Rep::new(&group.group, p, dim, gens)?)
}

pub fn write_real_rep(v: &RealRep) -> String {
    let mut out = format!("{QREP_HEADER} dim={}\n", v.dim());
    for (i, g) in v.generators().iter().enumerate() {
        writeln!(out, "gen {i}").unwrap();
        for row in g.to_rows() {
            let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    out
}

pub fn read_real_rep(group: &Arc<Group>, text: &str) -> Result<RealRep> {
    const WHAT: &str = "rational rep file";
    let parsed = parse_blocks(text, QREP_HEADER, WHAT)?;
    let dim: usize = field(&parsed, "dim", WHAT)?;
    let mut gens = Vec::new();
    for block in &parsed.blocks {
        check_shape(block, dim, WHAT)?;
        let rows = block.iter().map(|r| r.iter().map(|x| parse_rational(x)).collect()).collect::<Result<Vec<Vec<_>>>>()?;
        gens.push(QMat::from_rows(&rows));
    }
    Ok(RealRep::new(group, dim, gens)?)
}
