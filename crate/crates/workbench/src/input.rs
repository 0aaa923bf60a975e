//! Parsing of group sources, G-set literals, value tuples and rational representations.

use std::path::Path;
use std::sync::Arc;

use dade_core::burnside::{ConcreteGSet, GSet};
use dade_core::grp::presets::Preset;
use dade_core::grp::{Group, Limits};
use dade_core::perm::Perm;
use dade_core::qmat::Q;
use dade_core::repchar::RealRep;
use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use crate::error::{Result, WorkbenchError};

/// A group together with the text it was loaded from.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub group: Arc<Group>,
    pub label: String,
}

impl LoadedGroup {
    /// SHA-256 of the generators as image lists, one per line.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        for &g in self.group.generators() {
            let images: Vec<String> = self.group.perm(g).images().iter().map(u8::to_string).collect();
            h.update(images.join(" ").as_bytes());
            h.update(b"\n");
        }
        hex::encode(h.finalize())
    }
}

/// `preset:family:params` or a path to a group file.
pub fn load_group(source: &str, limits: Limits) -> Result<LoadedGroup> {
    let gens = match source.strip_prefix("preset:") {
        Some(rest) => parse_preset(rest)?.generators()?,
        None => {
            let text = std::fs::read_to_string(source)
                .map_err(|e| WorkbenchError::Io { path: Path::new(source).to_path_buf(), source: e })?;
            parse_group_file(&text)?
        }
    };
    let group = Group::with_limits(gens, limits)?;
    Ok(LoadedGroup { group: Arc::new(group), label: source.to_string() })
}

pub fn parse_preset(spec: &str) -> Result<Preset> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> Result<usize> { s.trim().parse().map_err(|_| WorkbenchError::parse("preset", format!("{s:?} is not a number"))) };
    let arity = |n: usize| -> Result<()> {
        if parts.len() != n + 1 {
            return Err(WorkbenchError::parse("preset", format!("{} takes {n} parameter(s)", parts[0])));
        }
        Ok(())
    };
    let preset = match parts[0] {
        "cyclic" => {
            arity(1)?;
            Preset::Cyclic(num(parts[1])?)
        }
        "dihedral" => {
            arity(1)?;
            Preset::Dihedral(num(parts[1])?)
        }
        "quaternion8" | "quaternion" => {
            arity(0)?;
            Preset::Quaternion8
        }
        "symmetric" => {
            arity(1)?;
            Preset::Symmetric(num(parts[1])?)
        }
        "alternating" => {
            arity(1)?;
            Preset::Alternating(num(parts[1])?)
        }
        "abelian" => {
            arity(1)?;
            Preset::Abelian(parts[1].split(',').map(num).collect::<Result<_>>()?)
        }
        "semidirect" => {
            arity(4)?;
            Preset::Semidirect { p: num(parts[1])?, q: num(parts[2])?, r: num(parts[3])? as u32, l: num(parts[4])? as u32 }
        }
        other => return Err(WorkbenchError::parse("preset", format!("unknown family {other:?}"))),
    };
    Ok(preset)
}

/// One permutation per line in 0-based cycle notation; `#` starts a comment.
pub fn parse_group_file(text: &str) -> Result<Vec<Perm>> {
    let mut lines: Vec<Vec<Vec<usize>>> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        lines.push(parse_cycles(line).map_err(|m| WorkbenchError::parse("group file", format!("line {}: {m}", n + 1)))?);
    }
    let degree = lines.iter().flatten().flatten().map(|&x| x + 1).max().unwrap_or(1);
    lines.iter().map(|cycles| Perm::from_cycles(degree, cycles).map_err(WorkbenchError::from)).collect()
}

fn parse_cycles(line: &str) -> std::result::Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = line;
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else { return Err(format!("expected '(' at {rest:?}")) };
        let Some(end) = body.find(')') else { return Err(String::from("unclosed cycle")) };
        let points = body[..end]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| format!("{s:?} is not a point")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body[end + 1..].trim_start();
    }
    Ok(cycles)
}

/// Subgroup class by printed name; the ambient letter itself names the whole group.
fn class_id(group: &Group, ambient: &str, name: &str) -> Result<usize> {
    if name == ambient {
        return Ok(group.subgroup_classes()?.len() - 1);
    }
    Ok(group.class_by_name(name)?)
}

/// `1*[G/G] + 3*[G/C2]`; coefficients may omit `*` or be absent.
pub fn parse_gset(group: &Arc<Group>, literal: &str) -> Result<GSet> {
    let n = group.subgroup_classes()?.len();
    let mut mult = vec![0u64; n];
    for term in literal.split('+').map(str::trim) {
        if term.is_empty() {
            return Err(WorkbenchError::parse("G-set literal", "empty term"));
        }
        let open = term.find('[').ok_or_else(|| WorkbenchError::parse("G-set literal", format!("{term:?} has no orbit")))?;
        let coeff = term[..open].trim().trim_end_matches('*').trim();
        let coeff: u64 = if coeff.is_empty() {
            1
        } else {
            coeff.parse().map_err(|_| WorkbenchError::parse("G-set literal", format!("bad coefficient {coeff:?}")))?
        };
        let inner = term[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| WorkbenchError::parse("G-set literal", format!("{term:?} does not end with ']'")))?;
        let (ambient, name) =
            inner.split_once('/').ok_or_else(|| WorkbenchError::parse("G-set literal", format!("orbit {inner:?} needs the form X/H")))?;
        let id = class_id(group, ambient.trim(), name.trim())?;
        mult[id] += coeff;
    }
    Ok(GSet::new(group, mult)?)
}

pub fn format_gset(x: &GSet) -> Result<String> {
    let classes = x.group().subgroup_classes()?;
    let last = classes.len() - 1;
    let terms: Vec<String> = x
        .multiplicities()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &m)| m > 0)
        .map(|(c, &m)| {
            let name = if c == last { "G" } else { classes[c].name.as_str() };
            if m == 1 {
                format!("[G/{name}]")
            } else {
                format!("{m}[G/{name}]")
            }
        })
        .collect();
    Ok(if terms.is_empty() { String::from("0") } else { terms.join("+") })
}

/// Comma-separated integers, one per p-subgroup class.
pub fn parse_values(text: &str, expected: usize) -> Result<Vec<i64>> {
    let values: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| WorkbenchError::parse("value tuple", format!("{s:?} is not an integer"))))
        .collect::<Result<_>>()?;
    if values.len() != expected {
        return Err(WorkbenchError::parse("value tuple", format!("expected {expected} values, got {}", values.len())));
    }
    Ok(values)
}

pub fn parse_rational(s: &str) -> Result<Q> {
    let bad = || WorkbenchError::parse("rational", format!("{s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().map_err(|_| bad())?;
            let b: BigInt = b.parse().map_err(|_| bad())?;
            if b == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Q::new(a, b))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Builds a rational representation from terms joined by `+`, each optionally
/// prefixed with a copy count: `trivial`, `sign`, `perm:[G/H]`, `reduced:[G/H]`,
/// or `file:PATH` in the rational representation file format.
pub fn parse_real_rep(group: &Arc<Group>, spec: &str) -> Result<RealRep> {
    let mut total: Option<RealRep> = None;
    for term in spec.split('+').map(str::trim) {
        let (copies, body) = match term.split_once('*') {
            Some((c, b)) => (c.trim().parse::<usize>().map_err(|_| WorkbenchError::parse("representation", format!("bad copy count in {term:?}")))?, b.trim()),
            None => (1, term),
        };
        let one = match body.split_once(':') {
            None if body == "trivial" => RealRep::trivial(group),
            None if body == "sign" => RealRep::sign(group),
            Some(("perm", lit)) => RealRep::permutation(&ConcreteGSet::concretize(&parse_gset(group, lit)?)?),
            Some(("reduced", lit)) => RealRep::reduced_permutation(&ConcreteGSet::concretize(&parse_gset(group, lit)?)?)?,
            Some(("file", path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| WorkbenchError::Io { path: path.into(), source: e })?;
                crate::repfile::read_real_rep(group, &text)?
            }
            _ => return Err(WorkbenchError::parse("representation", format!("unknown term {body:?}"))),
        };
        for _ in 0..copies {
            total = Some(match total {
                None => one.clone(),
                Some(t) => t.direct_sum(&one)?,
            });
        }
    }
    total.ok_or_else(|| WorkbenchError::parse("representation", "no terms"))
}
