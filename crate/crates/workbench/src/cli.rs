//! Argument parsing and verb dispatch.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use dade_core::burnside::{mult_induction, ConcreteGSet, GSet, MarksTable};
use dade_core::cfun::{omega_expand, quotient_structure, PClasses, SuperclassFunction};
use dade_core::conditions::{check_artin, check_borel_smith, condition_lattice, CheckReport, LatticeKind};
use dade_core::dade::{dade_omega_bounds, psi_coset};
use dade_core::grp::{is_prime, Embedding, Group, Limits};
use dade_core::modrep::{dade_order, is_dade_with_bound, DadeOrder, DadeRoute, ModuleInvariants, Rep};
use dade_core::moore::{verify_moore, JoinComplex, MooreCase};
use dade_core::repchar::{is_k_orientable, realize, Generator, GeneratorKind, RealizeOutcome};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use serde_json::{json, Value};

use crate::error::{Result, WorkbenchError};
use crate::input::{format_gset, load_group, parse_gset, parse_real_rep, parse_values, LoadedGroup};
use crate::report::{big, bigs, class_names, pclass_names, structure, subgroup_name, table, Report};
use crate::repfile::{read_rep, write_rep};
use crate::reproduce;

#[derive(Debug, Parser)]
#[command(name = "dade", version, about = "Burnside rings, superclass functions and Dade modules of small finite groups")]
pub struct Cli {
    /// Emit one JSON document instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, default_value_t = 16)]
    pub max_degree: usize,
    #[arg(long, global = true, default_value_t = 20160)]
    pub max_order: usize,
    /// Largest group order whose subgroup lattice is enumerated.
    #[arg(long, global = true, default_value_t = 2048)]
    pub max_lattice_order: usize,
    /// Largest module dimension built by tensor products and endomorphism rings.
    #[arg(long, global = true, default_value_t = 4096)]
    pub max_dim: usize,
    /// Largest number of cells in a join complex.
    #[arg(long, global = true, default_value_t = 20000)]
    pub max_cells: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    /// Borel-Smith functions.
    Cb,
    /// Borel-Smith functions satisfying the oriented Artin condition.
    Cba,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModuleKind {
    Trivial,
    Sign,
    Perm,
    Delta,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CombineOp {
    Tensor,
    Sum,
    Dual,
    End,
}

/// `GROUP` is `preset:<family>:<params>` or a file of generators in cycle notation.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conjugacy classes of subgroups.
    Classes { group: String },
    /// Table of marks.
    Marks { group: String },
    /// Multiplicative induction of a Sylow-subgroup set, written with ambient letter S.
    Jnd { group: String, p: usize, literal: String },
    /// The superclass function ω_X.
    Omega { group: String, p: usize, literal: String },
    /// Expansion of ω_X in the basis ω_{G/Q}.
    Expand { group: String, p: usize, literal: String },
    /// Borel-Smith conditions on comma-separated values, one per p-subgroup class.
    CheckBs { group: String, p: usize, values: String },
    /// Artin or oriented Artin congruences.
    CheckArtin {
        group: String,
        p: usize,
        values: String,
        #[arg(long)]
        oriented: bool,
    },
    /// Basis and quotient of a condition lattice.
    Lattice {
        group: String,
        p: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Lower and upper bounds for the syzygy part of the Dade group.
    DadeBounds { group: String, p: usize },
    /// Residue of a superclass function in C / C_ba⁺.
    Psi { group: String, p: usize, values: String },
    /// Writes a module file.
    ModrepBuild {
        group: String,
        p: u32,
        #[arg(value_enum)]
        kind: ModuleKind,
        #[arg(long)]
        gset: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Combines module files.
    ModrepCombine {
        group: String,
        #[arg(long, value_enum)]
        op: CombineOp,
        first: PathBuf,
        second: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Isomorphism invariants of a module file.
    ModrepInfo { group: String, module: PathBuf },
    /// Dade and capped tests.
    ModrepDade { group: String, module: PathBuf },
    /// Order in the Dade group, searched up to the bound.
    ModrepOrder {
        group: String,
        module: PathBuf,
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
    /// Homology of a join of G-sets and the Moore-space checks.
    Moore {
        #[arg(default_value = "preset:symmetric:3")]
        group: String,
        /// G-set literals separated by ';'.
        #[arg(long)]
        factors: String,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Writes a superclass function as a combination of k-orientable representations.
    Realize {
        group: String,
        p: usize,
        values: String,
        /// Only complex representations.
        #[arg(long)]
        complex: bool,
    },
    /// k-orientability of a rational representation.
    Orientable { group: String, p: usize, rep: String },
    /// Recomputes a worked example and compares it with recorded values.
    Reproduce {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(reproduce::IDS))]
        id: String,
    },
}

/// Exit status and rendered output of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(report) => Outcome { code: if report.passed { 0 } else { 1 }, stdout: report.render(cli.json), stderr: String::new() },
        Err(e) => {
            let code = e.exit_code();
            let stderr = if cli.json {
                let doc = json!({ "schema": crate::report::SCHEMA, "error": e.to_string(), "exit_code": code });
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("error JSON is serializable"))
            } else {
                format!("error: {e}\n")
            };
            Outcome { code, stdout: String::new(), stderr }
        }
    }
}

impl Cli {
    fn limits(&self) -> Limits {
        Limits { max_degree: self.max_degree, max_order: self.max_order, max_lattice_order: self.max_lattice_order }
    }

    fn group(&self, source: &str) -> Result<LoadedGroup> {
        load_group(source, self.limits())
    }

    fn pclasses(&self, source: &str, p: usize) -> Result<(LoadedGroup, PClasses)> {
        check_prime(p)?;
        let g = self.group(source)?;
        let pc = PClasses::new(&g.group, p)?;
        Ok((g, pc))
    }
}

fn check_prime(p: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(WorkbenchError::Usage(format!("{p} is not a prime")));
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Classes { group } => classes(&cli.group(group)?),
        Command::Marks { group } => marks(&cli.group(group)?),
        Command::Jnd { group, p, literal } => jnd(&cli.pclasses(group, *p)?.0, *p, literal),
        Command::Omega { group, p, literal } => {
            let (g, pc) = cli.pclasses(group, *p)?;
            omega(&pc, &parse_gset(&g.group, literal)?)
        }
        Command::Expand { group, p, literal } => {
            let (g, pc) = cli.pclasses(group, *p)?;
            expand(&pc, &parse_gset(&g.group, literal)?)
        }
        Command::CheckBs { group, p, values } => {
            let (_, pc) = cli.pclasses(group, *p)?;
            let f = function(&pc, values)?;
            Ok(check_report("check-bs", &pc, &f, &check_borel_smith(&pc, &f)?))
        }
        Command::CheckArtin { group, p, values, oriented } => {
            let (_, pc) = cli.pclasses(group, *p)?;
            let f = function(&pc, values)?;
            Ok(check_report("check-artin", &pc, &f, &check_artin(&pc, &f, *oriented)?))
        }
        Command::Lattice { group, p, kind } => lattice(&cli.pclasses(group, *p)?.1, *kind),
        Command::DadeBounds { group, p } => dade_bounds(&cli.pclasses(group, *p)?.1),
        Command::Psi { group, p, values } => {
            let (_, pc) = cli.pclasses(group, *p)?;
            psi(&pc, &function(&pc, values)?)
        }
        Command::ModrepBuild { group, p, kind, gset, out } => {
            check_prime(*p as usize)?;
            modrep_build(&cli.group(group)?, *p, *kind, gset.as_deref(), out)
        }
        Command::ModrepCombine { group, op, first, second, out } => {
            modrep_combine(cli, &cli.group(group)?, *op, first, second.as_deref(), out)
        }
        Command::ModrepInfo { group, module } => {
            let g = cli.group(group)?;
            modrep_info(&load_module(&g, module)?)
        }
        Command::ModrepDade { group, module } => {
            let g = cli.group(group)?;
            modrep_dade(&load_module(&g, module)?, cli.max_dim)
        }
        Command::ModrepOrder { group, module, bound } => {
            let g = cli.group(group)?;
            modrep_order(&load_module(&g, module)?, *bound)
        }
        Command::Moore { group, factors, p, seed } => {
            check_prime(*p as usize)?;
            moore(&cli.group(group)?, factors, *p, *seed, cli.max_cells)
        }
        Command::Realize { group, p, values, complex } => {
            let (_, pc) = cli.pclasses(group, *p)?;
            realize_verb(&pc, &function(&pc, values)?, *complex)
        }
        Command::Orientable { group, p, rep } => {
            let (g, pc) = cli.pclasses(group, *p)?;
            orientable(&pc, &g.group, rep)
        }
        Command::Reproduce { id } => reproduce::run(id),
    }
}

fn function(pc: &PClasses, values: &str) -> Result<SuperclassFunction> {
    Ok(SuperclassFunction::new(pc, parse_values(values, pc.len())?)?)
}

fn classes(g: &LoadedGroup) -> Result<Report> {
    let classes = g.group.subgroup_classes()?;
    let mut r = Report::new("classes");
    r.line(format!("group {} of order {}", g.label, g.group.order()));
    let rows: Vec<Vec<String>> = classes
        .iter()
        .map(|c| vec![c.id.to_string(), c.name.clone(), c.order().to_string(), c.members.len().to_string(), c.normalizer_order.to_string()])
        .collect();
    r.line(table(&["id", "name", "order", "conjugates", "normalizer"], &rows));
    r.set("group", g.label.clone()).set("order", g.group.order()).set("group_sha256", g.hash());
    r.set("class_order", class_names(&g.group));
    r.set(
        "classes",
        classes
            .iter()
            .map(|c| json!({ "id": c.id, "name": c.name, "order": c.order(), "conjugates": c.members.len(), "normalizer_order": c.normalizer_order }))
            .collect::<Vec<_>>(),
    );
    Ok(r)
}

fn marks(g: &LoadedGroup) -> Result<Report> {
    let m = MarksTable::of(&g.group)?;
    let names = class_names(&g.group);
    let mut r = Report::new("marks");
    let mut header = vec!["G/H \\ K"];
    header.extend(names.iter().map(String::as_str));
    let rows: Vec<Vec<String>> = m
        .table
        .iter()
        .zip(&names)
        .map(|(row, n)| std::iter::once(n.clone()).chain(row.iter().map(u128::to_string)).collect())
        .collect();
    r.line(table(&header, &rows));
    r.set("class_order", names.clone());
    r.set("marks", m.table.iter().map(|row| row.iter().map(|&x| x as u64).collect::<Vec<_>>()).collect::<Vec<_>>());
    Ok(r)
}

fn gset_json(x: &GSet) -> Result<Value> {
    Ok(json!({ "literal": format_gset(x)?, "multiplicities": x.multiplicities(), "size": x.size()?.to_string() }))
}

fn jnd(g: &LoadedGroup, p: usize, literal: &str) -> Result<Report> {
    let s = g.group.sylow(p)?;
    let emb = Embedding::new(&g.group, &s)?;
    let x = parse_gset(&emb.sub, literal)?;
    let y = mult_induction(&x, &emb)?;
    let mut r = Report::new("jnd");
    r.line(format_gset(&y)?);
    r.line(format!("|X| = {}, |jnd X| = {}", x.size()?, y.size()?));
    r.set("class_order", class_names(&g.group));
    r.set("sylow_class_order", class_names(&emb.sub));
    r.set("input", gset_json(&x)?);
    r.set("result", gset_json(&y)?);
    Ok(r)
}

fn omega(pc: &PClasses, x: &GSet) -> Result<Report> {
    let f = SuperclassFunction::omega(pc, x)?;
    let names = pclass_names(pc);
    let mut r = Report::new("omega");
    r.line(table(&["P", "omega"], &names.iter().zip(&f.values).map(|(n, v)| vec![n.clone(), v.to_string()]).collect::<Vec<_>>()));
    r.set("pclass_order", names).set("values", f.values.clone());
    Ok(r)
}

fn expand(pc: &PClasses, x: &GSet) -> Result<Report> {
    let a = omega_expand(pc, x)?;
    let names = pclass_names(pc);
    let terms: Vec<String> = a
        .iter()
        .zip(&names)
        .filter(|(c, _)| **c != 0)
        .map(|(c, n)| format!("{c}*w[G/{n}]"))
        .collect();
    let mut r = Report::new("expand");
    r.line(if terms.is_empty() { String::from("0") } else { terms.join(" + ") });
    r.set("pclass_order", names).set("coefficients", a);
    Ok(r)
}

fn check_report(verb: &'static str, pc: &PClasses, f: &SuperclassFunction, c: &CheckReport) -> Report {
    let g = &pc.group;
    let mut r = Report::new(verb);
    r.passed = c.passed;
    r.line(if c.passed { "PASS" } else { "FAIL" });
    let mut witnesses = Vec::new();
    for w in &c.failures {
        let subs: Vec<String> = w.subgroups.iter().map(|h| subgroup_name(g, h)).collect();
        let relation = if w.modulus == 0 { String::from("= 0") } else { format!("≡ 0 mod {}", w.modulus) };
        r.line(format!("{} at {}: combination is {}, needs {relation}", w.label, subs.join(" < "), w.observed));
        witnesses.push(json!({ "label": w.label, "subgroups": subs, "modulus": w.modulus, "observed": w.observed }));
    }
    r.set("pclass_order", pclass_names(pc)).set("values", f.values.clone()).set("failures", witnesses);
    r
}

fn lattice(pc: &PClasses, kind: Kind) -> Result<Report> {
    let lk = match kind {
        Kind::Cb => LatticeKind::BorelSmith,
        Kind::Cba => LatticeKind::BorelSmithOrientedArtin,
    };
    let l = condition_lattice(pc, lk)?;
    let basis = l.basis_i64()?;
    let q = quotient_structure(&l)?;
    let mut r = Report::new("lattice");
    let names = pclass_names(pc);
    r.line(format!("basis rows over {}", names.join(", ")));
    for row in &basis {
        r.line(row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
    }
    r.line(format!("quotient: {q}"));
    r.set("pclass_order", names).set("basis", basis).set("quotient", structure(&q));
    r.set("index", q.order().map_or(Value::Null, Value::from));
    Ok(r)
}

fn dade_bounds(pc: &PClasses) -> Result<Report> {
    let b = dade_omega_bounds(pc)?;
    let mut r = Report::new("dade-bounds");
    r.line(format!("lower C/C_b: {}", b.lower));
    r.line(format!("upper C/C_ba+: {}", b.upper));
    r.line(format!("tag: {}", b.exactness.tag()));
    r.set("pclass_order", pclass_names(pc));
    r.set("lower", structure(&b.lower)).set("upper", structure(&b.upper)).set("exactness", b.exactness.tag());
    Ok(r)
}

fn psi(pc: &PClasses, f: &SuperclassFunction) -> Result<Report> {
    let c = psi_coset(pc, f)?;
    let mut r = Report::new("psi");
    let residues: Vec<String> = c.residues.iter().map(ToString::to_string).collect();
    r.line(format!("quotient: {}", c.structure));
    r.line(format!("residues: [{}]", residues.join(", ")));
    r.line(format!("zero: {}", c.is_zero()));
    r.set("pclass_order", pclass_names(pc)).set("quotient", structure(&c.structure));
    r.set("residues", bigs(&c.residues)).set("zero", c.is_zero());
    Ok(r)
}

fn load_module(g: &LoadedGroup, path: &Path) -> Result<Rep> {
    let text = std::fs::read_to_string(path).map_err(|e| WorkbenchError::Io { path: path.to_path_buf(), source: e })?;
    read_rep(g, &text)
}

fn save_module(g: &LoadedGroup, m: &Rep, verb: &'static str, out: &Path) -> Result<Report> {
    std::fs::write(out, write_rep(g, m)).map_err(|e| WorkbenchError::Io { path: out.to_path_buf(), source: e })?;
    let mut r = Report::new(verb);
    r.line(format!("wrote module of dimension {} over F_{} to {}", m.dim(), m.p(), out.display()));
    r.set("dim", m.dim()).set("p", m.p()).set("path", out.display().to_string());
    Ok(r)
}

fn modrep_build(g: &LoadedGroup, p: u32, kind: ModuleKind, gset: Option<&str>, out: &Path) -> Result<Report> {
    let concrete = || -> Result<ConcreteGSet> {
        let lit = gset.ok_or_else(|| WorkbenchError::Usage(String::from("perm and delta modules need --gset")))?;
        Ok(ConcreteGSet::concretize(&parse_gset(&g.group, lit)?)?)
    };
    let m = match kind {
        ModuleKind::Trivial => Rep::trivial(&g.group, p)?,
        ModuleKind::Sign => Rep::sign(&g.group, p)?,
        ModuleKind::Perm => Rep::perm_module(&concrete()?, p)?,
        ModuleKind::Delta => Rep::delta_module(&concrete()?, p)?,
    };
    save_module(g, &m, "modrep-build", out)
}

fn modrep_combine(cli: &Cli, g: &LoadedGroup, op: CombineOp, first: &Path, second: Option<&Path>, out: &Path) -> Result<Report> {
    let a = load_module(g, first)?;
    let other = || -> Result<Rep> {
        let path = second.ok_or_else(|| WorkbenchError::Usage(String::from("tensor and sum take two module files")))?;
        load_module(g, path)
    };
    let m = match op {
        CombineOp::Tensor => a.tensor_with_bound(&other()?, cli.max_dim)?,
        CombineOp::Sum => a.direct_sum(&other()?)?,
        CombineOp::Dual => a.dual()?,
        CombineOp::End => a.end_with_bound(cli.max_dim)?,
    };
    save_module(g, &m, "modrep-combine", out)
}

fn modrep_info(m: &Rep) -> Result<Report> {
    let g = m.group();
    let inv = ModuleInvariants::of(m)?;
    let names = class_names(g);
    let mut r = Report::new("modrep-info");
    r.line(format!("dim {} over F_{}", inv.dim, m.p()));
    for (c, blocks) in &inv.jordan {
        r.line(format!("jordan blocks at {}: {:?}", names[*c], blocks));
    }
    r.line(format!("linear character multiplicities: {:?}", inv.linear_multiplicities));
    for (c, d) in &inv.brauer_dims {
        r.line(format!("brauer quotient at {}: dim {d}", names[*c]));
    }
    r.set("class_order", names.clone()).set("dim", inv.dim).set("p", m.p());
    r.set("jordan", inv.jordan.iter().map(|(c, b)| json!({ "class": names[*c], "blocks": b })).collect::<Vec<_>>());
    r.set("linear_multiplicities", inv.linear_multiplicities.clone());
    r.set("brauer_dims", inv.brauer_dims.iter().map(|(c, d)| json!({ "class": names[*c], "dim": d })).collect::<Vec<_>>());
    Ok(r)
}

fn modrep_dade(m: &Rep, bound: usize) -> Result<Report> {
    let v = is_dade_with_bound(m, bound)?;
    let route = match v.route {
        DadeRoute::Endomorphisms => "endomorphisms",
        DadeRoute::CyclicSylow => "cyclic-sylow",
    };
    let mut r = Report::new("modrep-dade");
    r.line(format!("dade: {}", v.dade));
    r.line(format!("capped: {}", v.capped));
    r.line(format!("trivial summands of End: {}", v.trivial_multiplicity));
    r.line(format!("End is p-permutation: {}", v.endo_p_permutation));
    r.line(format!("route: {route}"));
    r.set("dade", v.dade).set("capped", v.capped).set("trivial_multiplicity", v.trivial_multiplicity);
    r.set("endo_p_permutation", v.endo_p_permutation).set("route", route);
    Ok(r)
}

fn modrep_order(m: &Rep, bound: usize) -> Result<Report> {
    let mut r = Report::new("modrep-order");
    match dade_order(m, bound)? {
        DadeOrder::Finite(n) => {
            r.line(format!("order {n}"));
            r.set("order", n);
        }
        DadeOrder::ExceedsBound(b) => {
            r.line(format!("order exceeds {b}"));
            r.set("order", Value::Null).set("exceeds", b);
            r.passed = false;
        }
    }
    Ok(r)
}

fn moore(g: &LoadedGroup, factors: &str, p: u32, seed: u64, max_cells: usize) -> Result<Report> {
    let sets = factors
        .split(';')
        .map(|lit| Ok(ConcreteGSet::concretize(&parse_gset(&g.group, lit.trim())?)?))
        .collect::<Result<Vec<_>>>()?;
    let xc = JoinComplex::with_bound(sets, max_cells)?;
    let pc = PClasses::new(&g.group, p as usize)?;
    let mut r = Report::new("moore");
    let mut rows = Vec::new();
    let mut homology = Vec::new();
    for i in 0..pc.len() {
        let h = xc.fixed_homology(p, pc.rep(i));
        let support: Vec<String> = h.support().iter().map(i64::to_string).collect();
        rows.push(vec![
            pc.name(i).to_string(),
            h.fixed_dim.to_string(),
            format!("{:?}", h.reduced),
            format!("{{{}}}", support.join(",")),
            h.is_moore().to_string(),
            h.is_tight().to_string(),
        ]);
        homology.push(json!({
            "subgroup": pc.name(i),
            "fixed_dim": h.fixed_dim,
            "reduced_betti_from_minus_one": h.reduced,
            "cells_from_minus_one": h.cell_counts,
            "support": h.support(),
            "moore": h.is_moore(),
            "tight": h.is_tight(),
        }));
    }
    r.line(format!("join of {} factors, dimension {}", xc.factors().len(), xc.dim()));
    r.line(table(&["P", "dim X^P", "reduced H_-1..", "support", "moore", "tight"], &rows));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = verify_moore(&xc, p, &mut rng)?;
    let case = match v.case {
        MooreCase::SylowFree => "sylow-free",
        MooreCase::SylowFixed => "sylow-fixed",
    };
    r.line(format!("case: {case}"));
    r.line(format!("Dim: {:?}", v.dim.values));
    r.line(format!("top homology dimension: {}", v.top_dim));
    r.line(format!("capped: {}", v.capped));
    r.line(format!("psi residues: {:?}", v.psi.residues.iter().map(ToString::to_string).collect::<Vec<_>>()));
    for s in &v.skipped {
        r.line(format!("skipped: {s}"));
    }
    for f in &v.failures {
        r.line(format!("FAIL: {f}"));
    }
    r.line(if v.passed() { "PASS" } else { "FAIL" });
    r.passed = v.passed();
    r.set("pclass_order", pclass_names(&pc)).set("homology", homology);
    r.set("case", case).set("moore", v.moore).set("capped", v.capped).set("dim_function", v.dim.values.clone());
    r.set("top_dim", v.top_dim).set("psi_residues", bigs(&v.psi.residues));
    r.set("failures", v.failures.clone()).set("skipped", v.skipped.clone());
    Ok(r)
}

fn describe(pc: &PClasses, gen: &Generator) -> String {
    let g = &pc.group;
    let names = class_names(g);
    let body = match &gen.kind {
        GeneratorKind::Trivial => String::from("trivial"),
        GeneratorKind::Permutation { class } => format!("R[G/{}]", names[*class]),
        GeneratorKind::Block(t) => format!(
            "block {} < {} < {} (q={}, r={}, l={})",
            subgroup_name(g, &t.lower),
            subgroup_name(g, &t.kernel),
            subgroup_name(g, &t.top),
            t.q,
            t.r,
            t.l
        ),
        GeneratorKind::InducedCyclic { pclass } => format!("ind from {}", pc.name(*pclass)),
    };
    if gen.complex {
        format!("{body} [complex]")
    } else {
        body
    }
}

fn realize_verb(pc: &PClasses, f: &SuperclassFunction, complex: bool) -> Result<Report> {
    let mut r = Report::new("realize");
    r.set("pclass_order", pclass_names(pc)).set("target", f.values.clone()).set("complex_only", complex);
    match realize(pc, f, complex)? {
        RealizeOutcome::Realized(re) => {
            let mut used = Vec::new();
            for (gen, c) in re.used() {
                r.line(format!("{c:>4} x {} with Dim {:?}", describe(pc, gen), gen.dim.values));
                used.push(json!({ "generator": describe(pc, gen), "coefficient": big(c), "dim_function": gen.dim.values }));
            }
            let psi = psi_coset(pc, &re.dim)?;
            r.line(format!("Dim of the combination: {:?}", re.dim.values));
            r.line(format!("psi coset zero: {}", psi.is_zero()));
            r.set("realized", true).set("terms", used).set("dim_function", re.dim.values.clone()).set("psi_zero", psi.is_zero());
        }
        RealizeOutcome::Obstructed { generators, residual } => {
            r.passed = false;
            r.line("obstructed: not in the span of the generating family");
            r.line(format!("family: {}", generators.iter().map(|g| describe(pc, g)).collect::<Vec<_>>().join("; ")));
            r.line(format!("residual: {:?}", residual.iter().map(ToString::to_string).collect::<Vec<_>>()));
            r.set("realized", false).set("residual", bigs(&residual));
        }
    }
    Ok(r)
}

fn orientable(pc: &PClasses, g: &Arc<Group>, spec: &str) -> Result<Report> {
    let v = parse_real_rep(g, spec)?;
    let o = is_k_orientable(&v, pc)?;
    let dim = v.dim_function(pc)?;
    let mut r = Report::new("orientable");
    r.line(format!("dimension {}, Dim {:?}", v.dim(), dim.values));
    r.line(format!("k-orientable: {}", o.orientable));
    r.set("pclass_order", pclass_names(pc)).set("dim", v.dim()).set("dim_function", dim.values.clone());
    r.set("orientable", o.orientable);
    match &o.witness {
        Some(w) => {
            r.line(format!("witness: element with word {:?} in N({}) acts with determinant {}", g.word(w.element), pc.name(w.class), w.det));
            r.set("witness", json!({ "subgroup": pc.name(w.class), "word": g.word(w.element), "det": w.det.to_string() }));
        }
        None => {
            r.set("witness", Value::Null);
        }
    }
    Ok(r)
}
