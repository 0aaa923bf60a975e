//! Worked examples recomputed end to end and compared with their recorded values.

use std::sync::Arc;

use dade_core::burnside::{mult_induction, ConcreteGSet, GSet};
use dade_core::cfun::PClasses;
use dade_core::dade::{dade_omega_bounds, semidirect_expected};
use dade_core::grp::presets::Preset;
use dade_core::grp::{Embedding, Group, Subgroup};
use dade_core::modrep::{
    dade_order, find_isomorphism, is_dade, jordan_profile, summand_multiplicity_1dim, DadeOrder, ModuleInvariants, Rep,
};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use serde_json::json;

use crate::error::{Result, WorkbenchError};
use crate::input::parse_gset;
use crate::report::{table, Report};

pub const IDS: &[&str] = &["s3-syzygy-square", "c7c3-jnd", "s4-jnd", "d8-not-dade", "s3-end-not-dade", "semidirect-table", "pgroup-dade"];

/// Expected and observed values, rendered side by side.
struct Diff {
    rows: Vec<(String, String, String)>,
}

impl Diff {
    fn new() -> Diff {
        Diff { rows: Vec::new() }
    }

    fn check(&mut self, quantity: impl Into<String>, expected: impl ToString, observed: impl ToString) {
        self.rows.push((quantity.into(), expected.to_string(), observed.to_string()));
    }

    fn report(self, id: &str) -> Report {
        let mut r = Report::new("reproduce");
        let passed = self.rows.iter().all(|(_, e, o)| e == o);
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|(q, e, o)| vec![q.clone(), e.clone(), o.clone(), String::from(if e == o { "ok" } else { "DIFF" })])
            .collect();
        r.line(format!("{id}: {}", if passed { "PASS" } else { "FAIL" }));
        r.line(table(&["quantity", "expected", "observed", ""], &rows));
        r.set("id", id);
        r.set(
            "checks",
            self.rows.iter().map(|(q, e, o)| json!({ "quantity": q, "expected": e, "observed": o, "ok": e == o })).collect::<Vec<_>>(),
        );
        r.passed = passed;
        r
    }
}

pub fn run(id: &str) -> Result<Report> {
    let mut d = Diff::new();
    match id {
        "s3-syzygy-square" => s3_syzygy_square(&mut d)?,
        "c7c3-jnd" => c7c3_jnd(&mut d)?,
        "s4-jnd" => s4_jnd(&mut d)?,
        "d8-not-dade" => d8_not_dade(&mut d)?,
        "s3-end-not-dade" => s3_end_not_dade(&mut d)?,
        "semidirect-table" => semidirect_table(&mut d)?,
        "pgroup-dade" => pgroup_dade(&mut d)?,
        other => return Err(WorkbenchError::Usage(format!("unknown example {other:?}; known: {}", IDS.join(", ")))),
    }
    Ok(d.report(id))
}

fn group(p: Preset) -> Result<Arc<Group>> {
    Ok(Arc::new(p.build()?))
}

fn class_rep(g: &Group, name: &str) -> Result<Subgroup> {
    Ok(g.subgroup_classes()?[g.class_by_name(name)?].rep.clone())
}

fn cosets(g: &Arc<Group>, name: &str) -> Result<ConcreteGSet> {
    Ok(ConcreteGSet::cosets(g, &class_rep(g, name)?, None)?)
}

fn jnd_of_sylow(g: &Arc<Group>, p: usize, literal: &str) -> Result<GSet> {
    let emb = Embedding::new(g, &g.sylow(p)?)?;
    Ok(mult_induction(&parse_gset(&emb.sub, literal)?, &emb)?)
}

fn coefficient(y: &GSet, name: &str) -> Result<u64> {
    let g = y.group();
    let id = if name == "G" { g.subgroup_classes()?.len() - 1 } else { g.class_by_name(name)? };
    Ok(y.multiplicities()[id])
}

fn s3_syzygy_square(d: &mut Diff) -> Result<()> {
    let g = group(Preset::Symmetric(3))?;
    let m = Rep::delta_module(&cosets(&g, "C2")?, 3)?;
    let mm = m.tensor(&m)?;
    let sign = Rep::sign(&g, 3)?;
    let k = Rep::trivial(&g, 3)?;
    let complement = Rep::perm_module(&cosets(&g, "C2")?, 3)?;
    d.check("dim Δ(G/C2)", 2, m.dim());
    d.check("sign multiplicity in M⊗M", 1, summand_multiplicity_1dim(&mm, &sign)?);
    d.check("trivial multiplicity in M⊗M", 0, summand_multiplicity_1dim(&mm, &k)?);
    let same = ModuleInvariants::of(&mm)? == ModuleInvariants::of(&sign.direct_sum(&complement)?)?;
    d.check("invariants of M⊗M = sign ⊕ k[G/C2]", true, same);
    let order = match dade_order(&m, 8)? {
        DadeOrder::Finite(n) => n.to_string(),
        DadeOrder::ExceedsBound(b) => format!("> {b}"),
    };
    d.check("order in the Dade group", 4, order);
    Ok(())
}

fn c7c3_jnd(d: &mut Diff) -> Result<()> {
    let g = group(Preset::Semidirect { p: 7, q: 3, r: 1, l: 0 })?;
    let y = jnd_of_sylow(&g, 3, "[S/S]+[S/1]")?;
    for (name, want) in [("G", 1), ("C7", 3), ("C3", 15), ("1", 7)] {
        d.check(format!("coefficient of [G/{name}]"), want, coefficient(&y, name)?);
    }
    d.check("|jnd X| = |X|^[G:S]", 4u128.pow(7), y.size()?);
    Ok(())
}

fn s4_jnd(d: &mut Diff) -> Result<()> {
    let g = group(Preset::Symmetric(4))?;
    let y = jnd_of_sylow(&g, 3, "[S/S]+[S/1]")?;
    for (name, want) in [("G", 1), ("S3", 3), ("C3", 6)] {
        d.check(format!("coefficient of [G/{name}]"), want, coefficient(&y, name)?);
    }
    d.check("Σ n_H [G:H]", 1u128 << 16, y.size()?);
    Ok(())
}

fn d8_not_dade(d: &mut Diff) -> Result<()> {
    let g = group(Preset::Dihedral(8))?;
    let p = 3;
    let r = dade_core::fp::FpMat::from_rows(p, &[vec![0, -1], vec![1, 0]]);
    let s = dade_core::fp::FpMat::from_rows(p, &[vec![1, 0], vec![0, -1]]);
    let m = Rep::new(&g, p, 2, vec![r, s])?;
    let v = is_dade(&m)?;
    d.check("Dade", false, v.dade);
    d.check("trivial summands of End(M)", 1, v.trivial_multiplicity);
    let centre: Vec<usize> = (0..g.order()).filter(|&z| (0..g.order()).all(|x| g.mul(x, z) == g.mul(z, x))).collect();
    let gz = Rep::perm_module(&ConcreteGSet::cosets(&g, &g.closure(&centre), None)?, p)?;
    let end = m.end()?;
    d.check("invariants of End(M) = k[G/Z]", true, ModuleInvariants::of(&end)? == ModuleInvariants::of(&gz)?);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    d.check("explicit isomorphism End(M) ≅ k[G/Z]", true, find_isomorphism(&end, &gz, &mut rng, 20)?.is_some());
    Ok(())
}

fn s3_end_not_dade(d: &mut Diff) -> Result<()> {
    let g = group(Preset::Symmetric(3))?;
    let perm = Rep::perm_module(&cosets(&g, "C3")?, 3)?;
    let end = perm.end()?;
    d.check("trivial summands of End(k[G/C3])", 2, summand_multiplicity_1dim(&end, &Rep::trivial(&g, 3)?)?);
    d.check("sign summands of End(k[G/C3])", 2, summand_multiplicity_1dim(&end, &Rep::sign(&g, 3)?)?);
    d.check("Dade", false, is_dade(&perm)?.dade);
    Ok(())
}

fn semidirect_table(d: &mut Diff) -> Result<()> {
    for (p, q, r, l) in [(3, 2, 1, 0), (7, 3, 1, 0), (3, 2, 1, 1), (5, 2, 2, 0)] {
        let g = group(Preset::Semidirect { p, q, r, l })?;
        let b = dade_omega_bounds(&PClasses::new(&g, p)?)?;
        let label = format!("C{p}⋊C{}^{r}, l={l}", q);
        d.check(format!("{label}: C/C_ba+"), semidirect_expected(p, q, r, l)?, &b.upper);
        d.check(format!("{label}: tag"), "exact_upper", b.exactness.tag());
    }
    Ok(())
}

fn pgroup_dade(d: &mut Diff) -> Result<()> {
    for (n, want) in [(2usize, "0"), (4, "Z/2"), (3, "Z/2"), (5, "Z/2")] {
        let g = group(Preset::Cyclic(n))?;
        let p = dade_core::grp::prime_power(n).map_or(n, |(p, _)| p);
        let b = dade_omega_bounds(&PClasses::new(&g, p)?)?;
        d.check(format!("C{n}: C/C_b"), want, &b.lower);
    }
    for p in [3u32, 5] {
        let g = group(Preset::Cyclic(p as usize))?;
        let delta = Rep::delta_module(&ConcreteGSet::cosets(&g, &g.trivial_subgroup(), None)?, p)?;
        let sq = delta.tensor(&delta)?;
        let mut want = vec![1usize];
        want.extend(std::iter::repeat_n(p as usize, p as usize - 2));
        let mut got = jordan_profile(&sq, &g.whole())?.blocks;
        got.sort_unstable();
        d.check(format!("C{p}: Jordan blocks of Δ(C{p}/1)⊗2"), format!("{want:?}"), format!("{got:?}"));
    }
    Ok(())
}
