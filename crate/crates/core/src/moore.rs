//! Joins of G-sets as simplicial G-complexes: reduced chain complexes over `F_p`,
//! homology of fixed subcomplexes, dimension functions and the top homology module.
//!
//! An `i`-cell is a choice of `i + 1` factors and one point from each, listed in
//! factor order. Its `t`-th face drops the `t`-th chosen factor with sign `(−1)^t`.
//! The augmented complex has `C_{−1} = k`, so the empty complex has `H̃_{−1} = k`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use rand_core::RngCore;

use crate::burnside::{ConcreteGSet, GSet};
use crate::cfun::{PClasses, SuperclassFunction};
use crate::dade::{PsiCoset, PsiMap};
use crate::error::{Error, Result};
use crate::fp::{coordinates, FpMat};
use crate::grp::{Embedding, Group, Subgroup};
use crate::modrep::{is_dade, is_summand, summand_multiplicity_1dim, ModuleInvariants, Provenance, Rep};

pub const DEFAULT_CELL_BOUND: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cell {
    /// Bit `j` set when factor `j` contributes a vertex.
    pub factors: u32,
    /// One point per chosen factor, in factor order.
    pub points: Vec<u32>,
}

impl Cell {
    pub fn dim(&self) -> usize {
        self.points.len() - 1
    }
}

#[derive(Clone, Debug)]
pub struct JoinComplex {
    group: Arc<Group>,
    factors: Vec<ConcreteGSet>,
    /// `cells[i]` lists the `i`-cells.
    cells: Vec<Vec<Cell>>,
    index: Vec<BTreeMap<Cell, usize>>,
}

/// Reduced homology dimensions of a fixed subcomplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedHomology {
    pub subgroup: Subgroup,
    /// `reduced[i + 1] = dim H̃_i`, from `i = −1` to the top dimension.
    pub reduced: Vec<usize>,
    /// Dimension of the fixed subcomplex, `−1` when empty.
    pub fixed_dim: i64,
    /// Fixed cells per dimension, starting at `−1`.
    pub cell_counts: Vec<usize>,
}

impl FixedHomology {
    /// Degrees with nonzero reduced homology.
    pub fn support(&self) -> Vec<i64> {
        self.reduced.iter().enumerate().filter(|(_, &d)| d > 0).map(|(i, _)| i as i64 - 1).collect()
    }

    /// Homology in exactly one degree.
    pub fn is_moore(&self) -> bool {
        self.support().len() == 1
    }

    /// Homology in exactly one degree, equal to the dimension of the fixed subcomplex.
    pub fn is_tight(&self) -> bool {
        self.support() == [self.fixed_dim]
    }
}

impl JoinComplex {
    pub fn new(factors: Vec<ConcreteGSet>) -> Result<JoinComplex> {
        JoinComplex::with_bound(factors, DEFAULT_CELL_BOUND)
    }

    pub fn with_bound(factors: Vec<ConcreteGSet>, bound: usize) -> Result<JoinComplex> {
        let Some(first) = factors.first() else {
            return Err(Error::InvalidParameter(String::from("a join needs at least one factor")));
        };
        let group = first.group().clone();
        if factors.len() > 31 {
            return Err(Error::InvalidParameter(String::from("at most 31 join factors")));
        }
        if factors.iter().any(|x| !x.group().same_as(&group)) {
            return Err(Error::Mismatch(String::from("join factors over different groups")));
        }
        if factors.iter().any(ConcreteGSet::is_empty) {
            return Err(Error::InvalidParameter(String::from("join factors must be nonempty")));
        }
        let r = factors.len();
        let mut total: usize = 0;
        for mask in 1u32..(1 << r) {
            let size = (0..r).filter(|&j| mask >> j & 1 == 1).try_fold(1usize, |acc, j| acc.checked_mul(factors[j].len()));
            total = size.and_then(|s| total.checked_add(s)).ok_or(Error::Overflow)?;
        }
        if total > bound {
            return Err(Error::DimensionBound { what: "join cells", limit: bound, got: total });
        }
        let mut cells: Vec<Vec<Cell>> = alloc::vec![Vec::new(); r];
        for mask in 1u32..(1 << r) {
            let chosen: Vec<usize> = (0..r).filter(|&j| mask >> j & 1 == 1).collect();
            let mut points = alloc::vec![0u32; chosen.len()];
            loop {
                cells[chosen.len() - 1].push(Cell { factors: mask, points: points.clone() });
                let mut t = chosen.len();
                while t > 0 {
                    t -= 1;
                    points[t] += 1;
                    if (points[t] as usize) < factors[chosen[t]].len() {
                        break;
                    }
                    points[t] = 0;
                    if t == 0 {
                        t = usize::MAX;
                        break;
                    }
                }
                if t == usize::MAX {
                    break;
                }
            }
        }
        for level in cells.iter_mut() {
            level.sort();
        }
        let index = cells.iter().map(|level| level.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect()).collect();
        Ok(JoinComplex { group, factors, cells, index })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn factors(&self) -> &[ConcreteGSet] {
        &self.factors
    }

    /// Top dimension, one less than the number of factors.
    pub fn dim(&self) -> usize {
        self.factors.len() - 1
    }

    pub fn cells(&self, i: usize) -> &[Cell] {
        &self.cells[i]
    }

    fn act(&self, g: usize, c: &Cell) -> Cell {
        let chosen = (0..self.factors.len()).filter(|&j| c.factors >> j & 1 == 1);
        let points = chosen.zip(&c.points).map(|(j, &x)| self.factors[j].act(g, x as usize) as u32).collect();
        Cell { factors: c.factors, points }
    }

    /// The `i`-cells as a G-set.
    pub fn cell_gset(&self, i: usize) -> Result<ConcreteGSet> {
        let n = self.cells[i].len();
        let mut action = Vec::with_capacity(self.group.order() * n);
        for g in 0..self.group.order() {
            action.extend(self.cells[i].iter().map(|c| self.index[i][&self.act(g, c)] as u32));
        }
        ConcreteGSet::from_action(&self.group, n, action)
    }

    fn fixed_cells(&self, h: &Subgroup) -> Vec<Vec<usize>> {
        let gens = self.group.subgroup_generators(h);
        self.cells
            .iter()
            .map(|level| (0..level.len()).filter(|&c| gens.iter().all(|&g| self.act(g, &level[c]) == level[c])).collect())
            .collect()
    }

    /// `∂_i` from the listed `i`-cells to the listed `(i−1)`-cells.
    fn boundary(&self, p: u32, i: usize, rows: &[usize], cols: &[usize]) -> FpMat {
        if i == 0 {
            let mut m = FpMat::zeros(p, 1, cols.len());
            for j in 0..cols.len() {
                m.set(0, j, 1);
            }
            return m;
        }
        let mut position = BTreeMap::new();
        for (r, &c) in rows.iter().enumerate() {
            position.insert(c, r);
        }
        let mut m = FpMat::zeros(p, rows.len(), cols.len());
        for (j, &c) in cols.iter().enumerate() {
            let cell = &self.cells[i][c];
            let chosen: Vec<usize> = (0..self.factors.len()).filter(|&f| cell.factors >> f & 1 == 1).collect();
            for t in 0..=i {
                let mut pts = cell.points.clone();
                pts.remove(t);
                let face = Cell { factors: cell.factors & !(1 << chosen[t]), points: pts };
                let r = position[&self.index[i - 1][&face]];
                let sign = if t % 2 == 0 { 1 } else { p - 1 };
                m.set(r, j, sign);
            }
        }
        m
    }

    /// Reduced homology of the `P`-fixed subcomplex, from ranks of the augmented boundaries.
    pub fn fixed_homology(&self, p: u32, sub: &Subgroup) -> FixedHomology {
        let fixed = self.fixed_cells(sub);
        let top = self.dim();
        let mut counts = alloc::vec![1usize];
        counts.extend(fixed.iter().map(Vec::len));
        // ranks[i] = rank ∂_i for i = 0..=top, with ∂_{top+1} = 0.
        let mut ranks: Vec<usize> = (0..=top)
            .map(|i| {
                if fixed[i].is_empty() {
                    0
                } else {
                    let rows: Vec<usize> = if i == 0 { alloc::vec![0] } else { fixed[i - 1].clone() };
                    self.boundary(p, i, &rows, &fixed[i]).rank()
                }
            })
            .collect();
        ranks.push(0);
        let mut reduced = alloc::vec![1 - ranks[0]];
        for i in 0..=top {
            reduced.push(counts[i + 1] - ranks[i] - ranks[i + 1]);
        }
        let fixed_dim = fixed.iter().rposition(|level| !level.is_empty()).map_or(-1, |d| d as i64);
        FixedHomology { subgroup: sub.clone(), reduced, fixed_dim, cell_counts: counts }
    }

    /// `Dim(P) = dim X^P + 1` on each p-subgroup class, checked against `Σ_i ω(X_i)`
    /// over cell G-sets and against `Σ_j ω(X_j)` over factors.
    pub fn dim_function(&self, pc: &PClasses) -> Result<SuperclassFunction> {
        self.check_group(pc)?;
        let values = (0..pc.len())
            .map(|i| {
                let sub = pc.rep(i);
                self.factors.iter().filter(|x| !x.fixed_points(sub).is_empty()).count() as i64
            })
            .collect();
        let dim = SuperclassFunction { values };
        let mut by_cells = SuperclassFunction::zero(pc);
        for i in 0..=self.dim() {
            by_cells = by_cells.add(&SuperclassFunction::omega(pc, &self.cell_gset(i)?.to_gset()?)?);
        }
        let mut by_factors = SuperclassFunction::zero(pc);
        for x in &self.factors {
            by_factors = by_factors.add(&SuperclassFunction::omega(pc, &x.to_gset()?)?);
        }
        if dim != by_cells || dim != by_factors {
            return Err(Error::IdentityFailed(String::from("dimension function differs from the sum of ω over cells")));
        }
        Ok(dim)
    }

    fn check_group(&self, pc: &PClasses) -> Result<()> {
        if !pc.group.same_as(&self.group) {
            return Err(Error::Mismatch(String::from("p-classes of a different group")));
        }
        Ok(())
    }

    /// `H̃_n = ker ∂_n` for the top dimension `n`, with the permutation action on cells.
    pub fn top_homology_module(&self, p: u32) -> Result<Rep> {
        let n = self.dim();
        let all: Vec<usize> = (0..self.cells[n].len()).collect();
        let rows: Vec<usize> = if n == 0 { alloc::vec![0] } else { (0..self.cells[n - 1].len()).collect() };
        let kernel = self.boundary(p, n, &rows, &all).nullspace();
        let acting: Vec<usize> = self.group.generators().to_vec();
        let rep = self.kernel_action(p, n, &all, &kernel, &acting)?;
        // H̃_n of a join is the tensor product of the factors' relative syzygies.
        Ok(Rep::assemble(&self.group, p, kernel.len(), rep, Provenance::ENDO))
    }

    /// `H̃_m(X^P)` for `m = dim X^P`, as a module for `N_G(P)`.
    pub fn fixed_top_homology(&self, p: u32, sub: &Subgroup) -> Result<BrauerHomology> {
        let normalizer = Embedding::new(&self.group, &self.group.normalizer(sub))?;
        let fixed = self.fixed_cells(sub);
        let Some(m) = fixed.iter().rposition(|level| !level.is_empty()) else {
            let k = Rep::trivial(&normalizer.sub, p)?;
            return Ok(BrauerHomology { degree: -1, normalizer, rep: k });
        };
        let rows: Vec<usize> = if m == 0 { alloc::vec![0] } else { fixed[m - 1].clone() };
        let kernel = self.boundary(p, m, &rows, &fixed[m]).nullspace();
        let acting: Vec<usize> = normalizer.sub.generators().iter().map(|&s| normalizer.to_parent[s]).collect();
        let gens = self.kernel_action(p, m, &fixed[m], &kernel, &acting)?;
        let rep = Rep::assemble(&normalizer.sub, p, kernel.len(), gens, Provenance::default());
        Ok(BrauerHomology { degree: m as i64, normalizer, rep })
    }

    /// Matrices of the given elements on a kernel basis inside the span of the listed `i`-cells.
    fn kernel_action(&self, p: u32, i: usize, cells: &[usize], kernel: &[Vec<u32>], acting: &[usize]) -> Result<Vec<FpMat>> {
        let mut position = BTreeMap::new();
        for (r, &c) in cells.iter().enumerate() {
            position.insert(c, r);
        }
        let d = kernel.len();
        acting
            .iter()
            .map(|&g| {
                let image_of: Vec<usize> = cells.iter().map(|&c| position[&self.index[i][&self.act(g, &self.cells[i][c])]]).collect();
                let images: Vec<Vec<u32>> = kernel
                    .iter()
                    .map(|v| {
                        let mut w = alloc::vec![0u32; cells.len()];
                        for (r, &x) in v.iter().enumerate() {
                            w[image_of[r]] = x;
                        }
                        w
                    })
                    .collect();
                let coords = coordinates(p, cells.len(), kernel, &images)
                    .ok_or_else(|| Error::NotARepresentation(String::from("cycles are not preserved")))?;
                let mut mat = FpMat::zeros(p, d, d);
                for (j, x) in coords.iter().enumerate() {
                    for r in 0..d {
                        mat.set(r, j, x[r]);
                    }
                }
                Ok(mat)
            })
            .collect()
    }
}

/// Top reduced homology of a fixed subcomplex with its normalizer action.
#[derive(Clone, Debug)]
pub struct BrauerHomology {
    pub degree: i64,
    pub normalizer: Embedding,
    pub rep: Rep,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MooreCase {
    /// No factor has Sylow-fixed points.
    SylowFree,
    /// Some factor has Sylow-fixed points.
    SylowFixed,
}

#[derive(Clone, Debug)]
pub struct MooreReport {
    pub case: MooreCase,
    /// Homology concentrated in one degree at every p-subgroup class.
    pub moore: bool,
    /// `H̃(X^S)` has `k` as an `N_G(S)`-summand.
    pub capped: bool,
    pub dim: SuperclassFunction,
    pub top_dim: usize,
    /// `Ψ_G(Dim X)`.
    pub psi: PsiCoset,
    /// Assertions that failed; empty on success.
    pub failures: Vec<String>,
    /// Hypotheses that did not hold, so the corresponding claims were not checked.
    pub skipped: Vec<String>,
}

impl MooreReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the top homology module of a join against the Dade-module statements.
///
/// Without Sylow-fixed points: the module is a capped Dade module with the
/// invariants of `⊗_j Δ(X_j)`. With them, and a capped fixed subcomplex:
/// `⊗_{X_j^S = ∅} Δ(X_j)` is a capped Dade summand and `Ψ_G(Dim X)` is the
/// coset of `Σ_{X_j^S = ∅} ω_{X_j}`.
pub fn verify_moore<R: RngCore>(xc: &JoinComplex, p: u32, rng: &mut R) -> Result<MooreReport> {
    let g = xc.group();
    let pc = PClasses::new(g, p as usize)?;
    let s = g.sylow(p as usize)?;
    let dim = xc.dim_function(&pc)?;
    let psi_map = PsiMap::new(&pc)?;
    let psi = psi_map.coset(&dim)?;
    let mut failures = Vec::new();
    let mut skipped = Vec::new();

    let moore = (0..pc.len()).all(|i| xc.fixed_homology(p, pc.rep(i)).is_moore());
    for i in 0..pc.len() {
        let h = xc.fixed_homology(p, pc.rep(i));
        if h.is_moore() && !h.is_tight() {
            failures.push(format!("homology at {} is not in the top fixed degree", pc.name(i)));
        }
        if !kunneth_holds(xc, &h, pc.rep(i)) {
            failures.push(format!("fixed homology at {} differs from the product formula", pc.name(i)));
        }
    }
    let top = xc.top_homology_module(p)?;
    let free: Vec<&ConcreteGSet> = xc.factors().iter().filter(|x| x.fixed_points(&s).is_empty()).collect();
    let case = if free.len() == xc.factors().len() { MooreCase::SylowFree } else { MooreCase::SylowFixed };
    let mut expected = Rep::trivial(g, p)?;
    for x in &free {
        expected = expected.tensor(&Rep::delta_module(x, p)?)?;
    }
    let fixed_top = xc.fixed_top_homology(p, &s)?;
    let capped = summand_multiplicity_1dim(&fixed_top.rep, &Rep::trivial(&fixed_top.normalizer.sub, p)?)? >= 1;

    match case {
        MooreCase::SylowFree => {
            let v = is_dade(&top)?;
            if !v.dade || !v.capped {
                failures.push(String::from("top homology is not a capped Dade module"));
            }
            if ModuleInvariants::of(&top)? != ModuleInvariants::of(&expected)? {
                failures.push(String::from("top homology invariants differ from the tensor product of relative syzygies"));
            }
        }
        MooreCase::SylowFixed if !capped => {
            skipped.push(String::from("H̃(X^S) has no trivial summand, so the join is not capped"));
        }
        MooreCase::SylowFixed => {
            let v = is_dade(&expected)?;
            if !v.dade || !v.capped {
                failures.push(String::from("Sylow-free tensor factor is not a capped Dade module"));
            }
            let present = if expected.dim() == 1 {
                summand_multiplicity_1dim(&top, &expected)? >= 1
            } else if expected.dim() * top.dim() <= 4096 {
                is_summand(&expected, &top, rng, 32)?
            } else {
                invariants_dominate(&ModuleInvariants::of(&expected)?, &ModuleInvariants::of(&top)?)
            };
            if !present {
                failures.push(String::from("Sylow-free tensor factor is not a summand of the top homology"));
            }
            let mut claimed = SuperclassFunction::zero(&pc);
            for x in &free {
                claimed = claimed.add(&SuperclassFunction::omega(&pc, &x.to_gset()?)?);
            }
            if psi_map.coset(&claimed)? != psi {
                failures.push(String::from("Ψ(Dim X) differs from the coset of the Sylow-free factors"));
            }
        }
    }
    Ok(MooreReport { case, moore, capped, dim, top_dim: top.dim(), psi, failures, skipped })
}

/// `dim H̃_top(X^P) = Π (|X_j^P| − 1)` over factors with fixed points, all other degrees zero.
fn kunneth_holds(xc: &JoinComplex, h: &FixedHomology, sub: &Subgroup) -> bool {
    let sizes: Vec<usize> = xc.factors().iter().map(|x| x.fixed_points(sub).len()).filter(|&n| n > 0).collect();
    let top: usize = sizes.iter().map(|n| n - 1).product();
    h.reduced.iter().enumerate().all(|(i, &d)| if i as i64 - 1 == h.fixed_dim { d == top } else { d == 0 })
}

/// Every summand-detectable invariant of `u` fits inside that of `m`.
fn invariants_dominate(u: &ModuleInvariants, m: &ModuleInvariants) -> bool {
    let blocks_fit = u.jordan.iter().zip(&m.jordan).all(|((_, a), (_, b))| {
        let mut rest = b.clone();
        a.iter().all(|x| rest.iter().position(|y| y == x).map(|i| rest.remove(i)).is_some())
    });
    blocks_fit
        && u.dim <= m.dim
        && u.linear_multiplicities.iter().zip(&m.linear_multiplicities).all(|(a, b)| a <= b)
        && u.brauer_dims.iter().zip(&m.brauer_dims).all(|((_, a), (_, b))| a <= b)
}

/// Cells and multiplicities of the join as Burnside-ring elements, dimension by dimension.
pub fn cell_gsets(xc: &JoinComplex) -> Result<Vec<GSet>> {
    (0..=xc.dim()).map(|i| xc.cell_gset(i)?.to_gset()).collect()
}
