use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{hom_space, summand_multiplicity_1dim, Rep, DEFAULT_DIM_BOUND};
use crate::error::{Error, Result};
use crate::fp::{coordinates, span_basis, FpMat};
use crate::grp::{is_prime_power_of, Embedding, Subgroup};

/// Unipotent Jordan block sizes of a generator of a subgroup of order p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanProfile {
    pub subgroup: Subgroup,
    /// Ascending.
    pub blocks: Vec<usize>,
}

impl JordanProfile {
    /// Restriction is a permutation module: blocks of size 1 and p only.
    pub fn is_permutation(&self, p: usize) -> bool {
        self.blocks.iter().all(|&b| b == 1 || b == p)
    }

    /// `(size, count)` pairs, ascending by size.
    pub fn counts(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &b in &self.blocks {
            match out.last_mut() {
                Some((s, c)) if *s == b => *c += 1,
                _ => out.push((b, 1)),
            }
        }
        out
    }
}

pub fn jordan_profile(m: &Rep, c: &Subgroup) -> Result<JordanProfile> {
    let p = m.p as usize;
    if c.order() != p {
        return Err(Error::InvalidParameter(format!("Jordan profile needs a subgroup of order {p}, got {}", c.order())));
    }
    let nil = m.matrix_of(c.elements()[1]).sub(&FpMat::identity(m.p, m.dim));
    // ranks[k] = rank of nil^k, which vanishes from k = p on.
    let mut ranks = alloc::vec![m.dim];
    let mut power = FpMat::identity(m.p, m.dim);
    for _ in 0..=p {
        power = power.mul(&nil);
        ranks.push(power.rank());
    }
    let mut blocks = Vec::new();
    for k in 1..=p {
        let count = ranks[k - 1] + ranks[k + 1] - 2 * ranks[k];
        blocks.extend(core::iter::repeat_n(k, count));
    }
    Ok(JordanProfile { subgroup: c.clone(), blocks })
}

/// Block sizes of `J_a ⊗ J_b` for a cyclic group of order p, `1 ≤ a, b ≤ p`.
pub fn tensor_jordan_blocks(a: usize, b: usize, p: usize) -> Vec<usize> {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    if a + b <= p {
        (0..a).map(|i| b - a + 1 + 2 * i).collect()
    } else {
        let mut out: Vec<usize> = (0..p - b).map(|i| b - a + 1 + 2 * i).collect();
        out.extend(core::iter::repeat_n(p, a + b - p));
        out.sort_unstable();
        out
    }
}

/// `M[P]` as a module for the normalizer, with the embedding it lives on.
#[derive(Clone, Debug)]
pub struct BrauerQuotient {
    pub normalizer: Embedding,
    pub rep: Rep,
}

/// `M^P / Σ_{Q<P} tr_Q^P(M^Q)`; maximal `Q` suffice since traces compose.
pub fn brauer_quotient(m: &Rep, subgroup: &Subgroup) -> Result<BrauerQuotient> {
    let g = m.group();
    let p = m.p as usize;
    if !is_prime_power_of(subgroup.order(), p) {
        return Err(Error::InvalidParameter(format!("Brauer quotient needs a {p}-subgroup")));
    }
    let fixed = m.fixed_space(subgroup);
    let mut traces = Vec::new();
    if subgroup.order() > 1 {
        let ps: Vec<FpMat> = subgroup.elements().iter().map(|&x| m.matrix_of(x)).collect();
        for q in g.all_subgroups()?.iter().filter(|q| q.order() * p == subgroup.order() && q.is_subset(subgroup)) {
            let reps = coset_reps(g, subgroup, q);
            for v in m.fixed_space(q) {
                let mut t = alloc::vec![0u32; m.dim];
                for &r in &reps {
                    let pos = subgroup.elements().binary_search(&r).expect("coset rep lies in the subgroup");
                    for (ti, x) in t.iter_mut().zip(ps[pos].mul_vec(&v)) {
                        *ti = (*ti + x) % m.p;
                    }
                }
                traces.push(t);
            }
        }
    }
    let traces = span_basis(m.p, m.dim, &traces);
    // Complement of the traces inside the fixed space, from pivot columns.
    let mut cols = traces.clone();
    cols.extend(fixed.iter().cloned());
    let pivots = FpMat::from_columns(m.p, m.dim, &cols).rref();
    let complement: Vec<Vec<u32>> = pivots.iter().filter(|&&c| c >= traces.len()).map(|&c| cols[c].clone()).collect();

    let normalizer = Embedding::new(g, &g.normalizer(subgroup))?;
    let mut basis = traces.clone();
    basis.extend(complement.iter().cloned());
    let (t, d) = (traces.len(), complement.len());
    let mut gens = Vec::new();
    for &s in normalizer.sub.generators() {
        let a = m.matrix_of(normalizer.to_parent[s]);
        let images: Vec<Vec<u32>> = complement.iter().map(|c| a.mul_vec(c)).collect();
        let coords = coordinates(m.p, m.dim, &basis, &images)
            .ok_or_else(|| Error::NotARepresentation(String::from("normalizer does not preserve the fixed space")))?;
        let mut mat = FpMat::zeros(m.p, d, d);
        for (j, x) in coords.iter().enumerate() {
            for i in 0..d {
                mat.set(i, j, x[t + i]);
            }
        }
        gens.push(mat);
    }
    let rep = Rep::assemble(&normalizer.sub, m.p, d, gens, m.provenance);
    Ok(BrauerQuotient { normalizer, rep })
}

fn coset_reps(g: &crate::grp::Group, whole: &Subgroup, q: &Subgroup) -> Vec<usize> {
    let mut covered = crate::bitset::ElemSet::new(g.order());
    let mut reps = Vec::new();
    for &x in whole.elements() {
        if covered.contains(x) {
            continue;
        }
        for &y in q.elements() {
            covered.insert(g.mul(x, y));
        }
        reps.push(x);
    }
    reps
}

/// Exact when the Sylow subgroup has order 1 or p; otherwise only the assumption
/// or the module's provenance can answer.
pub fn p_permutation_status(w: &Rep, assume: bool) -> Result<bool> {
    let p = w.p as usize;
    let s = w.group().sylow(p)?;
    match s.order() {
        1 => Ok(true),
        o if o == p => Ok(jordan_profile(w, &s)?.is_permutation(p)),
        _ if assume || w.provenance.p_permutation => Ok(true),
        o => Err(Error::Undecidable(format!("p-permutation test for a Sylow subgroup of order {o}"))),
    }
}

/// For p-permutation `W`: the Sylow-vertex components are all trivial iff the
/// normalizer of `S` acts trivially on `W[S]`.
pub fn is_sylow_vertex_trivial(w: &Rep, assume: bool) -> Result<bool> {
    if !p_permutation_status(w, assume)? {
        return Err(Error::NotPPermutation);
    }
    let s = w.group().sylow(w.p as usize)?;
    Ok(brauer_quotient(w, &s)?.rep.acts_trivially())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DadeRoute {
    /// Computed on `End(M)` itself.
    Endomorphisms,
    /// Read off the Jordan profile and the Brauer quotient of `M` at a Sylow of order at most p.
    CyclicSylow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DadeVerdict {
    pub dade: bool,
    pub capped: bool,
    /// Multiplicity of `k` in `End(M)`.
    pub trivial_multiplicity: usize,
    pub endo_p_permutation: bool,
    pub route: DadeRoute,
}

/// Direct computations on `End(M)` above this dimension switch to the cyclic route when it applies.
const DIRECT_END_LIMIT: usize = 256;

pub fn is_dade(m: &Rep) -> Result<DadeVerdict> {
    is_dade_with_bound(m, DEFAULT_DIM_BOUND)
}

pub fn is_dade_with_bound(m: &Rep, bound: usize) -> Result<DadeVerdict> {
    let p = m.p as usize;
    let s = m.group().sylow(p)?;
    let cyclic = s.order() == 1 || s.order() == p;
    let end_dim = m.dim * m.dim;
    if cyclic && end_dim > DIRECT_END_LIMIT.min(bound) {
        dade_via_cyclic_sylow(m, &s, bound)
    } else if end_dim <= bound {
        dade_via_endomorphisms(m, bound)
    } else {
        Err(Error::DimensionBound { what: "endomorphism module", limit: bound, got: end_dim })
    }
}

pub(crate) fn dade_via_endomorphisms(m: &Rep, bound: usize) -> Result<DadeVerdict> {
    let e = m.end_with_bound(bound)?;
    let k = Rep::trivial(m.group(), m.p)?;
    let pperm = p_permutation_status(&e, false)?;
    let n = summand_multiplicity_1dim(&e, &k)?;
    let dade = pperm && is_sylow_vertex_trivial(&e, false)?;
    Ok(DadeVerdict { dade, capped: n >= 1, trivial_multiplicity: n, endo_p_permutation: pperm, route: DadeRoute::Endomorphisms })
}

/// `S` of order 1 or p. `End(M)|_S` follows from the Jordan blocks of `M`; when it
/// is a permutation module, `End(M)[S] ≅ End(M[S])` and `N_G(S)/S` is a p'-group,
/// so `M` is Dade iff `N_G(S)` acts on `M[S]` by scalars, and `k` occurs in
/// `End(M)` as often as in `End(M[S])`.
pub(crate) fn dade_via_cyclic_sylow(m: &Rep, s: &Subgroup, bound: usize) -> Result<DadeVerdict> {
    let p = m.p as usize;
    let pperm = if s.order() == 1 {
        true
    } else {
        let counts = jordan_profile(m, s)?.counts();
        counts
            .iter()
            .all(|&(a, _)| counts.iter().all(|&(b, _)| tensor_jordan_blocks(a, b, p).iter().all(|&x| x == 1 || x == p)))
    };
    if !pperm {
        if m.dim * m.dim > bound {
            return Err(Error::DimensionBound { what: "endomorphism module", limit: bound, got: m.dim * m.dim });
        }
        let k = Rep::trivial(m.group(), m.p)?;
        let n = summand_multiplicity_1dim(&m.end_with_bound(bound)?, &k)?;
        return Ok(DadeVerdict {
            dade: false,
            capped: n >= 1,
            trivial_multiplicity: n,
            endo_p_permutation: false,
            route: DadeRoute::CyclicSylow,
        });
    }
    let bq = brauer_quotient(m, s)?.rep;
    let n = hom_space(&bq, &bq)?.dim();
    Ok(DadeVerdict {
        dade: bq.acts_by_scalars(),
        capped: n >= 1,
        trivial_multiplicity: n,
        endo_p_permutation: true,
        route: DadeRoute::CyclicSylow,
    })
}

/// `M* ⊗ N` is a Sylow-vertex trivial p-permutation module.
pub fn is_compatible(m: &Rep, n: &Rep, assume: bool) -> Result<bool> {
    let h = m.dual()?.tensor(n)?;
    if !p_permutation_status(&h, assume)? {
        return Ok(false);
    }
    is_sylow_vertex_trivial(&h, assume)
}

/// `[M] = 0` in the Dade group: a capped Dade module with `k` as a summand.
pub fn zero_in_dade(m: &Rep) -> Result<bool> {
    let v = is_dade(m)?;
    if !v.dade || !v.capped {
        return Ok(false);
    }
    Ok(summand_multiplicity_1dim(m, &Rep::trivial(m.group(), m.p)?)? >= 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DadeOrder {
    Finite(usize),
    /// No power up to the bound vanished.
    ExceedsBound(usize),
}

/// Least `n ≤ bound` with `[M^{⊗n}] = 0`.
pub fn dade_order(m: &Rep, bound: usize) -> Result<DadeOrder> {
    let v = is_dade(m)?;
    if !v.dade || !v.capped {
        return Err(Error::InvalidParameter(String::from("Dade order needs a capped Dade module")));
    }
    let mut power = m.clone();
    for n in 1..=bound {
        if zero_in_dade(&power)? {
            return Ok(DadeOrder::Finite(n));
        }
        if n < bound {
            power = power.tensor(m)?;
        }
    }
    Ok(DadeOrder::ExceedsBound(bound))
}
