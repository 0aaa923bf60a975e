//! Matrix representations of permutation groups over `F_p`, with the module
//! predicates around Dade modules: Hom spaces, one-dimensional summand counts,
//! relative projectivity, Brauer quotients and Jordan profiles at `C_p`.
//!
//! Generator matrices act on column vectors. A module built by the constructors
//! here carries a [`Provenance`] recording what the construction guarantees.

mod hom;
mod invariants;
mod pperm;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::burnside::ConcreteGSet;
use crate::error::{Error, Result};
use crate::fp::FpMat;
use crate::grp::{is_prime, Embedding, Group, Subgroup};

pub use hom::{
    find_isomorphism, hom_space, is_split_surjection, is_summand, is_x_projective, summand_multiplicity_1dim, HomSpace,
};
pub use invariants::ModuleInvariants;
pub use pperm::{
    brauer_quotient, dade_order, is_compatible, is_dade, is_dade_with_bound, is_sylow_vertex_trivial, jordan_profile,
    p_permutation_status, tensor_jordan_blocks, zero_in_dade, BrauerQuotient, DadeOrder, DadeRoute, DadeVerdict,
    JordanProfile,
};

pub const MAX_PRIME: u32 = 97;
pub const DEFAULT_DIM_BOUND: usize = 4096;

/// Properties guaranteed by how a module was built.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Provenance {
    /// A direct summand of a permutation module.
    pub p_permutation: bool,
    /// `End(M)` is a p-permutation module.
    pub endo_p_permutation: bool,
}

impl Provenance {
    pub(crate) const PERMUTATION: Provenance = Provenance { p_permutation: true, endo_p_permutation: true };
    pub(crate) const ENDO: Provenance = Provenance { p_permutation: false, endo_p_permutation: true };

    fn tensor(self, o: Provenance) -> Provenance {
        Provenance {
            p_permutation: self.p_permutation && o.p_permutation,
            endo_p_permutation: self.endo_p_permutation && o.endo_p_permutation,
        }
    }

    fn sum(self, o: Provenance) -> Provenance {
        let pp = self.p_permutation && o.p_permutation;
        Provenance { p_permutation: pp, endo_p_permutation: pp }
    }
}

/// A finite-dimensional `F_p G`-module given by one matrix per group generator.
#[derive(Clone, Debug)]
pub struct Rep {
    group: Arc<Group>,
    p: u32,
    dim: usize,
    gens: Vec<FpMat>,
    provenance: Provenance,
}

fn check_field(p: u32) -> Result<()> {
    if !is_prime(p as usize) || p > MAX_PRIME {
        return Err(Error::InvalidParameter(format!("need a prime p ≤ {MAX_PRIME}, got {p}")));
    }
    Ok(())
}

impl Rep {
    /// Validates the matrices against the group: each is `dim × dim`, and the map
    /// extended along the spanning tree is multiplicative on every element.
    pub fn new(group: &Arc<Group>, p: u32, dim: usize, gens: Vec<FpMat>) -> Result<Rep> {
        check_field(p)?;
        if gens.len() != group.generators().len() {
            return Err(Error::Arity { expected: group.generators().len(), got: gens.len() });
        }
        if gens.iter().any(|m| m.rows() != dim || m.cols() != dim || m.p() != p) {
            return Err(Error::NotARepresentation(format!("generator matrices must be {dim}×{dim} over F_{p}")));
        }
        let rep = Rep { group: group.clone(), p, dim, gens, provenance: Provenance::default() };
        let all = rep.element_matrices();
        for (e, m) in all.iter().enumerate() {
            for (gi, &s) in group.generators().iter().enumerate() {
                if m.mul(&rep.gens[gi]) != all[group.mul(e, s)] {
                    return Err(Error::NotARepresentation(format!(
                        "matrices violate the group law at element {} times generator {gi}",
                        group.perm(e)
                    )));
                }
            }
        }
        Ok(rep)
    }

    pub(crate) fn assemble(group: &Arc<Group>, p: u32, dim: usize, gens: Vec<FpMat>, provenance: Provenance) -> Rep {
        Rep { group: group.clone(), p, dim, gens, provenance }
    }

    /// Overrides the recorded provenance, for modules known by other means.
    pub fn with_provenance(mut self, provenance: Provenance) -> Rep {
        self.provenance = provenance;
        self
    }

    pub fn zero(group: &Arc<Group>, p: u32) -> Result<Rep> {
        check_field(p)?;
        let gens = group.generators().iter().map(|_| FpMat::zeros(p, 0, 0)).collect();
        Ok(Rep::assemble(group, p, 0, gens, Provenance::PERMUTATION))
    }

    pub fn trivial(group: &Arc<Group>, p: u32) -> Result<Rep> {
        check_field(p)?;
        let gens = group.generators().iter().map(|_| FpMat::identity(p, 1)).collect();
        Ok(Rep::assemble(group, p, 1, gens, Provenance::PERMUTATION))
    }

    /// The one-dimensional module with the given generator values.
    pub fn linear(group: &Arc<Group>, p: u32, values: &[i64]) -> Result<Rep> {
        check_field(p)?;
        let gens = values.iter().map(|&v| FpMat::from_rows(p, &[alloc::vec![v]])).collect();
        // A linear character restricts trivially to every p-subgroup.
        Ok(Rep::new(group, p, 1, gens)?.with_provenance(Provenance::PERMUTATION))
    }

    /// `k(−1)`: the sign of the permutation action.
    pub fn sign(group: &Arc<Group>, p: u32) -> Result<Rep> {
        let values: Vec<i64> = group.generators().iter().map(|&g| group.perm(g).sign() as i64).collect();
        Rep::linear(group, p, &values)
    }

    /// All one-dimensional modules, trivial first.
    pub fn linear_characters(group: &Arc<Group>, p: u32) -> Result<Vec<Rep>> {
        check_field(p)?;
        let gens = group.generators();
        // Candidate values per generator: roots of unity of order dividing its order.
        let options: Vec<Vec<i64>> = gens
            .iter()
            .map(|&g| {
                let n = group.element_order(g) as u32;
                (1..p).filter(|&v| crate::fp::pow_mod(v, n, p) == 1).map(i64::from).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut choice = alloc::vec![0usize; gens.len()];
        loop {
            let values: Vec<i64> = choice.iter().zip(&options).map(|(&c, o)| o[c]).collect();
            if let Ok(r) = Rep::linear(group, p, &values) {
                out.push(r);
            }
            let mut i = 0;
            while i < choice.len() {
                choice[i] += 1;
                if choice[i] < options[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
        }
        Ok(out)
    }

    /// `kX` with permutation matrices `e_x ↦ e_{g·x}`.
    pub fn perm_module(x: &ConcreteGSet, p: u32) -> Result<Rep> {
        check_field(p)?;
        if x.is_empty() {
            return Err(Error::InvalidParameter(String::from("permutation module of an empty G-set")));
        }
        let g = x.group();
        let n = x.len();
        let gens = g
            .generators()
            .iter()
            .map(|&s| {
                let mut m = FpMat::zeros(p, n, n);
                for pt in 0..n {
                    m.set(x.act(s, pt), pt, 1);
                }
                m
            })
            .collect();
        Ok(Rep::assemble(g, p, n, gens, Provenance::PERMUTATION))
    }

    /// `Δ(X)`, the kernel of the augmentation `kX → k`, in the basis `x_i − x_0`.
    pub fn delta_module(x: &ConcreteGSet, p: u32) -> Result<Rep> {
        check_field(p)?;
        if x.is_empty() {
            return Err(Error::InvalidParameter(String::from("relative syzygy of an empty G-set")));
        }
        let g = x.group();
        let d = x.len() - 1;
        let gens = g
            .generators()
            .iter()
            .map(|&s| {
                let mut m = FpMat::zeros(p, d, d);
                let base = x.act(s, 0);
                for i in 1..x.len() {
                    let img = x.act(s, i);
                    if img != 0 {
                        m.set(img - 1, i - 1, 1);
                    }
                    if base != 0 {
                        let cur = m.get(base - 1, i - 1);
                        m.set(base - 1, i - 1, cur + p - 1);
                    }
                }
                m
            })
            .collect();
        Ok(Rep::assemble(g, p, d, gens, Provenance::ENDO))
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[FpMat] {
        &self.gens
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// The matrix of a group element, multiplied out along its word.
    pub fn matrix_of(&self, e: usize) -> FpMat {
        self.group
            .word(e)
            .iter()
            .fold(FpMat::identity(self.p, self.dim), |acc, &gi| acc.mul(&self.gens[gi]))
    }

    /// Matrices of all elements, indexed like the group.
    pub fn element_matrices(&self) -> Vec<FpMat> {
        let mut out: Vec<Option<FpMat>> = alloc::vec![None; self.group.order()];
        out[0] = Some(FpMat::identity(self.p, self.dim));
        for (e, parent, gi) in self.group.spanning_tree() {
            let m = out[parent].as_ref().expect("parents first").mul(&self.gens[gi]);
            out[e] = Some(m);
        }
        out.into_iter().map(|m| m.expect("tree spans the group")).collect()
    }

    fn check_compatible(&self, o: &Rep) -> Result<()> {
        if !self.group.same_as(&o.group) || self.p != o.p {
            return Err(Error::Mismatch(String::from("modules over different groups or primes")));
        }
        Ok(())
    }

    fn check_bound(dim: usize, bound: usize) -> Result<()> {
        if dim > bound {
            return Err(Error::DimensionBound { what: "module dimension", limit: bound, got: dim });
        }
        Ok(())
    }

    /// `M ⊗ N`, basis `m_i ⊗ n_j` numbered `i * dim N + j`.
    pub fn tensor(&self, o: &Rep) -> Result<Rep> {
        self.tensor_with_bound(o, DEFAULT_DIM_BOUND)
    }

    pub fn tensor_with_bound(&self, o: &Rep, bound: usize) -> Result<Rep> {
        self.check_compatible(o)?;
        let dim = self.dim.checked_mul(o.dim).ok_or(Error::Overflow)?;
        Rep::check_bound(dim, bound)?;
        let gens = self.gens.iter().zip(&o.gens).map(|(a, b)| a.kron(b)).collect();
        Ok(Rep::assemble(&self.group, self.p, dim, gens, self.provenance.tensor(o.provenance)))
    }

    pub fn tensor_power(&self, n: usize, bound: usize) -> Result<Rep> {
        let mut acc = Rep::trivial(&self.group, self.p)?.with_provenance(self.provenance);
        for _ in 0..n {
            acc = acc.tensor_with_bound(self, bound)?;
        }
        Ok(acc)
    }

    pub fn direct_sum(&self, o: &Rep) -> Result<Rep> {
        self.check_compatible(o)?;
        let gens = self.gens.iter().zip(&o.gens).map(|(a, b)| FpMat::block_diag(self.p, &[a, b])).collect();
        Ok(Rep::assemble(&self.group, self.p, self.dim + o.dim, gens, self.provenance.sum(o.provenance)))
    }

    /// `M*` with `g ↦ (ρ(g)⁻¹)ᵀ`.
    pub fn dual(&self) -> Result<Rep> {
        let gens = self.gens.iter().map(|m| Ok(m.inverse()?.transpose())).collect::<Result<Vec<_>>>()?;
        Ok(Rep::assemble(&self.group, self.p, self.dim, gens, self.provenance))
    }

    /// `End(M) = M* ⊗ M`.
    pub fn end(&self) -> Result<Rep> {
        self.end_with_bound(DEFAULT_DIM_BOUND)
    }

    pub fn end_with_bound(&self, bound: usize) -> Result<Rep> {
        let e = self.dual()?.tensor_with_bound(self, bound)?;
        let pp = self.provenance.endo_p_permutation;
        Ok(e.with_provenance(Provenance { p_permutation: pp, endo_p_permutation: pp }))
    }

    /// Restriction along an embedding of a subgroup.
    pub fn restrict(&self, emb: &Embedding) -> Result<Rep> {
        if !emb.parent.same_as(&self.group) {
            return Err(Error::Mismatch(String::from("embedding into a different group")));
        }
        let gens = emb.sub.generators().iter().map(|&s| self.matrix_of(emb.to_parent[s])).collect();
        Ok(Rep::assemble(&emb.sub, self.p, self.dim, gens, self.provenance))
    }

    /// Basis of the `H`-fixed vectors.
    pub fn fixed_space(&self, h: &Subgroup) -> Vec<Vec<u32>> {
        let gens = self.group.subgroup_generators(h);
        if gens.is_empty() {
            return (0..self.dim).map(|i| unit(self.dim, i)).collect();
        }
        let id = FpMat::identity(self.p, self.dim);
        let parts: Vec<FpMat> = gens.iter().map(|&g| self.matrix_of(g).sub(&id)).collect();
        FpMat::vstack(self.p, self.dim, &parts).nullspace()
    }

    /// Matrices as signed residues, for display.
    pub fn signed_generators(&self) -> Vec<Vec<Vec<i64>>> {
        self.gens.iter().map(FpMat::to_signed_rows).collect()
    }

    /// Whether every generator acts as a scalar.
    pub fn acts_by_scalars(&self) -> bool {
        self.gens.iter().all(|m| {
            let c = if self.dim == 0 { 0 } else { m.get(0, 0) };
            m == &FpMat::identity(self.p, self.dim).scale(c)
        })
    }

    pub fn acts_trivially(&self) -> bool {
        self.gens.iter().all(FpMat::is_identity)
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = alloc::vec![0u32; n];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests;
