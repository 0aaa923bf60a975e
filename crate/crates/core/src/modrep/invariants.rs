use alloc::vec::Vec;

use super::{brauer_quotient, jordan_profile, summand_multiplicity_1dim, Rep};
use crate::error::Result;

/// Isomorphism invariants computed class by class, in subgroup class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleInvariants {
    pub dim: usize,
    /// Jordan blocks at each class of subgroups of order p.
    pub jordan: Vec<(usize, Vec<usize>)>,
    /// Multiplicity of each linear character, in [`Rep::linear_characters`] order.
    pub linear_multiplicities: Vec<usize>,
    /// `dim M[P]` at each class of p-subgroups.
    pub brauer_dims: Vec<(usize, usize)>,
}

impl ModuleInvariants {
    pub fn of(m: &Rep) -> Result<ModuleInvariants> {
        let g = m.group();
        let p = m.p as usize;
        let classes = g.subgroup_classes()?;
        let mut jordan = Vec::new();
        let mut brauer_dims = Vec::new();
        for c in g.p_subgroup_classes(p)? {
            let sub = &classes[c].rep;
            if sub.order() == p {
                jordan.push((c, jordan_profile(m, sub)?.blocks));
            }
            brauer_dims.push((c, brauer_quotient(m, sub)?.rep.dim()));
        }
        let linear_multiplicities = Rep::linear_characters(g, m.p)?
            .iter()
            .map(|chi| summand_multiplicity_1dim(m, chi))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleInvariants { dim: m.dim, jordan, linear_multiplicities, brauer_dims })
    }
}
