use super::{Group, Subgroup};
use crate::error::{Error, Result};
use alloc::vec::Vec;

/// Isomorphism type of a small quotient `K/L`, as far as the conditions need it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientType {
    Cyclic(usize),
    /// `Z/p × Z/p`.
    ElementaryAbelian { p: usize },
    Quaternion8,
    Other { order: usize },
}

pub(super) fn recognize(g: &Group, lower: &Subgroup, upper: &Subgroup) -> Result<QuotientType> {
    if !g.is_normal_in(lower, upper) {
        return Err(Error::NotNormal);
    }
    let m = upper.order() / lower.order();
    // Order of each element's image in K/L.
    let image_order = |k: usize| {
        let mut x = k;
        let mut n = 1;
        while !lower.contains(x) {
            x = g.mul(x, k);
            n += 1;
        }
        n
    };
    let orders: Vec<usize> = upper.elements().iter().map(|&k| image_order(k)).collect();
    if orders.contains(&m) {
        return Ok(QuotientType::Cyclic(m));
    }
    let gens = g.subgroup_generators(upper);
    let abelian = gens.iter().all(|&a| {
        gens.iter().all(|&b| {
            let comm = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            lower.contains(comm)
        })
    });
    if let Some((q, 2)) = super::prime_power(m) {
        if abelian && orders.iter().all(|&o| o == 1 || o == q) {
            return Ok(QuotientType::ElementaryAbelian { p: q });
        }
    }
    if m == 8 && !abelian {
        // Each involution of K/L has |L| preimages of image order 2.
        let involutions = orders.iter().filter(|&&o| o == 2).count() / lower.order();
        if involutions == 1 {
            return Ok(QuotientType::Quaternion8);
        }
    }
    Ok(QuotientType::Other { order: m })
}
