//! Borel-Smith conditions on a Sylow subgroup and the Artin and oriented Artin
//! congruences, as explicit section lists and as integer lattices.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cfun::{lattice_from_congruences, Congruence, IntegerLattice, PClasses, SuperclassFunction};
use crate::error::{Error, Result};
use crate::grp::{prime_power, Group, QuotientType, Subgroup};

/// Shape of the top quotient in the third Borel-Smith clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopQuotient {
    Cyclic4,
    Quaternion8,
}

/// A section of the Sylow subgroup carrying one Borel-Smith condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BsSection {
    /// `K/L ≅ Z/p`, `p` odd: `f(L) - f(K)` is even.
    OddCyclic { lower: Subgroup, upper: Subgroup },
    /// `K/L ≅ Z/p × Z/p`: `f(L) - f(K) = Σ (f(K_i) - f(K))` over the `p+1` intermediates.
    Elementary { lower: Subgroup, upper: Subgroup, intermediates: Vec<Subgroup> },
    /// `p = 2`, `K/L ≅ Z/2`, `L ◁ K ◁ N ≤ N_S(L)` with `N/L` cyclic of order 4 or `Q8`.
    Dyadic { lower: Subgroup, upper: Subgroup, top: Subgroup, kind: TopQuotient },
}

/// `L ◁ K ◁ H ≤ N_G(L)` with `K` a p-group, `K/L ≅ Z/p`, `H/K ≅ Z/q^r`, and `q^l`
/// the order of the kernel of `H/K → Aut(K/L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinTriple {
    pub lower: Subgroup,
    pub kernel: Subgroup,
    pub top: Subgroup,
    pub q: usize,
    pub r: u32,
    pub l: u32,
}

impl ArtinTriple {
    pub fn artin_modulus(&self) -> u64 {
        self.q.pow(self.r - self.l) as u64
    }

    /// `2q^(r-l)` for odd `p`. At `p = 2` orientations are automatic, so the plain Artin modulus applies.
    pub fn oriented_modulus(&self, p: usize) -> u64 {
        let m = self.artin_modulus();
        if p == 2 {
            m
        } else {
            2 * m
        }
    }
}

/// A failed condition, or a listing entry when reporting constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// `BS-i`, `BS-ii`, `BS-iii`, `Artin` or `oriented-Artin`.
    pub label: &'static str,
    pub subgroups: Vec<Subgroup>,
    /// 0 for an equation.
    pub modulus: u64,
    /// Value of the constrained combination on the tested function.
    pub observed: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: bool,
    pub failures: Vec<Witness>,
}

fn subgroups_of(g: &Group, top: &Subgroup) -> Result<Vec<Subgroup>> {
    Ok(g.all_subgroups()?.iter().filter(|s| s.is_subset(top)).cloned().collect())
}

/// Canonical key of a tuple of subgroups under conjugation by `by`.
fn orbit_key(g: &Group, by: &Subgroup, tuple: &[&Subgroup]) -> Result<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for &x in by.elements() {
        let key: Vec<usize> = tuple.iter().map(|h| g.subgroup_position(&g.conjugate(x, h))).collect::<Result<_>>()?;
        if best.as_ref().is_none_or(|b| &key < b) {
            best = Some(key);
        }
    }
    Ok(best.unwrap())
}

/// Every Borel-Smith section of a Sylow p-subgroup, one per S-conjugacy class.
pub fn borel_smith_sections(g: &Group, p: usize) -> Result<Vec<BsSection>> {
    let s = g.sylow(p)?;
    let subs = subgroups_of(g, &s)?;
    let mut seen: BTreeSet<(u8, Vec<usize>)> = BTreeSet::new();
    let mut out = Vec::new();
    for lower in &subs {
        for upper in &subs {
            if upper.order() <= lower.order() || !lower.is_subset(upper) || !g.is_normal_in(lower, upper) {
                continue;
            }
            let index = upper.order() / lower.order();
            if index == p && p != 2
                && seen.insert((1, orbit_key(g, &s, &[lower, upper])?)) {
                    out.push(BsSection::OddCyclic { lower: lower.clone(), upper: upper.clone() });
                }
            if index == p * p && g.recognize_quotient(lower, upper)? == (QuotientType::ElementaryAbelian { p })
                && seen.insert((2, orbit_key(g, &s, &[lower, upper])?)) {
                    let intermediates: Vec<Subgroup> = subs
                        .iter()
                        .filter(|m| m.order() == lower.order() * p && lower.is_subset(m) && m.is_subset(upper))
                        .cloned()
                        .collect();
                    debug_assert_eq!(intermediates.len(), p + 1);
                    out.push(BsSection::Elementary { lower: lower.clone(), upper: upper.clone(), intermediates });
                }
            if p == 2 && index == 2 {
                let nl = g.normalizer(lower).intersection(&s);
                for top in &subs {
                    if !top.is_subset(&nl) || !upper.is_subset(top) || !g.is_normal_in(upper, top) {
                        continue;
                    }
                    let kind = match g.recognize_quotient(lower, top)? {
                        QuotientType::Cyclic(4) => TopQuotient::Cyclic4,
                        QuotientType::Quaternion8 => TopQuotient::Quaternion8,
                        _ => continue,
                    };
                    if seen.insert((3, orbit_key(g, &s, &[lower, upper, top])?)) {
                        out.push(BsSection::Dyadic { lower: lower.clone(), upper: upper.clone(), top: top.clone(), kind });
                    }
                }
            }
        }
    }
    Ok(out)
}

impl BsSection {
    pub fn label(&self) -> &'static str {
        match self {
            BsSection::OddCyclic { .. } => "BS-i",
            BsSection::Elementary { .. } => "BS-ii",
            BsSection::Dyadic { .. } => "BS-iii",
        }
    }

    pub fn subgroups(&self) -> Vec<Subgroup> {
        match self {
            BsSection::OddCyclic { lower, upper } => alloc::vec![lower.clone(), upper.clone()],
            BsSection::Elementary { lower, upper, intermediates } => {
                let mut v = alloc::vec![lower.clone(), upper.clone()];
                v.extend(intermediates.iter().cloned());
                v
            }
            BsSection::Dyadic { lower, upper, top, .. } => alloc::vec![lower.clone(), upper.clone(), top.clone()],
        }
    }

    pub fn congruence(&self, pc: &PClasses) -> Result<Congruence> {
        let mut functional = alloc::vec![0i64; pc.len()];
        let modulus = match self {
            BsSection::OddCyclic { lower, upper } => {
                functional[pc.position(lower)?] += 1;
                functional[pc.position(upper)?] -= 1;
                2
            }
            BsSection::Elementary { lower, upper, intermediates } => {
                // f(L) - f(K) - Σ (f(K_i) - f(K)) = 0
                functional[pc.position(lower)?] += 1;
                functional[pc.position(upper)?] += intermediates.len() as i64 - 1;
                for m in intermediates {
                    functional[pc.position(m)?] -= 1;
                }
                0
            }
            BsSection::Dyadic { lower, upper, kind, .. } => {
                functional[pc.position(lower)?] += 1;
                functional[pc.position(upper)?] -= 1;
                match kind {
                    TopQuotient::Cyclic4 => 2,
                    TopQuotient::Quaternion8 => 4,
                }
            }
        };
        Ok(Congruence { functional, modulus })
    }
}

/// Every Artin triple of `G` at `p`, one per G-conjugacy class; `cyclic_only`
/// keeps those with `K` cyclic.
pub fn artin_triples(g: &Group, p: usize, cyclic_only: bool) -> Result<Vec<ArtinTriple>> {
    let all = g.all_subgroups()?;
    let whole = g.whole();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    for top in all {
        for kernel in all {
            if kernel.order() == 1 || !crate::grp::is_prime_power_of(kernel.order(), p) || !kernel.is_subset(top) || kernel.order() == top.order() {
                continue;
            }
            let Some((q, r)) = prime_power(top.order() / kernel.order()) else { continue };
            if q == p || !g.is_normal_in(kernel, top) {
                continue;
            }
            if cyclic_only && !kernel.elements().iter().any(|&e| g.element_order(e) == kernel.order()) {
                continue;
            }
            if g.recognize_quotient(kernel, top)? != QuotientType::Cyclic(top.order() / kernel.order()) {
                continue;
            }
            for lower in all {
                if lower.order() * p != kernel.order() || !lower.is_subset(kernel) || !g.is_normal_in(lower, top) {
                    continue;
                }
                if !seen.insert(orbit_key(g, &whole, &[lower, kernel, top])?) {
                    continue;
                }
                let k0 = kernel.elements().iter().copied().find(|&e| !lower.contains(e)).unwrap();
                let centralizing = top
                    .elements()
                    .iter()
                    .filter(|&&h| lower.contains(g.mul(g.conj(h, k0), g.inv(k0))))
                    .count();
                let kernel_order = centralizing / kernel.order();
                let l = if kernel_order == 1 { 0 } else { prime_power(kernel_order).map(|(_, e)| e).unwrap() };
                out.push(ArtinTriple { lower: lower.clone(), kernel: kernel.clone(), top: top.clone(), q, r, l });
            }
        }
    }
    Ok(out)
}

fn difference_functional(pc: &PClasses, lower: &Subgroup, upper: &Subgroup) -> Result<Vec<i64>> {
    let mut functional = alloc::vec![0i64; pc.len()];
    functional[pc.position(lower)?] += 1;
    functional[pc.position(upper)?] -= 1;
    Ok(functional)
}

pub fn borel_smith_congruences(pc: &PClasses) -> Result<Vec<Congruence>> {
    borel_smith_sections(&pc.group, pc.p)?.iter().map(|s| s.congruence(pc)).collect()
}

pub fn artin_congruences(pc: &PClasses, oriented: bool) -> Result<Vec<Congruence>> {
    artin_triples(&pc.group, pc.p, oriented)?
        .iter()
        .map(|t| {
            let modulus = if oriented { t.oriented_modulus(pc.p) } else { t.artin_modulus() };
            Ok(Congruence { functional: difference_functional(pc, &t.lower, &t.kernel)?, modulus })
        })
        .collect()
}

fn check_values(pc: &PClasses, f: &SuperclassFunction) -> Result<()> {
    if f.values.len() != pc.len() {
        return Err(Error::Arity { expected: pc.len(), got: f.values.len() });
    }
    Ok(())
}

pub fn check_borel_smith(pc: &PClasses, f: &SuperclassFunction) -> Result<CheckReport> {
    check_values(pc, f)?;
    let mut failures = Vec::new();
    for section in borel_smith_sections(&pc.group, pc.p)? {
        let c = section.congruence(pc)?;
        if !c.holds(&f.values) {
            failures.push(Witness { label: section.label(), subgroups: section.subgroups(), modulus: c.modulus, observed: c.evaluate(&f.values) });
        }
    }
    Ok(CheckReport { passed: failures.is_empty(), failures })
}

pub fn check_artin(pc: &PClasses, f: &SuperclassFunction, oriented: bool) -> Result<CheckReport> {
    check_values(pc, f)?;
    let mut failures = Vec::new();
    for t in artin_triples(&pc.group, pc.p, oriented)? {
        let modulus = if oriented { t.oriented_modulus(pc.p) } else { t.artin_modulus() };
        let c = Congruence { functional: difference_functional(pc, &t.lower, &t.kernel)?, modulus };
        if !c.holds(&f.values) {
            failures.push(Witness {
                label: if oriented { "oriented-Artin" } else { "Artin" },
                subgroups: alloc::vec![t.lower.clone(), t.kernel.clone(), t.top.clone()],
                modulus,
                observed: c.evaluate(&f.values),
            });
        }
    }
    Ok(CheckReport { passed: failures.is_empty(), failures })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeKind {
    /// Borel-Smith functions.
    BorelSmith,
    /// Borel-Smith functions that also satisfy the oriented Artin condition.
    BorelSmithOrientedArtin,
}

/// The lattice of the requested kind; every basis vector is re-checked against the conditions.
pub fn condition_lattice(pc: &PClasses, kind: LatticeKind) -> Result<IntegerLattice> {
    let mut constraints = borel_smith_congruences(pc)?;
    if kind == LatticeKind::BorelSmithOrientedArtin {
        constraints.extend(artin_congruences(pc, true)?);
    }
    let lattice = lattice_from_congruences(pc.len(), &constraints)?;
    for row in lattice.basis_i64()? {
        let f = SuperclassFunction { values: row };
        let ok = check_borel_smith(pc, &f)?.passed
            && (kind == LatticeKind::BorelSmith || check_artin(pc, &f, true)?.passed);
        if !ok {
            return Err(Error::IdentityFailed(String::from("lattice basis vector violates its defining conditions")));
        }
    }
    Ok(lattice)
}

/// Rebuilds a Borel-Smith function from its values on cyclic p-subgroups, using
/// the elementary-abelian clause to solve for each non-cyclic value in turn.
pub fn extend_from_cyclic(pc: &PClasses, cyclic_values: &[Option<i64>]) -> Result<SuperclassFunction> {
    let g = &pc.group;
    let p = pc.p as i64;
    let mut values = alloc::vec![0i64; pc.len()];
    for i in 0..pc.len() {
        if pc.is_cyclic(i) {
            values[i] = cyclic_values[i].ok_or_else(|| Error::InvalidParameter(String::from("missing value on a cyclic class")))?;
            continue;
        }
        let top = pc.rep(i);
        let subs = subgroups_of(g, top)?;
        let lower = subs
            .iter()
            .find(|l| {
                l.order() * pc.p * pc.p == top.order()
                    && g.is_normal_in(l, top)
                    && g.recognize_quotient(l, top).ok() == Some(QuotientType::ElementaryAbelian { p: pc.p })
            })
            .ok_or_else(|| Error::IdentityFailed(String::from("non-cyclic p-group without elementary abelian quotient of rank 2")))?;
        // p f(K) = Σ f(K_i) - f(L)
        let mut sum = -values[pc.position(lower)?];
        for m in subs.iter().filter(|m| m.order() == lower.order() * pc.p && lower.is_subset(m)) {
            sum += values[pc.position(m)?];
        }
        if sum % p != 0 {
            return Err(Error::IdentityFailed(String::from("cyclic values do not extend to a Borel-Smith function")));
        }
        values[i] = sum / p;
    }
    Ok(SuperclassFunction { values })
}
