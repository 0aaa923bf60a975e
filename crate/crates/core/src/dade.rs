//! Bounds for the subgroup of the Dade group generated by relative syzygies, the
//! coset map on superclass functions, and randomized checks of the relations
//! among the classes `ω_X`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;
use rand_core::RngCore;

use crate::burnside::GSet;
use crate::cfun::{omega_expand, quotient_structure, FinAbStructure, PClasses, QuotientCoordinates, SuperclassFunction};
use crate::conditions::{condition_lattice, LatticeKind};
use crate::error::{Error, Result};
use crate::grp::{is_prime, prime_power, Group, QuotientType};

/// Why the bounds are known to be sharp, if they are.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exactness {
    /// `G` is a p-group: the lower bound is the answer.
    PGroup,
    /// `p = 2`: both bounds coincide.
    PrimeTwo,
    /// A normal subgroup of order p with cyclic quotient of order `q^r`; the upper bound is the answer.
    CyclicExtension { q: usize, r: u32, l: u32 },
    Undetermined,
}

impl Exactness {
    pub fn tag(&self) -> &'static str {
        match self {
            Exactness::PGroup | Exactness::PrimeTwo => "exact_lower",
            Exactness::CyclicExtension { .. } => "exact_upper",
            Exactness::Undetermined => "undetermined",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DadeBounds {
    /// `C(G,p) / C_b(G,p)`.
    pub lower: FinAbStructure,
    /// `C(G,p) / C_ba⁺(G,p)`.
    pub upper: FinAbStructure,
    pub exactness: Exactness,
}

pub fn dade_omega_bounds(pc: &PClasses) -> Result<DadeBounds> {
    let lower = quotient_structure(&condition_lattice(pc, LatticeKind::BorelSmith)?)?;
    let upper = quotient_structure(&condition_lattice(pc, LatticeKind::BorelSmithOrientedArtin)?)?;
    Ok(DadeBounds { lower, upper, exactness: exactness(&pc.group, pc.p)? })
}

fn exactness(g: &Group, p: usize) -> Result<Exactness> {
    if g.is_p_group(p) {
        return Ok(Exactness::PGroup);
    }
    if p == 2 {
        return Ok(Exactness::PrimeTwo);
    }
    let s = g.sylow(p)?;
    if s.order() != p || !g.is_normal_in(&s, &g.whole()) {
        return Ok(Exactness::Undetermined);
    }
    let index = g.order() / p;
    let Some((q, r)) = prime_power(index) else { return Ok(Exactness::Undetermined) };
    if g.recognize_quotient(&s, &g.whole())? != QuotientType::Cyclic(index) {
        return Ok(Exactness::Undetermined);
    }
    let gen = s.elements()[1];
    let centralizer = (0..g.order()).filter(|&x| g.conj(x, gen) == gen).count();
    let kernel = centralizer / p;
    let l = if kernel == 1 { 0 } else { prime_power(kernel).unwrap().1 };
    Ok(Exactness::CyclicExtension { q, r, l })
}

/// `Z/2q^(r-l)`, the value for `C_p ⋊ C_{q^r}` with `p` odd.
pub fn semidirect_expected(p: usize, q: usize, r: u32, l: u32) -> Result<FinAbStructure> {
    if !is_prime(p) || !is_prime(q) || p == q || p == 2 {
        return Err(Error::InvalidParameter(format!("need an odd prime p and a different prime q, got p={p}, q={q}")));
    }
    if r == 0 || l > r || !(p - 1).is_multiple_of(q.pow(r - l)) {
        return Err(Error::InvalidParameter(format!("need r ≥ 1, l ≤ r and q^(r-l) | p-1, got r={r}, l={l}")));
    }
    Ok(FinAbStructure::cyclic(2 * q.pow(r - l) as u64))
}

/// A superclass function reduced to canonical residues in `C(G,p)/C_ba⁺(G,p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiCoset {
    pub residues: Vec<BigInt>,
    pub structure: FinAbStructure,
}

impl PsiCoset {
    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(Zero::is_zero)
    }
}

/// Reduces superclass functions modulo `C_ba⁺`; build once per `(G, p)`.
pub struct PsiMap {
    coords: QuotientCoordinates,
    structure: FinAbStructure,
    arity: usize,
}

impl PsiMap {
    pub fn new(pc: &PClasses) -> Result<PsiMap> {
        let coords = QuotientCoordinates::new(&condition_lattice(pc, LatticeKind::BorelSmithOrientedArtin)?);
        let structure = coords.structure()?;
        Ok(PsiMap { coords, structure, arity: pc.len() })
    }

    pub fn coset(&self, f: &SuperclassFunction) -> Result<PsiCoset> {
        if f.values.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, got: f.values.len() });
        }
        Ok(PsiCoset { residues: self.coords.reduce(&f.as_bigint()), structure: self.structure.clone() })
    }
}

pub fn psi_coset(pc: &PClasses, f: &SuperclassFunction) -> Result<PsiCoset> {
    PsiMap::new(pc)?.coset(f)
}

/// Per-identity sample counts from [`relation_suite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub samples: Vec<(&'static str, usize)>,
}

fn random_gset<R: RngCore>(g: &Arc<Group>, rng: &mut R) -> Result<GSet> {
    let n = g.subgroup_classes()?.len();
    let mut mult: Vec<u64> = (0..n).map(|_| u64::from(rng.next_u32().is_multiple_of(4)) * u64::from(1 + rng.next_u32() % 2)).collect();
    if mult.iter().all(|&m| m == 0) {
        mult[(rng.next_u32() as usize) % n] = 1;
    }
    GSet::new(g, mult)
}

/// Samples random G-sets and checks, on each sample:
/// the product relation `ω_{X⨿Y} + ω_{X×Y} = ω_X + ω_Y`;
/// replacement `ω_{G/H} = ω_{G/T}` for `T` Sylow in `H`;
/// spanning by the orbit classes `ω_{G/Q}` with integer coefficients;
/// absorption `ω_{X ⨿ X×Y} = ω_X`, since `X × Y` maps to `X`;
/// and `Ψ(ω_X) = 0` whenever `X^S ≠ ∅`.
pub fn relation_suite<R: RngCore>(pc: &PClasses, trials: usize, rng: &mut R) -> Result<RelationReport> {
    let g = &pc.group;
    let psi = PsiMap::new(pc)?;
    let s = g.sylow(pc.p)?;
    let mut counts = [0usize; 5];
    let fail = |what: &str| Err(Error::IdentityFailed(String::from(what)));
    for _ in 0..trials {
        let x = random_gset(g, rng)?;
        let y = random_gset(g, rng)?;
        let ox = SuperclassFunction::omega(pc, &x)?;
        let oy = SuperclassFunction::omega(pc, &y)?;
        let xy = x.product(&y)?;
        let lhs = SuperclassFunction::omega(pc, &x.disjoint_union(&y)?)?.add(&SuperclassFunction::omega(pc, &xy)?);
        if lhs != ox.add(&oy) {
            return fail("product relation");
        }
        counts[0] += 1;

        let classes = g.subgroup_classes()?;
        let h = &classes[(rng.next_u32() as usize) % classes.len()];
        let t = g.sylow_of(&h.rep, pc.p)?;
        let oh = SuperclassFunction::omega(pc, &GSet::orbit(g, h.id)?)?;
        let ot = SuperclassFunction::omega(pc, &GSet::orbit(g, g.class_of(&t)?)?)?;
        if oh != ot {
            return fail("replacement");
        }
        counts[1] += 1;

        let a = omega_expand(pc, &x)?;
        if SuperclassFunction::from_omega_coordinates(pc, &a) != ox {
            return fail("spanning");
        }
        counts[2] += 1;

        if SuperclassFunction::omega(pc, &x.disjoint_union(&xy)?)? != ox {
            return fail("absorption");
        }
        counts[3] += 1;

        if x.fixed_points(&s)? > 0 {
            if !psi.coset(&ox)?.is_zero() {
                return fail("vanishing on S-fixed G-sets");
            }
            counts[4] += 1;
        }
    }
    Ok(RelationReport {
        samples: alloc::vec![
            ("product", counts[0]),
            ("replacement", counts[1]),
            ("spanning", counts[2]),
            ("absorption", counts[3]),
            ("vanishing", counts[4]),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::presets::Preset;
    use rand_chacha::rand_core::SeedableRng;

    fn pc(p: Preset, prime: usize) -> PClasses {
        PClasses::new(&Arc::new(p.build().unwrap()), prime).unwrap()
    }

    #[test]
    fn bounds_of_symmetric_three() {
        let b = dade_omega_bounds(&pc(Preset::Symmetric(3), 3)).unwrap();
        assert_eq!(b.lower, FinAbStructure::cyclic(2));
        assert_eq!(b.upper, FinAbStructure::cyclic(4));
        assert_eq!(b.exactness, Exactness::CyclicExtension { q: 2, r: 1, l: 0 });
    }

    #[test]
    fn exactness_tags() {
        assert_eq!(dade_omega_bounds(&pc(Preset::Dihedral(8), 2)).unwrap().exactness, Exactness::PGroup);
        assert_eq!(dade_omega_bounds(&pc(Preset::Symmetric(4), 2)).unwrap().exactness, Exactness::PrimeTwo);
        assert_eq!(dade_omega_bounds(&pc(Preset::Symmetric(4), 3)).unwrap().exactness, Exactness::Undetermined);
        let b = dade_omega_bounds(&pc(Preset::Semidirect { p: 5, q: 2, r: 2, l: 1 }, 5)).unwrap();
        assert_eq!(b.exactness, Exactness::CyclicExtension { q: 2, r: 2, l: 1 });
    }

    #[test]
    fn table_of_cyclic_extensions() {
        for (p, q, r, l) in [(5, 2, 2, 0), (3, 2, 1, 1), (7, 3, 1, 0), (3, 2, 1, 0), (5, 2, 2, 1), (7, 3, 1, 1), (7, 2, 1, 0)] {
            let b = dade_omega_bounds(&pc(Preset::Semidirect { p, q, r, l }, p)).unwrap();
            assert_eq!(b.upper, semidirect_expected(p, q, r, l).unwrap());
            assert_eq!(b.exactness.tag(), "exact_upper");
        }
        assert!(semidirect_expected(2, 3, 1, 0).is_err());
        assert!(semidirect_expected(5, 3, 1, 0).is_err());
    }

    #[test]
    fn psi_of_s3() {
        let pc = pc(Preset::Symmetric(3), 3);
        let psi = PsiMap::new(&pc).unwrap();
        let f = |a, b| SuperclassFunction { values: alloc::vec![a, b] };
        assert!(psi.coset(&f(5, 1)).unwrap().is_zero());
        assert_eq!(psi.coset(&f(1, 0)).unwrap(), psi.coset(&f(5, 0)).unwrap());
        assert_ne!(psi.coset(&f(1, 0)).unwrap(), psi.coset(&f(2, 0)).unwrap());
        assert!(psi.coset(&f(1, 2)).is_ok());
        assert!(matches!(psi.coset(&SuperclassFunction { values: alloc::vec![1] }), Err(Error::Arity { .. })));
    }

    #[test]
    fn relations_hold_on_random_samples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (preset, p) in [(Preset::Symmetric(4), 2), (Preset::Symmetric(4), 3), (Preset::Semidirect { p: 7, q: 3, r: 1, l: 0 }, 7)] {
            let report = relation_suite(&pc(preset, p), 40, &mut rng).unwrap();
            assert!(report.samples.iter().take(4).all(|&(_, n)| n == 40));
        }
    }
}
