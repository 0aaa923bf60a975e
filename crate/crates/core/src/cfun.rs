//! Integer-valued superclass functions on p-subgroups, the ω and δ bases, the
//! Möbius function of the subconjugacy poset, and integer lattices cut out by
//! congruences.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::burnside::GSet;
use crate::error::{Error, Result};
use crate::grp::{Group, Subgroup};
use crate::intmat::{self, IMat};

/// Subgroup class ids of the p-subgroups of `G`, ascending; the Sylow class is last.
#[derive(Clone, Debug)]
pub struct PClasses {
    pub group: Arc<Group>,
    pub p: usize,
    pub ids: Vec<usize>,
}

impl PClasses {
    pub fn new(group: &Arc<Group>, p: usize) -> Result<PClasses> {
        Ok(PClasses { group: group.clone(), p, ids: group.p_subgroup_classes(p)? })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Coordinate of a p-subgroup.
    pub fn position(&self, h: &Subgroup) -> Result<usize> {
        let c = self.group.class_of(h)?;
        self.position_of_class(c)
    }

    pub fn position_of_class(&self, class: usize) -> Result<usize> {
        self.ids
            .binary_search(&class)
            .map_err(|_| Error::InvalidParameter(format!("class {class} is not a {}-subgroup class", self.p)))
    }

    pub fn rep(&self, i: usize) -> &Subgroup {
        &self.group.subgroup_classes().unwrap()[self.ids[i]].rep
    }

    pub fn name(&self, i: usize) -> &str {
        &self.group.subgroup_classes().unwrap()[self.ids[i]].name
    }

    /// Whether coordinate `i` is subconjugate to coordinate `j`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.group.class_le(self.ids[i], self.ids[j]).unwrap()
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        let h = self.rep(i);
        h.elements().iter().any(|&e| self.group.element_order(e) == h.order())
    }

    /// Möbius function `μ(i, j)` of the subconjugacy order on coordinates.
    pub fn moebius(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut mu = alloc::vec![alloc::vec![0i64; n]; n];
        for i in 0..n {
            mu[i][i] = 1;
            for j in i + 1..n {
                if self.le(i, j) {
                    mu[i][j] = -(i..j).filter(|&k| self.le(i, k) && self.le(k, j)).map(|k| mu[i][k]).sum::<i64>();
                }
            }
        }
        mu
    }
}

/// A function on conjugacy classes of p-subgroups, stored in class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperclassFunction {
    pub values: Vec<i64>,
}

impl SuperclassFunction {
    pub fn new(pc: &PClasses, values: Vec<i64>) -> Result<SuperclassFunction> {
        if values.len() != pc.len() {
            return Err(Error::Arity { expected: pc.len(), got: values.len() });
        }
        Ok(SuperclassFunction { values })
    }

    pub fn zero(pc: &PClasses) -> SuperclassFunction {
        SuperclassFunction { values: alloc::vec![0; pc.len()] }
    }

    pub fn at(&self, pc: &PClasses, h: &Subgroup) -> Result<i64> {
        Ok(self.values[pc.position(h)?])
    }

    pub fn add(&self, other: &SuperclassFunction) -> SuperclassFunction {
        SuperclassFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &SuperclassFunction) -> SuperclassFunction {
        SuperclassFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, k: i64) -> SuperclassFunction {
        SuperclassFunction { values: self.values.iter().map(|a| k * a).collect() }
    }

    /// The δ-basis vector at coordinate `i`.
    pub fn delta(pc: &PClasses, i: usize) -> SuperclassFunction {
        let mut f = SuperclassFunction::zero(pc);
        f.values[i] = 1;
        f
    }

    /// `ω_X(P) = 1` when `X^P` is nonempty, else `0`.
    pub fn omega(pc: &PClasses, x: &GSet) -> Result<SuperclassFunction> {
        let marks = x.marks()?;
        Ok(SuperclassFunction { values: pc.ids.iter().map(|&c| i64::from(marks[c] > 0)).collect() })
    }

    /// `ω_{G/H}` for the p-subgroup at coordinate `i`.
    pub fn omega_orbit(pc: &PClasses, i: usize) -> SuperclassFunction {
        SuperclassFunction { values: (0..pc.len()).map(|k| i64::from(pc.le(k, i))).collect() }
    }

    /// Coefficients `a` with `self = Σ a_i ω_{G/P_i}`, by back-substitution.
    pub fn omega_coordinates(&self, pc: &PClasses) -> Vec<i64> {
        let n = pc.len();
        let mut a = alloc::vec![0i64; n];
        for k in (0..n).rev() {
            let above: i64 = (k + 1..n).filter(|&i| pc.le(k, i)).map(|i| a[i]).sum();
            a[k] = self.values[k] - above;
        }
        a
    }

    pub fn from_omega_coordinates(pc: &PClasses, a: &[i64]) -> SuperclassFunction {
        let mut f = SuperclassFunction::zero(pc);
        for (i, &ai) in a.iter().enumerate() {
            f = f.add(&SuperclassFunction::omega_orbit(pc, i).scale(ai));
        }
        f
    }

    pub fn as_bigint(&self) -> Vec<BigInt> {
        self.values.iter().map(|&x| BigInt::from(x)).collect()
    }
}

/// Which basis a coordinate vector refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Delta,
    Omega,
}

/// Coordinates of `f` in the requested basis.
pub fn basis_change(pc: &PClasses, f: &SuperclassFunction, to: Basis) -> Vec<i64> {
    match to {
        Basis::Delta => f.values.clone(),
        Basis::Omega => f.omega_coordinates(pc),
    }
}

/// Expansion `ω_X = Σ a_Q ω_{G/Q}` with `a_Q = Σ_{P ≥ Q, X^P ≠ ∅} μ(Q, P)`.
///
/// The result is recombined and compared with `ω_X` before returning.
pub fn omega_expand(pc: &PClasses, x: &GSet) -> Result<Vec<i64>> {
    let omega = SuperclassFunction::omega(pc, x)?;
    let mu = pc.moebius();
    let n = pc.len();
    let a: Vec<i64> = (0..n)
        .map(|q| (q..n).filter(|&p| omega.values[p] == 1).map(|p| mu[q][p]).sum())
        .collect();
    if SuperclassFunction::from_omega_coordinates(pc, &a) != omega {
        return Err(Error::IdentityFailed(String::from("Möbius expansion does not recombine to ω_X")));
    }
    Ok(a)
}

/// `ℓ(v) ≡ 0 (mod modulus)`; modulus 0 means `ℓ(v) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub functional: Vec<i64>,
    pub modulus: u64,
}

impl Congruence {
    pub fn holds(&self, v: &[i64]) -> bool {
        let value: i128 = self.functional.iter().zip(v).map(|(a, b)| *a as i128 * *b as i128).sum();
        if self.modulus == 0 {
            value == 0
        } else {
            value.rem_euclid(self.modulus as i128) == 0
        }
    }

    pub fn evaluate(&self, v: &[i64]) -> i64 {
        self.functional.iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

/// A full-rank-or-less sublattice of `Z^n`, stored as a Hermite basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    pub ambient: usize,
    pub basis: IMat,
}

impl IntegerLattice {
    pub fn from_generators(ambient: usize, gens: IMat) -> IntegerLattice {
        let he = intmat::hermite(&gens, ambient);
        IntegerLattice { ambient, basis: he.h[..he.rank].to_vec() }
    }

    pub fn full(ambient: usize) -> IntegerLattice {
        IntegerLattice { ambient, basis: intmat::identity(ambient) }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        if self.basis.is_empty() {
            return v.iter().all(Zero::is_zero);
        }
        intmat::solve_row(&self.basis, self.ambient, v).is_some()
    }

    pub fn contains_i64(&self, v: &[i64]) -> bool {
        self.contains(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    pub fn is_sublattice_of(&self, other: &IntegerLattice) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// Basis rows as machine integers, if they fit.
    pub fn basis_i64(&self) -> Result<Vec<Vec<i64>>> {
        self.basis.iter().map(|r| r.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect()).collect()
    }
}

/// `{v ∈ Z^n : every congruence holds}`.
pub fn lattice_from_congruences(n: usize, constraints: &[Congruence]) -> Result<IntegerLattice> {
    if constraints.is_empty() {
        return Ok(IntegerLattice::full(n));
    }
    for c in constraints {
        if c.functional.len() != n {
            return Err(Error::Arity { expected: n, got: c.functional.len() });
        }
    }
    // Rows (v, w) with v·A + w·diag(m) = 0, projected to v.
    let c = constraints.len();
    let mut a: IMat = Vec::with_capacity(n + c);
    for i in 0..n {
        a.push(constraints.iter().map(|k| BigInt::from(k.functional[i])).collect());
    }
    for (j, k) in constraints.iter().enumerate() {
        let mut row = alloc::vec![BigInt::zero(); c];
        row[j] = BigInt::from(k.modulus);
        a.push(row);
    }
    let kernel = intmat::left_kernel(&a, c);
    let projected: IMat = kernel.into_iter().map(|r| r[..n].to_vec()).collect();
    Ok(IntegerLattice::from_generators(n, projected))
}

/// A finitely generated abelian group `⊕ Z/d_i`, with `d_i = 0` for free summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAbStructure {
    pub factors: Vec<u64>,
}

impl FinAbStructure {
    pub fn trivial() -> FinAbStructure {
        FinAbStructure { factors: Vec::new() }
    }

    pub fn cyclic(n: u64) -> FinAbStructure {
        if n == 1 {
            FinAbStructure::trivial()
        } else {
            FinAbStructure { factors: alloc::vec![n] }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// `None` when there is a free summand.
    pub fn order(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, &d| if d == 0 { None } else { acc.checked_mul(d) })
    }
}

impl fmt::Display for FinAbStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *d == 0 {
                write!(f, "Z")?;
            } else {
                write!(f, "Z/{d}")?;
            }
        }
        Ok(())
    }
}

/// Smith coordinates on `Z^n / L`.
#[derive(Clone, Debug)]
pub struct QuotientCoordinates {
    ambient: usize,
    /// Column transform `V`; coordinates are `v·V`.
    v: IMat,
    /// Diagonal entries for the first `rank` coordinates.
    diag: Vec<BigInt>,
}

impl QuotientCoordinates {
    pub fn new(lattice: &IntegerLattice) -> QuotientCoordinates {
        let n = lattice.ambient;
        if lattice.basis.is_empty() {
            return QuotientCoordinates { ambient: n, v: intmat::identity(n), diag: Vec::new() };
        }
        let s = intmat::smith(&lattice.basis, n);
        QuotientCoordinates { ambient: n, v: s.v, diag: s.diag }
    }

    pub fn structure(&self) -> Result<FinAbStructure> {
        let mut factors = Vec::new();
        for d in &self.diag {
            if d != &BigInt::from(1) {
                factors.push(d.to_u64().ok_or(Error::Overflow)?);
            }
        }
        factors.extend(core::iter::repeat_n(0, self.ambient - self.diag.len()));
        Ok(FinAbStructure { factors })
    }

    /// Canonical residues of `v + L`, one entry per factor of [`Self::structure`].
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let c = intmat::mul_row(v, &self.v);
        let mut out = Vec::new();
        for (i, ci) in c.into_iter().enumerate() {
            match self.diag.get(i) {
                Some(d) if d == &BigInt::from(1) => {}
                Some(d) => out.push(ci.mod_floor(d)),
                None => out.push(ci),
            }
        }
        out
    }
}

pub fn quotient_structure(lattice: &IntegerLattice) -> Result<FinAbStructure> {
    QuotientCoordinates::new(lattice).structure()
}

/// Residues of a `BigInt` vector as signed display integers.
pub fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::presets::Preset;
    use alloc::vec;

    fn pc(p: Preset, prime: usize) -> PClasses {
        PClasses::new(&Arc::new(p.build().unwrap()), prime).unwrap()
    }

    #[test]
    fn omega_delta_triangular() {
        let pc = pc(Preset::Symmetric(3), 3);
        assert_eq!(pc.len(), 2);
        // ω_{G/C3} = δ_1 + δ_C3 and ω_{G/1} = δ_1.
        assert_eq!(SuperclassFunction::omega_orbit(&pc, 1).values, vec![1, 1]);
        assert_eq!(SuperclassFunction::omega_orbit(&pc, 0).values, vec![1, 0]);
        assert_eq!(SuperclassFunction::delta(&pc, 0).omega_coordinates(&pc), vec![1, 0]);
        assert_eq!(SuperclassFunction::delta(&pc, 1).omega_coordinates(&pc), vec![-1, 1]);
    }

    #[test]
    fn moebius_of_chain_and_s4() {
        let c8 = pc(Preset::Cyclic(8), 2);
        let mu = c8.moebius();
        assert_eq!(mu[0], vec![1, -1, 0, 0]);
        let s4 = pc(Preset::Symmetric(4), 2);
        let mu = s4.moebius();
        // Defining recursion: Σ_{i ≤ k ≤ j} μ(i,k) = 0 for i < j.
        for i in 0..s4.len() {
            for j in i + 1..s4.len() {
                if s4.le(i, j) {
                    let s: i64 = (i..=j).filter(|&k| s4.le(i, k) && s4.le(k, j)).map(|k| mu[i][k]).sum();
                    assert_eq!(s, 0);
                }
            }
        }
    }

    #[test]
    fn omega_expand_of_orbits() {
        let g = Arc::new(Preset::Symmetric(4).build().unwrap());
        let pc = PClasses::new(&g, 2).unwrap();
        for c in 0..g.subgroup_classes().unwrap().len() {
            let x = GSet::orbit(&g, c).unwrap();
            let a = omega_expand(&pc, &x).unwrap();
            // Replacement: ω_{G/H} = ω_{G/T} for T Sylow in H.
            let t = g.sylow_of(&g.subgroup_classes().unwrap()[c].rep, 2).unwrap();
            let mut expected = vec![0; pc.len()];
            expected[pc.position(&t).unwrap()] = 1;
            assert_eq!(a, expected);
        }
    }

    #[test]
    fn congruence_lattices() {
        // v0 - v1 ≡ 0 mod 4 on Z^2.
        let l = lattice_from_congruences(2, &[Congruence { functional: vec![1, -1], modulus: 4 }]).unwrap();
        assert_eq!(quotient_structure(&l).unwrap(), FinAbStructure::cyclic(4));
        assert!(l.contains_i64(&[5, 1]));
        assert!(!l.contains_i64(&[2, 1]));
        // Equality constraint leaves a free quotient.
        let l = lattice_from_congruences(3, &[Congruence { functional: vec![1, 1, -1], modulus: 0 }]).unwrap();
        assert_eq!(l.rank(), 2);
        assert_eq!(quotient_structure(&l).unwrap().factors, vec![0]);
        let l = lattice_from_congruences(
            2,
            &[Congruence { functional: vec![1, 0], modulus: 2 }, Congruence { functional: vec![0, 1], modulus: 6 }],
        )
        .unwrap();
        assert_eq!(quotient_structure(&l).unwrap().factors, vec![2, 6]);
    }

    #[test]
    fn quotient_reduction_is_class_invariant() {
        let l = lattice_from_congruences(2, &[Congruence { functional: vec![1, -1], modulus: 4 }]).unwrap();
        let q = QuotientCoordinates::new(&l);
        let a = q.reduce(&[BigInt::from(3), BigInt::from(0)]);
        let b = q.reduce(&[BigInt::from(8), BigInt::from(1)]);
        assert_eq!(a, b);
        assert_eq!(q.reduce(&[BigInt::from(5), BigInt::from(1)]), vec![BigInt::zero()]);
    }
}
