//! Real representations seen through their characters: fixed-point dimension
//! functions on p-subgroups, the determinant test for k-orientability, and
//! realization of oriented Artin-Borel-Smith functions by an integer solve over
//! a family of k-orientable generators.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::burnside::ConcreteGSet;
use crate::cfun::{IntegerLattice, PClasses, QuotientCoordinates, SuperclassFunction};
use crate::conditions::{artin_triples, check_artin, check_borel_smith, ArtinTriple};
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::grp::{is_prime, Embedding, Group, Subgroup};
use crate::intmat;
use crate::qmat::{q, QMat, Q};

/// Least common multiple of the element orders.
pub fn exponent(g: &Group) -> usize {
    (0..g.order()).map(|e| g.element_order(e)).fold(1, |a, b| a.lcm(&b))
}

/// A class function with values in `Q(ζ_e)`, `e` the group exponent, one value per
/// conjugacy class of elements in [`Group::element_classes`] order.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<Group>,
    values: Vec<Cyclo>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, o: &ClassFunction) -> bool {
        self.group.same_as(&o.group) && self.values == o.values
    }
}

impl Eq for ClassFunction {}

impl ClassFunction {
    /// Builds a class function from a value at each element, which must be constant on classes.
    pub fn from_elements(group: &Arc<Group>, value: impl Fn(usize) -> Cyclo) -> Result<ClassFunction> {
        let classes = &group.element_classes().classes;
        let mut values = Vec::with_capacity(classes.len());
        for class in classes {
            let v = value(class[0]);
            if class[1..].iter().any(|&e| value(e) != v) {
                return Err(Error::NotACharacter(String::from("values are not constant on a conjugacy class")));
            }
            values.push(v);
        }
        Ok(ClassFunction { group: group.clone(), values })
    }

    /// Rational values per class.
    pub fn from_rationals(group: &Arc<Group>, values: &[Q]) -> Result<ClassFunction> {
        let n = group.element_classes().classes.len();
        if values.len() != n {
            return Err(Error::Arity { expected: n, got: values.len() });
        }
        let e = exponent(group);
        Ok(ClassFunction { group: group.clone(), values: values.iter().map(|x| Cyclo::rational(e, x.clone())).collect() })
    }

    pub fn trivial(group: &Arc<Group>) -> ClassFunction {
        let e = exponent(group);
        let n = group.element_classes().classes.len();
        ClassFunction { group: group.clone(), values: alloc::vec![Cyclo::integer(e, 1); n] }
    }

    /// Fixed-point counts of a G-set.
    pub fn permutation(x: &ConcreteGSet) -> ClassFunction {
        let group = x.group();
        let e = exponent(group);
        let values = group
            .element_classes()
            .classes
            .iter()
            .map(|c| Cyclo::integer(e, (0..x.len()).filter(|&i| x.act(c[0], i) == i).count() as i64))
            .collect();
        ClassFunction { group: group.clone(), values }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    /// Values per element class.
    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    pub fn value(&self, element: usize) -> &Cyclo {
        &self.values[self.group.element_classes().class_of[element]]
    }

    fn check_same(&self, o: &ClassFunction) -> Result<()> {
        if !self.group.same_as(&o.group) {
            return Err(Error::Mismatch(String::from("class functions on different groups")));
        }
        Ok(())
    }

    pub fn add(&self, o: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(o)?;
        let values = self.values.iter().zip(&o.values).map(|(a, b)| a.add(b)).collect();
        Ok(ClassFunction { group: self.group.clone(), values })
    }

    pub fn sub(&self, o: &ClassFunction) -> Result<ClassFunction> {
        self.add(&o.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Q) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(|a| a.scale(c)).collect() }
    }

    /// `(1/|P|) Σ_{g ∈ P} χ(g)`, which is `dim V^P` for a virtual character.
    pub fn dim_fixed(&self, sub: &Subgroup) -> Result<i64> {
        let e = exponent(&self.group);
        let sum = sub.elements().iter().fold(Cyclo::zero(e), |acc, &g| acc.add(self.value(g)));
        let avg = sum
            .scale(&Q::new(BigInt::one(), BigInt::from(sub.order())))
            .to_rational()
            .ok_or_else(|| Error::NotACharacter(String::from("fixed-point average is irrational")))?;
        if !avg.is_integer() {
            return Err(Error::NotACharacter(format!("fixed-point average {avg} is not an integer")));
        }
        avg.to_integer().to_i64().ok_or(Error::Overflow)
    }

    /// `P ↦ dim V^P` on every p-subgroup class.
    pub fn dim_function(&self, pc: &PClasses) -> Result<SuperclassFunction> {
        if !pc.group.same_as(&self.group) {
            return Err(Error::Mismatch(String::from("p-classes of a different group")));
        }
        let values = (0..pc.len()).map(|i| self.dim_fixed(pc.rep(i))).collect::<Result<_>>()?;
        Ok(SuperclassFunction { values })
    }
}

/// `χ^G(g) = (1/|H|) Σ_{x ∈ G, x g x⁻¹ ∈ H} χ(x g x⁻¹)` for `χ` a class function on the subgroup.
pub fn induce(chi: &ClassFunction, emb: &Embedding) -> Result<ClassFunction> {
    if !chi.group.same_as(&emb.sub) {
        return Err(Error::Mismatch(String::from("induced character lives on another subgroup")));
    }
    let mut from_parent = alloc::vec![usize::MAX; emb.parent.order()];
    for (s, &g) in emb.to_parent.iter().enumerate() {
        from_parent[g] = s;
    }
    let e = exponent(&emb.parent);
    induce_fn(&emb.parent, emb.sub.order(), |g| match from_parent[g] {
        usize::MAX => None,
        s => Some(chi.value(s).lift(e)),
    })
}

fn induce_fn(g: &Arc<Group>, sub_order: usize, on_sub: impl Fn(usize) -> Option<Cyclo>) -> Result<ClassFunction> {
    let e = exponent(g);
    let weight = Q::new(BigInt::one(), BigInt::from(sub_order));
    let classes = &g.element_classes().classes;
    let values = classes
        .iter()
        .map(|c| {
            let sum = (0..g.order()).fold(Cyclo::zero(e), |acc, x| match on_sub(g.conj(x, c[0])) {
                Some(v) => acc.add(&v),
                None => acc,
            });
            sum.scale(&weight)
        })
        .collect();
    Ok(ClassFunction { group: g.clone(), values })
}

/// `ind_R^G (2·1 − W)` for an Artin triple `L ◁ K ◁ H` with `K` cyclic, where
/// `R = C_H(K)` acts through its projection onto `K` and `W` is the real plane on
/// which a generator of `K/L` rotates by `2π/p`.
pub fn block_character(g: &Arc<Group>, t: &ArtinTriple) -> Result<ClassFunction> {
    let (lower, kernel, top) = (&t.lower, &t.kernel, &t.top);
    let p = kernel.order() / lower.order().max(1);
    if !is_prime(p) || lower.order() * p != kernel.order() || !lower.is_subset(kernel) || !kernel.is_subset(top) {
        return Err(Error::InvalidParameter(String::from("block character needs L < K ≤ H with K/L of prime order")));
    }
    if !g.is_normal_in(lower, top) || !g.is_normal_in(kernel, top) {
        return Err(Error::InvalidParameter(String::from("block character needs L and K normal in H")));
    }
    let Some(&k0) = kernel.elements().iter().find(|&&k| g.element_order(k) == kernel.order()) else {
        return Err(Error::InvalidParameter(String::from("block character needs a cyclic K")));
    };
    let centralizer: Vec<usize> = top.elements().iter().copied().filter(|&h| g.mul(h, k0) == g.mul(k0, h)).collect();
    let powers: Vec<usize> = core::iter::successors(Some(0usize), |&x| Some(g.mul(x, k0))).take(kernel.order()).collect();
    let e = exponent(g);
    let zeta_p = e / p;
    let in_r = {
        let mut v = alloc::vec![false; g.order()];
        for &h in &centralizer {
            v[h] = true;
        }
        v
    };
    induce_fn(g, centralizer.len(), |x| {
        if !in_r[x] {
            return None;
        }
        let y = p_part(g, x, p);
        let a = powers.iter().position(|&k| k == y).expect("p-part of C_H(K) lies in K") % p;
        let w = Cyclo::root(e, a * zeta_p).add(&Cyclo::root(e, (p - a) % p * zeta_p));
        Some(Cyclo::integer(e, 2).sub(&w))
    })
}

/// `ind_C^G (λ + λ̄)` with `λ(c^k) = ζ^k` for a generator `c` of the cyclic subgroup `C`.
fn induced_rotation(g: &Arc<Group>, c: &Subgroup) -> Result<ClassFunction> {
    let m = c.order();
    let Some(&c0) = c.elements().iter().find(|&&x| g.element_order(x) == m) else {
        return Err(Error::InvalidParameter(String::from("induced rotation needs a cyclic subgroup")));
    };
    let powers: Vec<usize> = core::iter::successors(Some(0usize), |&x| Some(g.mul(x, c0))).take(m).collect();
    let mut k_of = alloc::vec![usize::MAX; g.order()];
    for (k, &x) in powers.iter().enumerate() {
        k_of[x] = k;
    }
    let e = exponent(g);
    induce_fn(g, m, |x| match k_of[x] {
        usize::MAX => None,
        k => Some(Cyclo::root(e, k * (e / m)).add(&Cyclo::root(e, (m - k) % m * (e / m)))),
    })
}

/// `x^u` with `u ≡ 1` modulo the p-part of the order of `x` and `u ≡ 0` modulo the rest.
fn p_part(g: &Group, x: usize, p: usize) -> usize {
    let o = g.element_order(x);
    let mut pa = 1;
    while o.is_multiple_of(pa * p) {
        pa *= p;
    }
    let m = o / pa;
    if pa == 1 {
        return 0;
    }
    let inv = (1..pa).find(|&u| (u * m) % pa == 1).unwrap_or(1);
    g.pow(x, (m * inv) % o)
}

/// A representation over the rationals, one matrix per group generator.
#[derive(Clone, Debug)]
pub struct RealRep {
    group: Arc<Group>,
    dim: usize,
    gens: Vec<QMat>,
}

impl RealRep {
    /// Validates the matrices against the group law along the spanning tree.
    pub fn new(group: &Arc<Group>, dim: usize, gens: Vec<QMat>) -> Result<RealRep> {
        if gens.len() != group.generators().len() {
            return Err(Error::Arity { expected: group.generators().len(), got: gens.len() });
        }
        if gens.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::NotARepresentation(format!("generator matrices must be {dim}×{dim}")));
        }
        let rep = RealRep { group: group.clone(), dim, gens };
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

    pub fn trivial(group: &Arc<Group>) -> RealRep {
        RealRep { group: group.clone(), dim: 1, gens: group.generators().iter().map(|_| QMat::identity(1)).collect() }
    }

    /// The sign of the underlying permutations.
    pub fn sign(group: &Arc<Group>) -> RealRep {
        let gens = group.generators().iter().map(|&g| QMat::from_i64(&[alloc::vec![group.perm(g).sign() as i64]])).collect();
        RealRep { group: group.clone(), dim: 1, gens }
    }

    /// `R[X]` with the points as basis.
    pub fn permutation(x: &ConcreteGSet) -> RealRep {
        let group = x.group();
        let n = x.len();
        let gens = group
            .generators()
            .iter()
            .map(|&g| {
                let mut m = QMat::zeros(n, n);
                for i in 0..n {
                    m.set(x.act(g, i), i, Q::one());
                }
                m
            })
            .collect();
        RealRep { group: group.clone(), dim: n, gens }
    }

    /// The augmentation kernel of `R[X]` in the basis `x_i − x_0`.
    pub fn reduced_permutation(x: &ConcreteGSet) -> Result<RealRep> {
        if x.is_empty() {
            return Err(Error::InvalidParameter(String::from("reduced permutation module of an empty G-set")));
        }
        let group = x.group();
        let n = x.len() - 1;
        let gens = group
            .generators()
            .iter()
            .map(|&g| {
                // g(x_i − x_0) = x_{gi} − x_{g0}, rewritten as (x_{gi} − x_0) − (x_{g0} − x_0).
                let mut m = QMat::zeros(n, n);
                let g0 = x.act(g, 0);
                for i in 1..=n {
                    let gi = x.act(g, i);
                    if gi != 0 {
                        m.set(gi - 1, i - 1, m.get(gi - 1, i - 1) + q(1));
                    }
                    if g0 != 0 {
                        m.set(g0 - 1, i - 1, m.get(g0 - 1, i - 1) - q(1));
                    }
                }
                m
            })
            .collect();
        Ok(RealRep { group: group.clone(), dim: n, gens })
    }

    pub fn direct_sum(&self, o: &RealRep) -> Result<RealRep> {
        if !self.group.same_as(&o.group) {
            return Err(Error::Mismatch(String::from("direct sum of representations of different groups")));
        }
        let gens = self.gens.iter().zip(&o.gens).map(|(a, b)| a.block_diag(b)).collect();
        Ok(RealRep { group: self.group.clone(), dim: self.dim + o.dim, gens })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[QMat] {
        &self.gens
    }

    /// One matrix per group element, in element order.
    pub fn element_matrices(&self) -> Vec<QMat> {
        let mut all = alloc::vec![QMat::identity(self.dim); self.group.order()];
        for (e, parent, gi) in self.group.spanning_tree() {
            all[e] = all[parent].mul(&self.gens[gi]);
        }
        all
    }

    /// Every generator matrix satisfies `Aᵀ A = I`.
    pub fn is_orthogonal(&self) -> bool {
        self.gens.iter().all(|m| m.transpose().mul(m) == QMat::identity(self.dim))
    }

    pub fn character(&self) -> ClassFunction {
        let all = self.element_matrices();
        let e = exponent(&self.group);
        let values = self.group.element_classes().classes.iter().map(|c| Cyclo::rational(e, all[c[0]].trace())).collect();
        ClassFunction { group: self.group.clone(), values }
    }

    pub fn dim_function(&self, pc: &PClasses) -> Result<SuperclassFunction> {
        self.character().dim_function(pc)
    }
}

/// An element of `N_G(P)` acting on `V^P` with determinant other than `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationWitness {
    /// Index into the p-subgroup classes.
    pub class: usize,
    pub element: usize,
    pub det: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientability {
    pub orientable: bool,
    pub witness: Option<OrientationWitness>,
}

/// Every `N_G(P)` acts on `V^P` with determinant `1`, for all p-subgroups `P`; always true for `p = 2`.
///
/// `V^P` is the image of the averaging projection `(1/|P|) Σ_{g ∈ P} ρ(g)`.
pub fn is_k_orientable(v: &RealRep, pc: &PClasses) -> Result<Orientability> {
    if !pc.group.same_as(&v.group) {
        return Err(Error::Mismatch(String::from("p-classes of a different group")));
    }
    if pc.p == 2 {
        return Ok(Orientability { orientable: true, witness: None });
    }
    let g = &v.group;
    let all = v.element_matrices();
    for i in 0..pc.len() {
        let sub = pc.rep(i);
        let avg = sub
            .elements()
            .iter()
            .fold(QMat::zeros(v.dim, v.dim), |acc, &x| acc.add(&all[x]))
            .scale(&Q::new(BigInt::one(), BigInt::from(sub.order())));
        let basis = avg.column_space();
        if basis.is_empty() {
            continue;
        }
        let b = QMat::from_columns(v.dim, &basis);
        for n in g.subgroup_generators(&g.normalizer(sub)) {
            let action = b
                .coordinates(&all[n].mul(&b))
                .ok_or_else(|| Error::NotARepresentation(String::from("normalizer does not preserve the fixed space")))?;
            let det = action.det();
            if det != Q::one() {
                return Ok(Orientability { orientable: false, witness: Some(OrientationWitness { class: i, element: n, det }) });
            }
        }
    }
    Ok(Orientability { orientable: true, witness: None })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Trivial,
    /// `R[G/H]` for the subgroup class `class`.
    Permutation { class: usize },
    Block(ArtinTriple),
    /// `ind_C^G (λ + λ̄)` for `λ` a faithful linear character of the cyclic p-subgroup at this p-class.
    InducedCyclic { pclass: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationEvidence {
    /// Checked by [`is_k_orientable`] on explicit matrices.
    Determinants,
    /// Block characters and realified complex representations are k-orientable by construction.
    Construction,
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub character: ClassFunction,
    pub dim: SuperclassFunction,
    /// Realification of a complex representation.
    pub complex: bool,
    pub evidence: OrientationEvidence,
}

/// The trivial representation, the k-orientable permutation representations, the
/// block characters of all oriented Artin triples, and the realified faithful linear
/// characters of cyclic p-subgroups induced to `G`. With `complex_only`, trivial and
/// permutation generators are doubled so that each is a complex representation.
pub fn generating_family(pc: &PClasses, complex_only: bool) -> Result<Vec<Generator>> {
    let g = &pc.group;
    let mut out = Vec::new();
    let push_rep = |kind: GeneratorKind, rep: RealRep, out: &mut Vec<Generator>| -> Result<()> {
        let rep = if complex_only { rep.direct_sum(&rep)? } else { rep };
        let o = is_k_orientable(&rep, pc)?;
        if complex_only && !o.orientable {
            return Err(Error::IdentityFailed(String::from("a complex representation failed the determinant test")));
        }
        if o.orientable {
            let character = rep.character();
            let dim = character.dim_function(pc)?;
            out.push(Generator { kind, character, dim, complex: complex_only, evidence: OrientationEvidence::Determinants });
        }
        Ok(())
    };
    push_rep(GeneratorKind::Trivial, RealRep::trivial(g), &mut out)?;
    let classes = g.subgroup_classes()?;
    for (c, class) in classes.iter().enumerate() {
        if class.rep.order() == g.order() {
            continue;
        }
        let x = ConcreteGSet::cosets(g, &class.rep, None)?;
        push_rep(GeneratorKind::Permutation { class: c }, RealRep::permutation(&x), &mut out)?;
    }
    for t in artin_triples(g, pc.p, true)? {
        let character = block_character(g, &t)?;
        let dim = character.dim_function(pc)?;
        out.push(Generator { kind: GeneratorKind::Block(t), character, dim, complex: true, evidence: OrientationEvidence::Construction });
    }
    for i in (0..pc.len()).filter(|&i| pc.is_cyclic(i) && pc.rep(i).order() > 1) {
        let character = induced_rotation(g, pc.rep(i))?;
        let dim = character.dim_function(pc)?;
        out.push(Generator { kind: GeneratorKind::InducedCyclic { pclass: i }, character, dim, complex: true, evidence: OrientationEvidence::Construction });
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub generators: Vec<Generator>,
    /// One integer per generator.
    pub coefficients: Vec<BigInt>,
    /// `Σ x_i χ_i`.
    pub character: ClassFunction,
    /// Dimension function recomputed from `character`.
    pub dim: SuperclassFunction,
}

impl Realization {
    pub fn used(&self) -> impl Iterator<Item = (&Generator, &BigInt)> {
        self.generators.iter().zip(&self.coefficients).filter(|(_, c)| !c.is_zero())
    }
}

#[derive(Clone, Debug)]
pub enum RealizeOutcome {
    Realized(Realization),
    /// No integer combination of the family reaches the target; `residual` is its
    /// class modulo the lattice spanned by the generators' dimension functions.
    Obstructed { generators: Vec<Generator>, residual: Vec<BigInt> },
}

/// Writes an oriented Artin-Borel-Smith function as `Dim` of an integer combination
/// of k-orientable generators.
pub fn realize(pc: &PClasses, f: &SuperclassFunction, complex_only: bool) -> Result<RealizeOutcome> {
    for report in [check_borel_smith(pc, f)?, check_artin(pc, f, true)?] {
        if let Some(w) = report.failures.first() {
            return Err(Error::NotRealizable(format!("{} condition fails (observed {}, modulus {})", w.label, w.observed, w.modulus)));
        }
    }
    let generators = generating_family(pc, complex_only)?;
    let rows: Vec<Vec<i64>> = generators.iter().map(|x| x.dim.values.clone()).collect();
    let a = intmat::from_i64(&rows);
    let target: Vec<BigInt> = f.values.iter().map(|&v| BigInt::from(v)).collect();
    let Some(coefficients) = intmat::solve_row(&a, pc.len(), &target) else {
        let lattice = IntegerLattice::from_generators(pc.len(), a);
        let residual = QuotientCoordinates::new(&lattice).reduce(&target);
        return Ok(RealizeOutcome::Obstructed { generators, residual });
    };
    let mut character = ClassFunction { group: pc.group.clone(), values: alloc::vec![Cyclo::zero(exponent(&pc.group)); pc.group.element_classes().classes.len()] };
    for (x, c) in generators.iter().zip(&coefficients) {
        character = character.add(&x.character.scale(&Q::from_integer(c.clone())))?;
    }
    let dim = character.dim_function(pc)?;
    if &dim != f {
        return Err(Error::IdentityFailed(String::from("realizing character has another dimension function")));
    }
    Ok(RealizeOutcome::Realized(Realization { generators, coefficients, character, dim }))
}

#[cfg(test)]
mod tests;
