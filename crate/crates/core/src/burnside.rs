//! Finite G-sets up to isomorphism, their table of marks, and the multiplicative
//! induction `jnd_S^G`.
//!
//! A G-set is stored as orbit multiplicities over subgroup classes; marks are its
//! fixed-point counts. Products and restriction go through mark vectors, which
//! determine the G-set.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grp::{Embedding, Group, Subgroup};

/// `table[h][k] = |(G/H)^K|` for class ids `h`, `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarksTable {
    pub table: Vec<Vec<u128>>,
}

impl MarksTable {
    pub fn of(g: &Group) -> Result<MarksTable> {
        let classes = g.subgroup_classes()?;
        let all = g.all_subgroups()?;
        let table = classes
            .iter()
            .map(|h| {
                classes
                    .iter()
                    .map(|k| {
                        // |{x : K^x ⊆ H}| = (conjugates of K inside H) · |N_G(K)|.
                        let inside = k.members.iter().filter(|&&m| all[m].is_subset(&h.rep)).count();
                        (inside * k.normalizer_order / h.order()) as u128
                    })
                    .collect()
            })
            .collect();
        Ok(MarksTable { table })
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

/// Orbit multiplicities indexed by subgroup class id.
#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<Group>,
    mult: Vec<u64>,
}

impl PartialEq for GSet {
    fn eq(&self, other: &GSet) -> bool {
        self.group.same_as(&other.group) && self.mult == other.mult
    }
}

impl GSet {
    pub fn new(group: &Arc<Group>, mult: Vec<u64>) -> Result<GSet> {
        let n = group.subgroup_classes()?.len();
        if mult.len() != n {
            return Err(Error::Arity { expected: n, got: mult.len() });
        }
        Ok(GSet { group: group.clone(), mult })
    }

    pub fn empty(group: &Arc<Group>) -> Result<GSet> {
        let n = group.subgroup_classes()?.len();
        Ok(GSet { group: group.clone(), mult: alloc::vec![0; n] })
    }

    /// The transitive G-set `G/H` for class id `class`.
    pub fn orbit(group: &Arc<Group>, class: usize) -> Result<GSet> {
        let mut x = GSet::empty(group)?;
        if class >= x.mult.len() {
            return Err(Error::InvalidParameter(alloc::format!("class id {class} out of range")));
        }
        x.mult[class] = 1;
        Ok(x)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    pub fn size(&self) -> Result<u128> {
        let classes = self.group.subgroup_classes()?;
        self.mult.iter().zip(classes).try_fold(0u128, |acc, (&m, c)| {
            acc.checked_add(m as u128 * (self.group.order() / c.order()) as u128).ok_or(Error::Overflow)
        })
    }

    /// Fixed-point counts indexed by class id.
    pub fn marks(&self) -> Result<Vec<u128>> {
        let t = MarksTable::of(&self.group)?;
        let n = t.len();
        (0..n)
            .map(|k| {
                self.mult.iter().enumerate().try_fold(0u128, |acc, (h, &m)| {
                    (m as u128)
                        .checked_mul(t.table[h][k])
                        .and_then(|v| acc.checked_add(v))
                        .ok_or(Error::Overflow)
                })
            })
            .collect()
    }

    pub fn fixed_points(&self, k: &Subgroup) -> Result<u128> {
        let c = self.group.class_of(k)?;
        Ok(self.marks()?[c])
    }

    /// Inverts the marks homomorphism by back-substitution along the class order.
    pub fn from_marks(group: &Arc<Group>, marks: &[u128]) -> Result<GSet> {
        let t = MarksTable::of(group)?;
        let n = t.len();
        if marks.len() != n {
            return Err(Error::Arity { expected: n, got: marks.len() });
        }
        let mut mult = alloc::vec![0u64; n];
        for h in (0..n).rev() {
            let mut rest = marks[h] as i128;
            for (above, &m) in mult.iter().enumerate().skip(h + 1) {
                rest -= m as i128 * t.table[above][h] as i128;
            }
            let d = t.table[h][h] as i128;
            if rest < 0 || rest % d != 0 {
                return Err(Error::NotGenuineGSet { class: h });
            }
            mult[h] = u64::try_from(rest / d).map_err(|_| Error::Overflow)?;
        }
        Ok(GSet { group: group.clone(), mult })
    }

    pub fn disjoint_union(&self, other: &GSet) -> Result<GSet> {
        self.check_same(other)?;
        let mult = self
            .mult
            .iter()
            .zip(&other.mult)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(GSet { group: self.group.clone(), mult })
    }

    /// Cartesian product with the diagonal action.
    pub fn product(&self, other: &GSet) -> Result<GSet> {
        self.check_same(other)?;
        let a = self.marks()?;
        let b = other.marks()?;
        let marks: Vec<u128> = a.iter().zip(&b).map(|(x, y)| x.checked_mul(*y).ok_or(Error::Overflow)).collect::<Result<_>>()?;
        GSet::from_marks(&self.group, &marks)
    }

    /// Restriction along an embedding `H → G`; `self` lives over `G`.
    pub fn restrict(&self, emb: &Embedding) -> Result<GSet> {
        if !emb.parent.same_as(&self.group) {
            return Err(Error::Mismatch(String::from("restriction target is not a subgroup of this G-set's group")));
        }
        let marks = self.marks()?;
        let h = &emb.sub;
        let marks_h: Vec<u128> = h
            .subgroup_classes()?
            .iter()
            .map(|k| Ok(marks[self.group.class_of(&emb.push(&k.rep))?]))
            .collect::<Result<_>>()?;
        GSet::from_marks(h, &marks_h)
    }

    fn check_same(&self, other: &GSet) -> Result<()> {
        if self.group.same_as(&other.group) {
            Ok(())
        } else {
            Err(Error::Mismatch(String::from("G-sets over different groups")))
        }
    }
}

/// Multiplicative induction from `S = emb.sub` to `G = emb.parent`.
///
/// `|jnd X ^ K| = ∏ |X ^ (S ∩ gKg⁻¹)|` over double cosets `SgK`.
pub fn mult_induction(x: &GSet, emb: &Embedding) -> Result<GSet> {
    if !x.group.same_as(&emb.sub) {
        return Err(Error::Mismatch(String::from("G-set is not over the embedded subgroup")));
    }
    let g = &emb.parent;
    let s = &emb.image;
    let marks_s = x.marks()?;
    let marks: Vec<u128> = g
        .subgroup_classes()?
        .iter()
        .map(|k| {
            let mut value: u128 = 1;
            for rep in double_coset_reps(g, s, &k.rep) {
                let j = s.intersection(&g.conjugate(rep, &k.rep));
                let local = emb.pull(&j)?;
                let f = marks_s[emb.sub.class_of(&local)?];
                value = value.checked_mul(f).ok_or(Error::Overflow)?;
            }
            Ok(value)
        })
        .collect::<Result<_>>()?;
    GSet::from_marks(g, &marks)
}

/// One representative `g` of each double coset `AgB`.
pub fn double_coset_reps(g: &Group, a: &Subgroup, b: &Subgroup) -> Vec<usize> {
    let mut seen = alloc::vec![false; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        reps.push(x);
        for &u in a.elements() {
            let ux = g.mul(u, x);
            for &v in b.elements() {
                seen[g.mul(ux, v)] = true;
            }
        }
    }
    reps
}

/// Label of a point of a concretized G-set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PointLabel {
    pub class: usize,
    pub copy: usize,
    pub coset: usize,
}

/// A G-set with explicit points and the full action table.
#[derive(Clone, Debug)]
pub struct ConcreteGSet {
    group: Arc<Group>,
    size: usize,
    /// `action[g * size + x]` is `g·x`.
    action: Vec<u32>,
    labels: Vec<PointLabel>,
}

impl ConcreteGSet {
    /// The cosets `gH` of `h`, ordered by least element unless `reps` fixes the order.
    pub fn cosets(group: &Arc<Group>, h: &Subgroup, reps: Option<&[usize]>) -> Result<ConcreteGSet> {
        let n = group.order();
        let mut coset_of = alloc::vec![usize::MAX; n];
        let mut coset_reps = Vec::new();
        let assign = |x: usize, coset_of: &mut Vec<usize>, coset_reps: &mut Vec<usize>| -> bool {
            if coset_of[x] != usize::MAX {
                return false;
            }
            for &e in h.elements() {
                coset_of[group.mul(x, e)] = coset_reps.len();
            }
            coset_reps.push(x);
            true
        };
        match reps {
            Some(r) => {
                for &x in r {
                    if x >= n || !assign(x, &mut coset_of, &mut coset_reps) {
                        return Err(Error::InvalidParameter(String::from("coset representatives are not distinct cosets")));
                    }
                }
                if coset_reps.len() * h.order() != n {
                    return Err(Error::InvalidParameter(String::from("coset representatives do not cover G")));
                }
            }
            None => {
                for x in 0..n {
                    assign(x, &mut coset_of, &mut coset_reps);
                }
            }
        }
        let size = coset_reps.len();
        let mut action = Vec::with_capacity(n * size);
        for g in 0..n {
            for &r in &coset_reps {
                action.push(coset_of[group.mul(g, r)] as u32);
            }
        }
        let class = group.class_of(h).unwrap_or(usize::MAX);
        let labels = (0..size).map(|coset| PointLabel { class, copy: 0, coset }).collect();
        Ok(ConcreteGSet { group: group.clone(), size, action, labels })
    }

    pub fn empty(group: &Arc<Group>) -> ConcreteGSet {
        ConcreteGSet { group: group.clone(), size: 0, action: Vec::new(), labels: Vec::new() }
    }

    /// Orbits in class order, with copies numbered within each class.
    pub fn concretize(x: &GSet) -> Result<ConcreteGSet> {
        let classes = x.group.subgroup_classes()?;
        let mut out = ConcreteGSet::empty(&x.group);
        for (c, &m) in x.mult.iter().enumerate() {
            for copy in 0..m as usize {
                let mut orbit = ConcreteGSet::cosets(&x.group, &classes[c].rep, None)?;
                for l in orbit.labels.iter_mut() {
                    l.copy = copy;
                }
                out = out.disjoint_union(&orbit)?;
            }
        }
        Ok(out)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn labels(&self) -> &[PointLabel] {
        &self.labels
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x] as usize
    }

    pub fn fixed_points(&self, h: &Subgroup) -> Vec<usize> {
        let gens = self.group.subgroup_generators(h);
        (0..self.size).filter(|&x| gens.iter().all(|&g| self.act(g, x) == x)).collect()
    }

    pub fn disjoint_union(&self, other: &ConcreteGSet) -> Result<ConcreteGSet> {
        if !self.group.same_as(&other.group) {
            return Err(Error::Mismatch(String::from("G-sets over different groups")));
        }
        let size = self.size + other.size;
        let mut action = Vec::with_capacity(self.group.order() * size);
        for g in 0..self.group.order() {
            action.extend((0..self.size).map(|x| self.act(g, x) as u32));
            action.extend((0..other.size).map(|x| (self.size + other.act(g, x)) as u32));
        }
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Ok(ConcreteGSet { group: self.group.clone(), size, action, labels })
    }

    /// Pairs `(x, y)` numbered `x * |other| + y`.
    pub fn product(&self, other: &ConcreteGSet) -> Result<ConcreteGSet> {
        if !self.group.same_as(&other.group) {
            return Err(Error::Mismatch(String::from("G-sets over different groups")));
        }
        let size = self.size * other.size;
        let mut action = Vec::with_capacity(self.group.order() * size);
        for g in 0..self.group.order() {
            for x in 0..self.size {
                for y in 0..other.size {
                    action.push((self.act(g, x) * other.size + other.act(g, y)) as u32);
                }
            }
        }
        let labels = (0..size).map(|i| PointLabel { class: usize::MAX, copy: 0, coset: i }).collect();
        Ok(ConcreteGSet { group: self.group.clone(), size, action, labels })
    }

    /// Builds a G-set from an action table `g·x = table[g][x]`; checks the action axioms.
    pub fn from_action(group: &Arc<Group>, size: usize, action: Vec<u32>) -> Result<ConcreteGSet> {
        let n = group.order();
        if action.len() != n * size || action.iter().any(|&y| y as usize >= size) {
            return Err(Error::InvalidParameter(String::from("malformed action table")));
        }
        let set = ConcreteGSet {
            group: group.clone(),
            size,
            action,
            labels: (0..size).map(|i| PointLabel { class: usize::MAX, copy: 0, coset: i }).collect(),
        };
        for x in 0..size {
            if set.act(0, x) != x {
                return Err(Error::InvalidParameter(String::from("identity does not act trivially")));
            }
            for &s in group.generators() {
                for g in 0..n {
                    if set.act(group.mul(g, s), x) != set.act(g, set.act(s, x)) {
                        return Err(Error::InvalidParameter(String::from("table is not a group action")));
                    }
                }
            }
        }
        Ok(set)
    }

    /// The orbits, each as its sorted point list.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.size];
        let mut out = Vec::new();
        for x in 0..self.size {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..self.group.order()).map(|g| self.act(g, x)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let elems: Vec<usize> = (0..self.group.order()).filter(|&g| self.act(g, x) == x).collect();
        self.group.closure(&elems)
    }

    /// The isomorphism class, from orbit stabilizers.
    pub fn to_gset(&self) -> Result<GSet> {
        let mut x = GSet::empty(&self.group)?;
        for orbit in self.orbits() {
            let c = self.group.class_of(&self.stabilizer(orbit[0]))?;
            x.mult[c] += 1;
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::presets::Preset;
    use alloc::vec;

    fn group(p: Preset) -> Arc<Group> {
        Arc::new(p.build().unwrap())
    }

    /// Fixed points of `k` on `G/h`, counted directly on cosets.
    fn brute_mark(g: &Group, h: &Subgroup, k: &Subgroup) -> u128 {
        let gg = Arc::new(Group::from_generators(g.generators().iter().map(|&e| g.perm(e).clone()).collect()).unwrap());
        let x = ConcreteGSet::cosets(&gg, h, None).unwrap();
        x.fixed_points(k).len() as u128
    }

    #[test]
    fn marks_match_coset_counts() {
        for p in [Preset::Symmetric(4), Preset::Dihedral(8), Preset::Semidirect { p: 7, q: 3, r: 1, l: 0 }] {
            let g = group(p);
            let t = MarksTable::of(&g).unwrap();
            let classes = g.subgroup_classes().unwrap();
            for (h, ch) in classes.iter().enumerate() {
                for (k, ck) in classes.iter().enumerate() {
                    assert_eq!(t.table[h][k], brute_mark(&g, &ch.rep, &ck.rep));
                    if t.table[h][k] != 0 {
                        assert!(k <= h);
                    }
                }
                assert_eq!(t.table[h][h] as usize, ch.normalizer_order / ch.order());
            }
        }
    }

    #[test]
    fn marks_round_trip_and_rejection() {
        let g = group(Preset::Symmetric(3));
        let x = GSet::new(&g, vec![1, 0, 2, 1]).unwrap();
        let m = x.marks().unwrap();
        assert_eq!(GSet::from_marks(&g, &m).unwrap(), x);
        // Marks (1,0,0,0) would need a third of an orbit of G/1.
        match GSet::from_marks(&g, &[1, 0, 0, 0]) {
            Err(Error::NotGenuineGSet { class }) => assert_eq!(class, 0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn product_matches_concrete_orbits() {
        let g = group(Preset::Symmetric(4));
        let n = g.subgroup_classes().unwrap().len();
        for a in 0..n {
            for b in 0..n {
                let x = GSet::orbit(&g, a).unwrap();
                let y = GSet::orbit(&g, b).unwrap();
                let abstract_product = x.product(&y).unwrap();
                let concrete = ConcreteGSet::concretize(&x).unwrap().product(&ConcreteGSet::concretize(&y).unwrap()).unwrap();
                assert_eq!(concrete.to_gset().unwrap(), abstract_product);
            }
        }
    }

    #[test]
    fn restriction_matches_concrete_orbits() {
        let g = group(Preset::Symmetric(4));
        let s = g.sylow(2).unwrap();
        let emb = Embedding::new(&g, &s).unwrap();
        for c in 0..g.subgroup_classes().unwrap().len() {
            let x = GSet::orbit(&g, c).unwrap();
            let r = x.restrict(&emb).unwrap();
            assert_eq!(r.size().unwrap(), x.size().unwrap());
            // Concrete restriction: the same points, acted on through the embedding.
            let cx = ConcreteGSet::concretize(&x).unwrap();
            let h = &emb.sub;
            let mut action = Vec::new();
            for e in 0..h.order() {
                for pt in 0..cx.len() {
                    action.push(cx.act(emb.to_parent[e], pt) as u32);
                }
            }
            let cr = ConcreteGSet::from_action(h, cx.len(), action).unwrap();
            assert_eq!(cr.to_gset().unwrap(), r);
        }
    }

    #[test]
    fn concretize_labels() {
        let g = group(Preset::Symmetric(3));
        let x = GSet::new(&g, vec![0, 2, 0, 1]).unwrap();
        let c = ConcreteGSet::concretize(&x).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(c.labels()[3], PointLabel { class: 1, copy: 1, coset: 0 });
        assert_eq!(c.to_gset().unwrap(), x);
    }

    /// Fixed points of `K` on `Map_S(G, X)`, counted by enumerating all S-maps.
    fn brute_jnd_marks(emb: &Embedding, x: &GSet) -> Vec<u128> {
        let g = &emb.parent;
        let cx = ConcreteGSet::concretize(x).unwrap();
        let s = &emb.image;
        // An S-map is determined by its values on right coset reps Sg.
        let mut coset_rep = alloc::vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for y in 0..g.order() {
            if coset_rep[y] == usize::MAX {
                for &u in s.elements() {
                    coset_rep[g.mul(u, y)] = reps.len();
                }
                reps.push(y);
            }
        }
        // Value at u·rep is u·value(rep); u ranges over S.
        let local = |u: usize| emb.to_parent.binary_search(&u).unwrap();
        let mut maps: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in &reps {
            maps = maps.into_iter().flat_map(|m| (0..cx.len()).map(move |v| { let mut m2 = m.clone(); m2.push(v); m2 })).collect();
        }
        let eval = |m: &[usize], y: usize| -> usize {
            let r = reps[coset_rep[y]];
            let u = g.mul(y, g.inv(r));
            cx.act(local(u), m[coset_rep[y]])
        };
        g.subgroup_classes()
            .unwrap()
            .iter()
            .map(|k| {
                let kg = g.subgroup_generators(&k.rep);
                maps.iter().filter(|m| (0..g.order()).all(|y| kg.iter().all(|&kk| eval(m, g.mul(y, kk)) == eval(m, y)))).count() as u128
            })
            .collect()
    }

    #[test]
    fn jnd_formula_matches_map_enumeration() {
        let g = group(Preset::Symmetric(3));
        let s = g.sylow(2).unwrap();
        let emb = Embedding::new(&g, &s).unwrap();
        let ns = emb.sub.subgroup_classes().unwrap().len();
        for a in 0..ns {
            for b in 0..ns {
                let x = GSet::orbit(&emb.sub, a).unwrap().disjoint_union(&GSet::orbit(&emb.sub, b).unwrap()).unwrap();
                let j = mult_induction(&x, &emb).unwrap();
                assert_eq!(j.marks().unwrap(), brute_jnd_marks(&emb, &x));
            }
        }
    }

    #[test]
    fn jnd_of_s3() {
        let g = group(Preset::Symmetric(3));
        let s = g.sylow(3).unwrap();
        let emb = Embedding::new(&g, &s).unwrap();
        // X = [S/S] + [S/1].
        let x = GSet::new(&emb.sub, vec![1, 1]).unwrap();
        let j = mult_induction(&x, &emb).unwrap();
        // Classes of S3: 1, C2, C3, S3.
        assert_eq!(j.multiplicities(), &[1, 3, 0, 1]);
    }

    #[test]
    fn jnd_of_the_frobenius_group_of_order_21() {
        let g = group(Preset::Semidirect { p: 7, q: 3, r: 1, l: 0 });
        let emb = Embedding::new(&g, &g.sylow(3).unwrap()).unwrap();
        let x = GSet::new(&emb.sub, vec![1, 1]).unwrap();
        let j = mult_induction(&x, &emb).unwrap();
        assert_eq!(j.marks().unwrap(), brute_jnd_marks(&emb, &x));
        // Classes 1, C3, C7, G; |jnd X| = 4^7.
        assert_eq!(j.multiplicities(), &[775, 15, 1, 1]);
        assert_eq!(j.size().unwrap(), 1 << 14);
    }
}
