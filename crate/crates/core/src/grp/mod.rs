//! Permutation groups small enough to enumerate, their subgroup lattice up to
//! conjugacy, Sylow subgroups and small quotient recognition.

mod naming;
pub mod presets;
mod quotient;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use once_cell::race::OnceBox;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::perm::Perm;

pub use quotient::QuotientType;

/// Enumeration bounds. Exceeding one is an error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    pub max_order: usize,
    /// Largest order for which the full subgroup lattice is enumerated.
    pub max_lattice_order: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits { max_degree: 16, max_order: 20160, max_lattice_order: 2048 }
    }
}

const TABLE_LIMIT: usize = 1024;

/// A finite permutation group with its elements enumerated.
///
/// Elements are sorted by image array, so index 0 is the identity. Every element
/// carries a word in the generators, found by breadth-first search.
pub struct Group {
    degree: usize,
    generators: Vec<usize>,
    elements: Vec<Perm>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
    /// `(parent, generator position)` with `element = parent * generator`.
    tree: Vec<(usize, usize)>,
    limits: Limits,
    lattice: OnceBox<Lattice>,
    classes: OnceBox<ElementClasses>,
}

impl core::fmt::Debug for Group {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Group").field("degree", &self.degree).field("order", &self.order()).finish()
    }
}

/// A subgroup as a sorted list of element indices of its parent group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
    set: ElemSet,
}

impl Subgroup {
    fn from_set(set: ElemSet) -> Subgroup {
        Subgroup { elements: set.iter().collect(), set }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn contains(&self, e: usize) -> bool {
        self.set.contains(e)
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_set(self.set.intersection(&other.set))
    }
}

/// A conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub id: usize,
    /// The conjugate with the lexicographically least element list.
    pub rep: Subgroup,
    /// Indices into [`Group::all_subgroups`] of every member of the class.
    pub members: Vec<usize>,
    pub normalizer_order: usize,
    pub name: String,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.rep.order()
    }
}

struct Lattice {
    all: Vec<Subgroup>,
    index: BTreeMap<ElemSet, usize>,
    class_of: Vec<usize>,
    classes: Vec<SubgroupClass>,
    /// `below[i][j]` holds when class `i` is subconjugate to class `j`.
    below: Vec<Vec<bool>>,
}

/// Conjugacy classes of elements, ordered by least member.
pub struct ElementClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl Group {
    pub fn from_generators(gens: Vec<Perm>) -> Result<Group> {
        Group::with_limits(gens, Limits::default())
    }

    pub fn with_limits(gens: Vec<Perm>, limits: Limits) -> Result<Group> {
        let degree = gens.iter().map(Perm::degree).max().unwrap_or(1).max(1);
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(String::from("generators act on different point sets")));
        }
        if degree > limits.max_degree {
            return Err(Error::GroupTooLarge { what: "degree", limit: limits.max_degree, got: degree });
        }
        let id = Perm::identity(degree);
        let mut found: BTreeMap<Perm, usize> = BTreeMap::new();
        let mut list: Vec<Perm> = alloc::vec![id.clone()];
        let mut tree: Vec<(usize, usize)> = alloc::vec![(usize::MAX, 0)];
        found.insert(id, 0);
        let mut head = 0;
        while head < list.len() {
            for (gi, g) in gens.iter().enumerate() {
                let x = list[head].compose(g);
                if !found.contains_key(&x) {
                    if list.len() >= limits.max_order {
                        return Err(Error::GroupTooLarge { what: "element count", limit: limits.max_order, got: list.len() + 1 });
                    }
                    found.insert(x.clone(), list.len());
                    list.push(x);
                    tree.push((head, gi));
                }
            }
            head += 1;
        }
        // Renumber in sorted order.
        let mut new_index = alloc::vec![0usize; list.len()];
        let mut elements = Vec::with_capacity(list.len());
        for (rank, (perm, old)) in found.into_iter().enumerate() {
            new_index[old] = rank;
            elements.push(perm);
        }
        let mut sorted_tree = alloc::vec![(usize::MAX, 0); list.len()];
        for (old, &(parent, gi)) in tree.iter().enumerate() {
            let p = if parent == usize::MAX { usize::MAX } else { new_index[parent] };
            sorted_tree[new_index[old]] = (p, gi);
        }
        let generators = gens
            .iter()
            .map(|g| elements.binary_search(g).expect("generator is an element"))
            .collect();
        let mut group = Group {
            degree,
            generators,
            elements,
            inverses: Vec::new(),
            table: None,
            tree: sorted_tree,
            limits,
            lattice: OnceBox::new(),
            classes: OnceBox::new(),
        };
        let n = group.order();
        group.inverses = (0..n).map(|i| group.index_of(&group.elements[i].inverse()).unwrap()).collect();
        if n <= TABLE_LIMIT {
            let mut t = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    t.push(group.index_of(&group.elements[a].compose(&group.elements[b])).unwrap() as u32);
                }
            }
            group.table = Some(t);
        }
        Ok(group)
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn perm(&self, e: usize) -> &Perm {
        &self.elements[e]
    }

    /// Generators as element indices, in the order they were supplied.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    /// The element `a ∘ b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index_of(&self.elements[a].compose(&self.elements[b])).unwrap(),
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g a g⁻¹`.
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn pow(&self, a: usize, n: usize) -> usize {
        let mut r = 0;
        for _ in 0..n {
            r = self.mul(r, a);
        }
        r
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Generator positions whose ordered product is the element.
    pub fn word(&self, e: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut x = e;
        while x != 0 {
            let (parent, gi) = self.tree[x];
            w.push(gi);
            x = parent;
        }
        w.reverse();
        w
    }

    /// `(element, parent, generator position)` with `element = parent * generator`,
    /// parents listed before children. The identity is omitted.
    pub fn spanning_tree(&self) -> Vec<(usize, usize, usize)> {
        let n = self.order();
        let mut depth = alloc::vec![usize::MAX; n];
        depth[0] = 0;
        fn fill(tree: &[(usize, usize)], depth: &mut [usize], e: usize) -> usize {
            if depth[e] == usize::MAX {
                let d = fill(tree, depth, tree[e].0) + 1;
                depth[e] = d;
            }
            depth[e]
        }
        for e in 0..n {
            fill(&self.tree, &mut depth, e);
        }
        let mut order: Vec<usize> = (1..n).collect();
        order.sort_by_key(|&e| depth[e]);
        order.into_iter().map(|e| (e, self.tree[e].0, self.tree[e].1)).collect()
    }

    pub fn same_as(&self, other: &Group) -> bool {
        core::ptr::eq(self, other) || (self.elements == other.elements && self.generators == other.generators)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_set(ElemSet::from_indices(self.order(), [0]))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_set(ElemSet::from_indices(self.order(), 0..self.order()))
    }

    /// The subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let n = self.order();
        let mut set = ElemSet::new(n);
        set.insert(0);
        let mut list = alloc::vec![0usize];
        let mut head = 0;
        while head < list.len() {
            for &s in gens {
                let x = self.mul(list[head], s);
                if set.insert(x) {
                    list.push(x);
                }
            }
            head += 1;
        }
        Subgroup::from_set(set)
    }

    /// Interprets a set of element indices as a subgroup, checking closure.
    pub fn subgroup_from_elements(&self, elems: &[usize]) -> Result<Subgroup> {
        if elems.iter().any(|&e| e >= self.order()) {
            return Err(Error::NotASubgroup(String::from("element index out of range")));
        }
        let h = self.closure(elems);
        if h.order() != elems.iter().collect::<BTreeSet<_>>().len() {
            return Err(Error::NotASubgroup(String::from("element set is not closed under multiplication")));
        }
        Ok(h)
    }

    /// A small generating set, chosen greedily in element order.
    pub fn subgroup_generators(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = self.trivial_subgroup();
        for &e in h.elements() {
            if !cur.contains(e) {
                gens.push(e);
                cur = self.closure(&gens);
                if cur.order() == h.order() {
                    break;
                }
            }
        }
        gens
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, g: usize, h: &Subgroup) -> Subgroup {
        Subgroup::from_set(ElemSet::from_indices(self.order(), h.elements().iter().map(|&x| self.conj(g, x))))
    }

    /// Whether `l` is a normal subgroup of `k`.
    pub fn is_normal_in(&self, l: &Subgroup, k: &Subgroup) -> bool {
        l.is_subset(k)
            && self
                .subgroup_generators(k)
                .iter()
                .all(|&g| l.elements().iter().all(|&x| l.contains(self.conj(g, x))))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let hg = self.subgroup_generators(h);
        let elems: Vec<usize> = (0..self.order())
            .filter(|&g| hg.iter().all(|&x| h.contains(self.conj(g, x))))
            .collect();
        Subgroup::from_set(ElemSet::from_indices(self.order(), elems))
    }

    /// Whether some conjugate of `a` lies in `b`, by direct search.
    pub fn is_subconjugate(&self, a: &Subgroup, b: &Subgroup) -> bool {
        if !b.order().is_multiple_of(a.order()) {
            return false;
        }
        let ag = self.subgroup_generators(a);
        (0..self.order()).any(|g| ag.iter().all(|&x| b.contains(self.conj(g, x))))
    }

    pub fn is_p_group(&self, p: usize) -> bool {
        is_prime_power_of(self.order(), p)
    }

    fn lattice(&self) -> Result<&Lattice> {
        if self.order() > self.limits.max_lattice_order {
            return Err(Error::GroupTooLarge {
                what: "order for subgroup enumeration",
                limit: self.limits.max_lattice_order,
                got: self.order(),
            });
        }
        Ok(self.lattice.get_or_init(|| alloc::boxed::Box::new(self.build_lattice())))
    }

    fn build_lattice(&self) -> Lattice {
        let n = self.order();
        let mut cyclic_gens: Vec<usize> = Vec::new();
        let mut seen: BTreeSet<ElemSet> = BTreeSet::new();
        let mut all: Vec<(Subgroup, Vec<usize>)> = Vec::new();
        let trivial = self.trivial_subgroup();
        seen.insert(trivial.set.clone());
        all.push((trivial, Vec::new()));
        for g in 1..n {
            let c = self.closure(&[g]);
            if seen.insert(c.set.clone()) {
                cyclic_gens.push(g);
                all.push((c, alloc::vec![g]));
            }
        }
        let mut head = 1;
        while head < all.len() {
            for &g in &cyclic_gens {
                if all[head].0.contains(g) {
                    continue;
                }
                let mut gens = all[head].1.clone();
                gens.push(g);
                let k = self.closure(&gens);
                if seen.insert(k.set.clone()) {
                    all.push((k, gens));
                }
            }
            head += 1;
        }
        let all: Vec<Subgroup> = all.into_iter().map(|(s, _)| s).collect();
        let index: BTreeMap<ElemSet, usize> = all.iter().enumerate().map(|(i, s)| (s.set.clone(), i)).collect();

        // Partition into conjugacy classes.
        let mut raw_class = alloc::vec![usize::MAX; all.len()];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for i in 0..all.len() {
            if raw_class[i] != usize::MAX {
                continue;
            }
            let mut members = BTreeSet::new();
            for g in 0..n {
                members.insert(index[&self.conjugate(g, &all[i]).set]);
            }
            for &m in &members {
                raw_class[m] = groups.len();
            }
            groups.push(members.into_iter().collect());
        }
        let mut keyed: Vec<(usize, Vec<usize>, Vec<usize>)> = groups
            .into_iter()
            .map(|members| {
                let rep = members.iter().map(|&m| all[m].elements.clone()).min().unwrap();
                (rep.len(), rep, members)
            })
            .collect();
        keyed.sort();
        let mut class_of = alloc::vec![0usize; all.len()];
        let mut classes = Vec::with_capacity(keyed.len());
        for (id, (_, rep, members)) in keyed.into_iter().enumerate() {
            for &m in &members {
                class_of[m] = id;
            }
            let rep = Subgroup::from_set(ElemSet::from_indices(n, rep));
            classes.push(SubgroupClass {
                id,
                normalizer_order: n / members.len(),
                members,
                rep,
                name: String::new(),
            });
        }
        let c = classes.len();
        let mut below = alloc::vec![alloc::vec![false; c]; c];
        for (j, cls) in classes.iter().enumerate() {
            for (a, s) in all.iter().enumerate() {
                if s.is_subset(&cls.rep) {
                    below[class_of[a]][j] = true;
                }
            }
        }
        naming::assign_names(self, &mut classes);
        Lattice { all, index, class_of, classes, below }
    }

    /// Subgroup classes sorted by (order, least element list of the representative).
    ///
    /// The order is a linear extension of subconjugacy.
    pub fn subgroup_classes(&self) -> Result<&[SubgroupClass]> {
        Ok(&self.lattice()?.classes)
    }

    pub fn all_subgroups(&self) -> Result<&[Subgroup]> {
        Ok(&self.lattice()?.all)
    }

    /// Class id of each entry of [`Group::all_subgroups`].
    pub fn subgroup_class_ids(&self) -> Result<&[usize]> {
        Ok(&self.lattice()?.class_of)
    }

    pub fn subgroup_position(&self, h: &Subgroup) -> Result<usize> {
        self.lattice()?
            .index
            .get(&h.set)
            .copied()
            .ok_or_else(|| Error::NotASubgroup(String::from("element set is not a subgroup")))
    }

    pub fn class_of(&self, h: &Subgroup) -> Result<usize> {
        let pos = self.subgroup_position(h)?;
        Ok(self.lattice()?.class_of[pos])
    }

    /// Whether class `a` is subconjugate to class `b`.
    pub fn class_le(&self, a: usize, b: usize) -> Result<bool> {
        Ok(self.lattice()?.below[a][b])
    }

    pub fn class_by_name(&self, name: &str) -> Result<usize> {
        let classes = self.subgroup_classes()?;
        if name == "G" {
            return Ok(classes.len() - 1);
        }
        classes
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::InvalidParameter(format!("no subgroup class named {name}")))
    }

    /// Ids of classes of p-subgroups, ascending; the Sylow class is last.
    pub fn p_subgroup_classes(&self, p: usize) -> Result<Vec<usize>> {
        check_prime(p)?;
        Ok(self
            .subgroup_classes()?
            .iter()
            .filter(|c| is_prime_power_of(c.order(), p))
            .map(|c| c.id)
            .collect())
    }

    pub fn sylow(&self, p: usize) -> Result<Subgroup> {
        let ids = self.p_subgroup_classes(p)?;
        Ok(self.subgroup_classes()?[*ids.last().unwrap()].rep.clone())
    }

    /// A Sylow subgroup of `h`, taken among subgroups of `h`.
    pub fn sylow_of(&self, h: &Subgroup, p: usize) -> Result<Subgroup> {
        let target = p_part(h.order(), p);
        self.all_subgroups()?
            .iter()
            .find(|s| s.order() == target && s.is_subset(h))
            .cloned()
            .ok_or_else(|| Error::NotASubgroup(String::from("no Sylow subgroup found")))
    }

    pub fn recognize_quotient(&self, lower: &Subgroup, upper: &Subgroup) -> Result<QuotientType> {
        quotient::recognize(self, lower, upper)
    }

    pub fn element_classes(&self) -> &ElementClasses {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = alloc::vec![usize::MAX; n];
            let mut classes = Vec::new();
            for a in 0..n {
                if class_of[a] != usize::MAX {
                    continue;
                }
                let members: BTreeSet<usize> = (0..n).map(|g| self.conj(g, a)).collect();
                for &m in &members {
                    class_of[m] = classes.len();
                }
                classes.push(members.into_iter().collect());
            }
            alloc::boxed::Box::new(ElementClasses { classes, class_of })
        })
    }
}

/// A subgroup realised as a group in its own right, with the inclusion map.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub sub: Arc<Group>,
    pub parent: Arc<Group>,
    /// Element index in `parent` of each element of `sub`.
    pub to_parent: Vec<usize>,
    pub image: Subgroup,
}

impl Embedding {
    pub fn new(parent: &Arc<Group>, h: &Subgroup) -> Result<Embedding> {
        let gens: Vec<Perm> = parent.subgroup_generators(h).iter().map(|&e| parent.perm(e).clone()).collect();
        let gens = if gens.is_empty() { alloc::vec![Perm::identity(parent.degree())] } else { gens };
        let sub = Group::with_limits(gens, parent.limits())?;
        // Both element lists are sorted by image array.
        let to_parent = h.elements().to_vec();
        debug_assert!(sub.elements().iter().zip(&to_parent).all(|(p, &e)| p == parent.perm(e)));
        Ok(Embedding { sub: Arc::new(sub), parent: parent.clone(), to_parent, image: h.clone() })
    }

    /// Maps a subgroup of `sub` to the corresponding subgroup of `parent`.
    pub fn push(&self, k: &Subgroup) -> Subgroup {
        Subgroup::from_set(ElemSet::from_indices(self.parent.order(), k.elements().iter().map(|&e| self.to_parent[e])))
    }

    /// Maps a subgroup of `parent` contained in the image back into `sub`.
    pub fn pull(&self, k: &Subgroup) -> Result<Subgroup> {
        let mut elems = Vec::with_capacity(k.order());
        for &e in k.elements() {
            match self.to_parent.binary_search(&e) {
                Ok(i) => elems.push(i),
                Err(_) => return Err(Error::NotASubgroup(String::from("subgroup not contained in embedded image"))),
            }
        }
        Ok(Subgroup::from_set(ElemSet::from_indices(self.sub.order(), elems)))
    }
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub(crate) fn check_prime(p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{p} is not prime")))
    }
}

pub fn is_prime_power_of(n: usize, p: usize) -> bool {
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

pub fn p_part(n: usize, p: usize) -> usize {
    let mut n = n;
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// `Some((q, r))` when `n = q^r` with `q` prime and `r ≥ 1`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let q = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut r = 0;
    while m.is_multiple_of(q) {
        m /= q;
        r += 1;
    }
    (m == 1).then_some((q, r))
}

#[cfg(test)]
mod tests;
