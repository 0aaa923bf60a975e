use super::presets::Preset;
use super::*;
use alloc::string::ToString;
use alloc::vec;

fn sym(n: usize) -> Group {
    Preset::Symmetric(n).build().unwrap()
}

/// Every subset closed under multiplication, by exhaustive search.
fn brute_subgroups(g: &Group) -> usize {
    let n = g.order();
    assert!(n <= 12);
    (0u32..1 << n)
        .filter(|mask| {
            mask & 1 == 1
                && (0..n).filter(|i| mask >> i & 1 == 1).all(|a| {
                    (0..n).filter(|j| mask >> j & 1 == 1).all(|b| mask >> g.mul(a, b) & 1 == 1)
                })
        })
        .count()
}

/// Subgroups generated by at most two elements.
fn two_generated(g: &Group) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            out.insert(g.closure(&[a, b]).elements().to_vec());
        }
    }
    out
}

#[test]
fn preset_orders() {
    assert_eq!(Preset::Cyclic(7).build().unwrap().order(), 7);
    assert_eq!(Preset::Dihedral(8).build().unwrap().order(), 8);
    assert_eq!(Preset::Dihedral(4).build().unwrap().order(), 4);
    assert_eq!(Preset::Quaternion8.build().unwrap().order(), 8);
    assert_eq!(sym(4).order(), 24);
    assert_eq!(Preset::Alternating(4).build().unwrap().order(), 12);
    assert_eq!(Preset::Abelian(vec![2, 2]).build().unwrap().order(), 4);
    for (p, q, r, l) in [(5, 2, 2, 0), (3, 2, 1, 1), (7, 3, 1, 0), (3, 2, 1, 0), (5, 2, 2, 1), (7, 3, 1, 1)] {
        let g = Preset::Semidirect { p, q, r, l }.build().unwrap();
        assert_eq!(g.order(), p * q.pow(r));
    }
    assert!(Preset::Semidirect { p: 5, q: 3, r: 1, l: 0 }.build().is_err());
    assert!(Preset::Semidirect { p: 4, q: 3, r: 1, l: 0 }.build().is_err());
}

#[test]
fn enumeration_bounds_are_errors() {
    let big = Perm::from_cycles(17, &[(0..17).collect()]).unwrap();
    assert!(matches!(Group::from_generators(vec![big]), Err(Error::GroupTooLarge { what: "degree", .. })));
    assert!(matches!(Preset::Symmetric(8).build(), Err(Error::GroupTooLarge { what: "element count", .. })));
}

#[test]
fn identity_is_index_zero_and_words_evaluate() {
    let g = sym(4);
    assert!(g.perm(0).is_identity());
    for e in 0..g.order() {
        let mut x = 0;
        for gi in g.word(e) {
            x = g.mul(x, g.generators()[gi]);
        }
        assert_eq!(x, e);
        assert_eq!(g.mul(e, g.inv(e)), 0);
    }
}

#[test]
fn subgroup_counts_match_exhaustive_search() {
    for g in [
        sym(3),
        Preset::Dihedral(8).build().unwrap(),
        Preset::Quaternion8.build().unwrap(),
        Preset::Abelian(vec![2, 2]).build().unwrap(),
        Preset::Cyclic(12).build().unwrap(),
        Preset::Alternating(4).build().unwrap(),
    ] {
        assert_eq!(g.all_subgroups().unwrap().len(), brute_subgroups(&g));
    }
}

#[test]
fn symmetric4_lattice() {
    let g = sym(4);
    let all: BTreeSet<Vec<usize>> = g.all_subgroups().unwrap().iter().map(|s| s.elements().to_vec()).collect();
    assert_eq!(all, two_generated(&g));
    assert_eq!(all.len(), 30);
    let classes = g.subgroup_classes().unwrap();
    assert_eq!(classes.len(), 11);
    let orders: Vec<usize> = classes.iter().map(|c| c.order()).collect();
    assert_eq!(orders, vec![1, 2, 2, 3, 4, 4, 4, 6, 8, 12, 24]);
    let names: Vec<&str> = classes.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names.iter().filter(|n| n.starts_with("C2x")).count(), 2);
    assert!(names.contains(&"S3") && names.contains(&"D8") && names.contains(&"A4") && names.contains(&"S4"));
    let total: usize = classes.iter().map(|c| c.members.len()).sum();
    assert_eq!(total, 30);
}

#[test]
fn class_order_extends_subconjugacy() {
    for g in [sym(4), Preset::Semidirect { p: 7, q: 3, r: 1, l: 0 }.build().unwrap(), Preset::Dihedral(8).build().unwrap()] {
        let classes = g.subgroup_classes().unwrap();
        for a in classes {
            for b in classes {
                let le = g.class_le(a.id, b.id).unwrap();
                assert_eq!(le, g.is_subconjugate(&a.rep, &b.rep));
                if le {
                    assert!(a.id <= b.id);
                }
            }
        }
    }
}

#[test]
fn sylow_subgroups() {
    let g = sym(4);
    assert_eq!(g.sylow(2).unwrap().order(), 8);
    assert_eq!(g.sylow(3).unwrap().order(), 3);
    assert_eq!(g.sylow(5).unwrap().order(), 1);
    assert_eq!(g.p_subgroup_classes(3).unwrap().len(), 2);
    assert!(g.sylow(4).is_err());
}

#[test]
fn quotient_recognition() {
    let q8 = Preset::Quaternion8.build().unwrap();
    let one = q8.trivial_subgroup();
    let whole = q8.whole();
    assert_eq!(q8.recognize_quotient(&one, &whole).unwrap(), QuotientType::Quaternion8);
    let centre = q8.closure(&[q8.pow(q8.generators()[0], 2)]);
    assert_eq!(q8.recognize_quotient(&centre, &whole).unwrap(), QuotientType::ElementaryAbelian { p: 2 });

    let d8 = Preset::Dihedral(8).build().unwrap();
    assert_eq!(d8.recognize_quotient(&d8.trivial_subgroup(), &d8.whole()).unwrap(), QuotientType::Other { order: 8 });
    let rot = d8.closure(&[d8.generators()[0]]);
    assert_eq!(d8.recognize_quotient(&d8.trivial_subgroup(), &rot).unwrap(), QuotientType::Cyclic(4));

    let s3 = sym(3);
    let c2 = s3.closure(&[s3.generators()[1]]);
    assert_eq!(s3.recognize_quotient(&s3.trivial_subgroup(), &c2).unwrap(), QuotientType::Cyclic(2));
    assert_eq!(s3.recognize_quotient(&c2, &s3.whole()), Err(Error::NotNormal));
}

#[test]
fn embedding_round_trip() {
    let g = Arc::new(sym(4));
    let s = g.sylow(2).unwrap();
    let emb = Embedding::new(&g, &s).unwrap();
    assert_eq!(emb.sub.order(), 8);
    let k = emb.sub.whole();
    assert_eq!(emb.push(&k), s);
    assert_eq!(emb.pull(&s).unwrap(), k);
}

#[test]
fn element_classes_of_s4() {
    let g = sym(4);
    let sizes: Vec<usize> = g.element_classes().classes.iter().map(Vec::len).collect();
    let mut sorted = sizes.clone();
    sorted.sort();
    assert_eq!(sorted, vec![1, 3, 6, 6, 8]);
    assert_eq!(g.perm(g.generators()[0]).to_string(), "(0 1 2 3)");
}

#[test]
fn abelian_names() {
    let g = Preset::Abelian(vec![2, 2, 4]).build().unwrap();
    let last = g.subgroup_classes().unwrap().last().unwrap();
    assert_eq!(last.name, "C2xC2xC4");
    let g = Preset::Semidirect { p: 5, q: 2, r: 2, l: 0 }.build().unwrap();
    assert_eq!(g.subgroup_classes().unwrap().last().unwrap().name, "C5:C4");
}
