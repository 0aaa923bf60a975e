use super::*;
use crate::dade::psi_coset;
use crate::grp::presets::Preset;
use alloc::vec;

fn group(p: Preset) -> Arc<Group> {
    Arc::new(p.build().unwrap())
}

fn class(g: &Arc<Group>, name: &str) -> Subgroup {
    let id = g.class_by_name(name).unwrap();
    g.subgroup_classes().unwrap()[id].rep.clone()
}

fn cosets(g: &Arc<Group>, name: &str) -> ConcreteGSet {
    ConcreteGSet::cosets(g, &class(g, name), None).unwrap()
}

fn sf(values: &[i64]) -> SuperclassFunction {
    SuperclassFunction { values: values.to_vec() }
}

fn two_dim(g: &Arc<Group>) -> RealRep {
    RealRep::reduced_permutation(&cosets(g, "C2")).unwrap()
}

fn oriented_artin_presets() -> Vec<(Preset, usize)> {
    vec![
        (Preset::Symmetric(3), 3),
        (Preset::Dihedral(10), 5),
        (Preset::Semidirect { p: 7, q: 3, r: 1, l: 0 }, 7),
        (Preset::Semidirect { p: 3, q: 2, r: 2, l: 1 }, 3),
        (Preset::Symmetric(4), 3),
        (Preset::Alternating(4), 3),
        (Preset::Alternating(4), 2),
        (Preset::Dihedral(8), 2),
    ]
}

#[test]
fn fixed_point_dimensions() {
    let g = group(Preset::Symmetric(3));
    let c3 = class(&g, "C3");
    assert_eq!(ClassFunction::trivial(&g).dim_fixed(&c3).unwrap(), 1);
    assert_eq!(ClassFunction::permutation(&cosets(&g, "1")).dim_fixed(&c3).unwrap(), 2);
    assert_eq!(two_dim(&g).character().dim_fixed(&c3).unwrap(), 0);
    let pc = PClasses::new(&g, 3).unwrap();
    let doubled = two_dim(&g).direct_sum(&two_dim(&g)).unwrap();
    assert_eq!(doubled.dim_function(&pc).unwrap(), sf(&[4, 0]));
    assert_eq!(RealRep::sign(&g).dim_function(&pc).unwrap(), sf(&[1, 1]));
    assert_eq!(ClassFunction::trivial(&g).scale(&q(3)).dim_function(&pc).unwrap(), sf(&[3, 3]));
    let half = ClassFunction::trivial(&g).scale(&Q::new(BigInt::one(), BigInt::from(2)));
    assert!(matches!(half.dim_fixed(&c3), Err(Error::NotACharacter(_))));
}

#[test]
fn dimension_functions_are_additive() {
    let g = group(Preset::Symmetric(4));
    let pc = PClasses::new(&g, 2).unwrap();
    let chars: Vec<ClassFunction> = ["1", "C3", "V4a", "D8", "S3"]
        .iter()
        .filter(|n| g.class_by_name(n).is_ok())
        .map(|n| ClassFunction::permutation(&cosets(&g, n)))
        .collect();
    assert!(chars.len() >= 3);
    for a in &chars {
        for b in &chars {
            let sum = a.add(b).unwrap().dim_function(&pc).unwrap();
            assert_eq!(sum, a.dim_function(&pc).unwrap().add(&b.dim_function(&pc).unwrap()));
        }
    }
}

#[test]
fn induction_from_subgroups() {
    let g = group(Preset::Symmetric(3));
    let (sigma, tau) = (g.generators()[0], g.generators()[1]);
    let emb = Embedding::new(&g, &class(&g, "C2")).unwrap();
    let ind = induce(&ClassFunction::trivial(&emb.sub), &emb).unwrap();
    let at = |e: usize| ind.value(e).to_rational().unwrap();
    assert_eq!((at(0), at(tau), at(sigma)), (q(3), q(1), q(0)));
    // Inducing the trivial character gives the coset permutation character.
    for preset in [Preset::Symmetric(4), Preset::Dihedral(10), Preset::Semidirect { p: 7, q: 3, r: 1, l: 0 }] {
        let g = Arc::new(preset.build().unwrap());
        for c in g.subgroup_classes().unwrap() {
            let emb = Embedding::new(&g, &c.rep).unwrap();
            let ind = induce(&ClassFunction::trivial(&emb.sub), &emb).unwrap();
            assert_eq!(ind, ClassFunction::permutation(&ConcreteGSet::cosets(&g, &c.rep, None).unwrap()));
        }
    }
}

#[test]
fn block_characters() {
    let g = group(Preset::Symmetric(3));
    let pc = PClasses::new(&g, 3).unwrap();
    let triples = artin_triples(&g, 3, true).unwrap();
    assert_eq!(triples.len(), 1);
    let u = block_character(&g, &triples[0]).unwrap();
    assert_eq!(u.dim_function(&pc).unwrap(), sf(&[0, 4]));
    // On the 2'-subgroup C2 the fixed part is everything.
    assert_eq!(u.dim_fixed(&class(&g, "C2")).unwrap(), u.dim_fixed(&g.trivial_subgroup()).unwrap());

    let d10 = group(Preset::Dihedral(10));
    let pc = PClasses::new(&d10, 5).unwrap();
    let t = &artin_triples(&d10, 5, true).unwrap()[0];
    let u = block_character(&d10, t).unwrap();
    let rotation = d10.generators().iter().copied().find(|&x| d10.element_order(x) == 5).unwrap();
    assert_eq!(u.value(rotation).to_rational(), None);
    assert_eq!(u.dim_function(&pc).unwrap(), sf(&[0, 4]));
}

#[test]
fn block_characters_satisfy_the_conditions() {
    for (preset, p) in oriented_artin_presets() {
        let g = Arc::new(preset.build().unwrap());
        let pc = PClasses::new(&g, p).unwrap();
        for t in artin_triples(&g, p, true).unwrap() {
            let f = block_character(&g, &t).unwrap().dim_function(&pc).unwrap();
            assert!(check_borel_smith(&pc, &f).unwrap().passed, "{preset:?}");
            assert!(check_artin(&pc, &f, true).unwrap().passed, "{preset:?}");
        }
    }
}

#[test]
fn orientability_by_determinants() {
    let g = group(Preset::Symmetric(3));
    let pc = PClasses::new(&g, 3).unwrap();
    assert!(is_k_orientable(&RealRep::trivial(&g), &pc).unwrap().orientable);
    let sign = is_k_orientable(&RealRep::sign(&g), &pc).unwrap();
    assert!(!sign.orientable);
    assert_eq!(sign.witness.unwrap().det, q(-1));
    assert!(!is_k_orientable(&two_dim(&g), &pc).unwrap().orientable);
    let doubled = two_dim(&g).direct_sum(&two_dim(&g)).unwrap();
    assert!(is_k_orientable(&doubled, &pc).unwrap().orientable);
    assert!(!is_k_orientable(&RealRep::permutation(&cosets(&g, "C3")), &pc).unwrap().orientable);
    let pc2 = PClasses::new(&g, 2).unwrap();
    assert!(is_k_orientable(&RealRep::sign(&g), &pc2).unwrap().orientable);
    // Groups of odd order act with determinant 1 on everything.
    let odd = group(Preset::Semidirect { p: 7, q: 3, r: 1, l: 0 });
    let pc7 = PClasses::new(&odd, 7).unwrap();
    for c in odd.subgroup_classes().unwrap() {
        let x = ConcreteGSet::cosets(&odd, &c.rep, None).unwrap();
        assert!(is_k_orientable(&RealRep::permutation(&x), &pc7).unwrap().orientable);
    }
}

#[test]
fn rejects_non_representations() {
    let g = group(Preset::Symmetric(3));
    let bad = vec![QMat::from_i64(&[vec![1, 1], vec![0, 1]]), QMat::identity(2)];
    assert!(matches!(RealRep::new(&g, 2, bad), Err(Error::NotARepresentation(_))));
    let rep = two_dim(&g);
    assert!(RealRep::new(&g, 2, rep.generators().to_vec()).is_ok());
    assert!(RealRep::permutation(&cosets(&g, "1")).is_orthogonal());
    assert!(!rep.is_orthogonal());
}

#[test]
fn realization_on_the_symmetric_group() {
    let g = group(Preset::Symmetric(3));
    let pc = PClasses::new(&g, 3).unwrap();
    let RealizeOutcome::Realized(r) = realize(&pc, &sf(&[4, 0]), false).unwrap() else { panic!("(4,0) not realized") };
    assert_eq!(r.dim, sf(&[4, 0]));
    let RealizeOutcome::Realized(r) = realize(&pc, &sf(&[1, 1]), false).unwrap() else { panic!("trivial not realized") };
    assert_eq!(r.used().count(), 1);
    assert!(matches!(realize(&pc, &sf(&[2, 0]), false), Err(Error::NotRealizable(_))));
    for a in 0..=8 {
        for b in 0..=8 {
            let f = sf(&[a, b]);
            match realize(&pc, &f, false) {
                Ok(RealizeOutcome::Realized(r)) => {
                    assert_eq!((a - b) % 4, 0);
                    assert!(psi_coset(&pc, &r.dim).unwrap().is_zero());
                }
                Ok(RealizeOutcome::Obstructed { residual, .. }) => panic!("({a},{b}) obstructed with {residual:?}"),
                Err(_) => assert_ne!((a - b) % 4, 0),
            }
        }
    }
}

#[test]
fn even_functions_come_from_complex_representations() {
    for (preset, p) in oriented_artin_presets().into_iter().filter(|(_, p)| *p != 2) {
        let g = Arc::new(preset.build().unwrap());
        let pc = PClasses::new(&g, p).unwrap();
        let lattice = crate::conditions::condition_lattice(&pc, crate::conditions::LatticeKind::BorelSmithOrientedArtin).unwrap();
        for v in lattice.basis_i64().unwrap() {
            let f = sf(&v).scale(if v[0] % 2 == 0 { 1 } else { 2 });
            let outcome = realize(&pc, &f, true).unwrap();
            let RealizeOutcome::Realized(r) = outcome else { panic!("{preset:?}: {f:?} obstructed") };
            assert!(r.used().all(|(x, _)| x.complex));
            assert!(psi_coset(&pc, &r.dim).unwrap().is_zero(), "{preset:?}");
        }
    }
}

#[test]
fn family_spans_the_oriented_lattice() {
    for (preset, p) in oriented_artin_presets() {
        let g = Arc::new(preset.build().unwrap());
        let pc = PClasses::new(&g, p).unwrap();
        let lattice = crate::conditions::condition_lattice(&pc, crate::conditions::LatticeKind::BorelSmithOrientedArtin).unwrap();
        for v in lattice.basis_i64().unwrap() {
            let outcome = realize(&pc, &sf(&v), false).unwrap();
            assert!(matches!(outcome, RealizeOutcome::Realized(_)), "{preset:?}: {v:?}");
        }
    }
}
