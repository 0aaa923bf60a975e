use super::*;
use crate::burnside::{double_coset_reps, ConcreteGSet};
use crate::grp::presets::Preset;
use alloc::vec;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

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

/// `Δ(Σ₃/C₂)` in the basis `x_i − x_0` over the cosets `⟨τ⟩, σ⟨τ⟩, σ²⟨τ⟩`.
fn s3_delta(g: &Arc<Group>) -> Rep {
    let (sigma, tau) = (g.generators()[0], g.generators()[1]);
    let h = g.closure(&[tau]);
    let x = ConcreteGSet::cosets(g, &h, Some(&[0, sigma, g.mul(sigma, sigma)])).unwrap();
    Rep::delta_module(&x, 3).unwrap()
}

fn unipotent(p: u32, n: usize) -> FpMat {
    let mut m = FpMat::identity(p, n);
    for i in 0..n.saturating_sub(1) {
        m.set(i, i + 1, 1);
    }
    m
}

#[test]
fn relative_syzygy_matrices() {
    let g = group(Preset::Symmetric(3));
    let m = s3_delta(&g);
    assert_eq!(m.signed_generators(), vec![vec![vec![-1, -1], vec![1, 0]], vec![vec![0, 1], vec![1, 0]]]);
    let mm = m.tensor(&m).unwrap();
    assert_eq!(
        mm.signed_generators()[0],
        vec![vec![1, 1, 1, 1], vec![-1, 0, -1, 0], vec![-1, -1, 0, 0], vec![1, 0, 0, 0]]
    );
    assert_eq!(m.end().unwrap().dim(), 4);
    assert_eq!(Rep::delta_module(&cosets(&g, "G"), 3).unwrap().dim(), 0);
}

#[test]
fn square_of_the_syzygy() {
    let g = group(Preset::Symmetric(3));
    let m = s3_delta(&g);
    let mm = m.tensor(&m).unwrap();
    let k = Rep::trivial(&g, 3).unwrap();
    let sign = Rep::sign(&g, 3).unwrap();
    assert_eq!(summand_multiplicity_1dim(&mm, &sign).unwrap(), 1);
    assert_eq!(summand_multiplicity_1dim(&mm, &k).unwrap(), 0);
    assert!(hom_space(&sign, &mm).unwrap().dim() >= 1);
    let c3 = g.sylow(3).unwrap();
    assert_eq!(jordan_profile(&mm, &c3).unwrap().blocks, vec![1, 3]);
    let model = sign.direct_sum(&Rep::perm_module(&cosets(&g, "C2"), 3).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    assert!(find_isomorphism(&mm, &model, &mut rng, 20).unwrap().is_some());
    assert!(is_summand(&sign, &mm, &mut rng, 20).unwrap());
    assert!(!is_summand(&k, &mm, &mut rng, 20).unwrap());
    assert_eq!(dade_order(&m, 8).unwrap(), DadeOrder::Finite(4));
    assert_eq!(dade_order(&m, 3).unwrap(), DadeOrder::ExceedsBound(3));
}

#[test]
fn dade_verdicts_from_examples() {
    let g = group(Preset::Symmetric(3));
    let v = is_dade(&s3_delta(&g)).unwrap();
    assert!(v.dade && v.capped);
    let perm = Rep::perm_module(&cosets(&g, "C3"), 3).unwrap();
    let end = perm.end().unwrap();
    assert_eq!(summand_multiplicity_1dim(&end, &Rep::trivial(&g, 3).unwrap()).unwrap(), 2);
    assert_eq!(summand_multiplicity_1dim(&end, &Rep::sign(&g, 3).unwrap()).unwrap(), 2);
    assert!(!is_sylow_vertex_trivial(&end, false).unwrap());
    assert!(!is_dade(&perm).unwrap().dade);
    assert!(is_sylow_vertex_trivial(&s3_delta(&g).end().unwrap(), false).unwrap());
    let k = Rep::trivial(&g, 3).unwrap();
    let free = Rep::perm_module(&cosets(&g, "1"), 3).unwrap();
    assert!(is_sylow_vertex_trivial(&k.direct_sum(&free).unwrap(), false).unwrap());
    assert!(zero_in_dade(&k).unwrap());
}

#[test]
fn dihedral_two_dimensional_module() {
    let g = group(Preset::Dihedral(8));
    for p in [3, 5] {
        let r = FpMat::from_rows(p, &[vec![0, -1], vec![1, 0]]);
        let s = FpMat::from_rows(p, &[vec![1, 0], vec![0, -1]]);
        let m = Rep::new(&g, p, 2, vec![r, s]).unwrap();
        let v = is_dade(&m).unwrap();
        assert!(!v.dade && v.endo_p_permutation);
        assert_eq!(v.trivial_multiplicity, 1);
        let end = m.end().unwrap();
        let centre: Vec<usize> = (0..g.order()).filter(|&z| (0..g.order()).all(|x| g.mul(x, z) == g.mul(z, x))).collect();
        let gz = Rep::perm_module(&ConcreteGSet::cosets(&g, &g.closure(&centre), None).unwrap(), p).unwrap();
        for chi in Rep::linear_characters(&g, p).unwrap() {
            assert_eq!(summand_multiplicity_1dim(&end, &chi).unwrap(), 1);
            assert_eq!(summand_multiplicity_1dim(&gz, &chi).unwrap(), 1);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert!(find_isomorphism(&end, &gz, &mut rng, 20).unwrap().is_some());
    }
}

#[test]
fn rejects_non_representations() {
    let g = group(Preset::Symmetric(3));
    let bad = vec![FpMat::identity(3, 2), FpMat::from_rows(3, &[vec![1, 1], vec![0, 1]])];
    assert!(matches!(Rep::new(&g, 3, 2, bad), Err(Error::NotARepresentation(_))));
    assert!(Rep::new(&g, 3, 2, vec![FpMat::identity(3, 2)]).is_err());
    assert!(Rep::trivial(&g, 101).is_err());
    assert!(Rep::perm_module(&ConcreteGSet::empty(&g), 3).is_err());
}

#[test]
fn undecidable_without_provenance() {
    let g = group(Preset::Dihedral(8));
    let r = FpMat::from_rows(2, &[vec![0, 1], vec![1, 0]]);
    let m = Rep::new(&g, 2, 2, vec![r.clone(), FpMat::identity(2, 2)]).unwrap();
    assert!(matches!(p_permutation_status(&m, false), Err(Error::Undecidable(_))));
    assert!(p_permutation_status(&m, true).unwrap());
    let x = cosets(&g, "C2a");
    assert!(p_permutation_status(&Rep::perm_module(&x, 2).unwrap(), false).unwrap());
}

#[test]
fn hom_dimensions_count_double_cosets() {
    for (preset, p) in [(Preset::Symmetric(4), 2), (Preset::Symmetric(4), 3), (Preset::Dihedral(8), 3)] {
        let g = group(preset);
        let classes = g.subgroup_classes().unwrap();
        for a in classes {
            let xa = ConcreteGSet::cosets(&g, &a.rep, None).unwrap();
            let ma = Rep::perm_module(&xa, p).unwrap();
            for b in classes.iter().step_by(2) {
                let mb = Rep::perm_module(&ConcreteGSet::cosets(&g, &b.rep, None).unwrap(), p).unwrap();
                let hom = hom_space(&ma, &mb).unwrap();
                assert_eq!(hom.dim(), double_coset_reps(&g, &a.rep, &b.rep).len());
                for f in &hom.basis {
                    for (x, y) in ma.generators().iter().zip(mb.generators()) {
                        assert_eq!(f.mul(x), y.mul(f));
                    }
                }
            }
        }
    }
    let g = group(Preset::Symmetric(3));
    let k = Rep::trivial(&g, 3).unwrap();
    assert_eq!(hom_space(&k, &k).unwrap().dim(), 1);
    assert_eq!(summand_multiplicity_1dim(&k.direct_sum(&k).unwrap(), &k).unwrap(), 2);
}

#[test]
fn brauer_quotients_of_permutation_modules() {
    for (preset, p) in [(Preset::Symmetric(4), 2), (Preset::Symmetric(4), 3), (Preset::Symmetric(3), 3)] {
        let g = group(preset);
        let classes = g.subgroup_classes().unwrap();
        let xs: Vec<ConcreteGSet> = classes.iter().map(|c| ConcreteGSet::cosets(&g, &c.rep, None).unwrap()).collect();
        let mixed = xs[1].disjoint_union(&xs[classes.len() / 2]).unwrap();
        for x in xs.iter().chain([&mixed]) {
            let m = Rep::perm_module(x, p).unwrap();
            for c in g.p_subgroup_classes(p as usize).unwrap() {
                let q = &classes[c].rep;
                let bq = brauer_quotient(&m, q).unwrap();
                assert_eq!(bq.rep.dim(), x.fixed_points(q).len());
            }
        }
    }
    let g = group(Preset::Symmetric(3));
    let s = g.sylow(3).unwrap();
    assert_eq!(brauer_quotient(&Rep::perm_module(&cosets(&g, "C2"), 3).unwrap(), &s).unwrap().rep.dim(), 0);
    let top = brauer_quotient(&Rep::perm_module(&cosets(&g, "G"), 3).unwrap(), &s).unwrap().rep;
    assert!(top.dim() == 1 && top.acts_trivially());
    let c3 = group(Preset::Cyclic(3));
    let reg = Rep::perm_module(&cosets(&c3, "1"), 3).unwrap();
    assert_eq!(brauer_quotient(&reg, &c3.whole()).unwrap().rep.dim(), 0);
    assert!(brauer_quotient(&reg, &class(&g, "C2")).is_err());
}

#[test]
fn splitting_and_relative_projectivity() {
    let c3 = group(Preset::Cyclic(3));
    for (p, split) in [(3, false), (2, true)] {
        let kx = Rep::perm_module(&cosets(&c3, "1"), p).unwrap();
        let k = Rep::trivial(&c3, p).unwrap();
        let aug = FpMat::from_rows(p, &[vec![1, 1, 1]]);
        assert_eq!(is_split_surjection(&aug, &kx, &k).unwrap(), split);
        assert!(is_split_surjection(&FpMat::identity(p, 3), &kx, &kx).unwrap());
    }
    let kx = Rep::perm_module(&cosets(&c3, "1"), 3).unwrap();
    let bad = FpMat::from_rows(3, &[vec![1, 0, 0]]);
    assert!(matches!(is_split_surjection(&bad, &kx, &Rep::trivial(&c3, 3).unwrap()), Err(Error::NotEquivariant(_))));

    let g = group(Preset::Symmetric(3));
    let k = Rep::trivial(&g, 3).unwrap();
    let m = s3_delta(&g);
    assert!(!is_x_projective(&k, &cosets(&g, "C2")).unwrap());
    assert!(is_x_projective(&k, &cosets(&g, "C3")).unwrap());
    let with_fixed = cosets(&g, "G").disjoint_union(&cosets(&g, "1")).unwrap();
    assert!(is_x_projective(&m, &with_fixed).unwrap());
    assert!(is_x_projective(&m.tensor(&m).unwrap(), &with_fixed).unwrap());
}

#[test]
fn jordan_profiles() {
    let c3 = group(Preset::Cyclic(3));
    let free = cosets(&c3, "1");
    assert_eq!(jordan_profile(&Rep::delta_module(&free, 3).unwrap(), &c3.whole()).unwrap().blocks, vec![2]);
    assert_eq!(jordan_profile(&Rep::perm_module(&free, 3).unwrap(), &c3.whole()).unwrap().blocks, vec![3]);
    let g = group(Preset::Symmetric(3));
    assert!(jordan_profile(&s3_delta(&g), &class(&g, "C2")).is_err());
}

#[test]
fn tensor_block_formula_matches_kronecker() {
    for p in [2u32, 3, 5, 7] {
        let c = group(Preset::Cyclic(p as usize));
        for a in 1..=p as usize {
            let ja = Rep::new(&c, p, a, vec![unipotent(p, a)]).unwrap();
            for b in 1..=p as usize {
                let jb = Rep::new(&c, p, b, vec![unipotent(p, b)]).unwrap();
                let mut expected = tensor_jordan_blocks(a, b, p as usize);
                expected.sort_unstable();
                assert_eq!(jordan_profile(&ja.tensor(&jb).unwrap(), &c.whole()).unwrap().blocks, expected, "J{a}⊗J{b} at {p}");
            }
        }
    }
}

#[test]
fn square_of_the_cyclic_syzygy() {
    for p in [3u32, 5, 7] {
        let c = group(Preset::Cyclic(p as usize));
        let d = Rep::delta_module(&cosets(&c, "1"), p).unwrap();
        let blocks = jordan_profile(&d.tensor(&d).unwrap(), &c.whole()).unwrap().blocks;
        let mut expected = vec![1];
        expected.extend(core::iter::repeat_n(p as usize, p as usize - 2));
        assert_eq!(blocks, expected);
    }
}

#[test]
fn kernel_identity_for_relative_syzygies() {
    for (preset, p) in [(Preset::Symmetric(3), 3u32), (Preset::Symmetric(4), 3), (Preset::Cyclic(5), 5)] {
        let g = group(preset);
        let classes = g.subgroup_classes().unwrap();
        for c in classes.iter().take(4) {
            let x = ConcreteGSet::cosets(&g, &c.rep, None).unwrap();
            let n = x.len();
            let end = Rep::delta_module(&x, p).unwrap().end().unwrap();
            assert_eq!(end.dim() + 2 * n, 1 + n * n);
            let kx = Rep::perm_module(&x, p).unwrap();
            let lhs = end.direct_sum(&kx).unwrap().direct_sum(&kx).unwrap();
            let rhs = Rep::trivial(&g, p).unwrap().direct_sum(&Rep::perm_module(&x.product(&x).unwrap(), p).unwrap()).unwrap();
            for cc in g.p_subgroup_classes(p as usize).unwrap() {
                let sub = &classes[cc].rep;
                if sub.order() == p as usize {
                    assert_eq!(jordan_profile(&lhs, sub).unwrap(), jordan_profile(&rhs, sub).unwrap());
                }
            }
        }
    }
}

#[test]
fn sign_inside_permutation_module_of_sylow_cosets() {
    let g = group(Preset::Symmetric(4));
    let m = Rep::perm_module(&ConcreteGSet::cosets(&g, &g.sylow(3).unwrap(), None).unwrap(), 3).unwrap();
    assert!(summand_multiplicity_1dim(&m, &Rep::sign(&g, 3).unwrap()).unwrap() >= 1);
    assert!(!is_sylow_vertex_trivial(&m, false).unwrap());
}

#[test]
fn duals_restrictions_and_compatibility() {
    let g = group(Preset::Symmetric(3));
    let m = s3_delta(&g);
    assert_eq!(m.dual().unwrap().dual().unwrap().generators(), m.generators());
    let d = m.dual().unwrap();
    assert!(Rep::new(&g, 3, 2, d.generators().to_vec()).is_ok());
    let emb = Embedding::new(&g, &g.sylow(3).unwrap()).unwrap();
    let restricted = Rep::perm_module(&cosets(&g, "C2"), 3).unwrap().restrict(&emb).unwrap();
    let free = Rep::perm_module(&ConcreteGSet::cosets(&emb.sub, &emb.sub.trivial_subgroup(), None).unwrap(), 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    assert!(find_isomorphism(&restricted, &free, &mut rng, 20).unwrap().is_some());
    let perm = Rep::perm_module(&cosets(&g, "C3"), 3).unwrap();
    for x in [&m, &perm, &Rep::sign(&g, 3).unwrap()] {
        assert_eq!(is_compatible(x, x, false).unwrap(), is_dade(x).unwrap().dade);
    }
    let cube = m.tensor_power(3, DEFAULT_DIM_BOUND).unwrap();
    assert!(!is_compatible(&m, &cube, false).unwrap());
    assert!(is_compatible(&m, &cube.tensor(&m).unwrap().tensor(&m).unwrap(), false).unwrap());
}

#[test]
fn linear_characters_of_small_groups() {
    assert_eq!(Rep::linear_characters(&group(Preset::Symmetric(3)), 5).unwrap().len(), 2);
    assert_eq!(Rep::linear_characters(&group(Preset::Symmetric(3)), 3).unwrap().len(), 2);
    assert_eq!(Rep::linear_characters(&group(Preset::Dihedral(8)), 3).unwrap().len(), 4);
    assert_eq!(Rep::linear_characters(&group(Preset::Cyclic(6)), 7).unwrap().len(), 6);
    assert_eq!(Rep::linear_characters(&group(Preset::Cyclic(6)), 5).unwrap().len(), 2);
}

/// Both Dade routes agree wherever the direct one is feasible.
#[test]
fn dade_routes_agree() {
    let mut modules = Vec::new();
    let g = group(Preset::Symmetric(3));
    let m = s3_delta(&g);
    let sign = Rep::sign(&g, 3).unwrap();
    let k = Rep::trivial(&g, 3).unwrap();
    for name in ["1", "C2", "C3", "G"] {
        let x = cosets(&g, name);
        modules.push(Rep::perm_module(&x, 3).unwrap());
        if x.len() > 1 {
            modules.push(Rep::delta_module(&x, 3).unwrap());
        }
    }
    let mixed = cosets(&g, "C2").disjoint_union(&cosets(&g, "1")).unwrap();
    modules.push(Rep::delta_module(&mixed, 3).unwrap());
    modules.push(m.tensor(&sign).unwrap());
    modules.push(m.direct_sum(&k).unwrap());
    modules.push(m.direct_sum(&m).unwrap());
    modules.push(m.direct_sum(&m.tensor(&sign).unwrap()).unwrap());
    modules.push(m.tensor(&m).unwrap());
    modules.push(m.tensor(&m).unwrap().tensor(&m).unwrap());
    modules.push(k.direct_sum(&sign).unwrap());
    let c5 = group(Preset::Cyclic(5));
    for a in 1..=5 {
        modules.push(Rep::new(&c5, 5, a, vec![unipotent(5, a)]).unwrap());
    }
    let j2 = Rep::new(&c5, 5, 2, vec![unipotent(5, 2)]).unwrap();
    let j4 = Rep::new(&c5, 5, 4, vec![unipotent(5, 4)]).unwrap();
    modules.push(j4.direct_sum(&j4).unwrap());
    modules.push(j4.direct_sum(&Rep::trivial(&c5, 5).unwrap()).unwrap());
    modules.push(j2.direct_sum(&j2).unwrap());
    let d8 = group(Preset::Dihedral(8));
    let r = FpMat::from_rows(3, &[vec![0, -1], vec![1, 0]]);
    let s = FpMat::from_rows(3, &[vec![1, 0], vec![0, -1]]);
    let two = Rep::new(&d8, 3, 2, vec![r, s]).unwrap();
    modules.push(two.clone());
    modules.push(two.direct_sum(&two).unwrap());
    for chi in Rep::linear_characters(&d8, 3).unwrap() {
        modules.push(chi.direct_sum(&chi).unwrap());
    }
    let s4 = group(Preset::Symmetric(4));
    for name in ["S3", "D8", "C4"] {
        modules.push(Rep::delta_module(&cosets(&s4, name), 3).unwrap());
    }
    for m in &modules {
        let s = m.group().sylow(m.p() as usize).unwrap();
        let direct = pperm::dade_via_endomorphisms(m, DEFAULT_DIM_BOUND).unwrap();
        let fast = pperm::dade_via_cyclic_sylow(m, &s, DEFAULT_DIM_BOUND).unwrap();
        assert_eq!(
            (direct.dade, direct.capped, direct.trivial_multiplicity, direct.endo_p_permutation),
            (fast.dade, fast.capped, fast.trivial_multiplicity, fast.endo_p_permutation),
            "dim {} over a group of order {}",
            m.dim(),
            m.group().order()
        );
    }
}
