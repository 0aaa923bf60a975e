use dade_core::burnside::ConcreteGSet;
use dade_core::grp::Limits;
use dade_core::modrep::Rep;
use dade_core::repchar::RealRep;
use dade_workbench::input::{format_gset, load_group, parse_gset, parse_real_rep, parse_values};
use dade_workbench::repfile::{read_real_rep, read_rep, write_real_rep, write_rep};

#[test]
fn gset_literals_round_trip() {
    let g = load_group("preset:symmetric:4", Limits::default()).unwrap();
    for lit in ["[G/G]", "[G/S3]+2[G/C3]+[G/1]", "5[G/D8]+[G/C2xC2b]"] {
        let x = parse_gset(&g.group, lit).unwrap();
        assert_eq!(format_gset(&x).unwrap(), lit);
    }
    let x = parse_gset(&g.group, "1*[G/G] + 3*[G/C3] + [G/C3]").unwrap();
    assert_eq!(format_gset(&x).unwrap(), "[G/G]+4[G/C3]");
    for bad in ["", "[G/C5]", "3", "[G/C3", "x*[G/1]", "[C3]"] {
        assert!(parse_gset(&g.group, bad).is_err(), "{bad:?}");
    }
}

#[test]
fn value_tuples_are_checked_for_arity() {
    assert_eq!(parse_values(" 4, -2 ,0", 3).unwrap(), vec![4, -2, 0]);
    assert!(parse_values("1,2", 3).is_err());
    assert!(parse_values("1,a,2", 3).is_err());
}

#[test]
fn modular_representation_files_round_trip() {
    let g = load_group("preset:dihedral:8", Limits::default()).unwrap();
    let x = ConcreteGSet::concretize(&parse_gset(&g.group, "[G/C2a]+[G/C4]").unwrap()).unwrap();
    let m = Rep::delta_module(&x, 5).unwrap();
    let text = write_rep(&g, &m);
    assert!(text.starts_with(&format!("dade-rep/1 group-sha256={} p=5 dim=5\n", g.hash())));
    let back = read_rep(&g, &text).unwrap();
    assert_eq!(back.generators(), m.generators());
    assert!(read_rep(&g, &text.replace("p=5", "p=7")).is_err());
    assert!(read_rep(&g, &text.replace("dim=5", "dim=4")).is_err());
    assert!(read_rep(&g, &text.replacen("gen 1", "gen 2", 1)).is_err());
    let other = load_group("preset:cyclic:8", Limits::default()).unwrap();
    assert!(read_rep(&other, &text).is_err());
}

#[test]
fn rational_representation_files_round_trip() {
    let g = load_group("preset:symmetric:3", Limits::default()).unwrap();
    let v = parse_real_rep(&g.group, "reduced:[G/1] + sign").unwrap();
    assert_eq!(v.dim(), 6);
    let text = write_real_rep(&v);
    let back = read_real_rep(&g.group, &text).unwrap();
    assert_eq!(back.generators(), v.generators());
    let halved = "dade-qrep/1 dim=1\ngen 0\n1/2\ngen 1\n1\n";
    assert!(read_real_rep(&g.group, halved).is_err());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.qrep");
    std::fs::write(&path, &text).unwrap();
    let from_file = parse_real_rep(&g.group, &format!("file:{}", path.display())).unwrap();
    assert_eq!(from_file.generators(), v.generators());
    let trivial: RealRep = parse_real_rep(&g.group, "3*trivial").unwrap();
    assert_eq!(trivial.dim(), 3);
    assert!(parse_real_rep(&g.group, "adjoint").is_err());
}
