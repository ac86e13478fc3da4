use super::*;
use crate::fixtures::*;
use crate::repr::{random_module, Representation};

#[test]
fn resolution_of_projective_is_trivial() {
    let k = kx2();
    let res = minimal_resolution(&Representation::projective(&k, 1), 4);
    assert!(res.complete);
    assert_eq!(res.length(), 0);
    assert_eq!(res.terms, vec![vec![1]]);
    res.verify().unwrap();
}

#[test]
fn resolution_of_simple_over_a2() {
    let a = a2();
    let res = minimal_resolution(&Representation::simple(&a, 0), 4);
    assert!(res.complete);
    assert_eq!(res.terms, vec![vec![0], vec![1]]);
    assert_eq!(res.differentials[0].to_string(), "P(2)->P(1): [[a]]");
    res.verify().unwrap();
}

#[test]
fn resolution_of_simple_over_kx2() {
    let k = kx2();
    let res = minimal_resolution(&Representation::simple(&k, 0), 5);
    assert!(res.complete);
    assert_eq!(res.terms, vec![vec![0], vec![1], vec![0]]);
    res.verify().unwrap();
    assert_eq!(pdim(&Representation::simple(&k, 0), 5), Dimension::Finite(2));
}

#[test]
fn resolutions_of_random_modules_verify() {
    for alg in [kx2(), a4_rad2(), loop_x2()] {
        for seed in 0..15 {
            let m = random_module(&alg, seed, 3);
            minimal_resolution(&m, 4).verify().unwrap();
        }
    }
}

#[test]
fn pdim_examples() {
    let l = loop_x2();
    assert_eq!(pdim(&Representation::simple(&l, 0), 10), Dimension::AboveCap(10));
    assert_eq!(pdim(&Representation::projective(&l, 0), 10), Dimension::Finite(0));
    assert_eq!(pdim(&Representation::zero(l), 3), Dimension::Finite(0));
}

#[test]
fn gldim_examples() {
    assert_eq!(gldim(&semisimple3(), 5), Dimension::Finite(0));
    assert_eq!(gldim(&a2(), 5), Dimension::Finite(1));
    assert_eq!(gldim(&kx2(), 7), Dimension::Finite(2));
    assert_eq!(gldim(&a4_rad2(), 9), Dimension::Finite(3));
    assert_eq!(gldim(&loop_x2(), 4), Dimension::AboveCap(4));
    for alg in [semisimple3(), a2(), kx2(), a4_rad2(), loop_x2()] {
        assert_eq!(gldim(&alg, 6), gldim(&alg.opposite(), 6));
    }
}

#[test]
fn ext_examples() {
    let a = a2();
    let t = ext_table(&Representation::simple(&a, 0), &Representation::simple(&a, 1), 3).unwrap();
    assert_eq!(t.values, vec![0, 1, 0, 0]);
    let k = kx2();
    for seed in 0..10 {
        let m = random_module(&k, seed, 3);
        for v in 0..2 {
            let t = ext_table(&Representation::projective(&k, v), &m, 2).unwrap();
            assert_eq!(t.values, vec![m.dim_at(v), 0, 0]);
        }
        let n = random_module(&k, seed + 50, 3);
        let t = ext_table(&m, &n, 4).unwrap();
        assert_eq!(t.get(0), crate::repr::hom_dim(&m, &n).unwrap());
        assert!(t.vanishes(3..=4));
    }
}

#[test]
fn top_ext_is_nonzero() {
    let alg = a4_rad2();
    for seed in 0..20 {
        let m = random_module(&alg, seed, 3);
        if let Dimension::Finite(d) = pdim(&m, 6) {
            if d >= 1 {
                let t = ext_table(&m, &Representation::regular(&alg), d).unwrap();
                assert!(t.get(d) > 0);
            }
        }
    }
}

#[test]
fn tensor_examples() {
    let a = a2();
    let op = a.opposite();
    let t = tensor(&Representation::simple(&a, 0), &Representation::simple(&op, 0)).unwrap();
    assert_eq!(t.dim, 1);
    let t = tensor(&Representation::simple(&a, 0), &Representation::simple(&op, 1)).unwrap();
    assert_eq!(t.dim, 0);
    let k = kx2();
    let kop = k.opposite();
    for seed in 0..10 {
        let m = random_module(&k, seed, 3);
        let n = random_module(&kop, seed, 3);
        assert_eq!(tensor(&Representation::regular(&k), &n).unwrap().dim, n.total_dim());
        assert_eq!(tensor(&m, &Representation::regular(&kop)).unwrap().dim, m.total_dim());
        let tor = tor_table(&m, &n, 3).unwrap();
        assert_eq!(tor[0], tensor(&m, &n).unwrap().dim);
        assert_eq!(tor, tor_table(&n, &m, 3).unwrap());
    }
    assert!(tensor(&Representation::simple(&k, 0), &Representation::simple(&k, 0)).is_err());
}

#[test]
fn tor_vanishes_beyond_pdim() {
    let k = kx2();
    let kop = k.opposite();
    let m = Representation::simple(&k, 0);
    let d = pdim(&m, 5).finite().unwrap();
    for seed in 0..50 {
        let n = random_module(&kop, seed, 3);
        let tor = tor_table(&m, &n, d + 1).unwrap();
        assert_eq!(tor[d + 1], 0);
        let p = tor_table(&Representation::projective(&k, 1), &n, 2).unwrap();
        assert_eq!(&p[1..], &[0, 0]);
    }
}

#[test]
fn stable_hom_examples() {
    let k = kx2();
    let s1 = Representation::simple(&k, 0);
    assert_eq!(stable_hom_dim(&s1, &s1).unwrap(), 1);
    for seed in 0..10 {
        let m = random_module(&k, seed, 3);
        for v in 0..2 {
            let p = Representation::projective(&k, v);
            assert_eq!(stable_hom_dim(&m, &p).unwrap(), 0);
            assert_eq!(stable_hom_dim(&p, &m).unwrap(), 0);
        }
    }
}

#[test]
fn domdim_examples() {
    assert_eq!(domdim(&semisimple3(), 6), DomDim::Infinite);
    assert_eq!(domdim(&a2(), 6), DomDim::Finite(1));
    assert_eq!(domdim(&kx2(), 6), DomDim::Finite(2));
    assert_eq!(domdim(&a4_rad2(), 8), DomDim::Finite(3));
    assert_eq!(domdim(&loop_x2(), 6), DomDim::Infinite);
    assert_eq!(domdim(&kx2(), 2), DomDim::AtLeastCap(2));
}

#[test]
fn grade_examples() {
    let k = kx2();
    assert_eq!(grade(&Representation::projective(&k, 0), 4), Grade::Finite(0));
    assert_eq!(grade(&Representation::zero(k.clone()), 4), Grade::Infinite);
    assert_eq!(grade(&Representation::simple(&k, 0), 4), Grade::Finite(2));
    assert_eq!(grade(&Representation::simple(&k, 0), 1), Grade::AboveCap(1));
}

#[test]
fn projectivity_tests_agree() {
    for alg in [a2(), kx2(), a4_rad2(), loop_x2()] {
        for seed in 0..15 {
            let m = random_module(&alg, seed, 3);
            assert_eq!(m.is_projective(), is_projective_by_ext(&m));
            assert_eq!(m.is_injective(), is_injective_by_ext(&m));
        }
    }
}
