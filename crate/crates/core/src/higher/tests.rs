use super::*;
use crate::algebra::ProjMatrix;
use crate::fixtures::*;
use crate::homological::{ext_table, grade, pdim, Dimension, DomDim, Grade};
use crate::repr::{is_isomorphic, random_module, Representation};

#[test]
fn dual_of_projective_is_projective() {
    for alg in [a2(), kx2(), a4_rad2()] {
        let op = alg.opposite();
        for v in 0..alg.num_vertices() {
            let d = star_dual(&Representation::projective(&alg, v)).module;
            assert!(is_isomorphic(&d, &Representation::projective(&op, v)).unwrap());
        }
    }
}

#[test]
fn dual_of_s1_over_kx2_vanishes() {
    let k = kx2();
    assert!(star_dual(&Representation::simple(&k, 0)).module.is_zero());
}

#[test]
fn dual_is_additive() {
    let k = kx2();
    for seed in 0..10 {
        let m = random_module(&k, seed, 3);
        let n = random_module(&k, seed + 100, 3);
        let sum = m.direct_sum(&n).unwrap();
        assert_eq!(
            star_dual(&sum).module.total_dim(),
            star_dual(&m).module.total_dim() + star_dual(&n).module.total_dim()
        );
    }
}

#[test]
fn transpose_of_projective_is_zero() {
    let k = kx2();
    for v in 0..2 {
        assert!(transpose(&Representation::projective(&k, v)).module.is_zero());
    }
}

#[test]
fn transpose_of_s1_over_a2() {
    let a = a2();
    let tr = transpose(&Representation::simple(&a, 0));
    assert_eq!(tr.presentation.to_string(), "P(2)->P(1): [[a]]");
    assert_eq!(tr.module.total_dim(), 1);
    assert_eq!(tr.module.dims(), &[0, 1]);
}

#[test]
fn double_transpose_has_same_ext() {
    let alg = a4_rad2();
    let reg = Representation::regular(&alg);
    for seed in 0..10 {
        let m = random_module(&alg, seed, 3);
        let trtr = transpose(&transpose(&m).module).module;
        let a = ext_table(&m, &reg, 3).unwrap();
        let b = ext_table(&trtr, &reg, 3).unwrap();
        for i in 1..=3 {
            assert_eq!(a.get(i), b.get(i), "seed {seed}, degree {i}");
        }
    }
}

#[test]
fn torsion_freeness_examples() {
    let k = kx2();
    for v in 0..2 {
        for t in 1..4 {
            assert!(is_k_torsion_free(&Representation::projective(&k, v), t));
        }
    }
    assert!(is_k_torsion_free(&Representation::simple(&k, 1), 1));
    assert!(!is_k_torsion_free(&Representation::simple(&a2(), 0), 1));
}

#[test]
fn double_dual_of_projective_is_iso() {
    let k = kx2();
    for v in 0..2 {
        let dd = double_dual_sequence(&Representation::projective(&k, v));
        dd.verify().unwrap();
        assert!(dd.eta_bijective());
        assert!(dd.eta.is_isomorphism());
    }
}

#[test]
fn double_dual_of_s1_over_kx2() {
    let k = kx2();
    let s1 = Representation::simple(&k, 0);
    let dd = double_dual_sequence(&s1);
    dd.verify().unwrap();
    assert!(dd.dual.is_zero());
    assert!(dd.double_dual.is_zero());
    assert!(is_isomorphic(&dd.e1, &s1).unwrap());
    assert!(dd.e2.is_zero());
}

#[test]
fn double_dual_euler_on_random_modules() {
    for alg in [a2(), kx2(), loop_x2(), a4_rad2()] {
        for seed in 0..25 {
            let m = random_module(&alg, seed, 3);
            let dd = double_dual_sequence(&m);
            dd.verify().unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert_eq!(is_k_torsion_free(&m, 1), dd.eta_injective());
            assert_eq!(is_k_torsion_free(&m, 2), dd.eta_bijective());
        }
    }
}

#[test]
fn spherical_examples() {
    let k = kx2();
    for v in 0..2 {
        for m in 1..4 {
            assert!(is_m_spherical(&Representation::projective(&k, v), m));
        }
    }
    assert!(is_m_spherical(&Representation::simple(&k, 1), 1));
    assert!(!is_m_spherical(&Representation::simple(&k, 0), 1));
    assert!(is_m_spherical(&Representation::simple(&k, 0), 2));
    for seed in 0..10 {
        let m = random_module(&k, seed, 3);
        assert_eq!(is_m_spherical(&m, 1), pdim(&m, 1).at_most(1));
    }
}

#[test]
fn n_cokernel_of_identity_is_zero() {
    let k = kx2();
    let id = ProjMatrix::identity(k.clone(), vec![0, 1]);
    let seq = n_cokernel(&id, 2).unwrap();
    assert_eq!(seq.len(), 2);
    assert!(seq.objects()[1..].iter().all(Vec::is_empty));
}

#[test]
fn n_cokernel_of_zero_map() {
    let k = kx2();
    let f = ProjMatrix::zero(k.clone(), vec![], vec![0]);
    let seq = n_cokernel(&f, 2).unwrap();
    assert_eq!(seq.maps()[0], ProjMatrix::identity(k.clone(), vec![0]));
    assert!(seq.maps()[1].target().is_empty());
}

#[test]
fn one_cokernel_over_kx2() {
    let k = kx2();
    // left multiplication by b: P(1) -> P(2)
    let f = ProjMatrix::new(k.clone(), vec![0], vec![1], vec![vec![k.arrow(1)]]).unwrap();
    assert!(f.to_module_map().is_injective());
    let g = n_cokernel(&f, 1).unwrap();
    let full = g.prepend(f.clone()).unwrap();
    assert!(full.check(SequenceMode::NExact(1)).unwrap());
    assert_eq!(full.to_string(), "P(1)->P(2): [[b]] ; P(2)->P(1): [[a]]");
    assert!(!splits(&full).unwrap());
}

#[test]
fn n_kernel_is_presegment() {
    let k = kx2();
    let f = ProjMatrix::new(k.clone(), vec![1], vec![0], vec![vec![k.arrow(0)]]).unwrap();
    let seq = n_kernel(&f, 1).unwrap();
    assert!(!seq.objects()[0].is_empty());
    let mut maps = seq.maps().to_vec();
    maps.push(f);
    assert!(SequenceOfProjectives::new(maps).unwrap().check(SequenceMode::PreSegment).unwrap());
}

#[test]
fn n_cokernel_reports_long_resolutions() {
    let l = loop_x2();
    let x = ProjMatrix::new(l.clone(), vec![0], vec![0], vec![vec![l.arrow(0)]]).unwrap();
    assert!(n_cokernel(&x, 2).is_err());
}

#[test]
fn one_segment_is_mono() {
    let k = kx2();
    let a = ProjMatrix::new(k.clone(), vec![1], vec![0], vec![vec![k.arrow(0)]]).unwrap();
    let b = ProjMatrix::new(k.clone(), vec![0], vec![1], vec![vec![k.arrow(1)]]).unwrap();
    for f in [a, b] {
        let single = SequenceOfProjectives::new(vec![f.clone()]).unwrap();
        assert_eq!(single.check(SequenceMode::Segment).unwrap(), f.to_module_map().is_injective());
    }
}

#[test]
fn non_exact_pair_fails() {
    let a = a2();
    let id = ProjMatrix::identity(a.clone(), vec![0]);
    let pair = SequenceOfProjectives::new(vec![id.clone(), id]).unwrap();
    assert!(!pair.check(SequenceMode::PreSegment).unwrap());
    assert!(!pair.check(SequenceMode::NExact(1)).unwrap());
    assert!(pair.check(SequenceMode::NExact(2)).is_err());
}

#[test]
fn non_composable_sequence_is_rejected() {
    let a = a2();
    let f = ProjMatrix::identity(a.clone(), vec![0]);
    let g = ProjMatrix::identity(a.clone(), vec![1]);
    assert!(SequenceOfProjectives::new(vec![f, g]).is_err());
}

#[test]
fn trivial_sequences_split() {
    let s = semisimple3();
    let id = ProjMatrix::identity(s.clone(), vec![0, 2]);
    let seq = SequenceOfProjectives::new(vec![
        ProjMatrix::zero(s.clone(), vec![], vec![0, 2]),
        id,
        ProjMatrix::zero(s.clone(), vec![0, 2], vec![]),
    ])
    .unwrap();
    assert!(seq.check(SequenceMode::NExact(2)).unwrap());
    assert!(splits(&seq).unwrap());
}

#[test]
fn resolution_of_s1_over_aus2_does_not_split() {
    let alg = a4_rad2();
    let s1 = Representation::simple(&alg, 0);
    assert_eq!(grade(&s1, 4), Grade::Finite(3));
    let seq = resolution_sequence(&s1, 3).unwrap();
    assert!(seq.check(SequenceMode::NExact(2)).unwrap());
    let r = splitting(&seq).unwrap();
    assert!(!r.section && !r.retraction);
}

#[test]
fn splitting_needs_exactness() {
    let a = a2();
    let id = ProjMatrix::identity(a.clone(), vec![0]);
    let seq = SequenceOfProjectives::new(vec![id.clone(), id]).unwrap();
    assert!(splitting(&seq).is_err());
}

#[test]
fn von_neumann_regularity() {
    assert!(is_von_neumann_regular(&semisimple3()));
    assert!(!is_von_neumann_regular(&a2()));
    assert!(!is_von_neumann_regular(&loop_x2()));
}

#[test]
fn n_abelian_examples() {
    for n in 1..4 {
        assert!(is_n_abelian(&semisimple3(), n).holds);
        assert!(!is_n_abelian(&loop_x2(), n).holds);
    }
    let k = kx2();
    assert!(is_n_abelian(&k, 1).holds);
    assert!(!is_n_abelian(&k, 2).holds);
    assert!(is_n_abelian(&a4_rad2(), 2).holds);
    assert!(!is_n_abelian(&a4_rad2(), 1).holds);
}

#[test]
fn detect_fixtures() {
    let v = detect_n(&semisimple3(), 11);
    assert_eq!(v.result, VerdictKind::AllN);
    assert_eq!(v.domdim, DomDim::Infinite);
    let v = detect_n(&kx2(), 11);
    assert_eq!(v.result, VerdictKind::ExactlyN(1));
    assert_eq!((v.gldim, v.domdim), (Dimension::Finite(2), DomDim::Finite(2)));
    let v = detect_n(&a2(), 11);
    assert_eq!(v.result, VerdictKind::NotNAbelianUpTo(11));
    assert_eq!((v.gldim, v.domdim), (Dimension::Finite(1), DomDim::Finite(1)));
    let v = detect_n(&loop_x2(), 11);
    assert_eq!(v.result, VerdictKind::NotNAbelianUpTo(11));
    assert_eq!(v.gldim, Dimension::AboveCap(11));
    let v = detect_n(&a4_rad2(), 11);
    assert_eq!(v.result, VerdictKind::ExactlyN(2));
    assert!(v.result.claims(2) && !v.result.claims(1));
}

#[test]
fn cross_check_semisimple_passes() {
    let s = semisimple3();
    let v = detect_n(&s, 11);
    let report = cross_check(&s, &v, 1, 7, 20);
    assert!(report.all_passed(), "{report:?}");
}

#[test]
fn cross_check_kx2_passes() {
    let k = kx2();
    let v = detect_n(&k, 11);
    let report = cross_check(&k, &v, 1, 42, 30);
    assert!(report.all_passed(), "{report:?}");
    assert!(report.get("splitting_agreement").unwrap().samples > 0);
}

#[test]
fn cross_check_a2_finds_s1() {
    let a = a2();
    let v = detect_n(&a, 11);
    let report = cross_check(&a, &v, 1, 42, 20);
    let tf = report.get("pdim_one_torsion_free").unwrap();
    assert!(!tf.passed);
    assert!(!tf.fatal);
    assert_eq!(tf.witness.as_deref(), Some("S(1)"));
    assert!(!report.fatal());
}

#[test]
fn cross_check_is_deterministic() {
    let k = kx2();
    let v = detect_n(&k, 11);
    assert_eq!(cross_check(&k, &v, 1, 9, 10), cross_check(&k, &v, 1, 9, 10));
}
