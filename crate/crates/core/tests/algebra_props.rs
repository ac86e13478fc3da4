mod common;

use nabelian::algebra::{Element, PathPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn vertex_blocks_partition_the_basis() {
    for alg in common::algebras() {
        let n = alg.num_vertices();
        let total: usize = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| alg.between(i, j).len()).sum();
        assert_eq!(total, alg.dim());
        assert_eq!(alg.opposite().dim(), alg.dim());
        assert!(alg.opposite().opposite().same_as(&alg));
    }
}

#[test]
fn multiplication_is_associative_on_basis_triples() {
    for alg in common::algebras() {
        let d = alg.dim();
        let f = alg.field();
        for i in 0..d {
            for j in 0..d {
                let ij = alg.mul(&Element::basis(i, f.one()), &Element::basis(j, f.one()));
                for k in 0..d {
                    let ek = Element::basis(k, f.one());
                    let left = alg.mul(&ij, &ek);
                    let jk = alg.mul(&Element::basis(j, f.one()), &ek);
                    let right = alg.mul(&Element::basis(i, f.one()), &jk);
                    assert_eq!(left, right, "({i},{j},{k})");
                }
            }
        }
    }
}

#[test]
fn one_is_a_unit() {
    for alg in common::algebras() {
        let one = alg.one();
        for i in 0..alg.dim() {
            let x = Element::basis(i, alg.field().one());
            assert_eq!(alg.mul(&one, &x), x);
            assert_eq!(alg.mul(&x, &one), x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_confluent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for alg in common::algebras() {
            let f = alg.field();
            let basis = alg.basis();
            for x in basis.iter().filter(|p| !p.is_trivial()) {
                for y in basis.iter().filter(|p| !p.is_trivial() && p.source == x.target) {
                    let word: Vec<usize> = x.arrows.iter().chain(&y.arrows).copied().collect();
                    let p = PathPoly::word(word, f.one());
                    let fixed = alg.groebner().reduce(p.clone());
                    let random = alg.groebner().reduce_with(p, &mut |k| rng.gen_range(0..k));
                    prop_assert_eq!(fixed, random);
                }
            }
        }
    }
}
