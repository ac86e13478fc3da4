use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Representation;
use crate::algebra::{Algebra, Element, ProjMatrix};

const COEFFS: [i64; 6] = [0, 0, 1, 1, -1, 2];

fn random_vertices(algebra: &Algebra, rng: &mut ChaCha8Rng, count: usize) -> Vec<usize> {
    let n = algebra.num_vertices();
    let mut v: Vec<usize> = (0..count).map(|_| rng.gen_range(0..n)).collect();
    v.sort_unstable();
    v
}

/// A random map between random sums of at most `max_summands`
/// indecomposable projectives, with small integer coefficients.
pub fn random_projmatrix(algebra: &Arc<Algebra>, rng: &mut ChaCha8Rng, max_summands: usize) -> ProjMatrix {
    let max_summands = max_summands.max(1);
    let src_count = rng.gen_range(0..=max_summands);
    let tgt_count = rng.gen_range(1..=max_summands);
    let source = random_vertices(algebra, rng, src_count);
    let target = random_vertices(algebra, rng, tgt_count);
    random_projmatrix_between(algebra, rng, source, target)
}

pub(crate) fn random_projmatrix_between(
    algebra: &Arc<Algebra>,
    rng: &mut ChaCha8Rng,
    source: Vec<usize>,
    target: Vec<usize>,
) -> ProjMatrix {
    let field = algebra.field();
    let entries = source
        .iter()
        .map(|&i| {
            target
                .iter()
                .map(|&j| {
                    Element::from_terms(
                        algebra
                            .between(j, i)
                            .iter()
                            .map(|&k| (k, field.from_i64(*COEFFS.choose(rng).expect("nonempty")))),
                    )
                })
                .collect()
        })
        .collect();
    ProjMatrix::new(algebra.clone(), source, target, entries).expect("entries respect endpoints")
}

/// A random injective map of projectives; its cokernel has `pdim <= 1`.
pub fn random_injective_projmatrix(algebra: &Arc<Algebra>, rng: &mut ChaCha8Rng, max_summands: usize) -> ProjMatrix {
    for _ in 0..64 {
        let f = random_projmatrix(algebra, rng, max_summands);
        if f.to_module_map().is_injective() {
            return f;
        }
    }
    let target = random_vertices(algebra, rng, 1);
    ProjMatrix::zero(algebra.clone(), Vec::new(), target)
}

/// The cokernel of a random presentation; `max_vertex_dim` bounds the
/// number of projective summands on either side.
pub fn random_module(algebra: &Arc<Algebra>, seed: u64, max_vertex_dim: usize) -> Representation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_module_with(algebra, &mut rng, max_vertex_dim)
}

pub(crate) fn random_module_with(algebra: &Arc<Algebra>, rng: &mut ChaCha8Rng, max_vertex_dim: usize) -> Representation {
    random_projmatrix(algebra, rng, max_vertex_dim).to_module_map().cokernel().0
}
