use crate::algebra::ProjMatrix;
use crate::error::{Error, Result};
use crate::repr::{projective_cover, ModuleMap, Representation};

/// `... -> P_2 -> P_1 -> P_0 -> M -> 0`, with `terms[k]` the summands of
/// `P_k` and `differentials[k - 1] = d_k: P_k -> P_{k-1}`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Representation,
    pub terms: Vec<Vec<usize>>,
    pub differentials: Vec<ProjMatrix>,
    pub augmentation: ModuleMap,
    pub minimal: bool,
    pub complete: bool,
}

/// Iterated projective covers of syzygies, up to `P_length`. Stops early
/// once a syzygy vanishes.
pub fn minimal_resolution(m: &Representation, length: usize) -> Resolution {
    let alg = m.algebra().clone();
    let cover = projective_cover(m);
    let mut terms = vec![cover.vertices.clone()];
    let mut differentials = Vec::new();
    let (mut syzygy, mut inclusion) = cover.epi.kernel();
    for _ in 0..length {
        if syzygy.is_zero() {
            break;
        }
        let c = projective_cover(&syzygy);
        let into = c.epi.compose(&inclusion).expect("composable");
        let d = ProjMatrix::from_module_map(&into, &c.vertices, terms.last().expect("nonempty"))
            .expect("maps between projective sums");
        debug_assert!(d.algebra().same_as(&alg));
        let (k, i) = c.epi.kernel();
        syzygy = k;
        inclusion = i;
        terms.push(c.vertices);
        differentials.push(d);
    }
    Resolution {
        module: m.clone(),
        terms,
        differentials,
        augmentation: cover.epi,
        minimal: true,
        complete: syzygy.is_zero(),
    }
}

impl Resolution {
    /// Index of the last computed term.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// Checks exactness degree by degree by rank bookkeeping, vanishing of
    /// consecutive composites, and (if claimed) minimality.
    pub fn verify(&self) -> Result<()> {
        let maps: Vec<ModuleMap> = self.differentials.iter().map(ProjMatrix::to_module_map).collect();
        let fail = |msg: String| Err(Error::Precondition(msg));
        if !self.augmentation.is_surjective() {
            return fail("augmentation is not surjective".into());
        }
        let p0 = self.augmentation.source();
        for v in 0..p0.dims().len() {
            let incoming = maps.first().map_or(0, |d| d.block(v).rank());
            if incoming + self.augmentation.block(v).rank() != p0.dim_at(v) {
                return fail(format!("not exact at P_0, vertex {v}"));
            }
        }
        if let Some(d1) = maps.first() {
            if !d1.compose(&self.augmentation)?.is_zero() {
                return fail("d_1 followed by the augmentation is nonzero".into());
            }
        }
        for k in 1..maps.len() {
            if !maps[k].compose(&maps[k - 1])?.is_zero() {
                return fail(format!("d_{} d_{} is nonzero", k + 1, k));
            }
            let pk = maps[k - 1].source();
            for v in 0..pk.dims().len() {
                if maps[k].block(v).rank() + maps[k - 1].block(v).rank() != pk.dim_at(v) {
                    return fail(format!("not exact at P_{k}, vertex {v}"));
                }
            }
        }
        if self.complete {
            let injective = match maps.last() {
                Some(d) => d.is_injective(),
                None => self.augmentation.is_injective(),
            };
            if !injective {
                return fail("claimed complete but the last map is not injective".into());
            }
        }
        if self.minimal && !self.differentials.iter().all(ProjMatrix::is_radical) {
            return fail("claimed minimal but a differential has a unit entry".into());
        }
        Ok(())
    }
}
