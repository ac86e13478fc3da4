use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ModuleMap, Representation};
use crate::error::Result;
use crate::linalg::{ExactMatrix, FieldSpec, Scalar};

/// `Hom(M, N)` as the rows of `basis`, in the coordinates of
/// `ModuleMap::to_vector`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Representation,
    pub target: Representation,
    pub basis: ExactMatrix,
}

impl HomSpace {
    pub fn new(m: &Representation, n: &Representation) -> Result<HomSpace> {
        m.algebra().ensure_same(n.algebra())?;
        let field = m.field();
        let nv = m.dims().len();
        let mut offsets = Vec::with_capacity(nv);
        let mut vars = 0;
        for v in 0..nv {
            offsets.push(vars);
            vars += m.dim_at(v) * n.dim_at(v);
        }
        let mut columns: Vec<Vec<(usize, Scalar)>> = Vec::new();
        for (k, a) in m.algebra().quiver().arrows().iter().enumerate() {
            let (i, j) = (a.source, a.target);
            let (ma, na) = (m.map(k), n.map(k));
            for r in 0..m.dim_at(i) {
                for c in 0..n.dim_at(j) {
                    let mut col = Vec::new();
                    for kk in 0..n.dim_at(i) {
                        let x = na.get(kk, c);
                        if !x.is_zero() {
                            col.push((offsets[i] + r * n.dim_at(i) + kk, x.clone()));
                        }
                    }
                    for kk in 0..m.dim_at(j) {
                        let x = ma.get(r, kk);
                        if !x.is_zero() {
                            col.push((offsets[j] + kk * n.dim_at(j) + c, -x));
                        }
                    }
                    if !col.is_empty() {
                        columns.push(col);
                    }
                }
            }
        }
        let mut system = ExactMatrix::zeros(field, vars, columns.len());
        for (c, col) in columns.into_iter().enumerate() {
            for (r, x) in col {
                let v = system.get(r, c) + &x;
                system.set(r, c, v);
            }
        }
        Ok(HomSpace { source: m.clone(), target: n.clone(), basis: system.kernel_basis() })
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn map(&self, k: usize) -> ModuleMap {
        ModuleMap::from_vector(&self.source, &self.target, self.basis.row(k))
    }

    pub fn maps(&self) -> Vec<ModuleMap> {
        (0..self.dim()).map(|k| self.map(k)).collect()
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> ModuleMap {
        let field = self.source.field();
        let mut v = vec![field.zero(); self.basis.cols()];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(self.basis.row(k)) {
                *x = &*x + &(c * b);
            }
        }
        ModuleMap::from_vector(&self.source, &self.target, &v)
    }

    /// Coordinates of `f` in this basis, `None` if `f` is not in the span.
    pub fn coordinates(&self, f: &ModuleMap) -> Option<Vec<Scalar>> {
        let field = self.source.field();
        let row = ExactMatrix::from_rows(field, self.basis.cols(), vec![f.to_vector()]).ok()?;
        let x = self.basis.solve(&row).ok()??;
        Some(x.row(0).to_vec())
    }
}

/// A basis of `Hom(M, N)`, deterministic (RREF order).
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<ModuleMap>> {
    Ok(HomSpace::new(m, n)?.maps())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(HomSpace::new(m, n)?.dim())
}

fn random_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        FieldSpec::Rationals => field.from_i64(rng.gen_range(-10..=10)),
        FieldSpec::PrimeField(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

/// Searches `Hom(M, N)` for a map with all blocks invertible: random
/// combinations over large fields, exhaustive search over small ones.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    m.algebra().ensure_same(n.algebra())?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let hom = HomSpace::new(m, n)?;
    let d = hom.dim();
    if d == 0 {
        return Ok(false);
    }
    let field = m.field();
    if let Some(q) = field.order().filter(|&q| q < 5) {
        if (q as f64).powi(d as i32) <= 4096.0 {
            let mut coeffs = vec![0u64; d];
            loop {
                let scalars: Vec<Scalar> = coeffs.iter().map(|&c| field.from_i64(c as i64)).collect();
                if hom.combination(&scalars).is_isomorphism() {
                    return Ok(true);
                }
                let mut k = 0;
                while k < d && coeffs[k] == q - 1 {
                    coeffs[k] = 0;
                    k += 1;
                }
                if k == d {
                    return Ok(false);
                }
                coeffs[k] += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    let tries = if field.order().is_some_and(|q| q < 5) { 256 } else { 32 };
    for _ in 0..tries {
        let scalars: Vec<Scalar> = (0..d).map(|_| random_scalar(field, &mut rng)).collect();
        if hom.combination(&scalars).is_isomorphism() {
            return Ok(true);
        }
    }
    Ok(false)
}
