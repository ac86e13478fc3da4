use std::sync::Arc;

use super::{minimal_resolution, Dimension, DomDim, Grade, Resolution};
use crate::algebra::{Algebra, ProjMatrix};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::repr::{projective_cover, HomSpace, Representation};

pub fn pdim(m: &Representation, cap: usize) -> Dimension {
    if m.is_zero() {
        return Dimension::Finite(0);
    }
    let res = minimal_resolution(m, cap);
    if res.complete {
        Dimension::Finite(res.length())
    } else {
        Dimension::AboveCap(cap)
    }
}

/// The largest projective dimension of a simple module.
pub fn gldim(algebra: &Arc<Algebra>, cap: usize) -> Dimension {
    let mut best = 0;
    for v in 0..algebra.num_vertices() {
        match pdim(&Representation::simple(algebra, v), cap) {
            Dimension::Finite(d) => best = best.max(d),
            above => return above,
        }
    }
    Dimension::Finite(best)
}

/// Dimensions of `Ext^i(M, N)` for `i = 0..=cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub values: Vec<usize>,
}

impl ExtTable {
    pub fn get(&self, i: usize) -> usize {
        self.values.get(i).copied().unwrap_or(0)
    }

    /// `true` when `Ext^i` vanishes for every `i` in `range`.
    pub fn vanishes(&self, range: std::ops::RangeInclusive<usize>) -> bool {
        range.into_iter().all(|i| self.get(i) == 0)
    }
}

/// `Hom(P_{k-1}, N) -> Hom(P_k, N)` for `d_k: P_k -> P_{k-1}`, using
/// `Hom(P(i), N) = N_i`.
fn cochain_matrix(d: &ProjMatrix, n: &Representation) -> ExactMatrix {
    let rows: usize = d.target().iter().map(|&j| n.dim_at(j)).sum();
    let cols: usize = d.source().iter().map(|&i| n.dim_at(i)).sum();
    let mut out = ExactMatrix::zeros(n.field(), rows, cols);
    let mut r0 = 0;
    for (t, &j) in d.target().iter().enumerate() {
        let mut c0 = 0;
        for (s, &i) in d.source().iter().enumerate() {
            out.paste(r0, c0, &n.element_action(d.entry(s, t), j, i));
            c0 += n.dim_at(i);
        }
        r0 += n.dim_at(j);
    }
    out
}

pub(crate) fn ext_from_resolution(res: &Resolution, n: &Representation, cap: usize) -> ExtTable {
    let hom = |k: usize| -> usize { res.terms.get(k).map_or(0, |t| t.iter().map(|&v| n.dim_at(v)).sum()) };
    let rank = |k: usize| -> usize {
        if k == 0 {
            return 0;
        }
        res.differentials.get(k - 1).map_or(0, |d| cochain_matrix(d, n).rank())
    };
    let values = (0..=cap).map(|k| hom(k) - rank(k) - rank(k + 1)).collect();
    ExtTable { values }
}

pub fn ext_table(m: &Representation, n: &Representation, cap: usize) -> Result<ExtTable> {
    m.algebra().ensure_same(n.algebra())?;
    let res = minimal_resolution(m, cap + 1);
    Ok(ext_from_resolution(&res, n, cap))
}

/// `M ⊗_Λ N` for a right module `M` and a left module `N` given as a right
/// module over `Λ^op`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub dim: usize,
    /// `⊕_i M_i ⊗ N_i -> M ⊗_Λ N`, pairs `(r, c)` ordered vertex by vertex.
    pub projection: ExactMatrix,
}

fn ensure_opposite(m: &Representation, n: &Representation) -> Result<()> {
    if m.algebra().opposite().same_as(n.algebra()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch("the second factor must be a module over the opposite algebra".into()))
    }
}

pub fn tensor(m: &Representation, n: &Representation) -> Result<TensorProduct> {
    ensure_opposite(m, n)?;
    let alg = m.algebra();
    let field = m.field();
    let nv = alg.num_vertices();
    let mut offsets = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        offsets.push(total);
        total += m.dim_at(v) * n.dim_at(v);
    }
    let idx = |v: usize, r: usize, c: usize| offsets[v] + r * n.dim_at(v) + c;
    let mut relations = Vec::new();
    for (k, a) in alg.quiver().arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        // (m a) ⊗ n - m ⊗ (a n), with a n given by the opposite arrow j -> i
        for r in 0..m.dim_at(i) {
            for c in 0..n.dim_at(j) {
                let mut row = vec![field.zero(); total];
                for kk in 0..m.dim_at(j) {
                    row[idx(j, kk, c)] = m.map(k).get(r, kk).clone();
                }
                for l in 0..n.dim_at(i) {
                    let x = &row[idx(i, r, l)] - n.map(k).get(c, l);
                    row[idx(i, r, l)] = x;
                }
                relations.push(row);
            }
        }
    }
    let rel = ExactMatrix::from_rows(field, total, relations)?;
    let r = rel.rref();
    let basis = r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>());
    let free: Vec<usize> = (0..total).filter(|c| !r.pivots.contains(c)).collect();
    let change = basis
        .vstack(&ExactMatrix::identity(field, total).select_rows(&free))
        .inverse()
        .expect("complement of an echelon basis");
    let projection = change.select_cols(&(r.rank..total).collect::<Vec<_>>());
    Ok(TensorProduct { dim: total - r.rank, projection })
}

/// `P_k ⊗ N -> P_{k-1} ⊗ N`, using `P(i) ⊗ N = N_i`.
fn chain_matrix(d: &ProjMatrix, n: &Representation) -> ExactMatrix {
    let alg = d.algebra();
    let rows: usize = d.source().iter().map(|&i| n.dim_at(i)).sum();
    let cols: usize = d.target().iter().map(|&j| n.dim_at(j)).sum();
    let mut out = ExactMatrix::zeros(n.field(), rows, cols);
    let mut r0 = 0;
    for (s, &i) in d.source().iter().enumerate() {
        let mut c0 = 0;
        for (t, &j) in d.target().iter().enumerate() {
            let rev = alg.reverse_element(d.entry(s, t), n.algebra());
            out.paste(r0, c0, &n.element_action(&rev, i, j));
            c0 += n.dim_at(j);
        }
        r0 += n.dim_at(i);
    }
    out
}

/// `Tor_i(M, N)` for `i = 0..=cap` from a given resolution of `M`.
pub fn tor_table_with(res: &Resolution, n: &Representation, cap: usize) -> Result<Vec<usize>> {
    ensure_opposite(&res.module, n)?;
    let chain = |k: usize| -> usize { res.terms.get(k).map_or(0, |t| t.iter().map(|&v| n.dim_at(v)).sum()) };
    let rank = |k: usize| -> usize {
        if k == 0 {
            return 0;
        }
        res.differentials.get(k - 1).map_or(0, |d| chain_matrix(d, n).rank())
    };
    Ok((0..=cap).map(|k| chain(k) - rank(k) - rank(k + 1)).collect())
}

/// `Tor_i(M, N)` by tensoring a minimal resolution of `M` with `N`.
pub fn tor_table(m: &Representation, n: &Representation, cap: usize) -> Result<Vec<usize>> {
    ensure_opposite(m, n)?;
    tor_table_with(&minimal_resolution(m, cap + 1), n, cap)
}

/// `dim Hom(M, N)` minus the maps factoring through projectives, i.e.
/// through the projective cover of `N`.
pub fn stable_hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    m.algebra().ensure_same(n.algebra())?;
    let hom = HomSpace::new(m, n)?;
    let cover = projective_cover(n);
    let through = HomSpace::new(m, &cover.module)?;
    let rows: Vec<_> = through
        .maps()
        .iter()
        .map(|f| f.compose(&cover.epi).map(|g| g.to_vector()))
        .collect::<Result<_>>()?;
    let cols = hom.basis.cols();
    let rank = ExactMatrix::from_rows(m.field(), cols, rows)?.rank();
    Ok(hom.dim() - rank)
}

/// Leading projective terms of the minimal injective coresolution of `Λ_Λ`,
/// obtained by dualising a minimal projective resolution of `D(Λ_Λ)`.
pub fn domdim(algebra: &Arc<Algebra>, cap: usize) -> DomDim {
    let proj_inj: Vec<bool> = (0..algebra.num_vertices())
        .map(|v| Representation::injective(algebra, v).is_projective())
        .collect();
    let dual = Representation::regular(algebra).k_dual();
    let res = minimal_resolution(&dual, cap.saturating_sub(1));
    for (k, term) in res.terms.iter().enumerate().take(cap) {
        if !term.iter().all(|&v| proj_inj[v]) {
            return DomDim::Finite(k);
        }
    }
    if res.complete && res.terms.len() <= cap {
        DomDim::Infinite
    } else {
        DomDim::AtLeastCap(cap)
    }
}

/// Least `i <= cap` with `Ext^i(M, Λ) != 0`.
pub fn grade(m: &Representation, cap: usize) -> Grade {
    if m.is_zero() {
        return Grade::Infinite;
    }
    let table = ext_table(m, &Representation::regular(m.algebra()), cap).expect("same algebra");
    match table.values.iter().position(|&d| d > 0) {
        Some(i) => Grade::Finite(i),
        None => Grade::AboveCap(cap),
    }
}

/// `Ext^1(M, S) = 0` for every simple `S`.
pub fn is_projective_by_ext(m: &Representation) -> bool {
    let alg = m.algebra();
    let res = minimal_resolution(m, 2);
    (0..alg.num_vertices()).all(|v| ext_from_resolution(&res, &Representation::simple(alg, v), 1).get(1) == 0)
}

/// `Ext^1(S, M) = 0` for every simple `S`.
pub fn is_injective_by_ext(m: &Representation) -> bool {
    let alg = m.algebra();
    (0..alg.num_vertices()).all(|v| {
        let res = minimal_resolution(&Representation::simple(alg, v), 2);
        ext_from_resolution(&res, m, 1).get(1) == 0
    })
}
