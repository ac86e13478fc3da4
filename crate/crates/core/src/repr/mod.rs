//! Finite-dimensional right modules as quiver representations.
//!
//! An arrow `a: i -> j` acts by a `dims[i] x dims[j]` matrix on row vectors,
//! and a path `a*b` acts by the product `M_a * M_b`.

mod hom;
mod map;
pub(crate) mod random;
mod structure;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use hom::{hom_basis, hom_dim, is_isomorphic, HomSpace};
pub use map::ModuleMap;
pub use random::{random_injective_projmatrix, random_module, random_projmatrix};
pub use structure::{injective_envelope, projective_cover, socle, top_radical, Cover, Envelope, TopRadical};

use crate::algebra::{Algebra, Element, ProjMatrix};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, FieldSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Simple,
    Projective,
    Injective,
}

#[derive(Clone)]
pub struct Representation {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<ExactMatrix>,
    actions: OnceLock<Vec<ExactMatrix>>,
}

impl Representation {
    /// Checks shapes and that every relation acts as zero.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<ExactMatrix>) -> Result<Self> {
        if dims.len() != algebra.num_vertices() {
            return Err(Error::InvalidModule(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                algebra.num_vertices()
            )));
        }
        if maps.len() != algebra.num_arrows() {
            return Err(Error::InvalidModule(format!("{} maps for {} arrows", maps.len(), algebra.num_arrows())));
        }
        for (a, m) in algebra.quiver().arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.source], dims[a.target]) {
                return Err(Error::InvalidModule(format!(
                    "map for `{}` is {}x{}, expected {}x{}",
                    a.label,
                    m.rows(),
                    m.cols(),
                    dims[a.source],
                    dims[a.target]
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::InvalidModule(format!("map for `{}` is over another field", a.label)));
            }
        }
        let m = Self::from_parts(algebra, dims, maps);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_parts(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<ExactMatrix>) -> Self {
        Representation { algebra, dims, maps, actions: OnceLock::new() }
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let field = algebra.field();
        let maps = vec![ExactMatrix::zeros(field, 0, 0); algebra.num_arrows()];
        Self::from_parts(algebra.clone(), vec![0; algebra.num_vertices()], maps)
    }

    /// Reports the first relation that does not act as zero.
    pub fn validate(&self) -> Result<()> {
        let alg = &self.algebra;
        for (k, rel) in alg.relations().relations().iter().enumerate() {
            let (i, j) = alg.quiver().endpoints(&rel.terms[0].1).expect("validated relation");
            let mut acc = ExactMatrix::zeros(alg.field(), self.dims[i], self.dims[j]);
            for (c, word) in &rel.terms {
                let mut m = ExactMatrix::identity(alg.field(), self.dims[i]);
                for &a in word {
                    m = m.mul(&self.maps[a]);
                }
                acc = acc.add(&m.scale(c));
            }
            if !acc.is_zero() {
                let text: Vec<String> = rel
                    .terms
                    .iter()
                    .map(|(c, w)| {
                        let path = crate::algebra::Path { source: i, target: j, arrows: w.clone() };
                        format!("{c}*{}", path.label(alg.quiver()))
                    })
                    .collect();
                return Err(Error::InvalidModule(format!("relation {k} ({}) does not vanish", text.join(" + "))));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &ExactMatrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[ExactMatrix] {
        &self.maps
    }

    /// Action of the basis path with index `k`, a `dims[source] x dims[target]` matrix.
    pub fn basis_action(&self, k: usize) -> &ExactMatrix {
        &self.actions.get_or_init(|| {
            let alg = &self.algebra;
            let mut out: Vec<ExactMatrix> = Vec::with_capacity(alg.dim());
            for p in alg.basis() {
                let m = match p.arrows.split_last() {
                    None => ExactMatrix::identity(alg.field(), self.dims[p.source]),
                    Some((&last, init)) => {
                        let prefix = if init.is_empty() {
                            ExactMatrix::identity(alg.field(), self.dims[p.source])
                        } else {
                            // prefixes of irreducible paths are irreducible and shorter
                            let k = alg.basis_index(p.source, init).expect("prefix of a basis path");
                            out[k].clone()
                        };
                        prefix.mul(&self.maps[last])
                    }
                };
                out.push(m);
            }
            out
        })[k]
    }

    /// Action of `x ∈ e_i Λ e_j` as a map `M_i -> M_j`.
    pub fn element_action(&self, x: &Element, i: usize, j: usize) -> ExactMatrix {
        let mut acc = ExactMatrix::zeros(self.field(), self.dims[i], self.dims[j]);
        for (k, c) in x.terms() {
            let p = self.algebra.path(*k);
            debug_assert!(p.source == i && p.target == j, "element outside e_i Λ e_j");
            acc = acc.add(&self.basis_action(*k).scale(c));
        }
        acc
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.algebra.ensure_same(&other.algebra)?;
        let field = self.field();
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let mut m = ExactMatrix::zeros(field, dims[a.source], dims[a.target]);
                m.paste(0, 0, &self.maps[k]);
                m.paste(self.dims[a.source], self.dims[a.target], &other.maps[k]);
                m
            })
            .collect();
        Ok(Self::from_parts(self.algebra.clone(), dims, maps))
    }

    pub fn direct_sum_all(algebra: &Arc<Algebra>, parts: &[Representation]) -> Result<Representation> {
        let mut acc = Representation::zero(algebra.clone());
        for p in parts {
            acc = acc.direct_sum(p)?;
        }
        Ok(acc)
    }

    /// `D M = Hom_k(M, k)` over the opposite algebra: arrow maps transposed.
    pub fn k_dual(&self) -> Representation {
        let op = self.algebra.opposite();
        let maps = self.maps.iter().map(ExactMatrix::transpose).collect();
        Self::from_parts(op, self.dims.clone(), maps)
    }

    pub fn simple(algebra: &Arc<Algebra>, v: usize) -> Representation {
        let mut dims = vec![0; algebra.num_vertices()];
        dims[v] = 1;
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| ExactMatrix::zeros(algebra.field(), dims[a.source], dims[a.target]))
            .collect();
        Self::from_parts(algebra.clone(), dims, maps)
    }

    /// `P(v) = e_v Λ`: paths from `v`, arrows acting by right concatenation.
    pub fn projective(algebra: &Arc<Algebra>, v: usize) -> Representation {
        let field = algebra.field();
        let dims: Vec<usize> = (0..algebra.num_vertices()).map(|w| algebra.between(v, w).len()).collect();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let rows = algebra
                    .between(v, a.source)
                    .iter()
                    .map(|&p| {
                        let img = algebra.mul(&Element::basis(p, field.one()), &algebra.arrow(k));
                        coordinates(algebra, &img, v, a.target)
                    })
                    .collect();
                ExactMatrix::from_rows(field, dims[a.target], rows).expect("path coordinates")
            })
            .collect();
        Self::from_parts(algebra.clone(), dims, maps)
    }

    /// `I(v) = D(Λ e_v)`, the dual of the opposite projective.
    pub fn injective(algebra: &Arc<Algebra>, v: usize) -> Representation {
        Representation::projective(&algebra.opposite(), v).k_dual()
    }

    pub fn standard(algebra: &Arc<Algebra>, kind: StandardKind, v: usize) -> Result<Representation> {
        if v >= algebra.num_vertices() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(match kind {
            StandardKind::Simple => Self::simple(algebra, v),
            StandardKind::Projective => Self::projective(algebra, v),
            StandardKind::Injective => Self::injective(algebra, v),
        })
    }

    /// `⊕_s P(vertices[s])`, the module underlying a `ProjMatrix` endpoint.
    pub fn projective_sum(algebra: &Arc<Algebra>, vertices: &[usize]) -> Representation {
        let parts: Vec<Representation> = vertices.iter().map(|&v| Self::projective(algebra, v)).collect();
        Self::direct_sum_all(algebra, &parts).expect("same algebra")
    }

    /// The right regular module `Λ_Λ`.
    pub fn regular(algebra: &Arc<Algebra>) -> Representation {
        let all: Vec<usize> = (0..algebra.num_vertices()).collect();
        Self::projective_sum(algebra, &all)
    }
}

/// Coordinates of `x ∈ e_i Λ e_j` in the basis `between(i, j)`.
pub(crate) fn coordinates(algebra: &Algebra, x: &Element, i: usize, j: usize) -> Vec<crate::linalg::Scalar> {
    algebra
        .between(i, j)
        .iter()
        .map(|&k| x.coefficient(k).cloned().unwrap_or_else(|| algebra.field().zero()))
        .collect()
}

/// Row offsets of each summand of `⊕_s P(vertices[s])` at vertex `w`.
pub(crate) fn summand_offsets(algebra: &Algebra, vertices: &[usize], w: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(vertices.len() + 1);
    let mut acc = 0;
    for &v in vertices {
        out.push(acc);
        acc += algebra.between(v, w).len();
    }
    out.push(acc);
    out
}

impl ProjMatrix {
    /// The map of right modules `⊕ P(source) -> ⊕ P(target)`.
    pub fn to_module_map(&self) -> ModuleMap {
        let alg = self.algebra();
        let field = alg.field();
        let source = Representation::projective_sum(alg, self.source());
        let target = Representation::projective_sum(alg, self.target());
        let blocks = (0..alg.num_vertices())
            .map(|w| {
                let toff = summand_offsets(alg, self.target(), w);
                let mut block = ExactMatrix::zeros(field, source.dim_at(w), target.dim_at(w));
                let mut row = 0;
                for (s, &i) in self.source().iter().enumerate() {
                    for &p in alg.between(i, w) {
                        let path = Element::basis(p, field.one());
                        for (t, &j) in self.target().iter().enumerate() {
                            let img = alg.mul(self.entry(s, t), &path);
                            for (c, v) in coordinates(alg, &img, j, w).into_iter().enumerate() {
                                block.set(row, toff[t] + c, v);
                            }
                        }
                        row += 1;
                    }
                }
                block
            })
            .collect();
        ModuleMap::from_parts(source, target, blocks)
    }

    /// Reads off the matrix of a module map between projective sums, given
    /// the summand decompositions of its endpoints.
    pub fn from_module_map(map: &ModuleMap, source: &[usize], target: &[usize]) -> Result<ProjMatrix> {
        let alg = map.source().algebra().clone();
        let n = alg.num_vertices();
        if source.iter().chain(target).any(|&v| v >= n) {
            return Err(Error::InvalidMap("vertex out of range".into()));
        }
        for w in 0..n {
            if summand_offsets(&alg, source, w)[source.len()] != map.source().dim_at(w)
                || summand_offsets(&alg, target, w)[target.len()] != map.target().dim_at(w)
            {
                return Err(Error::InvalidMap("endpoints are not the given projective sums".into()));
            }
        }
        let mut entries = Vec::with_capacity(source.len());
        for (s, &i) in source.iter().enumerate() {
            let soff = summand_offsets(&alg, source, i);
            let pos = alg.between(i, i).iter().position(|&k| k == i).expect("idempotent is a basis path");
            let row = map.block(i).row(soff[s] + pos);
            let toff = summand_offsets(&alg, target, i);
            let mut r = Vec::with_capacity(target.len());
            for (t, &j) in target.iter().enumerate() {
                let terms = alg.between(j, i).iter().enumerate().map(|(c, &k)| (k, row[toff[t] + c].clone()));
                r.push(Element::from_terms(terms));
            }
            entries.push(r);
        }
        ProjMatrix::new(alg, source.to_vec(), target.to_vec(), entries)
    }
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_as(&other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows = self.algebra.quiver().arrows();
        let mut d = f.debug_struct("Representation");
        d.field("dims", &self.dims);
        for (a, m) in arrows.iter().zip(&self.maps) {
            d.field(&a.label, m);
        }
        d.finish()
    }
}
