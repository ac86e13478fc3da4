use std::fmt;

use super::Representation;
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Scalar};

/// A morphism of representations, one block `dims_src[v] x dims_tgt[v]` per
/// vertex.
#[derive(Clone, PartialEq)]
pub struct ModuleMap {
    source: Representation,
    target: Representation,
    blocks: Vec<ExactMatrix>,
}

impl ModuleMap {
    /// Checks shapes and that the blocks commute with every arrow.
    pub fn new(source: Representation, target: Representation, blocks: Vec<ExactMatrix>) -> Result<Self> {
        source.algebra().ensure_same(target.algebra())?;
        let n = source.algebra().num_vertices();
        if blocks.len() != n {
            return Err(Error::InvalidMap(format!("{} blocks for {n} vertices", blocks.len())));
        }
        for (v, b) in blocks.iter().enumerate() {
            if b.shape() != (source.dim_at(v), target.dim_at(v)) {
                return Err(Error::InvalidMap(format!("block {v} has shape {:?}", b.shape())));
            }
        }
        let map = Self::from_parts(source, target, blocks);
        if let Some(a) = map.first_noncommuting_arrow() {
            let label = &map.source.algebra().quiver().arrows()[a].label;
            return Err(Error::InvalidMap(format!("does not commute with `{label}`")));
        }
        Ok(map)
    }

    pub(crate) fn from_parts(source: Representation, target: Representation, blocks: Vec<ExactMatrix>) -> Self {
        ModuleMap { source, target, blocks }
    }

    fn first_noncommuting_arrow(&self) -> Option<usize> {
        self.source.algebra().quiver().arrows().iter().enumerate().find_map(|(k, a)| {
            let lhs = self.blocks[a.source].mul(self.target.map(k));
            let rhs = self.source.map(k).mul(&self.blocks[a.target]);
            (lhs != rhs).then_some(k)
        })
    }

    pub fn is_homomorphism(&self) -> bool {
        self.first_noncommuting_arrow().is_none()
    }

    pub fn zero(source: Representation, target: Representation) -> Self {
        let field = source.field();
        let blocks = (0..source.dims().len())
            .map(|v| ExactMatrix::zeros(field, source.dim_at(v), target.dim_at(v)))
            .collect();
        Self::from_parts(source, target, blocks)
    }

    pub fn identity(m: &Representation) -> Self {
        let blocks = m.dims().iter().map(|&d| ExactMatrix::identity(m.field(), d)).collect();
        Self::from_parts(m.clone(), m.clone(), blocks)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn block(&self, v: usize) -> &ExactMatrix {
        &self.blocks[v]
    }

    pub fn blocks(&self) -> &[ExactMatrix] {
        &self.blocks
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &ModuleMap) -> Result<ModuleMap> {
        if self.target.dims() != next.source.dims() {
            return Err(Error::InvalidMap("composition of non-composable maps".into()));
        }
        self.source.algebra().ensure_same(next.source.algebra())?;
        let blocks = self.blocks.iter().zip(&next.blocks).map(|(a, b)| a.mul(b)).collect();
        Ok(Self::from_parts(self.source.clone(), next.target.clone(), blocks))
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.source.dims() != other.source.dims() || self.target.dims() != other.target.dims() {
            return Err(Error::InvalidMap("sum of maps with different endpoints".into()));
        }
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Ok(Self::from_parts(self.source.clone(), self.target.clone(), blocks))
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        let blocks = self.blocks.iter().map(|b| b.scale(c)).collect();
        Self::from_parts(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(ExactMatrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(ExactMatrix::rank).sum()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.blocks.iter().map(ExactMatrix::rank).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(ExactMatrix::is_invertible)
    }

    /// All block entries, vertex by vertex, row-major.
    pub fn to_vector(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    pub(crate) fn from_vector(source: &Representation, target: &Representation, v: &[Scalar]) -> ModuleMap {
        let field = source.field();
        let mut at = 0;
        let blocks = (0..source.dims().len())
            .map(|k| {
                let (r, c) = (source.dim_at(k), target.dim_at(k));
                let b = ExactMatrix::from_entries(field, r, c, v[at..at + r * c].to_vec()).expect("block size");
                at += r * c;
                b
            })
            .collect();
        Self::from_parts(source.clone(), target.clone(), blocks)
    }

    /// `ker f` with its inclusion into the source.
    pub fn kernel(&self) -> (Representation, ModuleMap) {
        let spaces = self.blocks.iter().map(ExactMatrix::kernel_basis).collect();
        super::structure::submodule(&self.source, spaces).expect("kernels are submodules")
    }

    /// `im f` with its inclusion into the target.
    pub fn image(&self) -> (Representation, ModuleMap) {
        let spaces = self.blocks.iter().map(ExactMatrix::row_space).collect();
        super::structure::submodule(&self.target, spaces).expect("images are submodules")
    }

    /// `coker f` with the projection from the target.
    pub fn cokernel(&self) -> (Representation, ModuleMap) {
        let spaces = self.blocks.iter().map(ExactMatrix::row_space).collect();
        super::structure::quotient(&self.target, spaces).expect("images are submodules")
    }

    /// `D f: D N -> D M` over the opposite algebra.
    pub fn k_dual(&self) -> ModuleMap {
        let blocks = self.blocks.iter().map(ExactMatrix::transpose).collect();
        Self::from_parts(self.target.k_dual(), self.source.k_dual(), blocks)
    }
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleMap")
            .field("source", &self.source.dims())
            .field("target", &self.target.dims())
            .field("blocks", &self.blocks)
            .finish()
    }
}
