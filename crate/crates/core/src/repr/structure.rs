use super::{summand_offsets, ModuleMap, Representation};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Scalar};

/// The submodule spanned, vertex by vertex, by the rows of `spaces`.
pub fn submodule(m: &Representation, spaces: Vec<ExactMatrix>) -> Result<(Representation, ModuleMap)> {
    let field = m.field();
    let bases: Vec<ExactMatrix> = spaces.iter().map(ExactMatrix::row_space).collect();
    let dims: Vec<usize> = bases.iter().map(ExactMatrix::rows).collect();
    let mut maps = Vec::with_capacity(m.maps().len());
    for (k, a) in m.algebra().quiver().arrows().iter().enumerate() {
        let moved = bases[a.source].mul(m.map(k));
        let induced = bases[a.target]
            .solve(&moved)?
            .ok_or_else(|| Error::InvalidModule(format!("subspaces not closed under `{}`", a.label)))?;
        maps.push(induced);
    }
    let sub = Representation::from_parts(m.algebra().clone(), dims, maps);
    debug_assert!(bases.iter().all(|b| b.field() == field));
    let inclusion = ModuleMap::from_parts(sub.clone(), m.clone(), bases);
    Ok((sub, inclusion))
}

/// `M / U` for the submodule `U` spanned by the rows of `spaces`; the
/// quotient is coordinatised by the non-pivot unit vectors.
pub fn quotient(m: &Representation, spaces: Vec<ExactMatrix>) -> Result<(Representation, ModuleMap)> {
    let field = m.field();
    let mut reps = Vec::new();
    let mut projections = Vec::new();
    for (v, space) in spaces.iter().enumerate() {
        let d = m.dim_at(v);
        let r = space.rref();
        let basis = r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>());
        let free: Vec<usize> = (0..d).filter(|c| !r.pivots.contains(c)).collect();
        let reps_v = ExactMatrix::identity(field, d).select_rows(&free);
        let change = basis.vstack(&reps_v).inverse().expect("complement of an echelon basis");
        let proj = change.select_cols(&(r.rank..d).collect::<Vec<_>>());
        reps.push(reps_v);
        projections.push(proj);
    }
    let mut maps = Vec::with_capacity(m.maps().len());
    for (k, a) in m.algebra().quiver().arrows().iter().enumerate() {
        // closure: the submodule must map into the next submodule
        let moved = spaces[a.source].mul(m.map(k)).mul(&projections[a.target]);
        if !moved.is_zero() {
            return Err(Error::InvalidModule(format!("subspaces not closed under `{}`", a.label)));
        }
        maps.push(reps[a.source].mul(m.map(k)).mul(&projections[a.target]));
    }
    let dims = reps.iter().map(ExactMatrix::rows).collect();
    let q = Representation::from_parts(m.algebra().clone(), dims, maps);
    let projection = ModuleMap::from_parts(m.clone(), q.clone(), projections);
    Ok((q, projection))
}

pub struct TopRadical {
    pub top: Representation,
    pub radical: Representation,
    pub inclusion: ModuleMap,
    pub projection: ModuleMap,
}

fn radical_spaces(m: &Representation) -> Vec<ExactMatrix> {
    let alg = m.algebra();
    (0..alg.num_vertices())
        .map(|j| {
            let mut acc = ExactMatrix::zeros(m.field(), 0, m.dim_at(j));
            for (k, a) in alg.quiver().arrows().iter().enumerate() {
                if a.target == j {
                    acc = acc.vstack(m.map(k));
                }
            }
            acc.row_space()
        })
        .collect()
}

/// `rad M` is the sum of the images of the arrows, `top M = M / rad M`.
pub fn top_radical(m: &Representation) -> TopRadical {
    let spaces = radical_spaces(m);
    let (radical, inclusion) = submodule(m, spaces.clone()).expect("radical is a submodule");
    let (top, projection) = quotient(m, spaces).expect("radical is a submodule");
    TopRadical { top, radical, inclusion, projection }
}

/// `soc M`: the vectors killed by every arrow.
pub fn socle(m: &Representation) -> (Representation, ModuleMap) {
    let alg = m.algebra();
    let spaces = (0..alg.num_vertices())
        .map(|i| {
            let mut acc = ExactMatrix::zeros(m.field(), m.dim_at(i), 0);
            for (k, a) in alg.quiver().arrows().iter().enumerate() {
                if a.source == i {
                    acc = acc.hstack(m.map(k));
                }
            }
            acc.kernel_basis()
        })
        .collect();
    submodule(m, spaces).expect("socle is a submodule")
}

/// A projective cover `⊕ P(vertices[s]) -> M`; summand `s` is generated by
/// `generators[s] ∈ M_{vertices[s]}`.
pub struct Cover {
    pub vertices: Vec<usize>,
    pub generators: Vec<Vec<Scalar>>,
    pub module: Representation,
    pub epi: ModuleMap,
}

pub fn projective_cover(m: &Representation) -> Cover {
    let alg = m.algebra();
    let field = m.field();
    let rad = radical_spaces(m);
    let mut vertices = Vec::new();
    let mut generators = Vec::new();
    for (i, space) in rad.iter().enumerate() {
        let pivots = space.rref().pivots;
        for c in (0..m.dim_at(i)).filter(|c| !pivots.contains(c)) {
            vertices.push(i);
            let mut g = vec![field.zero(); m.dim_at(i)];
            g[c] = field.one();
            generators.push(g);
        }
    }
    let module = Representation::projective_sum(alg, &vertices);
    let blocks = (0..alg.num_vertices())
        .map(|w| {
            let mut block = ExactMatrix::zeros(field, module.dim_at(w), m.dim_at(w));
            let offsets = summand_offsets(alg, &vertices, w);
            for (s, &i) in vertices.iter().enumerate() {
                let g = ExactMatrix::from_rows(field, m.dim_at(i), vec![generators[s].clone()]).expect("row");
                for (r, &p) in alg.between(i, w).iter().enumerate() {
                    block.paste(offsets[s] + r, 0, &g.mul(m.basis_action(p)));
                }
            }
            block
        })
        .collect();
    let epi = ModuleMap::from_parts(module.clone(), m.clone(), blocks);
    Cover { vertices, generators, module, epi }
}

/// An injective envelope `M -> ⊕ I(vertices[s])`, computed as
/// `D(projective_cover(D M))`.
pub struct Envelope {
    pub vertices: Vec<usize>,
    pub module: Representation,
    pub mono: ModuleMap,
}

pub fn injective_envelope(m: &Representation) -> Envelope {
    let cover = projective_cover(&m.k_dual());
    let mono = cover.epi.k_dual();
    Envelope { vertices: cover.vertices, module: mono.target().clone(), mono }
}

impl Representation {
    pub fn is_projective(&self) -> bool {
        projective_cover(self).module.total_dim() == self.total_dim()
    }

    pub fn is_injective(&self) -> bool {
        injective_envelope(self).module.total_dim() == self.total_dim()
    }

    /// Multiplicity of each simple in `top M`.
    pub fn top_multiplicities(&self) -> Vec<usize> {
        let rad = radical_spaces(self);
        rad.iter().enumerate().map(|(i, r)| self.dim_at(i) - r.rows()).collect()
    }
}
