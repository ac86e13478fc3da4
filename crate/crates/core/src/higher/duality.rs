use crate::algebra::{Element, ProjMatrix};
use crate::error::Result;
use crate::homological::{ext_table, minimal_resolution, pdim, ExtTable};
use crate::linalg::ExactMatrix;
use crate::repr::{HomSpace, ModuleMap, Representation};

/// `M* = Hom_Λ(M, Λ)` over `Λ^op`, with `(M*)_i = Hom(M, P(i))` in the
/// bases `homs[i]`.
#[derive(Clone, Debug)]
pub struct StarDual {
    pub module: Representation,
    pub homs: Vec<HomSpace>,
}

pub fn star_dual(m: &Representation) -> StarDual {
    let alg = m.algebra();
    let op = alg.opposite();
    let field = m.field();
    let homs: Vec<HomSpace> = (0..alg.num_vertices())
        .map(|i| HomSpace::new(m, &Representation::projective(alg, i)).expect("same algebra"))
        .collect();
    let dims: Vec<usize> = homs.iter().map(HomSpace::dim).collect();
    // a: i -> j gives a^op: j -> i, acting by postcomposition with a*(-): P(j) -> P(i)
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let (i, j) = (a.source, a.target);
            let left = ProjMatrix::new(alg.clone(), vec![j], vec![i], vec![vec![alg.arrow(k)]])
                .expect("arrow entry")
                .to_module_map();
            let images: Vec<_> = homs[j]
                .maps()
                .iter()
                .map(|phi| phi.compose(&left).expect("composable").to_vector())
                .collect();
            let rhs = ExactMatrix::from_rows(field, homs[i].basis.cols(), images).expect("vectors");
            homs[i]
                .basis
                .solve(&rhs)
                .expect("shapes")
                .unwrap_or_else(|| ExactMatrix::zeros(field, dims[j], dims[i]))
        })
        .collect();
    StarDual { module: Representation::from_parts(op, dims, maps), homs }
}

/// Transpose from the minimal presentation `P_1 -d-> P_0 -> M -> 0`:
/// `Tr M = coker(d*)` over `Λ^op`.
#[derive(Clone, Debug)]
pub struct Transpose {
    pub module: Representation,
    pub presentation: ProjMatrix,
    pub dual_presentation: ProjMatrix,
}

pub fn transpose(m: &Representation) -> Transpose {
    let res = minimal_resolution(m, 1);
    let presentation = res
        .differentials
        .first()
        .cloned()
        .unwrap_or_else(|| ProjMatrix::zero(m.algebra().clone(), Vec::new(), res.terms[0].clone()));
    let dual_presentation = presentation.dual();
    let module = dual_presentation.to_module_map().cokernel().0;
    Transpose { module, presentation, dual_presentation }
}

/// `Ext^i(Tr M, Λ^op)` for `i = 0..=k`.
pub fn torsion_profile(m: &Representation, k: usize) -> ExtTable {
    let tr = transpose(m).module;
    let reg = Representation::regular(tr.algebra());
    ext_table(&tr, &reg, k).expect("same algebra")
}

/// `Ext^i(Tr M, Λ^op) = 0` for `1 <= i <= k`.
pub fn is_k_torsion_free(m: &Representation, k: usize) -> bool {
    torsion_profile(m, k).vanishes(1..=k)
}

/// `pdim M <= m` and `Ext^i(M, Λ) = 0` for `1 <= i <= m - 1`.
pub fn is_m_spherical(module: &Representation, m: usize) -> bool {
    if !pdim(module, m).at_most(m) {
        return false;
    }
    if m < 2 {
        return true;
    }
    let reg = Representation::regular(module.algebra());
    ext_table(module, &reg, m - 1).expect("same algebra").vanishes(1..=m - 1)
}

/// `0 -> e1 -> M -η-> M** -> e2 -> 0`.
#[derive(Clone, Debug)]
pub struct DoubleDualSequence {
    pub module: Representation,
    pub dual: Representation,
    pub double_dual: Representation,
    pub eta: ModuleMap,
    pub e1: Representation,
    pub e1_inclusion: ModuleMap,
    pub e2: Representation,
    pub e2_projection: ModuleMap,
    /// `dim Ext^1(Tr M, Λ^op)` and `dim Ext^2(Tr M, Λ^op)`.
    pub ext: [usize; 2],
}

pub fn double_dual_sequence(m: &Representation) -> DoubleDualSequence {
    let alg = m.algebra().clone();
    let op = alg.opposite();
    let field = m.field();
    let first = star_dual(m);
    let second = star_dual(&first.module);
    let double_dual = second.module.clone();
    let blocks = (0..alg.num_vertices())
        .map(|i| {
            let target = Representation::projective(&op, i);
            let rows: Vec<_> = (0..m.dim_at(i))
                .map(|r| {
                    // evaluation at the r-th basis vector of M_i, reversed into P^op(i)
                    let eval_blocks = (0..alg.num_vertices())
                        .map(|v| {
                            let rows = first.homs[v]
                                .maps()
                                .iter()
                                .map(|phi| {
                                    let value = phi.block(i).row(r);
                                    let x = Element::from_terms(alg.between(v, i).iter().copied().zip(value.iter().cloned()));
                                    let y = alg.reverse_element(&x, &op);
                                    crate::repr::coordinates(&op, &y, i, v)
                                })
                                .collect();
                            ExactMatrix::from_rows(field, target.dim_at(v), rows).expect("coordinates")
                        })
                        .collect();
                    let psi = ModuleMap::new(first.module.clone(), target.clone(), eval_blocks)
                        .expect("evaluation is a homomorphism");
                    second.homs[i].coordinates(&psi).expect("evaluation lies in the dual")
                })
                .collect();
            ExactMatrix::from_rows(field, double_dual.dim_at(i), rows).expect("coordinates")
        })
        .collect();
    let eta = ModuleMap::new(m.clone(), double_dual.clone(), blocks).expect("η is natural");
    let (e1, e1_inclusion) = eta.kernel();
    let (e2, e2_projection) = eta.cokernel();
    let profile = torsion_profile(m, 2);
    DoubleDualSequence {
        module: m.clone(),
        dual: first.module,
        double_dual,
        eta,
        e1,
        e1_inclusion,
        e2,
        e2_projection,
        ext: [profile.get(1), profile.get(2)],
    }
}

impl DoubleDualSequence {
    /// Euler characteristic, vanishing composites, and agreement of the end
    /// terms with `Ext^{1,2}(Tr M, Λ^op)`.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: &str| Err(crate::error::Error::Precondition(msg.to_string()));
        let euler = self.e1.total_dim() as i64 - self.module.total_dim() as i64 + self.double_dual.total_dim() as i64
            - self.e2.total_dim() as i64;
        if euler != 0 {
            return fail("Euler characteristic is nonzero");
        }
        if !self.e1_inclusion.compose(&self.eta)?.is_zero() || !self.eta.compose(&self.e2_projection)?.is_zero() {
            return fail("consecutive maps do not compose to zero");
        }
        if !self.e1_inclusion.is_injective() || !self.e2_projection.is_surjective() {
            return fail("end maps are not injective/surjective");
        }
        if self.e1.total_dim() != self.ext[0] || self.e2.total_dim() != self.ext[1] {
            return fail("end terms disagree with Ext of the transpose");
        }
        Ok(())
    }

    pub fn eta_injective(&self) -> bool {
        self.e1.is_zero()
    }

    pub fn eta_bijective(&self) -> bool {
        self.e1.is_zero() && self.e2.is_zero()
    }
}
