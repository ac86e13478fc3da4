use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, ProjMatrix};
use crate::error::{Error, Result};
use crate::homological::minimal_resolution;
use crate::linalg::ExactMatrix;
use crate::repr::{ModuleMap, Representation};

/// A composable chain `Z_0 -> Z_1 -> ... -> Z_m` of maps between
/// projectives, `maps[k]: Z_k -> Z_{k+1}`.
#[derive(Clone, PartialEq)]
pub struct SequenceOfProjectives {
    maps: Vec<ProjMatrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceMode {
    PreSegment,
    Segment,
    PreCosegment,
    Cosegment,
    NExact(usize),
}

impl SequenceOfProjectives {
    pub fn new(maps: Vec<ProjMatrix>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::InvalidMap("empty sequence".into()));
        }
        for w in maps.windows(2) {
            w[0].algebra().ensure_same(w[1].algebra())?;
            if w[0].target() != w[1].source() {
                return Err(Error::InvalidMap(format!("non-composable maps: {} then {}", w[0], w[1])));
            }
        }
        Ok(SequenceOfProjectives { maps })
    }

    pub fn maps(&self) -> &[ProjMatrix] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.maps[0].algebra()
    }

    /// `Z_0, ..., Z_m` as vertex lists.
    pub fn objects(&self) -> Vec<Vec<usize>> {
        let mut out = vec![self.maps[0].source().to_vec()];
        out.extend(self.maps.iter().map(|f| f.target().to_vec()));
        out
    }

    /// `Z_m* -> ... -> Z_0*` over the opposite algebra.
    pub fn dual(&self) -> SequenceOfProjectives {
        SequenceOfProjectives { maps: self.maps.iter().rev().map(ProjMatrix::dual).collect() }
    }

    pub fn prepend(&self, f: ProjMatrix) -> Result<SequenceOfProjectives> {
        let mut maps = vec![f];
        maps.extend(self.maps.iter().cloned());
        Self::new(maps)
    }

    /// Termwise direct sum of two sequences of the same length.
    pub fn direct_sum(&self, other: &SequenceOfProjectives) -> Result<SequenceOfProjectives> {
        if self.len() != other.len() {
            return Err(Error::InvalidMap("direct sum of sequences of different lengths".into()));
        }
        let maps = self.maps.iter().zip(&other.maps).map(|(f, g)| f.direct_sum(g)).collect::<Result<_>>()?;
        Self::new(maps)
    }

    fn module_maps(&self) -> Vec<ModuleMap> {
        self.maps.iter().map(ProjMatrix::to_module_map).collect()
    }

    /// Exactness of the sequences of `Hom(Λ, -)` (the maps themselves) and
    /// of `Hom(-, Λ)` (the dual sequence) as required by `mode`.
    pub fn check(&self, mode: SequenceMode) -> Result<bool> {
        let m = self.len();
        let (direct, dual) = match mode {
            SequenceMode::PreSegment => (Some(true), None),
            SequenceMode::Segment => (Some(true), Some(false)),
            SequenceMode::PreCosegment => (None, Some(true)),
            SequenceMode::Cosegment => (Some(false), Some(true)),
            SequenceMode::NExact(n) => {
                if m != n + 1 {
                    return Err(Error::Precondition(format!("an {n}-exact sequence has {} maps, not {m}", n + 1)));
                }
                (Some(true), Some(true))
            }
        };
        if let Some(injective) = direct {
            if !exact_chain(&self.module_maps(), injective) {
                return Ok(false);
            }
        }
        if let Some(injective) = dual {
            if !exact_chain(&self.dual().module_maps(), injective) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Exact at every interior object, and injective at the start if asked.
fn exact_chain(maps: &[ModuleMap], injective_start: bool) -> bool {
    if injective_start && !maps[0].is_injective() {
        return false;
    }
    maps.windows(2).all(|w| {
        let (f, g) = (&w[0], &w[1]);
        f.compose(g).map(|h| h.is_zero()).unwrap_or(false)
            && (0..f.target().dims().len()).all(|v| f.block(v).rank() + g.block(v).rank() == f.target().dim_at(v))
    })
}

pub fn check_sequence(seq: &SequenceOfProjectives, mode: SequenceMode) -> Result<bool> {
    seq.check(mode)
}

/// The `n`-cokernel `X_0 -g_1-> Y_1 -> ... -> Y_n` of `f: X_1 -> X_0`: the
/// duals of a minimal projective resolution of `ker(f*)` over `Λ^op`, padded
/// with zero objects.
pub fn n_cokernel(f: &ProjMatrix, n: usize) -> Result<SequenceOfProjectives> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let fd = f.dual();
    let (kernel, inclusion) = fd.to_module_map().kernel();
    let res = minimal_resolution(&kernel, n - 1);
    if !res.complete {
        return Err(Error::ResolutionExceedsLength(n));
    }
    let into = res.augmentation.compose(&inclusion)?;
    let first = ProjMatrix::from_module_map(&into, &res.terms[0], f.target())?;
    let mut maps = vec![first.dual()];
    for d in &res.differentials {
        maps.push(d.dual());
    }
    while maps.len() < n {
        let last = maps.last().expect("nonempty").target().to_vec();
        maps.push(ProjMatrix::zero(f.algebra().clone(), last, Vec::new()));
    }
    let seq = SequenceOfProjectives::new(maps)?;
    let full = seq.prepend(f.clone())?;
    if !full.check(SequenceMode::PreCosegment)? {
        return Err(Error::Precondition("computed n-cokernel failed its exactness check".into()));
    }
    Ok(seq)
}

/// The `n`-kernel `Y_n -> ... -> Y_1 -> X_1` of `f: X_1 -> X_0`, as the dual
/// of the `n`-cokernel of `f*`.
pub fn n_kernel(f: &ProjMatrix, n: usize) -> Result<SequenceOfProjectives> {
    let co = n_cokernel(&f.dual(), n)?;
    let seq = co.dual();
    let mut maps = seq.maps().to_vec();
    maps.push(f.clone());
    if !SequenceOfProjectives::new(maps)?.check(SequenceMode::PreSegment)? {
        return Err(Error::Precondition("computed n-kernel failed its exactness check".into()));
    }
    Ok(seq)
}

/// Outcome of the two splitting tests for an `n`-exact sequence
/// `X_{n+1} -h_{n+1}-> ... -h_1-> X_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitReport {
    /// `h_1` has a section.
    pub section: bool,
    /// `h_{n+1}` has a retraction.
    pub retraction: bool,
}

/// Is there `u` with `f ; u = id` (a retraction) or `u ; f = id` (a section)?
fn has_inverse_side(f: &ProjMatrix, retraction: bool) -> Result<bool> {
    let alg = f.algebra();
    let candidates = ProjMatrix::hom_basis(alg, f.target(), f.source());
    let (id, rows): (ProjMatrix, Vec<_>) = if retraction {
        let id = ProjMatrix::identity(alg.clone(), f.source().to_vec());
        let rows = candidates.iter().map(|u| f.compose(u).map(|c| c.flatten())).collect::<Result<_>>()?;
        (id, rows)
    } else {
        let id = ProjMatrix::identity(alg.clone(), f.target().to_vec());
        let rows = candidates.iter().map(|u| u.compose(f).map(|c| c.flatten())).collect::<Result<_>>()?;
        (id, rows)
    };
    let target = id.flatten();
    let a = ExactMatrix::from_rows(alg.field(), target.len(), rows)?;
    let b = ExactMatrix::from_rows(alg.field(), target.len(), vec![target])?;
    Ok(a.solve(&b)?.is_some())
}

pub fn splitting(seq: &SequenceOfProjectives) -> Result<SplitReport> {
    let n = seq.len() - 1;
    if n == 0 || !seq.check(SequenceMode::NExact(n))? {
        return Err(Error::Precondition("splitting is only defined for n-exact sequences".into()));
    }
    let maps = seq.maps();
    Ok(SplitReport {
        section: has_inverse_side(&maps[n], false)?,
        retraction: has_inverse_side(&maps[0], true)?,
    })
}

/// Whether an `n`-exact sequence splits; an error if the section and
/// retraction tests disagree.
pub fn splits(seq: &SequenceOfProjectives) -> Result<bool> {
    let r = splitting(seq)?;
    if r.section != r.retraction {
        return Err(Error::Precondition("section and retraction tests disagree".into()));
    }
    Ok(r.section)
}

impl ProjMatrix {
    /// Block diagonal sum `f ⊕ g`.
    pub fn direct_sum(&self, other: &ProjMatrix) -> Result<ProjMatrix> {
        self.algebra().ensure_same(other.algebra())?;
        let source: Vec<usize> = self.source().iter().chain(other.source()).copied().collect();
        let target: Vec<usize> = self.target().iter().chain(other.target()).copied().collect();
        let (s0, t0) = (self.source().len(), self.target().len());
        let mut entries = ProjMatrix::zero(self.algebra().clone(), source.clone(), target.clone()).entries().to_vec();
        for s in 0..s0 {
            for t in 0..t0 {
                entries[s][t] = self.entry(s, t).clone();
            }
        }
        for s in 0..other.source().len() {
            for t in 0..other.target().len() {
                entries[s0 + s][t0 + t] = other.entry(s, t).clone();
            }
        }
        ProjMatrix::new(self.algebra().clone(), source, target, entries)
    }
}

/// The resolution of `M`, as the sequence `P_len -> ... -> P_0` padded with
/// zero objects on the left to exactly `len` maps. `None` if the minimal
/// resolution is longer.
pub fn resolution_sequence(m: &Representation, len: usize) -> Option<SequenceOfProjectives> {
    let res = minimal_resolution(m, len);
    if !res.complete || len == 0 {
        return None;
    }
    let mut maps: Vec<ProjMatrix> = res.differentials.iter().rev().cloned().collect();
    while maps.len() < len {
        let first = maps.first().map_or_else(|| res.terms[0].clone(), |f| f.source().to_vec());
        maps.insert(0, ProjMatrix::zero(m.algebra().clone(), Vec::new(), first));
    }
    SequenceOfProjectives::new(maps).ok()
}

impl fmt::Debug for SequenceOfProjectives {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SequenceOfProjectives {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.maps.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" ; "))
    }
}
