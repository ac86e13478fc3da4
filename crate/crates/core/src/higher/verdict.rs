use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::homological::{domdim, gldim, Dimension, DomDim};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    /// Von Neumann regular: `proj Λ` is `n`-abelian for every `n`.
    AllN,
    ExactlyN(usize),
    /// Not `n`-abelian for any `n` with `n + 1 <= cap`.
    NotNAbelianUpTo(usize),
}

impl VerdictKind {
    /// Does this verdict assert that `proj Λ` is `n`-abelian?
    pub fn claims(&self, n: usize) -> bool {
        match self {
            VerdictKind::AllN => true,
            VerdictKind::ExactlyN(m) => *m == n,
            VerdictKind::NotNAbelianUpTo(_) => false,
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictKind::AllN => write!(f, "AllN"),
            VerdictKind::ExactlyN(n) => write!(f, "ExactlyN({n})"),
            VerdictKind::NotNAbelianUpTo(c) => write!(f, "NotNAbelianUpTo({c})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NAbelianVerdict {
    pub result: VerdictKind,
    pub gldim: Dimension,
    pub domdim: DomDim,
    pub cap: usize,
    pub reason: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NAbelianEvidence {
    pub holds: bool,
    pub gldim: Dimension,
    pub domdim: DomDim,
}

/// `gldim Λ = 0`.
pub fn is_von_neumann_regular(algebra: &Arc<Algebra>) -> bool {
    gldim(algebra, 1) == Dimension::Finite(0)
}

/// `gldim Λ <= n + 1 <= domdim Λ`.
pub fn is_n_abelian(algebra: &Arc<Algebra>, n: usize) -> NAbelianEvidence {
    let g = gldim(algebra, n + 2);
    let d = domdim(algebra, n + 1);
    NAbelianEvidence { holds: n >= 1 && g.at_most(n + 1) && d.at_least(n + 1), gldim: g, domdim: d }
}

/// Decides for which `n` the category `proj Λ` is `n`-abelian: `gldim Λ`
/// pins down the only candidate `n = gldim Λ - 1`.
pub fn detect_n(algebra: &Arc<Algebra>, cap: usize) -> NAbelianVerdict {
    let cap = cap.max(2);
    let g = gldim(algebra, cap);
    let d = domdim(algebra, cap);
    let (result, reason) = match g {
        Dimension::Finite(0) => (VerdictKind::AllN, "gldim 0: von Neumann regular, n-abelian for every n".to_string()),
        Dimension::Finite(1) => (
            VerdictKind::NotNAbelianUpTo(cap),
            "gldim 1 would force n + 1 = 1, so no n >= 1 is possible".to_string(),
        ),
        Dimension::Finite(g) => {
            let evidence = is_n_abelian(algebra, g - 1);
            if evidence.holds {
                (VerdictKind::ExactlyN(g - 1), format!("gldim {g} <= {g} <= domdim {d}"))
            } else {
                (
                    VerdictKind::NotNAbelianUpTo(cap),
                    format!("n = {} is the only candidate but domdim {} < gldim {g}", g - 1, evidence.domdim),
                )
            }
        }
        Dimension::AboveCap(_) => (
            VerdictKind::NotNAbelianUpTo(cap),
            format!("gldim exceeds {cap}, so no n with n + 1 <= {cap} is possible"),
        ),
    };
    NAbelianVerdict { result, gldim: g, domdim: d, cap, reason }
}
