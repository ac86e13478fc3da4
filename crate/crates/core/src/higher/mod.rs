//! Duality of projectives, torsion-freeness, sequences of projectives and
//! the n-abelian verdict.

pub mod crosscheck;
mod duality;
mod sequence;
mod verdict;

#[cfg(test)]
mod tests;

pub use crosscheck::{cross_check, CheckResult, CrossCheck};
pub use duality::{
    double_dual_sequence, is_k_torsion_free, is_m_spherical, star_dual, torsion_profile, transpose,
    DoubleDualSequence, StarDual, Transpose,
};
pub use sequence::{
    check_sequence, n_cokernel, n_kernel, resolution_sequence, splits, splitting, SequenceMode,
    SequenceOfProjectives, SplitReport,
};
pub use verdict::{detect_n, is_n_abelian, is_von_neumann_regular, NAbelianEvidence, NAbelianVerdict, VerdictKind};
