//! Minimal resolutions and the invariants derived from them.

mod invariants;
mod resolution;

pub use invariants::{
    domdim, ext_table, gldim, grade, is_injective_by_ext, is_projective_by_ext, pdim, stable_hom_dim, tensor, tor_table,
    tor_table_with, ExtTable, TensorProduct,
};
pub use resolution::{minimal_resolution, Resolution};

use std::fmt;

/// A projective or global dimension: either computed exactly or known to
/// exceed the cap that was used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dimension {
    Finite(usize),
    AboveCap(usize),
}

impl Dimension {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Dimension::Finite(d) => Some(*d),
            Dimension::AboveCap(_) => None,
        }
    }

    /// `true` when the dimension is known to be at most `d`.
    pub fn at_most(&self, d: usize) -> bool {
        matches!(self, Dimension::Finite(x) if *x <= d)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::AboveCap(c) => write!(f, "AboveCap({c})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomDim {
    Finite(usize),
    AtLeastCap(usize),
    Infinite,
}

impl DomDim {
    /// `true` when the dominant dimension is known to be at least `d`.
    pub fn at_least(&self, d: usize) -> bool {
        match self {
            DomDim::Finite(x) | DomDim::AtLeastCap(x) => *x >= d,
            DomDim::Infinite => true,
        }
    }
}

impl fmt::Display for DomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomDim::Finite(d) => write!(f, "{d}"),
            DomDim::AtLeastCap(c) => write!(f, "AtLeastCap({c})"),
            DomDim::Infinite => write!(f, "Infinite"),
        }
    }
}

/// Grade of a module. `Infinite` only for the zero module; a nonzero module
/// with no nonzero `Ext^i(M, Λ)` up to the cap is `AboveCap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grade {
    Finite(usize),
    Infinite,
    AboveCap(usize),
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grade::Finite(d) => write!(f, "{d}"),
            Grade::Infinite => write!(f, "Infinite"),
            Grade::AboveCap(c) => write!(f, "AboveCap({c})"),
        }
    }
}

#[cfg(test)]
mod tests;
