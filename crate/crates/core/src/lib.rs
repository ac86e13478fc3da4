pub mod algebra;
pub mod corpus;
pub mod error;
pub mod format;
pub mod linalg;
pub mod higher;
pub mod homological;
pub mod report;
pub mod repr;

#[cfg(test)]
pub(crate) mod fixtures;
