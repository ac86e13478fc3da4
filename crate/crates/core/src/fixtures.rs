use std::sync::Arc;

use crate::algebra::Algebra;
use crate::linalg::FieldSpec;

pub const Q: FieldSpec = FieldSpec::Rationals;

pub fn semisimple3() -> Arc<Algebra> {
    Algebra::from_labels(Q, &["1", "2", "3"], &[], &[]).unwrap()
}

pub fn a2() -> Arc<Algebra> {
    Algebra::from_labels(Q, &["1", "2"], &[("a", "1", "2")], &[]).unwrap()
}

pub fn kx2() -> Arc<Algebra> {
    Algebra::from_labels(Q, &["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[vec![(1, vec!["a", "b"])]]).unwrap()
}

pub fn loop_x2() -> Arc<Algebra> {
    Algebra::from_labels(Q, &["1"], &[("x", "1", "1")], &[vec![(1, vec!["x", "x"])]]).unwrap()
}

pub fn a4_rad2() -> Arc<Algebra> {
    Algebra::from_labels(
        Q,
        &["1", "2", "3", "4"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")],
        &[vec![(1, vec!["a", "b"])], vec![(1, vec!["b", "c"])]],
    )
    .unwrap()
}
