#![allow(dead_code)]

use std::sync::Arc;

use nabelian::algebra::Algebra;
use nabelian::corpus::corpus;
use nabelian::format::parse_algebra;

pub const EXTRA: [&str; 3] = [
    // commutative square over F3
    "field F 3\nvertex 1 2 3 4\narrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\nrelation a*b - c*d\n",
    // Kronecker quiver
    "field Q\nvertex 1 2\narrow x 1 2\narrow y 1 2\n",
    // cyclic Nakayama with radical square zero
    "field F 5\nvertex 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\nrelation a*b\nrelation b*c\nrelation c*a\n",
];

pub fn algebras() -> Vec<Arc<Algebra>> {
    let mut out: Vec<_> = corpus().iter().map(|e| e.parse().algebra).collect();
    out.extend(EXTRA.iter().map(|t| parse_algebra(t).unwrap().algebra));
    out
}
