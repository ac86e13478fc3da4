//! Bundled algebras with their expected invariants.

use crate::error::{Error, Result};
use crate::format::{parse_algebra, AlgebraFile};

pub const CORPUS_NAMES: [&str; 5] = ["semisimple3", "a2_hereditary", "auslander_kx2", "nakayama_x2", "aus2_a2"];

const SOURCES: [&str; 5] = [
    include_str!("../../../corpus/semisimple3.alg"),
    include_str!("../../../corpus/a2_hereditary.alg"),
    include_str!("../../../corpus/auslander_kx2.alg"),
    include_str!("../../../corpus/nakayama_x2.alg"),
    include_str!("../../../corpus/aus2_a2.alg"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub dimension: usize,
    pub gldim: String,
    pub domdim: String,
    pub verdict: String,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub source: &'static str,
    pub expected: Expected,
}

impl CorpusEntry {
    pub fn parse(&self) -> AlgebraFile {
        parse_algebra(self.source).expect("bundled corpus parses")
    }
}

pub fn load_corpus(name: &str) -> Result<CorpusEntry> {
    let k = CORPUS_NAMES
        .iter()
        .position(|n| *n == name)
        .ok_or_else(|| Error::UnknownCorpus(name.to_string()))?;
    let source = SOURCES[k];
    let file = parse_algebra(source)?;
    let get = |key: &str| file.expect.get(key).cloned().unwrap_or_default();
    let expected = Expected {
        dimension: get("dimension").parse().unwrap_or(0),
        gldim: get("gldim"),
        domdim: get("domdim"),
        verdict: get("verdict"),
    };
    Ok(CorpusEntry { name: CORPUS_NAMES[k], source, expected })
}

pub fn corpus() -> Vec<CorpusEntry> {
    CORPUS_NAMES.iter().map(|n| load_corpus(n).expect("bundled corpus")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::expectation_met;
    use crate::higher::detect_n;

    #[test]
    fn loads_bundled_entries() {
        assert_eq!(load_corpus("semisimple3").unwrap().expected.dimension, 3);
        assert_eq!(load_corpus("auslander_kx2").unwrap().expected.dimension, 5);
        let n = load_corpus("nakayama_x2").unwrap();
        assert_eq!(n.expected.dimension, 2);
        assert_eq!(n.expected.gldim, "AboveCap");
        assert!(matches!(load_corpus("nope"), Err(Error::UnknownCorpus(_))));
    }

    #[test]
    fn expectations_match_computation() {
        for entry in corpus() {
            let alg = entry.parse().algebra;
            assert_eq!(alg.dim(), entry.expected.dimension, "{}", entry.name);
            let v = detect_n(&alg, 11);
            assert!(expectation_met(&entry.expected.gldim, &v.gldim.to_string()), "{}", entry.name);
            assert!(expectation_met(&entry.expected.domdim, &v.domdim.to_string()), "{}", entry.name);
            assert!(expectation_met(&entry.expected.verdict, &v.result.to_string()), "{}", entry.name);
        }
    }
}
