use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::duality::{double_dual_sequence, is_k_torsion_free, transpose};
use super::sequence::{n_cokernel, resolution_sequence, splitting, SequenceMode, SequenceOfProjectives};
use super::verdict::{NAbelianVerdict, VerdictKind};
use crate::algebra::{Algebra, ProjMatrix};
use crate::homological::{gldim, grade, pdim, stable_hom_dim, tor_table, Dimension, Grade};
use crate::repr::random::random_module_with;
use crate::repr::{hom_basis, random_injective_projmatrix, Representation};

/// Bound on the number of projective summands in sampled presentations.
pub const SAMPLE_SUMMANDS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// A failure here contradicts the verdict or a theorem valid for every
    /// algebra.
    pub fatal: bool,
    pub samples: usize,
    pub seed: u64,
    pub witness: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub n: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl CrossCheck {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn fatal(&self) -> bool {
        self.checks.iter().any(|c| c.fatal)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Independent deterministic stream per check.
pub fn sample_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn describe_module(m: &Representation) -> String {
    let names = m.algebra().quiver().vertices();
    if m.is_zero() {
        return "0".into();
    }
    if m.total_dim() == 1 {
        let v = m.dims().iter().position(|&d| d == 1).expect("one nonzero vertex");
        return format!("S({})", names[v]);
    }
    format!("coker {} (dims {:?})", transpose(m).presentation, m.dims())
}

struct Tally {
    name: &'static str,
    samples: usize,
    witness: Option<String>,
    failures: usize,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, samples: 0, witness: None, failures: 0 }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    fn finish(self, seed: u64, fatal_on_failure: bool, detail: String) -> CheckResult {
        let passed = self.failures == 0;
        CheckResult {
            name: self.name.to_string(),
            passed,
            fatal: !passed && fatal_on_failure,
            samples: self.samples,
            seed,
            witness: self.witness,
            detail,
        }
    }
}

fn nonzero_module(alg: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> Representation {
    loop {
        let m = random_module_with(alg, rng, SAMPLE_SUMMANDS);
        if !m.is_zero() {
            return m;
        }
    }
}

/// Cokernels of injective maps of projectives: simples of projective
/// dimension at most one first, then random injective maps.
fn pdim_one_samples(alg: &Arc<Algebra>, rng: &mut ChaCha8Rng, samples: usize) -> Vec<Representation> {
    let mut out: Vec<Representation> = (0..alg.num_vertices())
        .map(|v| Representation::simple(alg, v))
        .filter(|s| pdim(s, 1).at_most(1))
        .collect();
    while out.len() < samples {
        out.push(random_injective_projmatrix(alg, rng, SAMPLE_SUMMANDS).to_module_map().cokernel().0);
    }
    out
}

pub fn check_pdim_one_torsion_free(alg: &Arc<Algebra>, n: usize, seed: u64, samples: usize, fatal: bool, opposite: bool) -> CheckResult {
    let (alg, stream, name) = if opposite { (alg.opposite(), 2, "pdim_one_torsion_free_op") } else { (alg.clone(), 1, "pdim_one_torsion_free") };
    let mut rng = sample_rng(seed, stream);
    let mut tally = Tally::new(name);
    for m in pdim_one_samples(&alg, &mut rng, samples) {
        tally.record(is_k_torsion_free(&m, n), || describe_module(&m));
    }
    let detail = format!("modules with pdim <= 1 are {n}-torsion free");
    tally.finish(seed, fatal, detail)
}

pub fn check_grades(alg: &Arc<Algebra>, n: usize, seed: u64, samples: usize, fatal: bool) -> CheckResult {
    let mut rng = sample_rng(seed, 3);
    let mut tally = Tally::new("grade_profile");
    for _ in 0..samples {
        let m = nonzero_module(alg, &mut rng);
        let g = grade(&m, n + 1);
        tally.record(matches!(g, Grade::Finite(0)) || g == Grade::Finite(n + 1), || {
            format!("{} has grade {g}", describe_module(&m))
        });
    }
    tally.finish(seed, fatal, format!("nonzero modules have grade 0 or {}", n + 1))
}

pub fn check_syzygies(alg: &Arc<Algebra>, n: usize, seed: u64, samples: usize, fatal: bool) -> CheckResult {
    let mut rng = sample_rng(seed, 4);
    let mut tally = Tally::new("syzygy_form");
    let mut attempts = 0;
    while tally.samples < samples && attempts < samples * 20 {
        attempts += 1;
        let m = random_module_with(alg, &mut rng, SAMPLE_SUMMANDS);
        if !pdim(&m, n).at_most(n) {
            continue;
        }
        let dd = double_dual_sequence(&m);
        tally.record(dd.eta_injective(), || describe_module(&m));
    }
    tally.finish(seed, fatal, format!("modules with pdim <= {n} embed in their double dual"))
}

pub fn check_tor_stable_hom(alg: &Arc<Algebra>, seed: u64, samples: usize) -> CheckResult {
    let mut rng = sample_rng(seed, 5);
    let mut tally = Tally::new("tor_stable_hom");
    for _ in 0..samples {
        let f = random_module_with(alg, &mut rng, SAMPLE_SUMMANDS);
        let h = random_module_with(alg, &mut rng, SAMPLE_SUMMANDS);
        let tr = transpose(&f).module;
        let tor = tor_table(&h, &tr, 1).expect("opposite algebras")[1];
        let st = stable_hom_dim(&f, &h).expect("same algebra");
        tally.record(tor == st, || {
            format!("F = {}, H = {}: Tor_1 = {tor}, stable Hom = {st}", describe_module(&f), describe_module(&h))
        });
    }
    tally.finish(seed, true, "dim Tor_1(H, Tr F) = dim of stable Hom(F, H)".into())
}

pub fn check_gldim_symmetry(alg: &Arc<Algebra>, cap: usize, seed: u64) -> CheckResult {
    let (a, b) = (gldim(alg, cap), gldim(&alg.opposite(), cap));
    let mut tally = Tally::new("gldim_symmetry");
    tally.record(a == b, || format!("gldim {a} but opposite gldim {b}"));
    tally.finish(seed, true, format!("gldim = gldim of the opposite = {a}"))
}

/// Double dual exactness, the two torsion-freeness oracles, and the
/// vanishing of the dual of `e1 -> M`, on shared samples.
pub fn check_double_duals(alg: &Arc<Algebra>, seed: u64, samples: usize) -> [CheckResult; 3] {
    let mut rng = sample_rng(seed, 6);
    let mut exact = Tally::new("double_dual_exact");
    let mut oracles = Tally::new("torsion_free_oracles");
    let mut e1dual = Tally::new("e1_dual_vanishes");
    for _ in 0..samples {
        let m = random_module_with(alg, &mut rng, SAMPLE_SUMMANDS);
        let dd = double_dual_sequence(&m);
        let verified = dd.verify();
        exact.record(verified.is_ok(), || format!("{}: {}", describe_module(&m), verified.unwrap_err()));
        let tf1 = is_k_torsion_free(&m, 1);
        let tf2 = tf1 && is_k_torsion_free(&m, 2);
        oracles.record(tf1 == dd.eta_injective() && tf2 == dd.eta_bijective(), || {
            format!(
                "{}: torsion free (1,2) = ({tf1},{tf2}), eta injective/bijective = ({},{})",
                describe_module(&m),
                dd.eta_injective(),
                dd.eta_bijective()
            )
        });
        let vanishes = (0..alg.num_vertices()).all(|i| {
            hom_basis(&m, &Representation::projective(alg, i))
                .expect("same algebra")
                .iter()
                .all(|phi| dd.e1_inclusion.compose(phi).map(|c| c.is_zero()).unwrap_or(false))
        });
        e1dual.record(vanishes, || describe_module(&m));
    }
    [
        exact.finish(seed, true, "0 -> e1 -> M -> M** -> e2 -> 0 is exact, e_i = Ext^i(Tr M, Λ)".into()),
        oracles.finish(seed, true, "1/2-torsion free iff eta injective/bijective".into()),
        e1dual.finish(seed, true, "the dual of e1 -> M is zero".into()),
    ]
}

/// An `m`-exact sequence `X_{m+1} -> ... -> X_0` from a seeded recipe, if
/// the attempt produced one.
fn sample_exact_sequence(alg: &Arc<Algebra>, m: usize, rng: &mut ChaCha8Rng) -> Option<SequenceOfProjectives> {
    let base = match rng.gen_range(0..3) {
        0 => {
            let f = random_injective_projmatrix(alg, rng, SAMPLE_SUMMANDS);
            n_cokernel(&f, m).ok()?.prepend(f).ok()?
        }
        1 => resolution_sequence(&random_module_with(alg, rng, SAMPLE_SUMMANDS), m + 1)?,
        _ => {
            let simple = Representation::simple(alg, rng.gen_range(0..alg.num_vertices()));
            resolution_sequence(&simple, m + 1)?
        }
    };
    if !base.check(SequenceMode::NExact(m)).ok()? {
        return None;
    }
    if rng.gen_bool(0.5) {
        // add a trivially split piece X = X at a random position
        let objects = base.objects();
        let k = rng.gen_range(0..=m);
        let x = vec![rng.gen_range(0..alg.num_vertices())];
        let maps = (0..=m)
            .map(|j| {
                if j == k {
                    ProjMatrix::identity(alg.clone(), x.clone())
                } else {
                    let src = if j == k + 1 { x.clone() } else { Vec::new() };
                    let tgt = if j + 1 == k { x.clone() } else { Vec::new() };
                    ProjMatrix::zero(alg.clone(), src, tgt)
                }
            })
            .collect();
        let trivial = SequenceOfProjectives::new(maps).ok()?;
        debug_assert_eq!(objects.len(), m + 2);
        return base.direct_sum(&trivial).ok();
    }
    Some(base)
}

/// Samples `m`-exact sequences; returns them with the number of attempts.
pub fn sample_exact_sequences(alg: &Arc<Algebra>, m: usize, rng: &mut ChaCha8Rng, samples: usize) -> Vec<SequenceOfProjectives> {
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < samples && attempts < samples * 20 {
        attempts += 1;
        if let Some(s) = sample_exact_sequence(alg, m, rng) {
            out.push(s);
        }
    }
    out
}

pub fn check_splitting(alg: &Arc<Algebra>, n: usize, seed: u64, samples: usize) -> CheckResult {
    let mut rng = sample_rng(seed, 7);
    let mut tally = Tally::new("splitting_agreement");
    let mut split = 0;
    let mut nonsplit = Vec::new();
    for seq in sample_exact_sequences(alg, n, &mut rng, samples) {
        let r = splitting(&seq).expect("sampled sequences are n-exact");
        if r.section && r.retraction {
            split += 1;
        } else if !r.section && !r.retraction && nonsplit.is_empty() {
            nonsplit.push(seq.to_string());
        }
        tally.record(r.section == r.retraction, || format!("{seq}: section {}, retraction {}", r.section, r.retraction));
    }
    let total = tally.samples;
    let mut detail = format!("{split} of {total} sampled {n}-exact sequences split");
    if let Some(s) = nonsplit.first() {
        detail.push_str(&format!("; non-split example {s}"));
    }
    tally.finish(seed, true, detail)
}

pub fn check_monos_fit(alg: &Arc<Algebra>, n: usize, seed: u64, samples: usize, fatal: bool) -> CheckResult {
    let mut rng = sample_rng(seed, 8);
    let mut tally = Tally::new("monos_fit");
    for _ in 0..samples {
        let f = random_injective_projmatrix(alg, &mut rng, SAMPLE_SUMMANDS);
        let result = n_cokernel(&f, n).and_then(|g| g.prepend(f.clone())).and_then(|s| s.check(SequenceMode::NExact(n)));
        tally.record(matches!(result, Ok(true)), || format!("{f}: {result:?}"));
    }
    tally.finish(seed, fatal, format!("monomorphisms fit into {n}-exact sequences"))
}

pub fn check_transpose_pdim(alg: &Arc<Algebra>, n: usize, seed: u64, samples: usize, fatal: bool) -> CheckResult {
    let mut rng = sample_rng(seed, 9);
    let mut tally = Tally::new("transpose_pdim");
    for m in pdim_one_samples(alg, &mut rng, samples) {
        if pdim(&m, 1) != Dimension::Finite(1) {
            continue;
        }
        let p = pdim(&transpose(&m).module, n + 2);
        tally.record(p == Dimension::Finite(n + 1), || format!("{}: pdim Tr = {p}", describe_module(&m)));
    }
    tally.finish(seed, fatal, format!("pdim M = 1 implies pdim Tr M = {}", n + 1))
}

pub fn check_reflexive(alg: &Arc<Algebra>, n: usize, seed: u64, samples: usize, fatal: bool) -> CheckResult {
    let mut rng = sample_rng(seed, 10);
    let mut tally = Tally::new("reflexive_pdim_one");
    let cap = alg.dim() + 2;
    let regular = gldim(alg, 1) == Dimension::Finite(0);
    let detail = if n == 1 {
        "no module of positive pdim is reflexive"
    } else {
        "modules with pdim 1 are reflexive"
    };
    if n == 1 && regular {
        return tally.finish(seed, fatal, "vacuous over a von Neumann regular algebra".into());
    }
    for _ in 0..samples {
        let m = random_module_with(alg, &mut rng, SAMPLE_SUMMANDS);
        let p = pdim(&m, cap);
        let relevant = if n == 1 { !p.at_most(0) } else { p == Dimension::Finite(1) };
        if !relevant {
            continue;
        }
        let reflexive = double_dual_sequence(&m).eta_bijective();
        tally.record(reflexive == (n != 1), || format!("{} (pdim {p}) reflexive = {reflexive}", describe_module(&m)));
    }
    tally.finish(seed, fatal, detail.into())
}

pub fn check_other_m_split(alg: &Arc<Algebra>, n: usize, seed: u64, samples: usize, fatal: bool) -> CheckResult {
    let mut rng = sample_rng(seed, 11);
    let mut tally = Tally::new("other_m_split");
    let ms: Vec<usize> = [n.checked_sub(1), Some(n + 1)].into_iter().flatten().filter(|&m| m >= 1).collect();
    for &m in &ms {
        for seq in sample_exact_sequences(alg, m, &mut rng, samples / ms.len()) {
            let r = splitting(&seq).expect("sampled sequences are exact");
            tally.record(r.section && r.retraction, || format!("{m}-exact {seq}"));
        }
    }
    tally.finish(seed, fatal, format!("m-exact sequences with m in {ms:?} split"))
}

pub fn check_transpose_projectivity(alg: &Arc<Algebra>, seed: u64, samples: usize) -> CheckResult {
    let mut rng = sample_rng(seed, 12);
    let mut tally = Tally::new("transpose_projectivity");
    for _ in 0..samples {
        let m = random_module_with(alg, &mut rng, SAMPLE_SUMMANDS);
        let tr = transpose(&m).module;
        tally.record(m.is_projective() == tr.is_projective(), || describe_module(&m));
    }
    tally.finish(seed, true, "M is projective iff Tr M is projective".into())
}

/// Runs every sampled consistency check at `n`. Failures of checks that are
/// theorems for all algebras are always fatal; the others are fatal only if
/// the verdict claims `n`-abelian at this `n`.
pub fn cross_check(alg: &Arc<Algebra>, verdict: &NAbelianVerdict, n: usize, seed: u64, samples: usize) -> CrossCheck {
    let claims = verdict.result.claims(n);
    let exact = matches!(verdict.result, VerdictKind::ExactlyN(m) if m == n);
    let mut checks = vec![
        check_pdim_one_torsion_free(alg, n, seed, samples, claims, false),
        check_pdim_one_torsion_free(alg, n, seed, samples, claims, true),
        check_grades(alg, n, seed, samples, exact),
        check_syzygies(alg, n, seed, samples, claims),
        check_tor_stable_hom(alg, seed, samples),
        check_gldim_symmetry(alg, verdict.cap, seed),
    ];
    checks.extend(check_double_duals(alg, seed, samples));
    checks.push(check_splitting(alg, n, seed, samples));
    checks.push(check_monos_fit(alg, n, seed, samples, claims));
    checks.push(check_transpose_pdim(alg, n, seed, samples, exact));
    checks.push(check_reflexive(alg, n, seed, samples, exact));
    checks.push(check_other_m_split(alg, n, seed, samples, exact));
    checks.push(check_transpose_projectivity(alg, seed, samples));
    CrossCheck { n, seed, checks }
}
