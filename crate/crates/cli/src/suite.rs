//! Seeded property suites over one configuration.
//!
//! Each property draws from its own generator seeded by `(seed, property)`,
//! runs on its own thread, and the results are sorted by name before
//! rendering, so the report depends only on the inputs.

use std::fmt::Write as _;
use std::sync::Arc;
use std::thread;

use contact_lie::bracket::bracket_with_constant;
use contact_lie::cohomology::{trivialize, verify_on_window, verify_trivialization, Cocycle, FiniteFunctional};
use contact_lie::derivations::{
    check_derivation, check_mu_p_identity, d_mu, hom_prime_basis, outer_indices, outer_partial_t, HomGamma,
    LinearOperator,
};
use contact_lie::literal::{format_basis, format_element};
use contact_lie::rational::{q, Q};
use contact_lie::window::{window, Sampler};
use contact_lie::{bracket, bracket_operator, AlgebraConfig, AlgebraElement, BasisIndex};

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    pub samples: usize,
    /// Constant used in place of 2 in the bracket under test by the Jacobi
    /// property; anything other than 2 is a deliberate corruption.
    pub jacobi_constant: Q,
}

impl SuiteOptions {
    pub fn new(seed: u64, samples: usize) -> Self {
        SuiteOptions {
            seed,
            samples,
            jacobi_constant: q(2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Checked { passed: usize, checked: usize, witness: Option<String> },
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub outcome: Outcome,
}

impl PropertyResult {
    pub fn failed(&self) -> bool {
        matches!(&self.outcome, Outcome::Checked { passed, checked, .. } if passed != checked)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub header: String,
    pub results: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn failed(&self) -> bool {
        self.results.iter().any(PropertyResult::failed)
    }

    pub fn render(&self) -> String {
        let mut out = self.header.clone();
        for r in &self.results {
            match &r.outcome {
                Outcome::Checked { passed, checked, witness } => {
                    let verdict = if passed == checked { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{}: {passed}/{checked} {verdict}", r.name);
                    if let Some(w) = witness {
                        let _ = writeln!(out, "  witness: {w}");
                    }
                }
                Outcome::Skipped(why) => {
                    let _ = writeln!(out, "{}: skipped ({why})", r.name);
                }
            }
        }
        let _ = writeln!(out, "overall: {}", if self.failed() { "FAIL" } else { "PASS" });
        out
    }
}

type Prop = fn(&Arc<AlgebraConfig>, &SuiteOptions, &mut Sampler) -> Outcome;

const PROPERTIES: [(&str, Prop); 7] = [
    ("antisymmetry", antisymmetry),
    ("derivation-law", derivation_law),
    ("eigen-relations", eigen_relations),
    ("jacobi", jacobi),
    ("mu-identity", mu_identity),
    ("oracle-equivalence", oracle),
    ("round-trip", round_trip),
];

pub fn run_suite(cfg: &Arc<AlgebraConfig>, opts: &SuiteOptions) -> SuiteReport {
    let mut results: Vec<PropertyResult> = thread::scope(|scope| {
        let handles: Vec<_> = PROPERTIES
            .iter()
            .enumerate()
            .map(|(k, &(name, prop))| {
                scope.spawn(move || {
                    let mut s = Sampler::new(opts.seed.wrapping_mul(1_000_003).wrapping_add(k as u64));
                    PropertyResult {
                        name,
                        outcome: prop(cfg, opts, &mut s),
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("property thread")).collect()
    });
    results.sort_by_key(|r| r.name);
    let ell: Vec<String> = cfg.shape().ell().iter().map(|l| l.to_string()).collect();
    let header = format!(
        "config: ell={} j0={} rank={}\nseed: {}\nsamples: {}\n",
        ell.join(" "),
        cfg.j0().name(),
        cfg.gamma().rank(),
        opts.seed,
        opts.samples
    );
    SuiteReport { header, results }
}

fn tally(checked: usize, failures: usize, witness: Option<String>) -> Outcome {
    Outcome::Checked {
        passed: checked - failures,
        checked,
        witness,
    }
}

fn el(cfg: &Arc<AlgebraConfig>, idx: &BasisIndex) -> AlgebraElement {
    AlgebraElement::basis(cfg, idx.clone())
}

fn oracle(cfg: &Arc<AlgebraConfig>, o: &SuiteOptions, s: &mut Sampler) -> Outcome {
    let (mut fails, mut witness) = (0, None);
    for _ in 0..o.samples {
        let (u, v) = (el(cfg, &s.basis(cfg)), el(cfg, &s.basis(cfg)));
        let (a, b) = (bracket(&u, &v).expect("same config"), bracket_operator(&u, &v).expect("same config"));
        if a != b {
            fails += 1;
            witness.get_or_insert_with(|| {
                format!(
                    "[{}, {}]: closed {} vs operator {}",
                    format_element(&u),
                    format_element(&v),
                    format_element(&a),
                    format_element(&b)
                )
            });
        }
    }
    tally(o.samples, fails, witness)
}

fn antisymmetry(cfg: &Arc<AlgebraConfig>, o: &SuiteOptions, s: &mut Sampler) -> Outcome {
    let (mut fails, mut witness) = (0, None);
    for _ in 0..o.samples {
        let (u, v) = (el(cfg, &s.basis(cfg)), el(cfg, &s.basis(cfg)));
        let sum = bracket(&u, &v).expect("same config").add(&bracket(&v, &u).expect("same config"));
        if !sum.is_zero() {
            fails += 1;
            witness.get_or_insert_with(|| {
                format!("[{0}, {1}] + [{1}, {0}] = {2}", format_element(&u), format_element(&v), format_element(&sum))
            });
        }
    }
    tally(o.samples, fails, witness)
}

fn jacobi(cfg: &Arc<AlgebraConfig>, o: &SuiteOptions, s: &mut Sampler) -> Outcome {
    let n = o.samples.div_ceil(2);
    let br = |x: &AlgebraElement, y: &AlgebraElement| {
        bracket_with_constant(x, y, &o.jacobi_constant).expect("same config")
    };
    let (mut fails, mut witness) = (0, None);
    for _ in 0..n {
        let (u, v, w) = (el(cfg, &s.basis(cfg)), el(cfg, &s.basis(cfg)), el(cfg, &s.basis(cfg)));
        let sum = br(&br(&u, &v), &w).add(&br(&br(&v, &w), &u)).add(&br(&br(&w, &u), &v));
        if !sum.is_zero() {
            fails += 1;
            witness.get_or_insert_with(|| {
                format!(
                    "cyclic sum on ({}, {}, {}) = {}",
                    format_element(&u),
                    format_element(&v),
                    format_element(&w),
                    format_element(&sum)
                )
            });
        }
    }
    tally(n, fails, witness)
}

/// A random admissible homomorphism with small integer coordinates in the
/// nullspace basis.
pub fn random_hom(cfg: &Arc<AlgebraConfig>, s: &mut Sampler) -> HomGamma {
    let rank = cfg.gamma().rank();
    let mut values = vec![q(0); rank];
    for b in hom_prime_basis(cfg) {
        let c = q(s.int(-3, 3));
        for (v, x) in values.iter_mut().zip(&b) {
            *v += &c * x;
        }
    }
    HomGamma::new(cfg, values).expect("nullspace combination is admissible")
}

fn derivation_law(cfg: &Arc<AlgebraConfig>, o: &SuiteOptions, s: &mut Sampler) -> Outcome {
    let mut ops: Vec<LinearOperator> = (0..3).map(|_| d_mu(&random_hom(cfg, s))).collect();
    ops.extend(outer_indices(cfg).into_iter().map(|p| outer_partial_t(cfg, p).expect("outer index")));
    let per = o.samples.div_ceil(4).max(1);
    let (mut checked, mut fails, mut witness) = (0, 0, None);
    for op in &ops {
        let pairs: Vec<_> = (0..per).map(|_| (s.basis(cfg), s.basis(cfg))).collect();
        let r = check_derivation(op, &pairs);
        checked += r.checked;
        fails += r.failures;
        if let Some(f) = r.first_failure {
            witness.get_or_insert_with(|| {
                format!(
                    "{} on ({}, {}): D[u,v] = {} but [Du,v]+[u,Dv] = {}",
                    op.tag(),
                    format_basis(&f.u),
                    format_basis(&f.v),
                    format_element(&f.lhs),
                    format_element(&f.rhs)
                )
            });
        }
    }
    tally(checked, fails, witness)
}

/// Largest window enumerated in full; bigger configurations are probed with
/// sampled indices instead.
const WINDOW_BUDGET: u128 = 5000;

/// Number of entries of `window(cfg, r)`.
pub fn window_size(cfg: &AlgebraConfig, r: u32) -> u128 {
    let side = 2 * r as u128 + 1;
    let exps = r as u128 + 1;
    side.pow(cfg.gamma().rank() as u32) * exps.pow(cfg.allowed_exp_slots().len() as u32)
}

/// `window(cfg, r)` when it fits the budget, otherwise `n` sampled indices.
fn probe_indices(cfg: &AlgebraConfig, r: u32, n: usize, s: &mut Sampler) -> Vec<BasisIndex> {
    if window_size(cfg, r) <= WINDOW_BUDGET {
        window(cfg, r)
    } else {
        (0..n).map(|_| s.basis(cfg)).collect()
    }
}

fn mu_identity(cfg: &Arc<AlgebraConfig>, o: &SuiteOptions, s: &mut Sampler) -> Outcome {
    let top = cfg.shape().iota()[3];
    if top == 0 {
        return Outcome::Skipped("blocks 1..=3 are empty".into());
    }
    let w = probe_indices(cfg, 2, o.samples, s);
    let (mut fails, mut witness) = (0, None);
    for p in 1..=top {
        if let Some((idx, a, b)) = check_mu_p_identity(cfg, p, &w).expect("p in range") {
            fails += 1;
            witness.get_or_insert_with(|| {
                format!(
                    "p={} at {}: {} vs {}",
                    cfg.shape().label(p),
                    format_basis(&idx),
                    format_element(&a),
                    format_element(&b)
                )
            });
        }
    }
    tally(top, fails, witness)
}

fn eigen_relations(cfg: &Arc<AlgebraConfig>, o: &SuiteOptions, s: &mut Sampler) -> Outcome {
    let sh = cfg.shape();
    let block6: Vec<usize> = sh.block(6).collect();
    if block6.is_empty() {
        return Outcome::Skipped("block 6 is empty".into());
    }
    let n = o.samples.div_ceil(10).max(1);
    let (mut fails, mut witness) = (0, None);
    for _ in 0..n {
        let p = *s.pick(&block6);
        let idx = s.basis(cfg);
        let x = el(cfg, &idx);
        let (sp, sb) = (sh.slot(p), sh.slot(sh.bar(p)));
        let (ip, ipb) = (idx.exps.at(sp) as i64, idx.exps.at(sb) as i64);
        let t11 = el(cfg, &BasisIndex::t(cfg, cfg.unit_exps(p, 1).add(&cfg.unit_exps(sh.bar(p), 1))));
        let t2p = el(cfg, &BasisIndex::t(cfg, cfg.unit_exps(p, 2)));
        let t2pb = el(cfg, &BasisIndex::t(cfg, cfg.unit_exps(sh.bar(p), 2)));
        let first = bracket(&t11, &x).expect("same config");
        let second = bracket(&t2pb, &bracket(&t2p, &x).expect("same config")).expect("same config");
        let ok = first == x.scale(&q(ipb - ip)) && second == x.scale(&q(-4 * (ip + 1) * ipb));
        if !ok {
            fails += 1;
            witness.get_or_insert_with(|| {
                format!(
                    "p={} at {}: got {} and {}",
                    sh.label(p),
                    format_basis(&idx),
                    format_element(&first),
                    format_element(&second)
                )
            });
        }
    }
    tally(n, fails, witness)
}

fn round_trip(cfg: &Arc<AlgebraConfig>, o: &SuiteOptions, s: &mut Sampler) -> Outcome {
    let n = (o.samples / 100).max(1);
    let full = window_size(cfg, 2) <= WINDOW_BUDGET;
    let (mut fails, mut witness) = (0, None);
    for _ in 0..n {
        let mut small = Sampler::with_bounds(s.int(0, i64::MAX) as u64, 2, 2);
        let len = small.int(1, 20) as usize;
        let g = FiniteFunctional::from_values(cfg, (0..len).map(|_| (small.basis(cfg), small.nonzero(5))));
        let support: Vec<BasisIndex> = g.support().map(|(i, _)| i.clone()).collect();
        let psi = Cocycle::coboundary(Arc::new(g));
        let f = match trivialize(&psi) {
            Ok(f) => f,
            Err(e) => return Outcome::Skipped(e.to_string()),
        };
        let r = if full {
            verify_on_window(&psi, &f, 2)
        } else {
            // pairs whose bracket has a term on the support of g
            let pairs: Vec<_> = (0..o.samples)
                .map(|_| {
                    let target = small.pick(&support).clone();
                    let u = small.basis(cfg);
                    let v = BasisIndex::new(target.alpha.sub(&u.alpha), target.exps.clone());
                    (u, v)
                })
                .collect();
            verify_trivialization(&psi, &f, &pairs)
        };
        if let Some(w) = r.witness() {
            fails += 1;
            witness.get_or_insert(format!("{}: {w}", f.method()));
        }
    }
    tally(n, fails, witness)
}
