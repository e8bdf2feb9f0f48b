//! Exhaustive verification sweeps with deterministic JSON reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::basis::{basis_nu_size, btilde, certify, flatten, h1_recursion_holds};
use crate::combinatorics::{combinations, factorial};
use crate::determinant::delta_l;
use crate::diagram::LatticeDiagram;
use crate::error::{Error, Result};
use crate::ideal::{coinvariant_generators, htoe_holds, punctured_ideal, tanisaki_dual_generators, tanisaki_e_generators};
use crate::linalg::{annihilates, derivative_closure, y_free_closure};
use crate::operators::apply;
use crate::partition::Partition;
use crate::poly::{Context, Polynomial};
use crate::symmetric::{complete, sym_poly, SymKind};

/// Side of the box holding the diagrams of the `props` suite.
pub const PROPS_BOX: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Props,
    Dtani,
    Tmuij,
    Htoe,
    Nfact,
    Basis,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Props, Suite::Dtani, Suite::Tmuij, Suite::Htoe, Suite::Nfact, Suite::Basis];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Props => "props",
            Suite::Dtani => "dtani",
            Suite::Tmuij => "tmuij",
            Suite::Htoe => "htoe",
            Suite::Nfact => "nfact",
            Suite::Basis => "basis",
        }
    }

    /// Largest accepted `n-max`. For `tmuij` and `basis` it bounds `|μ|`,
    /// for `props` the number of cells, otherwise `n`.
    pub fn limit(self) -> usize {
        match self {
            Suite::Props => 5,
            Suite::Dtani => 6,
            Suite::Tmuij => 7,
            Suite::Htoe => 6,
            Suite::Nfact => 5,
            Suite::Basis => 7,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Instance {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hole: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<LatticeDiagram>,
}

impl Instance {
    fn partition(&self) -> Partition {
        Partition::new(self.mu.clone().expect("instance carries a partition")).expect("enumerated partition")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

impl Check {
    pub fn equal(name: impl Into<String>, expected: impl Serialize, actual: impl Serialize) -> Self {
        let expected = serde_json::to_value(expected).expect("serializable");
        let actual = serde_json::to_value(actual).expect("serializable");
        let pass = expected == actual;
        Check { name: name.into(), expected, actual, pass }
    }

    /// Polynomials are summarized by term count and a digest of their
    /// canonical JSON.
    pub fn polynomials(name: impl Into<String>, expected: &Polynomial, actual: &Polynomial) -> Self {
        let pass = expected == actual;
        Check { name: name.into(), expected: fingerprint(expected), actual: fingerprint(actual), pass }
    }

    fn failed(name: impl Into<String>, expected: impl Serialize, err: &Error) -> Self {
        Check {
            name: name.into(),
            expected: serde_json::to_value(expected).expect("serializable"),
            actual: json!({ "error": err.to_string() }),
            pass: false,
        }
    }
}

fn fingerprint(p: &Polynomial) -> Value {
    let text = serde_json::to_string(p).expect("serializable");
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    json!({ "terms": p.len(), "digest": format!("{h:016x}") })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub instance: Instance,
    pub checks: Vec<Check>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub jobs: usize,
    pub degree_cap: Option<usize>,
    /// Adds wall-clock time to each report, which breaks byte stability.
    pub timing: bool,
}

impl VerifyOptions {
    pub fn new(n_max: usize) -> Self {
        VerifyOptions { n_max, jobs: 1, degree_cap: None, timing: false }
    }
}

/// The instances a suite sweeps, in report order.
pub fn instances(suite: Suite, n_max: usize) -> Result<Vec<Instance>> {
    if n_max > suite.limit() {
        return Err(Error::LimitExceeded { suite: suite.to_string(), n_max, limit: suite.limit() });
    }
    let mut out = Vec::new();
    match suite {
        Suite::Props => {
            for size in 1..=n_max {
                for d in LatticeDiagram::all_in_box(PROPS_BOX, PROPS_BOX, size) {
                    out.push(Instance { n: size, diagram: Some(d), ..Default::default() });
                }
            }
        }
        Suite::Dtani | Suite::Nfact => {
            for n in 1..=n_max {
                for mu in Partition::all(n) {
                    out.push(Instance { n, mu: Some(mu.parts().to_vec()), ..Default::default() });
                }
            }
        }
        Suite::Htoe => out.extend((1..=n_max).map(|n| Instance { n, ..Default::default() })),
        Suite::Tmuij | Suite::Basis => {
            for m in 2..=n_max {
                for mu in Partition::all(m) {
                    for (i, j) in mu.cells().collect::<Vec<_>>() {
                        out.push(Instance { n: m - 1, mu: Some(mu.parts().to_vec()), hole: Some([i, j]), ..Default::default() });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Runs every instance of a suite; the output order is the instance order
/// for any number of jobs.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let list = instances(suite, opts.n_max)?;
    if opts.jobs <= 1 {
        return Ok(list.iter().map(|inst| run_instance(suite, inst, opts)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Parse(format!("worker pool: {e}")))?;
    Ok(pool.install(|| list.par_iter().map(|inst| run_instance(suite, inst, opts)).collect()))
}

pub fn run_instance(suite: Suite, inst: &Instance, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let checks = match suite {
        Suite::Props => props_checks(inst),
        Suite::Dtani => dtani_checks(inst, opts.degree_cap),
        Suite::Tmuij => tmuij_checks(inst, opts.degree_cap),
        Suite::Htoe => htoe_checks(inst, opts.degree_cap),
        Suite::Nfact => nfact_checks(inst),
        Suite::Basis => basis_checks(inst),
    };
    let pass = checks.iter().all(|c| c.pass);
    let timing_ms = opts.timing.then(|| start.elapsed().as_millis() as u64);
    VerificationReport { suite, instance: inst.clone(), checks, pass, timing_ms }
}

/// Operators exercised on a diagram with `n` cells.
pub fn props_operators(n: usize) -> Vec<SymKind> {
    let mut ops = Vec::new();
    for k in 1..=n {
        ops.push(SymKind::Power(k));
        ops.push(SymKind::Elementary(k));
        ops.push(SymKind::Complete(k));
    }
    for size in 1..=3 {
        for lambda in Partition::all(size) {
            ops.push(SymKind::Schur(lambda));
        }
    }
    ops
}

fn props_checks(inst: &Instance) -> Vec<Check> {
    let l = inst.diagram.as_ref().expect("props instance carries a diagram");
    let ctx = Context::new(inst.n);
    let all: Vec<usize> = (0..inst.n).collect();
    let delta = match delta_l(ctx, l) {
        Ok(d) => d,
        Err(e) => return vec![Check::failed("delta", "polynomial", &e)],
    };
    props_operators(inst.n)
        .into_iter()
        .map(|op| {
            let name = op.to_string();
            let run = || -> Result<(Polynomial, Polynomial)> {
                let oracle = sym_poly(ctx, &op, &all)?.apply_diff_operator(&delta)?;
                let combinatorial = apply(l, &op)?.to_polynomial(ctx)?;
                Ok((oracle, combinatorial))
            };
            match run() {
                Ok((oracle, combinatorial)) => Check::polynomials(name, &oracle, &combinatorial),
                Err(e) => Check::failed(name, "polynomial", &e),
            }
        })
        .collect()
}

fn dtani_checks(inst: &Instance, cap: Option<usize>) -> Vec<Check> {
    let mu = inst.partition();
    let ctx = Context::new(inst.n);
    let ferrers = mu.ferrers();
    let mut checks = Vec::new();
    let run = |checks: &mut Vec<Check>| -> Result<()> {
        let h_form = tanisaki_dual_generators(&mu)?;
        let mut failing = Vec::new();
        for g in h_form.generators() {
            if !annihilates(ctx, &g.polynomial, &ferrers)? {
                failing.push(g.label.clone());
            }
        }
        checks.push(Check::equal("h-generators annihilate", Vec::<()>::new(), failing));
        let dims = y_free_closure(ctx, &ferrers)?.x_degree_dims();
        let h_hilbert = h_form.graded(cap)?.hilbert_function();
        checks.push(Check::equal("hilbert(h-form) = dims(M0)", &dims, &h_hilbert));
        let e_hilbert = tanisaki_e_generators(&mu)?.graded(cap)?.hilbert_function();
        checks.push(Check::equal("hilbert(e-form) = hilbert(h-form)", &h_hilbert, &e_hilbert));
        Ok(())
    };
    if let Err(e) = run(&mut checks) {
        checks.push(Check::failed("sweep", "completed", &e));
    }
    checks
}

fn tmuij_checks(inst: &Instance, cap: Option<usize>) -> Vec<Check> {
    let mu = inst.partition();
    let [i, j] = inst.hole.expect("tmuij instance carries a hole");
    let ctx = Context::new(inst.n);
    let mut checks = Vec::new();
    let run = |checks: &mut Vec<Check>| -> Result<()> {
        let hole = mu.remove_cell(i, j)?;
        let dims = y_free_closure(ctx, &hole)?.x_degree_dims();
        let ideal = punctured_ideal(&mu, i, j)?;
        if mu.is_column_top(i, j)? {
            let nu0 = mu.corner_ne(i, j, 0)?.nu;
            let reduced = tanisaki_dual_generators(&nu0)?.graded(cap)?.hilbert_function();
            let hilbert = ideal.graded(cap)?.hilbert_function();
            checks.push(Check::equal("hilbert(reduction) = hilbert(I0 nu(0))", &reduced, &hilbert));
            checks.push(Check::equal("hilbert(reduction) = dims(M0)", &dims, &hilbert));
            return Ok(());
        }
        let mut failing = Vec::new();
        for g in ideal.generators() {
            if !annihilates(ctx, &g.polynomial, &hole)? {
                failing.push(g.label.clone());
            }
        }
        checks.push(Check::equal("generators annihilate", Vec::<()>::new(), failing));
        let ell = mu.cells_above(i, j)? as u32;
        let h1 = complete(ctx, 1, &(0..inst.n).collect::<Vec<_>>())?;
        checks.push(Check::equal("h1^ell annihilates", false, annihilates(ctx, &h1.pow(ell), &hole)?));
        checks.push(Check::equal("h1^(ell+1) annihilates", true, annihilates(ctx, &h1.pow(ell + 1), &hole)?));
        let hilbert = ideal.graded(cap)?.hilbert_function();
        checks.push(Check::equal("hilbert = dims(M0)", &dims, &hilbert));
        let mut basis_total = 0;
        for zeta in 0..=ell as usize {
            basis_total += basis_nu_size(&mu.corner_ne(i, j, zeta)?.nu)?;
        }
        checks.push(Check::equal("dim = sum |B nu(zeta)|", basis_total, hilbert.iter().sum::<usize>()));
        Ok(())
    };
    if let Err(e) = run(&mut checks) {
        checks.push(Check::failed("sweep", "completed", &e));
    }
    checks
}

/// Largest `r` in the `htoe` sweep.
pub const HTOE_MAX_R: usize = 4;

fn htoe_checks(inst: &Instance, cap: Option<usize>) -> Vec<Check> {
    let n = inst.n;
    let mut checks = Vec::new();
    let coinvariant = match coinvariant_generators(n).graded(cap) {
        Ok(c) => c,
        Err(e) => return vec![Check::failed("coinvariant ideal", "finite", &e)],
    };
    for k in 0..=n {
        for s in combinations(n, k) {
            let mut failing = Vec::new();
            for r in 0..=HTOE_MAX_R {
                match htoe_holds(&coinvariant, &s, r) {
                    Ok(true) => {}
                    Ok(false) => failing.push(json!(r)),
                    Err(e) => failing.push(json!({ "r": r, "error": e.to_string() })),
                }
            }
            let label: Vec<usize> = s.iter().map(|v| v + 1).collect();
            checks.push(Check::equal(format!("S = {label:?}"), Vec::<Value>::new(), failing));
        }
    }
    checks
}

fn nfact_checks(inst: &Instance) -> Vec<Check> {
    let mu = inst.partition();
    let ctx = Context::new(inst.n);
    let run = || -> Result<usize> { Ok(derivative_closure(&delta_l(ctx, &mu.ferrers())?)?.dim()) };
    let expected = factorial(inst.n) as usize;
    match run() {
        Ok(d) => vec![Check::equal("dim M = n!", expected, d)],
        Err(e) => vec![Check::failed("dim M = n!", expected, &e)],
    }
}

fn basis_checks(inst: &Instance) -> Vec<Check> {
    let mu = inst.partition();
    let [i, j] = inst.hole.expect("basis instance carries a hole");
    let ctx = Context::new(inst.n);
    let mut checks = Vec::new();
    let run = |checks: &mut Vec<Check>| -> Result<()> {
        let parts = btilde(&mu, i, j)?;
        let space = y_free_closure(ctx, &mu.remove_cell(i, j)?)?;
        let cert = certify(ctx, flatten(&parts), &space);
        checks.push(Check::equal("inside M0", Vec::<usize>::new(), &cert.outside));
        checks.push(Check::equal("independent", Vec::<usize>::new(), &cert.dependent));
        checks.push(Check::equal("|B~| = dim M0", cert.target_dim, cert.cardinality));
        let mut expected = 0;
        for p in &parts {
            expected += basis_nu_size(&Partition::new(p.nu.clone())?)?;
        }
        checks.push(Check::equal("|B~| = sum |B nu(zeta)|", expected, cert.cardinality));
        for p in &parts {
            let nu = Partition::new(p.nu.clone())?;
            let mut failing = Vec::new();
            for u in p.u..=p.alpha {
                if !h1_recursion_holds(u, p.beta, &nu)? {
                    failing.push(u);
                }
            }
            checks.push(Check::equal(format!("h1 recursion zeta = {}", p.zeta), Vec::<usize>::new(), failing));
        }
        Ok(())
    };
    if let Err(e) = run(&mut checks) {
        checks.push(Check::failed("sweep", "completed", &e));
    }
    checks
}

/// One JSON object per line.
pub fn to_json_lines(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("serializable"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(instances(Suite::Nfact, 9), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let reports = run_suite(suite, &VerifyOptions::new(3)).unwrap();
            assert!(!reports.is_empty());
            for r in &reports {
                assert!(r.pass, "{}", serde_json::to_string(r).unwrap());
            }
        }
    }

    #[test]
    fn reports_are_byte_stable() {
        let a = to_json_lines(&run_suite(Suite::Tmuij, &VerifyOptions::new(4)).unwrap());
        let mut opts = VerifyOptions::new(4);
        opts.jobs = 2;
        let b = to_json_lines(&run_suite(Suite::Tmuij, &opts).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn fingerprint_separates_polynomials() {
        let ctx = Context::new(2);
        let a = Polynomial::x(ctx, 0);
        let b = Polynomial::x(ctx, 1);
        assert!(!Check::polynomials("x", &a, &b).pass);
        assert!(Check::polynomials("x", &a, &a.clone()).pass);
        assert_ne!(fingerprint(&a), fingerprint(&b));
    }

    #[test]
    fn failed_checks_surface_errors() {
        let opts = VerifyOptions { degree_cap: Some(1), ..VerifyOptions::new(3) };
        let reports = run_suite(Suite::Dtani, &opts).unwrap();
        assert!(reports.iter().any(|r| !r.pass));
    }
}
