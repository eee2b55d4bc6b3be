use lietrace::dseries::{check_factorization, formal_degree, trace_factor, weyl_dim};
use lietrace::genera::{product_genus, twisted_ahat_cpn, Genus};
use lietrace::pairs::{make_pair, CompactPair};
use lietrace::rootkit::{CartanMatrix, RootSystem, Weight};
use lietrace::{rat, Rational};
use num_traits::Zero;
use rayon::prelude::*;

use crate::job::{GenusJob, GenusName, JobSpec, SweepJob, TraceJob, VerifyJob};
use crate::report::{Report, GENUS_HEADER, SWEEP_HEADER, TRACE_HEADER, VERIFY_HEADER};
use crate::{format_rational, CliError};

pub const ORDER_CAP_VAR: &str = "LIETRACE_SERIES_ORDER_CAP";
pub const DEFAULT_ORDER_CAP: usize = 256;

/// Resource guards applied while running jobs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest power series order any job may request.
    pub series_order_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            series_order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

impl Limits {
    /// Reads `LIETRACE_SERIES_ORDER_CAP`, falling back to the default.
    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var(ORDER_CAP_VAR) {
            Err(_) => Ok(Self::default()),
            Ok(v) => v
                .trim()
                .parse()
                .map(|series_order_cap| Self { series_order_cap })
                .map_err(|_| CliError::Parse(format!("{ORDER_CAP_VAR}: not an integer: {v:?}"))),
        }
    }

    fn check_order(&self, field: &str, order: usize) -> Result<(), CliError> {
        if order > self.series_order_cap {
            return Err(CliError::Limit(format!(
                "{field}: series order {order} exceeds {ORDER_CAP_VAR}={}",
                self.series_order_cap
            )));
        }
        Ok(())
    }
}

pub fn run_job(job: &JobSpec, limits: &Limits) -> Result<Report, CliError> {
    match job {
        JobSpec::Trace(j) => run_trace(j),
        JobSpec::Genus(j) => run_genus(j, limits),
        JobSpec::Sweep(j) => run_sweep(j, limits),
        JobSpec::Verify(j) => run_verify(j),
    }
}

fn build_pair(cartan: &[Vec<i64>], marks: &[usize]) -> Result<CompactPair, CliError> {
    let m = CartanMatrix::new(cartan.to_vec()).map_err(|e| CliError::domain("cartan", e))?;
    let rs = RootSystem::new(m).map_err(|e| CliError::domain("cartan", e))?;
    make_pair(rs, marks.iter().copied()).map_err(|e| CliError::domain("noncompact_simple", e))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_trace(job: &TraceJob) -> Result<Report, CliError> {
    let pair = build_pair(&job.cartan, &job.noncompact_simple)?;
    let mu = Weight::new(job.weight.iter().map(|q| q.0.clone()).collect());
    let t = check_factorization(&pair, &mu).map_err(|e| CliError::domain("weight", e))?;
    let mut report = Report::new("trace", &TRACE_HEADER);
    report.rows.push(vec![
        join(mu.coords().iter().map(format_rational)),
        t.dim_v.to_string(),
        format_rational(&t.formal_degree),
        format_rational(&t.tau_g),
        format_rational(&t.factor),
        t.regular.to_string(),
    ]);
    Ok(report)
}

fn run_genus(job: &GenusJob, limits: &Limits) -> Result<Report, CliError> {
    let genus = match job.genus {
        GenusName::Ahat => Genus::AhatHalf,
        GenusName::L => Genus::L,
        GenusName::Todd => Genus::Todd,
        GenusName::Exptwist => Genus::ExpTwist(job.k.as_ref().expect("validated").0.clone()),
    };
    let max = job.dims.iter().copied().max().unwrap_or(0);
    limits.check_order("dims", usize::try_from(max).unwrap_or(0))?;
    let twists: Vec<Rational> = job.twists.iter().map(|q| q.0.clone()).collect();
    let value =
        product_genus(&genus, &job.dims, &twists).map_err(|e| CliError::domain("dims", e))?;
    let label = match &genus {
        Genus::ExpTwist(k) => format!("exptwist(k={})", format_rational(k)),
        g => g.name().to_string(),
    };
    let mut report = Report::new("genus", &GENUS_HEADER);
    report.rows.push(vec![
        label,
        join(&job.dims),
        join(twists.iter().map(format_rational)),
        format_rational(&value),
    ]);
    Ok(report)
}

/// Every `(n, k)` with `1 ≤ n ≤ n_max`, `|k| < n+1` and `k ≡ n+1 (mod 2)`.
pub fn hattori_range(n_max: u32) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for n in 1..=i64::from(n_max) {
        for k in (-n + 1..=n - 1).step_by(2) {
            out.push((n, k));
        }
    }
    out
}

fn run_sweep(job: &SweepJob, limits: &Limits) -> Result<Report, CliError> {
    limits.check_order("n_max", job.n_max as usize)?;
    let cells = hattori_range(job.n_max);
    let values = cells
        .par_iter()
        .map(|&(n, k)| twisted_ahat_cpn(n, k))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::domain("n_max", e))?;
    let mut report = Report::new("sweep", &SWEEP_HEADER);
    let mut nonzero = 0usize;
    for (&(n, k), v) in cells.iter().zip(&values) {
        if !v.is_zero() {
            nonzero += 1;
        }
        report
            .rows
            .push(vec![n.to_string(), k.to_string(), format_rational(v)]);
    }
    report.passed = nonzero == 0;
    report.summary.push(format!(
        "vanishing: {} ({} of {} zero)",
        if report.passed { "PASS" } else { "FAIL" },
        cells.len() - nonzero,
        cells.len()
    ));
    Ok(report)
}

/// Outcome of the property checks on one pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairCheck {
    pub weights_checked: usize,
    pub singular: usize,
    pub factorization_failures: Vec<String>,
    pub singular_failures: Vec<String>,
    pub scale_failures: Vec<String>,
}

impl PairCheck {
    pub fn passed(&self) -> bool {
        self.factorization_failures.is_empty()
            && self.singular_failures.is_empty()
            && self.scale_failures.is_empty()
    }
}

/// G-dominant integral weights with every fundamental coordinate in `0..=w`,
/// in lexicographic order.
pub fn dominant_grid(rank: usize, w: u32) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    loop {
        out.push(Weight::from_ints(&cur));
        let mut i = rank;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < i64::from(w) {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

fn check_weight(
    pair: &CompactPair,
    scaled: &CompactPair,
    mu: &Weight,
) -> (bool, [Option<String>; 3]) {
    let mut out = [None, None, None];
    let rs = pair.root_system();
    let shifted = mu + &pair.rho_c();
    // Regularity recomputed through the full form, not the root pairing.
    let mut singular = false;
    for beta in rs.positive_roots() {
        match rs.inner_product(&shifted, &rs.root_weight(beta)) {
            Ok(v) if v.is_zero() => singular = true,
            Ok(_) => {}
            Err(e) => out[1] = Some(format!("{mu}: {e}")),
        }
    }
    match check_factorization(pair, mu) {
        Ok(t) => {
            if singular && !t.tau_g.is_zero() {
                out[1] = Some(format!("{mu}: singular but tau_G = {}", t.tau_g));
            }
            if singular == t.regular {
                out[1] = Some(format!("{mu}: regularity scans disagree"));
            }
        }
        Err(e) => out[0] = Some(format!("{mu}: {e}")),
    }
    let same = (|| -> lietrace::Result<bool> {
        Ok(formal_degree(pair, mu)? == formal_degree(scaled, mu)?
            && trace_factor(pair, mu)? == trace_factor(scaled, mu)?
            && weyl_dim(pair, mu)? == weyl_dim(scaled, mu)?)
    })();
    match same {
        Ok(true) => {}
        Ok(false) => out[2] = Some(format!("{mu}: changed under rescaling")),
        Err(e) => out[2] = Some(format!("{mu}: {e}")),
    }
    (singular, out)
}

/// Runs the factorization, singular-vanishing and rescaling checks on
/// every weight of `dominant_grid(rank, weight_max)`.
pub fn check_pair(pair: &CompactPair, weight_max: u32) -> PairCheck {
    let scaled = pair.with_scaled_form(&rat(7));
    let grid = dominant_grid(pair.rank(), weight_max);
    let results: Vec<_> = grid
        .par_iter()
        .map(|mu| check_weight(pair, &scaled, mu))
        .collect();
    let mut check = PairCheck {
        weights_checked: grid.len(),
        ..PairCheck::default()
    };
    for (singular, [f, s, r]) in results {
        check.singular += usize::from(singular);
        check.factorization_failures.extend(f);
        check.singular_failures.extend(s);
        check.scale_failures.extend(r);
    }
    check
}

fn verdict(failures: &[String]) -> &'static str {
    if failures.is_empty() {
        "PASS"
    } else {
        "FAIL"
    }
}

fn push_pair_row(report: &mut Report, label: String, pair: &CompactPair, c: &PairCheck) {
    report.rows.push(vec![
        label,
        join(pair.noncompact_simple()),
        c.weights_checked.to_string(),
        verdict(&c.factorization_failures).to_string(),
        verdict(&c.singular_failures).to_string(),
        verdict(&c.scale_failures).to_string(),
    ]);
    report.passed &= c.passed();
}

fn push_summary(report: &mut Report, checks: &[PairCheck]) {
    let total: usize = checks.iter().map(|c| c.weights_checked).sum();
    let singular: usize = checks.iter().map(|c| c.singular).sum();
    let failures = |f: fn(&PairCheck) -> &Vec<String>| -> Vec<String> {
        checks.iter().flat_map(|c| f(c).iter().cloned()).collect()
    };
    let fact = failures(|c| &c.factorization_failures);
    let sing = failures(|c| &c.singular_failures);
    let scale = failures(|c| &c.scale_failures);
    report
        .summary
        .push(format!("factorization: {} ({total})", verdict(&fact)));
    report.summary.push(format!(
        "singular_vanishing: {} ({singular} singular of {total})",
        verdict(&sing)
    ));
    report
        .summary
        .push(format!("scale_invariance: {} ({total})", verdict(&scale)));
    for f in fact.iter().chain(&sing).chain(&scale).take(10) {
        report.summary.push(format!("  failure: {f}"));
    }
}

fn cartan_label(rows: &[Vec<i64>]) -> String {
    rows.iter().map(join).collect::<Vec<_>>().join(";")
}

fn run_verify(job: &VerifyJob) -> Result<Report, CliError> {
    let pair = build_pair(&job.cartan, &job.noncompact_simple)?;
    let check = check_pair(&pair, job.weight_max);
    let mut report = Report::new("verify", &VERIFY_HEADER);
    push_pair_row(&mut report, cartan_label(&job.cartan), &pair, &check);
    push_summary(&mut report, &[check]);
    Ok(report)
}

/// Named Cartan matrices of rank `1..=rank_max` used by [`verify_catalog`].
pub fn catalog(rank_max: usize) -> Vec<(&'static str, CartanMatrix)> {
    let all = [
        ("A1", CartanMatrix::a(1)),
        ("A2", CartanMatrix::a(2)),
        ("B2", CartanMatrix::b(2)),
        ("C2", CartanMatrix::c(2)),
        ("G2", CartanMatrix::g2()),
        ("A3", CartanMatrix::a(3)),
        ("B3", CartanMatrix::b(3)),
        ("C3", CartanMatrix::c(3)),
        ("A4", CartanMatrix::a(4)),
        ("B4", CartanMatrix::b(4)),
        ("C4", CartanMatrix::c(4)),
        ("D4", CartanMatrix::d(4)),
        ("F4", CartanMatrix::f4()),
    ];
    all.into_iter()
        .filter(|(_, m)| m.rank() <= rank_max)
        .collect()
}

/// Property suite over every catalog type of rank at most `rank_max` and
/// every choice of noncompact simple roots.
pub fn verify_catalog(rank_max: usize, weight_max: u32) -> Result<Report, CliError> {
    let mut report = Report::new("verify", &VERIFY_HEADER);
    let mut checks = Vec::new();
    for (name, m) in catalog(rank_max) {
        let rs = RootSystem::new(m).map_err(|e| CliError::domain("rank_max", e))?;
        let r = rs.rank();
        for mask in 0u32..(1 << r) {
            let marks = (1..=r).filter(|i| mask & (1 << (i - 1)) != 0);
            let pair = make_pair(rs.clone(), marks).map_err(|e| CliError::domain("rank_max", e))?;
            let check = check_pair(&pair, weight_max);
            push_pair_row(&mut report, name.to_string(), &pair, &check);
            checks.push(check);
        }
    }
    push_summary(&mut report, &checks);
    Ok(report)
}
