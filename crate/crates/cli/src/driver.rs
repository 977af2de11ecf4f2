//! Batch verification driver: prime selection, the parallel sweep, and
//! report emission.
//!
//! Primes are distributed across a fixed-size rayon pool, one verifier (and
//! hence one class-number cache) per worker; results are aggregated and
//! sorted by prime before emission, so the report bytes never depend on the
//! worker count or completion order.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;

use classnum::exactmath::{first_primes, primes_below};
use classnum::identities::Verifier;
use classnum::{HurwitzCache, HurwitzSource, IdentityReport};

use crate::report::{self, Tally};
use crate::sentinel::SkewedConvention;
use crate::{OutputFormat, VerifyTarget};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeSelection {
    /// Every prime p <= N.
    MaxP(u64),
    /// The first K primes.
    FirstN(usize),
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyJob {
    pub target: VerifyTarget,
    pub selection: PrimeSelection,
    pub workers: usize,
    pub inject_fault: bool,
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// The selected primes, ascending, with primes below the target's minimum
/// dropped (the census checks need p >= 5).
pub fn select_primes(selection: PrimeSelection, target: VerifyTarget) -> Vec<u64> {
    let base = match selection {
        PrimeSelection::MaxP(n) => primes_below(n.saturating_add(1)),
        PrimeSelection::FirstN(k) => first_primes(k),
    };
    let min = target.min_prime();
    base.into_iter().filter(|&p| p >= min).collect()
}

/// Runs the target check over `primes` on a pool of `workers` threads, one
/// `H_w` source per worker, and returns the reports sorted by prime.
pub fn evaluate<S, F>(
    primes: &[u64],
    target: VerifyTarget,
    workers: usize,
    make_source: F,
) -> Vec<IdentityReport>
where
    S: HurwitzSource + Send,
    F: Fn() -> S + Send + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("building worker pool");
    // map_init builds one H_w source per rayon split; keep splits coarse so
    // caches amortize across many primes instead of being rebuilt constantly.
    let min_split = primes.len() / (workers.max(1) * 4) + 1;
    let mut reports: Vec<IdentityReport> = pool.install(|| {
        primes
            .par_iter()
            .with_min_len(min_split)
            .map_init(
                || Verifier::with_source(make_source()),
                |verifier, &p| target.run(verifier, p),
            )
            .collect()
    });
    reports.sort_by_key(|r| r.prime);
    reports
}

/// Full verify run: select, evaluate, emit, and map the outcome to an exit
/// code (0 all pass, 1 any failure, 2 on I/O trouble).
pub fn run_verify(job: &VerifyJob, format: OutputFormat, out: Option<&Path>) -> i32 {
    let primes = select_primes(job.selection, job.target);
    let reports = if job.inject_fault {
        evaluate(&primes, job.target, job.workers, SkewedConvention::new)
    } else {
        evaluate(&primes, job.target, job.workers, HurwitzCache::new)
    };

    let tally = Tally::of(&reports);
    if let Err(e) = write_report(&reports, format, out) {
        eprintln!("error: writing report: {e}");
        return 2;
    }
    // The table stream already ends with this line; repeat it on stderr for
    // the machine formats and for file output so the terminal still shows
    // the outcome.
    if format != OutputFormat::Table || out.is_some() {
        eprintln!("{}", report::summary_line(&tally));
    }
    if tally.failures > 0 {
        1
    } else {
        0
    }
}

fn write_report(
    reports: &[IdentityReport],
    format: OutputFormat,
    out: Option<&Path>,
) -> io::Result<()> {
    match out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            emit(&mut file, reports, format)?;
            file.flush()
        }
        None => {
            let stdout = io::stdout();
            let mut handle = BufWriter::new(stdout.lock());
            emit(&mut handle, reports, format)?;
            handle.flush()
        }
    }
}

fn emit<W: Write>(w: &mut W, reports: &[IdentityReport], format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Table => report::emit_table(w, reports),
        OutputFormat::Csv => report::emit_csv(w, reports),
        OutputFormat::Json => report::emit_json(w, reports),
    }
}
