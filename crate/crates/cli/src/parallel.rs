//! Worker pool for skew-brace enumeration.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use hopfbrace_core::skew::{enumeration_jobs, merge_results, run_job, JobResult, SkewBrace};

use crate::schema::{SchemaError, SchemaResult};

pub const THREADS_VAR: &str = "HOPFBRACE_THREADS";

/// Worker count from `HOPFBRACE_THREADS`, else the available parallelism.
pub fn worker_count() -> SchemaResult<usize> {
    match std::env::var(THREADS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(SchemaError(format!("{THREADS_VAR} must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

pub struct Enumeration {
    pub braces: Vec<SkewBrace>,
    /// Count per catalog index of the additive group.
    pub per_dot: BTreeMap<usize, usize>,
}

/// Runs every job on at most `workers` threads. The result does not depend
/// on the worker count.
pub fn enumerate(n: usize, workers: usize) -> hopfbrace_core::Result<Enumeration> {
    let jobs = enumeration_jobs(n)?;
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<hopfbrace_core::Result<JobResult>>> = Mutex::new(Vec::with_capacity(jobs.len()));
    thread::scope(|s| {
        for _ in 0..workers.clamp(1, jobs.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(job) = jobs.get(i) else { break };
                let r = run_job(job);
                results.lock().expect("no worker panicked").push(r);
            });
        }
    });
    let results = results.into_inner().expect("no worker panicked").into_iter().collect::<hopfbrace_core::Result<Vec<_>>>()?;
    let mut keys: BTreeMap<usize, BTreeSet<Vec<Vec<usize>>>> = BTreeMap::new();
    for r in &results {
        keys.entry(r.dot).or_default().extend(r.found.keys().cloned());
    }
    let per_dot = keys.into_iter().map(|(d, k)| (d, k.len())).collect();
    Ok(Enumeration { braces: merge_results(results), per_dot })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfbrace_core::skew::enumerate_skew_braces;

    #[test]
    fn worker_count_does_not_change_the_output() {
        let serial = enumerate_skew_braces(6).unwrap();
        for w in [1, 2, 5] {
            let e = enumerate(6, w).unwrap();
            assert_eq!(e.braces, serial);
            assert_eq!(e.per_dot.values().sum::<usize>(), serial.len());
        }
    }
}
