//! Order-preserving chunked execution for range sweeps.

/// Splits `[0, len)` into at most `jobs` contiguous spans, runs `work` on
/// each span (concurrently when `jobs > 1`), and returns the results in span
/// order. Output is therefore independent of the worker count.
pub(crate) fn parallel_spans<T, F>(len: u64, jobs: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64) -> T + Sync,
{
    let jobs = jobs.clamp(1, 1024).min(len.max(1).try_into().unwrap_or(usize::MAX));
    if jobs == 1 {
        return vec![work(0, len)];
    }
    let chunk = len / jobs as u64;
    let extra = len % jobs as u64;
    std::thread::scope(|scope| {
        let work = &work;
        let mut handles = Vec::with_capacity(jobs);
        let mut start = 0;
        for i in 0..jobs {
            let end = start + chunk + u64::from((i as u64) < extra);
            handles.push(scope.spawn(move || work(start, end)));
            start = end;
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    })
}
