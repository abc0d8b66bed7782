//! Parallel exhaustive search on top of [`hyperturan_core::extremal::Generator`].

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use hyperturan_core::extremal::{Accumulator, Generator, SearchResult, SearchSpec};
use hyperturan_core::{Result, UniformHypergraph};
use rayon::prelude::*;

/// Subtrees handed to each worker thread on average.
const SUBTREES_PER_THREAD: usize = 8;

/// Runs the search on `threads` workers. The tree is expanded breadth-first
/// until there are enough independent subtrees, which are then searched in
/// parallel and merged in a fixed order, so the result only depends on the
/// spec and the thread count.
pub fn parallel_extremal(
    spec: &SearchSpec,
    threads: usize,
    time_budget: Option<Duration>,
) -> Result<SearchResult> {
    let gen = Generator::new(spec)?;
    let threads = threads.max(1);
    let deadline = time_budget.map(|d| Instant::now() + d);
    let budget = spec.node_budget.unwrap_or(u64::MAX);
    let spent = AtomicU64::new(0);
    let halted = AtomicBool::new(false);
    let stop = || {
        let over = spent.fetch_add(1, Ordering::Relaxed) >= budget
            || deadline.is_some_and(|d| Instant::now() >= d);
        if over {
            halted.store(true, Ordering::Relaxed);
        }
        over
    };

    let mut head = gen.accumulator();
    let mut frontier = vec![gen.root()];
    while !frontier.is_empty() && frontier.len() < threads * SUBTREES_PER_THREAD {
        let mut next = Vec::new();
        for node in frontier {
            if stop() {
                return Ok(head.finish(false));
            }
            next.extend(gen.process(&node, &mut head)?);
        }
        frontier = next;
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| hyperturan_core::Error::InvalidParameter(e.to_string()))?;
    let parts: Vec<Result<Accumulator>> = pool.install(|| {
        frontier
            .into_par_iter()
            .map(|root: UniformHypergraph| {
                let mut acc = gen.accumulator();
                gen.run_subtree(root, &mut acc, &mut |_| stop())?;
                Ok(acc)
            })
            .collect()
    });
    for part in parts {
        head.merge(part?);
    }
    Ok(head.finish(!halted.load(Ordering::Relaxed)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperturan_core::extremal::{enumerate_extremal, Objective};
    use hyperturan_core::PatternGraph;

    #[test]
    fn matches_serial() {
        let spec = SearchSpec {
            linear: true,
            forbidden: vec![PatternGraph::cycle(3).unwrap()],
            objective: Objective::SpectralRadius,
            ..SearchSpec::new(7, 3)
        };
        let serial = enumerate_extremal(&spec).unwrap();
        for threads in [1, 3] {
            let par = parallel_extremal(&spec, threads, None).unwrap();
            assert!((par.optimum - serial.optimum).abs() < 1e-9);
            assert_eq!(par.witnesses, serial.witnesses);
            assert_eq!(par.nodes, serial.nodes);
            assert!(par.exhaustive);
        }
    }

    #[test]
    fn budget_marks_partial() {
        let spec = SearchSpec {
            node_budget: Some(10),
            ..SearchSpec::new(6, 2)
        };
        let res = parallel_extremal(&spec, 2, None).unwrap();
        assert!(!res.exhaustive);
    }
}
