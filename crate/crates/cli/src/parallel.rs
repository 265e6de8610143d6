//! Multi-threaded exhaustive search.
//!
//! The root is expanded breadth-first until the frontier is wide enough to
//! feed every worker. Each frontier unit is then searched to exhaustion on
//! its own stack. Pops made while building the frontier are counted, so the
//! totals equal the sequential run.

use rayon::prelude::*;
use travgraph_core::traversal::{Engine, HamiltonCounter, HamiltonStats, PathSink, SearchSummary, SearchTable, WorkUnit};
use travgraph_core::{MultiTraversalRelation, VertexId};

use crate::error::{Error, Result};

/// Frontier units per worker.
const UNITS_PER_THREAD: usize = 16;

struct Split {
    frontier: Vec<WorkUnit>,
    summary: SearchSummary,
    /// Maximal paths met while splitting.
    finished: Vec<Vec<VertexId>>,
}

fn split(table: &SearchTable, engine: Engine, start: VertexId, width: usize) -> Result<Split> {
    let mut frontier = vec![table.start_unit(start)?];
    let mut summary = SearchSummary { disconnected: !table.is_connected(), ..Default::default() };
    let mut finished = Vec::new();
    while !frontier.is_empty() && frontier.len() < width {
        let mut next = Vec::new();
        for unit in &frontier {
            summary.loop_count += 1;
            let children = table.expand(engine, unit);
            if children.is_empty() {
                summary.breadth += 1;
                finished.push(table.vertices_of(unit));
            }
            next.extend(children);
        }
        frontier = next;
    }
    Ok(Split { frontier, summary, finished })
}

fn pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Usage(format!("cannot start {threads} worker threads: {e}")))
}

fn merge(a: SearchSummary, b: SearchSummary) -> SearchSummary {
    SearchSummary {
        loop_count: a.loop_count + b.loop_count,
        breadth: a.breadth + b.breadth,
        disconnected: a.disconnected || b.disconnected,
    }
}

/// Runs the search with one sink per frontier unit. Returns the combined
/// counts and the sinks in frontier order, preceded by a sink holding the
/// paths met while splitting.
pub fn par_search<S, F>(
    g: &MultiTraversalRelation,
    start: VertexId,
    engine: Engine,
    threads: usize,
    make_sink: F,
) -> Result<(SearchSummary, Vec<S>)>
where
    S: PathSink + Send,
    F: Fn() -> S + Sync,
{
    let threads = threads.max(1);
    let table = SearchTable::new(g);
    let Split { frontier, summary, finished } = split(&table, engine, start, threads * UNITS_PER_THREAD)?;
    let mut head = make_sink();
    for p in &finished {
        head.accept(p);
    }
    let runs: Vec<(SearchSummary, S)> = pool(threads)?.install(|| {
        frontier
            .into_par_iter()
            .map(|unit| {
                let mut sink = make_sink();
                let s = table.run(engine, vec![unit], &mut sink);
                (s, sink)
            })
            .collect()
    });
    let mut total = summary;
    let mut sinks = vec![head];
    for (s, sink) in runs {
        total = merge(total, s);
        sinks.push(sink);
    }
    Ok((total, sinks))
}

pub fn par_search_stats(
    g: &MultiTraversalRelation,
    start: VertexId,
    engine: Engine,
    threads: usize,
) -> Result<(SearchSummary, HamiltonStats)> {
    let (summary, counters) = par_search(g, start, engine, threads, || HamiltonCounter::new(g, start))?;
    let stats = counters.iter().fold(HamiltonStats::default(), |acc, c| HamiltonStats {
        hamiltonian_paths: acc.hamiltonian_paths + c.stats.hamiltonian_paths,
        hamiltonian_cycles: acc.hamiltonian_cycles + c.stats.hamiltonian_cycles,
    });
    Ok((summary, stats))
}

/// Every maximal path, sorted.
pub fn par_search_paths(
    g: &MultiTraversalRelation,
    start: VertexId,
    engine: Engine,
    threads: usize,
) -> Result<(SearchSummary, Vec<Vec<VertexId>>)> {
    #[derive(Default)]
    struct Keep(Vec<Vec<VertexId>>);
    impl PathSink for Keep {
        fn accept(&mut self, path: &[VertexId]) {
            self.0.push(path.to_vec());
        }
    }
    let (summary, sinks) = par_search(g, start, engine, threads, Keep::default)?;
    let mut all: Vec<_> = sinks.into_iter().flat_map(|k| k.0).collect();
    all.sort();
    Ok((summary, all))
}
