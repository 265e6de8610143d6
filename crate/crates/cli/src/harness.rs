//! Experiment runners and their tabular reports.
//!
//! Every report renders as TSV with a header row, or serializes to JSON.
//! Wall times are measured but only rendered on request so that repeated
//! runs produce identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use travgraph_core::coloring::{self, Coloring, IntervalPartition};
use travgraph_core::traversal::{search_stats, Engine, HamiltonStats, SearchSummary};
use travgraph_core::{generators, MultiTraversalRelation, VertexId};

use crate::error::{Error, Result};
use crate::parallel::par_search_stats;

/// Largest complete graph searched without `force`.
pub const EULER_DEFAULT_MAX: u32 = 9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub label: String,
    pub loop_count: u64,
    pub breadth: u64,
    pub ratio: f64,
    pub hamiltonian_paths: u64,
    pub hamiltonian_cycles: u64,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub rows: Vec<ReportRow>,
}

impl ExperimentReport {
    pub fn to_tsv(&self, timing: bool) -> String {
        let mut out = String::from("label\tloop_count\tbreadth\tratio\thamiltonian_paths\thamiltonian_cycles");
        if timing {
            out.push_str("\twall_time_ms");
        }
        out.push('\n');
        for r in &self.rows {
            let _ = write!(
                out,
                "{}\t{}\t{}\t{:.9}\t{}\t{}",
                r.label, r.loop_count, r.breadth, r.ratio, r.hamiltonian_paths, r.hamiltonian_cycles
            );
            if timing {
                let _ = write!(out, "\t{:.3}", r.wall_time_ms);
            }
            out.push('\n');
        }
        out
    }
}

/// Search counts from `start`. `threads > 1` selects the parallel driver,
/// whose counts equal the sequential ones.
pub fn run_search(
    g: &MultiTraversalRelation,
    start: VertexId,
    engine: Engine,
    threads: usize,
) -> Result<(SearchSummary, HamiltonStats)> {
    if threads > 1 {
        par_search_stats(g, start, engine, threads)
    } else {
        Ok(search_stats(g, start, engine)?)
    }
}

pub fn traverse_row(
    label: impl Into<String>,
    g: &MultiTraversalRelation,
    start: VertexId,
    engine: Engine,
    threads: usize,
) -> Result<ReportRow> {
    let t = Instant::now();
    let (s, h) = run_search(g, start, engine, threads)?;
    Ok(ReportRow {
        label: label.into(),
        loop_count: s.loop_count,
        breadth: s.breadth,
        ratio: s.ratio(),
        hamiltonian_paths: h.hamiltonian_paths,
        hamiltonian_cycles: h.hamiltonian_cycles,
        wall_time_ms: t.elapsed().as_secs_f64() * 1e3,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EulerRow {
    pub n: u32,
    #[serde(flatten)]
    pub row: ReportRow,
    /// `|ratio - e|`.
    pub deviation: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct EulerReport {
    pub rows: Vec<EulerRow>,
}

impl EulerReport {
    pub fn to_tsv(&self, timing: bool) -> String {
        let mut out = String::from("n\tloop_count\tbreadth\tratio\tdeviation");
        if timing {
            out.push_str("\twall_time_ms");
        }
        out.push('\n');
        for r in &self.rows {
            let _ = write!(out, "{}\t{}\t{}\t{:.9}\t{:.3e}", r.n, r.row.loop_count, r.row.breadth, r.row.ratio, r.deviation);
            if timing {
                let _ = write!(out, "\t{:.3}", r.row.wall_time_ms);
            }
            out.push('\n');
        }
        out
    }
}

/// Complete graphs `K_3 ..= K_{n_max}` searched from vertex 1.
pub fn euler_report(n_max: u32, force: bool, engine: Engine, threads: usize) -> Result<EulerReport> {
    if n_max < 3 {
        return Err(Error::Refused(format!("euler needs n_max >= 3, got {n_max}")));
    }
    if n_max > EULER_DEFAULT_MAX && !force {
        return Err(Error::Refused(format!(
            "K_{n_max} is beyond the default limit of {EULER_DEFAULT_MAX}; pass --force to run it"
        )));
    }
    let rows = (3..=n_max)
        .map(|n| {
            let g = generators::complete(n)?;
            let row = traverse_row(format!("K{n}"), &g, VertexId::of(1), engine, threads)?;
            let deviation = (row.ratio - std::f64::consts::E).abs();
            Ok(EulerRow { n, row, deviation })
        })
        .collect::<Result<_>>()?;
    Ok(EulerReport { rows })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    /// Hamiltonian cycles found from each start vertex.
    pub rows: Vec<(u32, u64)>,
    pub pass: bool,
}

impl InvariantReport {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("start\thamiltonian_cycles\n");
        for (v, c) in &self.rows {
            let _ = writeln!(out, "{v}\t{c}");
        }
        let _ = writeln!(out, "verdict\t{}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

pub fn invariant_report(g: &MultiTraversalRelation) -> Result<InvariantReport> {
    let counts = travgraph_core::traversal::traversal_invariant(g)?;
    let rows: Vec<(u32, u64)> = counts.into_iter().map(|(v, c)| (v.get(), c)).collect();
    let pass = rows.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(InvariantReport { rows, pass })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorAlgo {
    Bogpc,
    Boerc,
}

impl ColorAlgo {
    pub fn run(self, g: &MultiTraversalRelation, seed: u64) -> Coloring {
        match self {
            ColorAlgo::Bogpc => coloring::bogpc(g, seed),
            ColorAlgo::Boerc => coloring::boerc(g, seed),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ColorTrials {
    pub algo: ColorAlgo,
    pub trials: u64,
    pub first_seed: u64,
    pub max_degree: usize,
    /// Number of runs that used each color count.
    pub counts: BTreeMap<usize, u64>,
    /// Runs whose output was not a proper coloring.
    pub invalid: u64,
    /// Runs that used more than `max_degree + 1` colors.
    pub over_bound: u64,
}

impl ColorTrials {
    pub fn best(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }

    pub fn frequency(&self, k: usize) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        self.counts.get(&k).copied().unwrap_or(0) as f64 / self.trials as f64
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("k\truns\tfrequency\n");
        for (&k, &c) in &self.counts {
            let _ = writeln!(out, "{k}\t{c}\t{:.4}", self.frequency(k));
        }
        out
    }
}

/// Runs `algo` with seeds `first_seed .. first_seed + trials`; every output
/// is checked.
pub fn color_trials(g: &MultiTraversalRelation, algo: ColorAlgo, trials: u64, first_seed: u64) -> Result<ColorTrials> {
    let max_degree = coloring::to_edge_relation(g).max_degree();
    let outcomes: Vec<(usize, bool)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let c = algo.run(g, first_seed.wrapping_add(i));
            coloring::verify_coloring(g, &c).map(|ok| (c.k, ok))
        })
        .collect::<std::result::Result<_, _>>()?;
    let mut counts = BTreeMap::new();
    let (mut invalid, mut over_bound) = (0, 0);
    for (k, ok) in outcomes {
        *counts.entry(k).or_insert(0) += 1;
        invalid += u64::from(!ok);
        over_bound += u64::from(k > max_degree + 1);
    }
    Ok(ColorTrials { algo, trials, first_seed, max_degree, counts, invalid, over_bound })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactSummary {
    /// Layouts visited before stopping.
    pub layouts: u64,
    /// `true` when `max_layouts` stopped the walk early.
    pub truncated: bool,
    /// Visited layouts by number of independent classes.
    pub by_classes: BTreeMap<usize, u64>,
    /// Least `|classes| + |remainder|` over all layouts.
    pub bound: usize,
    /// Least remainder among layouts attaining `bound`.
    pub remainder: usize,
    pub best: Layout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Layout {
    pub classes: Vec<Vec<u32>>,
    pub remainder: Vec<u32>,
}

impl From<&IntervalPartition> for Layout {
    fn from(p: &IntervalPartition) -> Self {
        let ids = |vs: &[VertexId]| vs.iter().map(|v| v.get()).collect();
        Layout { classes: p.classes.iter().map(|c| ids(c)).collect(), remainder: ids(&p.remainder) }
    }
}

impl ExactSummary {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("classes\tlayouts\n");
        for (&c, &n) in &self.by_classes {
            let _ = writeln!(out, "{c}\t{n}");
        }
        let _ = writeln!(out, "total\t{}{}", self.layouts, if self.truncated { "+" } else { "" });
        let _ = writeln!(out, "bound\t{}", self.bound);
        let _ = writeln!(out, "remainder\t{}", self.remainder);
        out
    }
}

/// Counts layouts (up to `max_layouts`) and finds the least bound exactly.
pub fn exact_summary(g: &MultiTraversalRelation, limit: usize, max_layouts: u64) -> Result<ExactSummary> {
    let mut layouts = 0u64;
    let mut by_classes = BTreeMap::new();
    let mut truncated = false;
    coloring::for_each_mcivs(g, limit, |p| {
        if layouts == max_layouts {
            truncated = true;
            return std::ops::ControlFlow::Break(());
        }
        layouts += 1;
        *by_classes.entry(p.classes.len()).or_insert(0) += 1;
        std::ops::ControlFlow::Continue(())
    })?;
    let best = coloring::best_mcivs(g, limit)?;
    Ok(ExactSummary {
        layouts,
        truncated,
        by_classes,
        bound: best.bound(),
        remainder: best.remainder.len(),
        best: Layout::from(&best),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_rows() {
        let r = euler_report(5, false, Engine::Obots, 1).unwrap();
        assert_eq!(r.rows.len(), 3);
        assert_eq!(r.rows[0].row.ratio, 2.5);
        assert_eq!((r.rows[2].row.loop_count, r.rows[2].row.breadth), (65, 24));
        assert!(r.to_tsv(false).contains("5\t65\t24\t2.708333333\t"));
    }

    #[test]
    fn euler_guards() {
        assert!(matches!(euler_report(2, false, Engine::Obots, 1), Err(Error::Refused(_))));
        assert!(matches!(euler_report(10, false, Engine::Obots, 1), Err(Error::Refused(_))));
    }

    #[test]
    fn invariant_on_cycle() {
        let r = invariant_report(&generators::cycle(5).unwrap()).unwrap();
        assert!(r.pass);
        assert!(r.rows.iter().all(|&(_, c)| c == 2));
        let refused = invariant_report(&generators::path(3).unwrap());
        assert_eq!(refused.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn trials_are_reproducible() {
        let g = generators::dodecahedron();
        let a = color_trials(&g, ColorAlgo::Boerc, 50, 9).unwrap();
        let b = color_trials(&g, ColorAlgo::Boerc, 50, 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.counts.values().sum::<u64>(), 50);
        assert_eq!((a.invalid, a.over_bound), (0, 0));
    }

    #[test]
    fn exact_on_even_cycle() {
        let s = exact_summary(&generators::cycle(6).unwrap(), 20, u64::MAX).unwrap();
        assert_eq!((s.bound, s.remainder), (2, 0));
        assert!(!s.truncated);
        let capped = exact_summary(&generators::cycle(6).unwrap(), 20, 3).unwrap();
        assert!(capped.truncated);
        assert_eq!(capped.layouts, 3);
    }
}
