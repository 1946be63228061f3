use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use clap::Args;

use spantree::{tau, EngineKind, Family, TreeCount};

use crate::format::{decimal, parse_usize_list};
use crate::{refuse_large_cofactor, with_sink, CliError};

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated engines
    #[arg(long, default_value = "bareiss,chio,dodgson,salihu")]
    pub engine_list: String,
    #[arg(long, default_value = "friendship")]
    pub family: Family,
    /// Family parameters, e.g. `1-10` or `2,4,8`
    #[arg(long, default_value = "1-6")]
    pub k_list: String,
    /// Write the CSV table to this file instead of stdout
    #[arg(long)]
    pub csv: Option<std::path::PathBuf>,
}

pub struct BenchRow {
    pub engine: EngineKind,
    pub k: usize,
    pub order: usize,
    pub millis: f64,
    pub tau: TreeCount,
}

fn parse_engines(text: &str) -> Result<Vec<EngineKind>, CliError> {
    let mut engines = Vec::new();
    for name in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let e: EngineKind = name.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
        if !engines.contains(&e) {
            engines.push(e);
        }
    }
    if engines.is_empty() {
        return Err(CliError::Usage("--engine-list is empty".into()));
    }
    Ok(engines)
}

/// Times every (k, engine) cell. Rows come back sorted by `k`, then by the
/// order in which engines were listed.
pub fn run_bench(
    family: Family,
    engines: &[EngineKind],
    ks: &[usize],
) -> Result<Vec<BenchRow>, CliError> {
    let mut ks = ks.to_vec();
    ks.sort_unstable();
    ks.dedup();
    if ks.first() == Some(&0) {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    for &k in &ks {
        for &e in engines {
            refuse_large_cofactor(e, family.vertex_count(k) - 1)?;
        }
    }
    let mut rows = Vec::with_capacity(ks.len() * engines.len());
    for &k in &ks {
        let g = family
            .graph(k)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        for &engine in engines {
            let start = Instant::now();
            let t = tau(&g, engine).map_err(|e| CliError::CheckFailed(e.to_string()))?;
            rows.push(BenchRow {
                engine,
                k,
                order: g.vertex_count() - 1,
                millis: start.elapsed().as_secs_f64() * 1e3,
                tau: t,
            });
        }
    }
    Ok(rows)
}

/// The `k` values whose engines disagree on τ.
pub fn disagreements(rows: &[BenchRow]) -> Vec<usize> {
    let mut by_k: BTreeMap<usize, Vec<&TreeCount>> = BTreeMap::new();
    for r in rows {
        by_k.entry(r.k).or_default().push(&r.tau);
    }
    by_k.into_iter()
        .filter(|(_, taus)| taus.iter().any(|t| *t != taus[0]))
        .map(|(k, _)| k)
        .collect()
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let engines = parse_engines(&args.engine_list)?;
    let ks = parse_usize_list(&args.k_list).map_err(CliError::Usage)?;
    let rows = run_bench(args.family, &engines, &ks)?;
    with_sink(args.csv.as_deref(), out, |w| {
        let mut csv = csv::Writer::from_writer(w);
        csv.write_record(["engine", "k", "order", "millis", "tau"])?;
        for r in &rows {
            csv.write_record([
                r.engine.name().to_string(),
                r.k.to_string(),
                r.order.to_string(),
                decimal(r.millis),
                r.tau.to_string(),
            ])?;
        }
        csv.flush()?;
        Ok(())
    })?;
    let bad = disagreements(&rows);
    if !bad.is_empty() {
        return Err(CliError::CheckFailed(format!(
            "engines disagree on tau for k in {bad:?}"
        )));
    }
    Ok(())
}
