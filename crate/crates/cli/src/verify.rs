//! Cross-engine verification suite.
//!
//! Random integer matrices (entries in `[-9, 9]`) are drawn from a ChaCha8
//! stream seeded by `--seed`, so a report is reproducible byte for byte.
//! Every engine under test is compared against the cofactor oracle (Bareiss
//! above order 8), which is called directly and never taken from the list of
//! engines being checked.

use std::io::Write;

use clap::Args;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spantree::det::{det_bareiss, det_cofactor, salihu_minors};
use spantree::{EngineKind, ExactMatrix, Family, Scalar};

use crate::format::parse_usize_list;
use crate::CliError;

/// Largest order at which the cofactor oracle is used.
pub const MAX_ORACLE_COFACTOR_ORDER: usize = 8;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Matrix orders, e.g. `1-7` or `3,5`
    #[arg(long, default_value = "1-7")]
    pub orders: String,
    /// Random matrices per order
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

/// An engine under test.
#[derive(Clone, Copy)]
pub struct NamedEngine {
    pub name: &'static str,
    pub det: fn(&ExactMatrix) -> Scalar,
    /// Orders above this are skipped for the engine.
    pub max_order: usize,
}

pub fn default_engines() -> Vec<NamedEngine> {
    EngineKind::ALL
        .into_iter()
        .map(|e| NamedEngine {
            name: e.name(),
            det: e.function(),
            max_order: if e == EngineKind::Cofactor {
                MAX_ORACLE_COFACTOR_ORDER
            } else {
                usize::MAX
            },
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub orders: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failed: usize,
    samples: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.samples.len() < 3 {
                self.samples.push(what());
            }
        }
    }

    fn finish(self, name: String) -> PropertyResult {
        let passed = self.failed == 0;
        let detail = if passed {
            format!("checks={}", self.checked)
        } else {
            format!(
                "failures={}/{} first: {}",
                self.failed,
                self.checked,
                self.samples.join("; ")
            )
        };
        PropertyResult {
            name,
            passed,
            detail,
        }
    }
}

fn oracle(m: &ExactMatrix) -> Scalar {
    if m.order() <= MAX_ORACLE_COFACTOR_ORDER {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, |_, _| {
        Scalar::from_integer(rng.gen_range(-9i64..=9).into())
    })
    .expect("order ≥ 1")
}

pub fn run_suite(cfg: &VerifyConfig, engines: &[NamedEngine]) -> Vec<PropertyResult> {
    let mut results = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    for &n in &cfg.orders {
        let active: Vec<&NamedEngine> = engines.iter().filter(|e| n <= e.max_order).collect();
        let mut agreement = Tally::default();
        let mut transpose = Tally::default();
        let mut swap = Tally::default();
        let mut salihu = Tally::default();

        for trial in 0..cfg.trials {
            let m = random_matrix(&mut rng, n);
            let expected = oracle(&m);
            let t = m.transpose();
            let swapped = (n >= 2).then(|| {
                let a = rng.gen_range(0..n);
                let b = (a + rng.gen_range(1..n)) % n;
                let mut s = m.clone();
                s.swap_rows(a, b);
                s
            });
            for e in &active {
                let got = (e.det)(&m);
                agreement.record(got == expected, || {
                    format!("{} trial {trial}: {got} != {expected}", e.name)
                });
                let got_t = (e.det)(&t);
                transpose.record(got_t == got, || {
                    format!("{} trial {trial}: det(Mᵀ) {got_t} != {got}", e.name)
                });
                if let Some(s) = &swapped {
                    let got_s = (e.det)(s);
                    swap.record(got_s == -&got, || {
                        format!("{} trial {trial}: swapped {got_s} vs {got}", e.name)
                    });
                }
            }
            if let Some(minors) = salihu_minors(&m).filter(|mi| !mi.interior.is_zero()) {
                salihu.record(&minors.interior * &expected == minors.cross(), || {
                    format!("trial {trial}: |B|·|A| != |C||F| − |D||E|")
                });
            }
        }
        results.push(agreement.finish(format!("engine-agreement order={n}")));
        results.push(transpose.finish(format!("transpose-invariance order={n}")));
        if n >= 2 {
            results.push(swap.finish(format!("row-swap-antisymmetry order={n}")));
        }
        if n >= 3 {
            results.push(salihu.finish(format!("salihu-identity order={n}")));
        }
    }

    for (family, ks) in [
        (Family::Friendship, 1..=12),
        (Family::SubdividedFriendship, 1..=8),
    ] {
        let mut tally = Tally::default();
        for k in ks {
            let g = family.graph(k).expect("k ≥ 1");
            let m = g.reduced_laplacian(0).expect("n ≥ 2");
            let expected = Scalar::from_integer(family.closed_form(k).expect("k ≥ 1").into());
            for e in engines.iter().filter(|e| m.order() <= e.max_order) {
                let got = (e.det)(&m);
                tally.record(got == expected, || {
                    format!("{} k={k}: {got} != {expected}", e.name)
                });
            }
        }
        results.push(tally.finish(format!("closed-form {family}")));
    }
    results
}

pub fn cmd_verify(
    args: &VerifyArgs,
    out: &mut dyn Write,
    engines: &[NamedEngine],
) -> Result<(), CliError> {
    let orders = parse_usize_list(&args.orders).map_err(CliError::Usage)?;
    if orders.contains(&0) {
        return Err(CliError::Usage("matrix orders start at 1".into()));
    }
    let cfg = VerifyConfig {
        orders,
        trials: args.trials,
        seed: args.seed,
    };
    let results = run_suite(&cfg, engines);
    for r in &results {
        writeln!(
            out,
            "{}  {}  {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        )?;
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    writeln!(
        out,
        "{} of {} properties passed (seed={}, trials={})",
        results.len() - failed,
        results.len(),
        cfg.seed,
        cfg.trials
    )?;
    if failed > 0 {
        return Err(CliError::CheckFailed(format!("{failed} properties failed")));
    }
    Ok(())
}
