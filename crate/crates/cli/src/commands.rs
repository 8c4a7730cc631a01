use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use hausdorff_core::cache::CountsCache;
use hausdorff_core::constructions::Construction;
use hausdorff_core::enumeration::{
    count_labeled, enumerate_classes, stirling_consistency, CountFilter, CountsTable,
    MAX_COUNT_POINTS,
};
use hausdorff_core::format::{emit_topology, parse_topology};
use hausdorff_core::separation::{AnalysisReport, ORACLE_MAX_POINTS};
use hausdorff_core::symbolic::{parse_points, BugEyedSpace, SymbolicPoint, VerticalCount};
use serde::Serialize;

use crate::{EnumerateArgs, Format, SymbolicArgs, SymbolicQuery};

pub enum Outcome {
    Pass,
    CheckFailed(String),
}

/// Settings shared by the commands that touch the cache or the worker pool.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub cache_dir: PathBuf,
    pub jobs: usize,
    pub format: Format,
}

impl RunConfig {
    fn new(jobs: Option<usize>, format: Format) -> Result<Self> {
        let jobs = match jobs {
            Some(0) => bail!("--jobs must be at least 1"),
            Some(j) => j,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        Ok(RunConfig {
            cache_dir: CountsCache::from_env().dir().to_path_buf(),
            jobs,
            format,
        })
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "points:               {}", r.n);
    let _ = writeln!(s, "hausdorff number:     {}", r.hausdorff_number);
    let _ = writeln!(s, "largest nonseparable: {:?}", r.largest_nonseparable);
    if let Some(h) = r.oracle_hausdorff_number {
        let _ = writeln!(s, "oracle:               {h}");
    }
    for (name, flag) in [
        ("t0", r.t0),
        ("t1", r.t1),
        ("hausdorff", r.hausdorff),
        ("regular", r.regular),
        ("normal", r.normal),
        ("discrete", r.discrete),
        ("compact", r.compact),
    ] {
        let _ = writeln!(s, "{name:<22}{flag}");
    }
    s
}

pub fn analyze(file: &Path, oracle: bool, format: Format) -> Result<Outcome> {
    let text =
        fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let loaded = parse_topology(&text).with_context(|| format!("loading {}", file.display()))?;
    let t = &loaded.topology;
    let mut report = AnalysisReport::new(t);
    if oracle {
        if t.n() > ORACLE_MAX_POINTS {
            bail!(
                "oracle is limited to {ORACLE_MAX_POINTS} points, topology has {}",
                t.n()
            );
        }
        report = match report.with_oracle(t) {
            Ok(r) => r,
            Err(e) => return Ok(Outcome::CheckFailed(e.to_string())),
        };
    }
    let out = match format {
        Format::Json => json(&report),
        Format::Text => report_text(&report),
        Format::Csv => bail!("analyze supports json and text output"),
    };
    emit(&out, None)?;
    Ok(Outcome::Pass)
}

fn table_text(t: &CountsTable) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n = {} ({} topologies)", t.n, t.filter.as_str());
    let _ = writeln!(s, "{:>5} {:>12} {:>10}", "H", "labeled", "classes");
    for (h, row) in &t.rows {
        let _ = writeln!(s, "{h:>5} {:>12} {:>10}", row.labeled_count, row.class_count);
    }
    let _ = writeln!(s, "{:>5} {:>12} {:>10}", "total", t.labeled_total, t.class_total);
    let _ = writeln!(s, "T0 labeled: {}", t.t0_labeled_count);
    s
}

#[derive(Serialize)]
struct Totals {
    n: usize,
    filter: CountFilter,
    #[serde(skip_serializing_if = "Option::is_none")]
    labeled_total: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    class_total: Option<u64>,
}

pub fn enumerate(args: &EnumerateArgs) -> Result<Outcome> {
    let config = RunConfig::new(args.jobs, args.format)?;
    let cache = CountsCache::new(&config.cache_dir);
    let filter = if args.t0_only {
        CountFilter::T0
    } else {
        CountFilter::All
    };
    let totals_only = (args.labeled || args.classes) && !args.histogram;

    let out = if !totals_only {
        let table = cache.load_or_compute(args.n, filter, config.jobs)?;
        match config.format {
            Format::Json => json(&table),
            Format::Csv => table.to_csv(),
            Format::Text => table_text(&table),
        }
    } else {
        let (labeled, classes) = if args.n <= MAX_COUNT_POINTS {
            let table = cache.load_or_compute(args.n, filter, config.jobs)?;
            (table.labeled_total, table.class_total)
        } else {
            let labeled = if args.labeled {
                count_labeled(args.n, filter, config.jobs)?
            } else {
                0
            };
            let classes = if args.classes {
                enumerate_classes(args.n)?
                    .iter()
                    .filter(|(_, t)| {
                        filter == CountFilter::All
                            || hausdorff_core::separation::axioms_report(t).t0
                    })
                    .count() as u64
            } else {
                0
            };
            (labeled, classes)
        };
        let totals = Totals {
            n: args.n,
            filter,
            labeled_total: args.labeled.then_some(labeled),
            class_total: args.classes.then_some(classes),
        };
        match config.format {
            Format::Json => json(&totals),
            Format::Csv => {
                let mut header = vec!["n", "filter"];
                let mut row = vec![args.n.to_string(), filter.as_str().to_string()];
                if let Some(l) = totals.labeled_total {
                    header.push("labeled_total");
                    row.push(l.to_string());
                }
                if let Some(c) = totals.class_total {
                    header.push("class_total");
                    row.push(c.to_string());
                }
                format!("{}\n{}\n", header.join(","), row.join(","))
            }
            Format::Text => {
                let mut s = format!("n = {} ({} topologies)\n", args.n, filter.as_str());
                if let Some(l) = totals.labeled_total {
                    let _ = writeln!(s, "labeled: {l}");
                }
                if let Some(c) = totals.class_total {
                    let _ = writeln!(s, "classes: {c}");
                }
                s
            }
        }
    };
    emit(&out, args.out.as_deref())?;
    Ok(Outcome::Pass)
}

#[derive(Serialize)]
struct Verification {
    name: String,
    expected_hausdorff_number: usize,
    report: AnalysisReport,
}

pub fn example(name: &str, verify: bool, out: Option<&Path>) -> Result<Outcome> {
    let construction: Construction = name.parse()?;
    let t = match construction.build() {
        Ok(t) => t,
        Err(e @ hausdorff_core::Error::ClaimViolated(_)) => {
            return Ok(Outcome::CheckFailed(e.to_string()))
        }
        Err(e) => return Err(e.into()),
    };
    let mut text = emit_topology(&t, Some(&construction.name()));
    text.push('\n');
    emit(&text, out)?;
    if !verify {
        return Ok(Outcome::Pass);
    }

    let mut report = AnalysisReport::new(&t);
    if t.n() <= ORACLE_MAX_POINTS {
        report = match report.with_oracle(&t) {
            Ok(r) => r,
            Err(e) => return Ok(Outcome::CheckFailed(e.to_string())),
        };
    }
    let expected = construction.expected_hausdorff_number();
    let verification = Verification {
        name: construction.name(),
        expected_hausdorff_number: expected,
        report,
    };
    eprint!("{}", json(&verification));
    if verification.report.hausdorff_number != expected {
        return Ok(Outcome::CheckFailed(format!(
            "{}: expected H = {expected}, computed {}",
            verification.name, verification.report.hausdorff_number
        )));
    }
    Ok(Outcome::Pass)
}

pub fn symbolic(args: &SymbolicArgs) -> Result<Outcome> {
    let verticals: VerticalCount = args.verticals.parse()?;
    let space = BugEyedSpace::new(verticals, !args.no_t1)?;
    let out = match &args.query {
        SymbolicQuery::Separable { points } => {
            let points = parse_points(points)?;
            json(&space.separable(&points)?)
        }
        SymbolicQuery::Hnumber => json(&space.hausdorff_number()),
        SymbolicQuery::T1 { pair } => {
            let p: SymbolicPoint = pair[0].parse()?;
            let q: SymbolicPoint = pair[1].parse()?;
            json(&space.t1_status(&p, &q)?)
        }
    };
    emit(&out, None)?;
    Ok(Outcome::Pass)
}

pub fn stirling(n: usize, format: Format) -> Result<Outcome> {
    let report = stirling_consistency(n)?;
    let out = match format {
        Format::Json => json(&report),
        Format::Text | Format::Csv => {
            let mut s = String::new();
            for t in &report.terms {
                let _ = writeln!(s, "S({n},{}) = {:>3}  T0({}) = {}", t.k, t.stirling, t.k, t.t0_count);
            }
            let _ = writeln!(
                s,
                "T({n}) = {}  sum = {}  holds = {}",
                report.topology_count, report.weighted_t0_sum, report.holds
            );
            s
        }
    };
    emit(&out, None)?;
    if report.holds {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::CheckFailed(format!(
            "T({n}) = {} but the weighted T0 sum is {}",
            report.topology_count, report.weighted_t0_sum
        )))
    }
}
