//! Command-line surface: enumeration, identity verification, poset reports,
//! and Euler-characteristic calculators with machine-readable output.
//!
//! Exit codes: 0 success / identity holds, 1 verified-false identity or
//! cross-check mismatch, 2 usage error, 3 capability error (a computation
//! outside the configured ceilings or undefined for the given input).

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hyperchi::euler::{chi_palindromic, rat_string, DEFAULT_SUM_CEILING};
use hyperchi::identities::{self, set_precheck_seed};
use hyperchi::partitions::BlockWeightKind;
use hyperchi::poly::{rat, Rat};
use hyperchi::{
    forests, hypertrees, partitions, Error, GroupSystem, HypertreePoset, IdentityReport,
    VerifyLimits,
};

#[derive(Parser)]
#[command(
    name = "hyperchi",
    version,
    about = "Exact hypertree combinatorics and Euler characteristics of \
             Whitehead-type automorphism groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate combinatorial objects in canonical order
    Enumerate(EnumerateArgs),
    /// Verify a summation identity as an exact polynomial equality
    Verify(VerifyArgs),
    /// Euler characteristics of free products and their automorphism groups
    Euler(EulerArgs),
    /// Summary report on the hypertree poset
    Poset(PosetArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    /// Set partitions of [n] with k blocks
    Partitions,
    /// Planted forests on [n] with k components
    Forests,
    /// Hypertrees on [n]
    Hypertrees,
    /// Planted hyperforests on [n] with k components
    Phf,
    /// Rooted hypertrees on [n]
    Rht,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(value_enum)]
    kind: EnumKind,
    #[arg(long)]
    n: u32,
    /// Block/component count; when omitted, all k from 1 to n are streamed
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Print at most this many records; the count trailer still reports the
    /// full total
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityName {
    Abel1,
    Abel2,
    Forest,
    Partition1,
    Partition2,
    Partition3,
    Hyperforest,
    Hypertree,
    Mobius,
    Asclinks,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    identity: IdentityName,
    /// Identity parameter n; required for single identities, ignored by `all`
    #[arg(long)]
    n: Option<u32>,
    /// Second parameter for the forest/partition/hyperforest identities;
    /// when omitted, every k from 1 to n is checked
    #[arg(long)]
    k: Option<u32>,
    /// Cap every default ceiling (only meaningful with `all`)
    #[arg(long)]
    max_n: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Shorthand for --format json
    #[arg(long)]
    json: bool,
    /// Seed for the randomized evaluation pre-check; never affects output
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum EulerTarget {
    /// chi of the free product itself
    FreeProduct,
    /// Outer Whitehead automorphisms
    Owh,
    /// Whitehead automorphisms
    Wh,
    /// Fouxe-Rabinovitch subgroup
    Fr,
    /// Full automorphism group (finite factors only)
    Aut,
    /// Outer automorphism group (finite factors only)
    Out,
    /// Palindromic automorphism groups of the free group of rank n
    Palindromic,
    /// Pure symmetric automorphisms: Wh of n infinite cyclic factors
    Psigma,
}

#[derive(Args)]
struct EulerArgs {
    #[arg(value_enum)]
    target: EulerTarget,
    /// Comma-separated factors: c<m>, z, chi:<p>/<q>, g:<order>:<inn>:<out>:<label>
    #[arg(long)]
    groups: Option<String>,
    /// Rank parameter for palindromic/psigma
    #[arg(long)]
    n: Option<u32>,
    /// Recompute through the hypertree sum and fail loudly on mismatch
    #[arg(long)]
    cross_check: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Shorthand for --format json
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PosetArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// Ceilings for this process: the verify-suite limits plus the enumeration
/// and hypertree-sum caps. `HT_EULER_MAX_N` replaces every ceiling.
struct Ceilings {
    limits: VerifyLimits,
    enumerate_poly: u32,
    enumerate_hyper: u32,
    sum_ceiling: u32,
}

fn ceilings() -> Ceilings {
    let defaults = Ceilings {
        limits: VerifyLimits::default(),
        enumerate_poly: 12,
        enumerate_hyper: 7,
        sum_ceiling: DEFAULT_SUM_CEILING,
    };
    match std::env::var("HT_EULER_MAX_N")
        .ok()
        .and_then(|v| v.parse::<u32>().ok())
    {
        Some(n) => Ceilings {
            limits: VerifyLimits::uniform(n),
            enumerate_poly: n,
            enumerate_hyper: n,
            sum_ceiling: n,
        },
        None => defaults,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            classify(&e)
        }
    }
}

fn classify(e: &Error) -> ExitCode {
    match e {
        Error::KOutOfRange { .. }
        | Error::BadVertexCount(_)
        | Error::BadGroupToken(_)
        | Error::EmptyVariableSet
        | Error::MissingVariable(_) => ExitCode::from(2),
        Error::SumCeilingExceeded { .. }
        | Error::NonFiniteFactor { .. }
        | Error::TooFewFactors { .. } => ExitCode::from(3),
        Error::CrossCheckMismatch { .. } => ExitCode::from(1),
        _ => ExitCode::from(1),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(cli: Cli) -> hyperchi::Result<ExitCode> {
    match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Euler(args) => cmd_euler(args),
        Command::Poset(args) => cmd_poset(args),
    }
}

/// One enumerated record rendered in all three formats.
struct Record {
    json: String,
    csv: String,
    text: String,
}

fn edges_csv(edges: &[Vec<u32>]) -> String {
    edges
        .iter()
        .map(|e| {
            e.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn edges_text(edges: &[Vec<u32>]) -> String {
    let body = edges
        .iter()
        .map(|e| {
            format!(
                "{{{}}}",
                e.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(",");
    format!("[{body}]")
}

fn list_csv(vs: &[u32]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_enumerate(args: EnumerateArgs) -> hyperchi::Result<ExitCode> {
    let caps = ceilings();
    let n = args.n;
    let cap = match args.kind {
        EnumKind::Partitions | EnumKind::Forests => caps.enumerate_poly,
        _ => caps.enumerate_hyper,
    };
    if n > cap {
        return Err(Error::SumCeilingExceeded { n, ceiling: cap });
    }
    let ks: Vec<u32> = match (args.kind, args.k) {
        (EnumKind::Hypertrees | EnumKind::Rht, Some(_)) => {
            return Ok(usage_error("--k does not apply to this kind"));
        }
        (EnumKind::Hypertrees | EnumKind::Rht, None) => vec![0],
        (_, Some(k)) => vec![k],
        (_, None) => (1..=n).collect(),
    };

    let mut records: Vec<Record> = Vec::new();
    for k in ks {
        match args.kind {
            EnumKind::Partitions => {
                for p in partitions::enumerate_partitions(n, k)? {
                    let text = p
                        .blocks()
                        .iter()
                        .map(|b| {
                            b.iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        })
                        .collect::<Vec<_>>()
                        .join("|");
                    records.push(Record {
                        json: serde_json::to_string(&p).expect("serialize"),
                        csv: format!(
                            "{},{}",
                            n,
                            p.blocks()
                                .iter()
                                .map(|b| list_csv(b))
                                .collect::<Vec<_>>()
                                .join("|")
                        ),
                        text: format!("{{{text}}}"),
                    });
                }
            }
            EnumKind::Forests => {
                for f in forests::enumerate_planted_forests(n, k)? {
                    let parent_pairs: Vec<(u32, u32)> = (1..=n)
                        .filter_map(|v| f.parent_of(v).map(|p| (v, p)))
                        .collect();
                    let parent_csv = parent_pairs
                        .iter()
                        .map(|(v, p)| format!("{v}:{p}"))
                        .collect::<Vec<_>>()
                        .join(";");
                    records.push(Record {
                        json: serde_json::to_string(&f).expect("serialize"),
                        csv: format!("{},{},{}", n, list_csv(&f.roots()), parent_csv),
                        text: format!(
                            "roots=[{}] parent={{{}}}",
                            f.roots()
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(","),
                            parent_pairs
                                .iter()
                                .map(|(v, p)| format!("{v}->{p}"))
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                    });
                }
            }
            EnumKind::Hypertrees => {
                for t in hypertrees::enumerate_hypertrees(n)? {
                    records.push(Record {
                        json: serde_json::to_string(&t).expect("serialize"),
                        csv: format!("{},{}", n, edges_csv(t.edges())),
                        text: format!("edges={}", edges_text(t.edges())),
                    });
                }
            }
            EnumKind::Rht => {
                for t in hypertrees::enumerate_rooted_hypertrees(n)? {
                    records.push(Record {
                        json: serde_json::to_string(&t).expect("serialize"),
                        csv: format!("{},{},{}", n, edges_csv(t.tree().edges()), t.root()),
                        text: format!(
                            "root={} edges={}",
                            t.root(),
                            edges_text(t.tree().edges())
                        ),
                    });
                }
            }
            EnumKind::Phf => {
                for f in hypertrees::enumerate_planted_hyperforests(n, k)? {
                    records.push(Record {
                        json: serde_json::to_string(&f).expect("serialize"),
                        csv: format!(
                            "{},{},{}",
                            n,
                            edges_csv(f.edges()),
                            list_csv(f.roots())
                        ),
                        text: format!(
                            "roots=[{}] edges={}",
                            f.roots()
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(","),
                            edges_text(f.edges())
                        ),
                    });
                }
            }
        }
    }

    let total = records.len();
    let shown = args.limit.unwrap_or(total).min(total);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if args.format == Format::Csv {
        let header = match args.kind {
            EnumKind::Partitions => "n,blocks",
            EnumKind::Forests => "n,roots,parent",
            EnumKind::Hypertrees => "n,edges",
            EnumKind::Rht => "n,edges,root",
            EnumKind::Phf => "n,edges,roots",
        };
        writeln!(out, "{header}").expect("stdout");
    }
    for r in records.iter().take(shown) {
        let line = match args.format {
            Format::Json => &r.json,
            Format::Csv => &r.csv,
            Format::Text => &r.text,
        };
        writeln!(out, "{line}").expect("stdout");
    }
    match args.format {
        Format::Json => writeln!(out, "{{\"count\":{total}}}").expect("stdout"),
        Format::Csv => writeln!(out, "count,{total}").expect("stdout"),
        Format::Text => writeln!(out, "count: {total}").expect("stdout"),
    }
    Ok(ExitCode::SUCCESS)
}

fn report_text(r: &IdentityReport) -> String {
    let verdict = if r.holds { "holds" } else { "FAILS" };
    let params = r
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    let mut line = format!("{} {}: {} [terms={}]", r.identity, params, verdict, r.term_count);
    if let Some(cases) = r.cases {
        line.push_str(&format!(" [cases={cases}]"));
    }
    if let Some(ref w) = r.counterexample {
        line.push_str(&format!(" counterexample={w}"));
    }
    line
}

fn report_csv_rows(r: &IdentityReport, rows: &mut Vec<String>) {
    let params = r
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    for (side, poly) in [("left", &r.left), ("right", &r.right)] {
        for (m, c) in poly.terms_desc() {
            rows.push(format!(
                "{},{},{},{},{},{}",
                r.identity,
                params,
                r.holds,
                side,
                m,
                format_args!("{}/{}", c.numer(), c.denom())
            ));
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> hyperchi::Result<ExitCode> {
    set_precheck_seed(args.seed);
    let format = if args.json { Format::Json } else { args.format };
    let caps = ceilings();
    let mut limits = caps.limits;
    if let Some(max_n) = args.max_n {
        limits = limits.capped_at(max_n);
    }

    let reports: Vec<IdentityReport> = match args.identity {
        IdentityName::All => identities::verify_all(&limits)?,
        name => {
            let n = match args.n {
                Some(n) => n,
                None => return Ok(usage_error("--n is required for a single identity")),
            };
            let ks = |k: Option<u32>| -> Vec<u32> {
                match k {
                    Some(k) => vec![k],
                    None => (1..=n).collect(),
                }
            };
            match name {
                IdentityName::Abel1 => vec![identities::verify_abel1(n)?],
                IdentityName::Abel2 => vec![identities::verify_abel2(n)?],
                IdentityName::Forest => ks(args.k)
                    .into_iter()
                    .map(|k| identities::verify_forest_identity(n, k))
                    .collect::<hyperchi::Result<_>>()?,
                IdentityName::Partition1 | IdentityName::Partition2 | IdentityName::Partition3 => {
                    let kind = match name {
                        IdentityName::Partition1 => BlockWeightKind::LinearPower,
                        IdentityName::Partition2 => BlockWeightKind::CardinalPower,
                        _ => BlockWeightKind::Abel,
                    };
                    ks(args.k)
                        .into_iter()
                        .map(|k| identities::verify_partition_identity(n, k, kind))
                        .collect::<hyperchi::Result<_>>()?
                }
                IdentityName::Hyperforest => ks(args.k)
                    .into_iter()
                    .map(|k| identities::verify_hyperforest_identity(n, k))
                    .collect::<hyperchi::Result<_>>()?,
                IdentityName::Hypertree => vec![identities::verify_hypertree_identity(n)?],
                IdentityName::Mobius => vec![identities::verify_mobius(n)?],
                IdentityName::Asclinks => vec![identities::verify_asc_links(n)?],
                IdentityName::All => unreachable!(),
            }
        }
    };

    let all_hold = reports.iter().all(|r| r.holds);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => {
            for r in &reports {
                writeln!(out, "{}", serde_json::to_string(r).expect("serialize"))
                    .expect("stdout");
            }
        }
        Format::Csv => {
            let mut rows = vec!["identity,params,holds,side,monomial,coefficient".to_string()];
            for r in &reports {
                report_csv_rows(r, &mut rows);
            }
            for row in rows {
                writeln!(out, "{row}").expect("stdout");
            }
        }
        Format::Text => {
            for r in &reports {
                writeln!(out, "{}", report_text(r)).expect("stdout");
            }
            let held = reports.iter().filter(|r| r.holds).count();
            writeln!(out, "{held}/{} identities hold", reports.len()).expect("stdout");
        }
    }
    Ok(if all_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct EulerOutput {
    target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    groups: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    value: String,
    /// chi(OWh) recomputed through the hypertree sum, equal to its closed
    /// form whenever present
    #[serde(skip_serializing_if = "Option::is_none")]
    cross_check_owh: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn cross_check_owh(g: &GroupSystem, ceiling: u32) -> hyperchi::Result<Option<String>> {
    if g.n() > ceiling {
        eprintln!(
            "note: cross-check skipped (n={} exceeds the hypertree-sum ceiling {})",
            g.n(),
            ceiling
        );
        return Ok(None);
    }
    let sum = g.chi_owh_sum(ceiling)?;
    let closed = g.chi_owh_closed()?;
    if sum != closed {
        return Err(Error::CrossCheckMismatch {
            what: "chi(OWh)".to_string(),
            sum: rat_string(&sum),
            closed: rat_string(&closed),
        });
    }
    Ok(Some(rat_string(&sum)))
}

fn cmd_euler(args: EulerArgs) -> hyperchi::Result<ExitCode> {
    let format = if args.json { Format::Json } else { args.format };
    if format == Format::Csv {
        return Ok(usage_error("euler supports text or json output"));
    }
    let caps = ceilings();

    let need_groups = |args: &EulerArgs| -> Result<GroupSystem, ExitCode> {
        match &args.groups {
            Some(list) => match GroupSystem::parse(list) {
                Ok(g) => Ok(g),
                Err(e) => {
                    eprintln!("error: {e}");
                    Err(ExitCode::from(2))
                }
            },
            None => Err(usage_error("--groups is required for this target")),
        }
    };

    let mut note: Option<String> = None;
    let mut crossed: Option<String> = None;

    let (value, groups_str, n_param) = match args.target {
        EulerTarget::FreeProduct => {
            let g = match need_groups(&args) {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            (g.chi_free_product(), Some(g.to_string()), None)
        }
        EulerTarget::Owh | EulerTarget::Wh | EulerTarget::Fr | EulerTarget::Aut
        | EulerTarget::Out => {
            let g = match need_groups(&args) {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            if args.cross_check {
                crossed = cross_check_owh(&g, caps.sum_ceiling)?;
            }
            let v = match args.target {
                EulerTarget::Owh => g.chi_owh_closed()?,
                EulerTarget::Wh => g.chi_wh()?,
                EulerTarget::Fr => g.chi_fr()?,
                EulerTarget::Aut => g.chi_aut()?,
                EulerTarget::Out => {
                    use num_traits::Zero;
                    if g.chi_free_product().is_zero() {
                        note = Some(
                            "chi(G) = 0: the quotient identity chi(Out) = chi(Aut)/chi(G) \
                             is indeterminate; this is the direct formula value"
                                .to_string(),
                        );
                    }
                    g.chi_out()?
                }
                _ => unreachable!(),
            };
            (v, Some(g.to_string()), None)
        }
        EulerTarget::Psigma => {
            let n = match args.n {
                Some(n) if n >= 2 => n,
                Some(_) => return Ok(usage_error("--n must be at least 2 for psigma")),
                None => return Ok(usage_error("--n is required for psigma")),
            };
            let g = GroupSystem::free_of_rank(n)?;
            if args.cross_check {
                crossed = cross_check_owh(&g, caps.sum_ceiling)?;
            }
            (g.chi_wh()?, None, Some(n))
        }
        EulerTarget::Palindromic => {
            let n = match args.n {
                Some(n) if n >= 1 => n,
                _ => return Ok(usage_error("--n (>= 1) is required for palindromic")),
            };
            let p = chi_palindromic(n);
            if args.cross_check && n + 1 <= caps.sum_ceiling {
                let g = GroupSystem::z2_copies(n + 1)?;
                let owh = g.chi_owh_sum(caps.sum_ceiling)?;
                let via_sum = rat(1, 2) * owh;
                if via_sum != p.ppia {
                    return Err(Error::CrossCheckMismatch {
                        what: "chi(PPiA)".to_string(),
                        sum: rat_string(&via_sum),
                        closed: rat_string(&p.ppia),
                    });
                }
                crossed = Some(rat_string(&via_sum));
            } else if args.cross_check {
                eprintln!(
                    "note: cross-check skipped (n+1={} exceeds the hypertree-sum ceiling {})",
                    n + 1,
                    caps.sum_ceiling
                );
            }
            if p.formula_only {
                note = Some(
                    "n = 1: formula value only; the closed forms are stated for ranks \
                     where the group-theoretic derivation applies"
                        .to_string(),
                );
            }
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct PalOutput {
                        target: &'static str,
                        n: u32,
                        epia: String,
                        ppia: String,
                        pia: String,
                        formula_only: bool,
                        /// ppia recomputed through the hypertree sum
                        #[serde(skip_serializing_if = "Option::is_none")]
                        cross_check_ppia: Option<String>,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        note: Option<String>,
                    }
                    let o = PalOutput {
                        target: "palindromic",
                        n,
                        epia: rat_string(&p.epia),
                        ppia: rat_string(&p.ppia),
                        pia: rat_string(&p.pia),
                        formula_only: p.formula_only,
                        cross_check_ppia: crossed,
                        note,
                    };
                    writeln!(out, "{}", serde_json::to_string(&o).expect("serialize"))
                        .expect("stdout");
                }
                _ => {
                    writeln!(out, "epia: {}", rat_string(&p.epia)).expect("stdout");
                    writeln!(out, "ppia: {}", rat_string(&p.ppia)).expect("stdout");
                    writeln!(out, "pia: {}", rat_string(&p.pia)).expect("stdout");
                    if let Some(n) = note {
                        eprintln!("note: {n}");
                    }
                }
            }
            return Ok(ExitCode::SUCCESS);
        }
    };

    print_euler_value(
        format,
        &args.target,
        value,
        groups_str,
        n_param,
        crossed,
        note,
    );
    Ok(ExitCode::SUCCESS)
}

fn target_name(t: &EulerTarget) -> &'static str {
    match t {
        EulerTarget::FreeProduct => "free-product",
        EulerTarget::Owh => "owh",
        EulerTarget::Wh => "wh",
        EulerTarget::Fr => "fr",
        EulerTarget::Aut => "aut",
        EulerTarget::Out => "out",
        EulerTarget::Palindromic => "palindromic",
        EulerTarget::Psigma => "psigma",
    }
}

fn print_euler_value(
    format: Format,
    target: &EulerTarget,
    value: Rat,
    groups: Option<String>,
    n: Option<u32>,
    cross_check: Option<String>,
    note: Option<String>,
) {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => {
            let o = EulerOutput {
                target: target_name(target).to_string(),
                groups,
                n,
                value: rat_string(&value),
                cross_check_owh: cross_check,
                note,
            };
            writeln!(out, "{}", serde_json::to_string(&o).expect("serialize")).expect("stdout");
        }
        _ => {
            writeln!(out, "{}", rat_string(&value)).expect("stdout");
            if let Some(n) = note {
                eprintln!("note: {n}");
            }
        }
    }
}

#[derive(Serialize)]
struct ShapeCount {
    edge_sizes: Vec<u32>,
    valences: Vec<u32>,
    count: u64,
}

#[derive(Serialize)]
struct PosetReport {
    n: u32,
    count: usize,
    rank_histogram: BTreeMap<u32, u64>,
    maximal: usize,
    shapes: Vec<ShapeCount>,
}

fn cmd_poset(args: PosetArgs) -> hyperchi::Result<ExitCode> {
    let caps = ceilings();
    if args.n > caps.enumerate_hyper {
        return Err(Error::SumCeilingExceeded {
            n: args.n,
            ceiling: caps.enumerate_hyper,
        });
    }
    let poset = HypertreePoset::for_n(args.n)?;
    let report = PosetReport {
        n: args.n,
        count: poset.len(),
        rank_histogram: poset.rank_histogram(),
        maximal: poset.maximal_elements().len(),
        shapes: poset
            .shape_histogram()
            .into_iter()
            .map(|((edge_sizes, valences), count)| ShapeCount {
                edge_sizes,
                valences,
                count,
            })
            .collect(),
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.format {
        Format::Text => {
            writeln!(out, "n: {}", report.n).expect("stdout");
            writeln!(out, "count: {}", report.count).expect("stdout");
            for (rank, c) in &report.rank_histogram {
                writeln!(out, "rank {rank}: {c}").expect("stdout");
            }
            writeln!(out, "maximal: {}", report.maximal).expect("stdout");
            for s in &report.shapes {
                writeln!(
                    out,
                    "shape sizes={:?} valences={:?}: {}",
                    s.edge_sizes, s.valences, s.count
                )
                .expect("stdout");
            }
        }
        _ => {
            writeln!(out, "{}", serde_json::to_string(&report).expect("serialize"))
                .expect("stdout");
        }
    }
    Ok(ExitCode::SUCCESS)
}
