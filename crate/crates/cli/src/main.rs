use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use durfee_cli::SymbolDocument;
use durfee_core::bijections::{phi, phi_inverse, psi_lift, psi_lift_inverse, symmetry_map, theta};
use durfee_core::marked::kmarked_rank_table;
use durfee_core::qseries::{
    odd_rank_gf, partition_gf, rank_gf, rk_lhs, rk_rhs_product, rk_rhs_partialfraction,
    EvalPoint,
};
use durfee_core::verify::{Bounds, Suite, Verifier};
use durfee_core::{enumerate_kmarked, Flavor, KMarkedSymbol, QSeries};

/// Counts, enumerates and maps k-marked Durfee symbols; checks rank identities.
#[derive(Parser)]
#[command(name = "durfee", version)]
struct Cli {
    /// Worker threads for verification sweeps.
    #[arg(long, env = "DURFEE_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank-vector counts as TSV.
    Count(CountArgs),
    /// Every symbol of a weight, one JSON document per line.
    Enumerate(EnumerateArgs),
    /// Apply one bijection to a symbol document.
    Map(MapArgs),
    /// Run verification suites; exit 1 on the first failing identity.
    Verify(VerifyArgs),
    /// Coefficients of a generating function as TSV.
    Series(SeriesArgs),
}

#[derive(Args)]
struct Corpus {
    #[arg(long)]
    n: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    #[arg(long, default_value = "ordinary")]
    flavor: Flavor,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    corpus: Corpus,
    /// Only this rank vector, e.g. --ranks=-1,0
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    ranks: Option<Vec<i64>>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    corpus: Corpus,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    ranks: Option<Vec<i64>>,
    /// Two-row display with subscripts instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Phi,
    PhiInv,
    Psi,
    PsiInv,
    Theta,
    Symmetry,
}

#[derive(Args)]
struct MapArgs {
    #[arg(value_enum)]
    map: MapKind,
    /// Symbol document; `-` reads stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,
    /// Target ranks for phi-inv.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    ranks: Option<Vec<i64>>,
    /// Balanced numbers for psi-inv (last entry 0).
    #[arg(long, value_delimiter = ',')]
    t: Option<Vec<usize>>,
    /// Vector whose rank theta negates.
    #[arg(long)]
    p: Option<usize>,
    /// 1-based permutation for symmetry, e.g. 2,1,3
    #[arg(long, value_delimiter = ',')]
    perm: Option<Vec<usize>>,
    /// Print the image in two-row form as well.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// main, cor13, cor11, thm7, psi, phi, subscripts, symmetry or all.
    suite: String,
    /// Bounds such as n=12,k=3,pairs=12,order=12.
    #[arg(long)]
    bound: Vec<String>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    /// Evaluation point, e.g. 2,3 or 1/2,5/3
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    x: Option<Vec<String>>,
    /// Restrict to one flavor (default both).
    #[arg(long)]
    flavor: Option<Flavor>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    Partition,
    Rank,
    OddRank,
    Lhs,
    Cor11,
    Thm7,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(value_enum)]
    kind: SeriesKind,
    #[arg(long, default_value_t = 12)]
    order: usize,
    /// Rank for rank and odd-rank.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    m: i64,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "2,3")]
    x: Vec<String>,
    #[arg(long, default_value = "ordinary")]
    flavor: Flavor,
}

fn parse_point(x: &[String]) -> Result<EvalPoint> {
    let coords = x
        .iter()
        .map(|s| s.trim().parse::<BigRational>().with_context(|| format!("bad rational {s:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(EvalPoint::new(coords)?)
}

fn tsv_row(m: &[i64], count: u64) -> String {
    let mut cells: Vec<String> = m.iter().map(ToString::to_string).collect();
    cells.push(count.to_string());
    cells.join("\t")
}

fn header(k: usize) -> String {
    let mut cells: Vec<String> = (1..=k).map(|i| format!("m{i}")).collect();
    cells.push("count".into());
    cells.join("\t")
}

fn check_len(ranks: &[i64], k: usize) -> Result<()> {
    if ranks.len() != k {
        bail!("--ranks has {} entries but k = {k}", ranks.len());
    }
    Ok(())
}

fn count(args: CountArgs, out: &mut impl Write) -> Result<()> {
    let Corpus { n, k, flavor } = args.corpus;
    let k = k as usize;
    let table = kmarked_rank_table(n, k, flavor);
    writeln!(out, "{}", header(k))?;
    match args.ranks {
        Some(m) => {
            check_len(&m, k)?;
            writeln!(out, "{}", tsv_row(&m, table.get(&m).copied().unwrap_or(0)))?;
        }
        None => {
            for (m, c) in &table {
                writeln!(out, "{}", tsv_row(m, *c))?;
            }
            writeln!(out, "total\t{}", table.values().sum::<u64>())?;
        }
    }
    Ok(())
}

fn enumerate(args: EnumerateArgs, out: &mut impl Write) -> Result<()> {
    let Corpus { n, k, flavor } = args.corpus;
    if let Some(m) = &args.ranks {
        check_len(m, k as usize)?;
    }
    for s in enumerate_kmarked(n, k as usize, flavor) {
        if args.ranks.as_ref().is_some_and(|m| *m != s.ranks()) {
            continue;
        }
        if args.pretty {
            writeln!(out, "{}", s.pretty())?;
        } else {
            writeln!(out, "{}", SymbolDocument::from_symbol(&s).render())?;
        }
    }
    Ok(())
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn required<T>(value: Option<T>, flag: &str, map: &str) -> Result<T> {
    value.with_context(|| format!("{map} needs --{flag}"))
}

fn map(args: MapArgs, out: &mut impl Write, err: &mut impl Write) -> Result<()> {
    let doc = SymbolDocument::parse(&read_input(&args.input)?)?;
    let s = doc.to_symbol()?;
    let (name, params, image): (&str, serde_json::Value, KMarkedSymbol) = match args.map {
        MapKind::Phi => ("phi", json!({}), phi(&s)?.to_marked()),
        MapKind::PhiInv => {
            let m = required(args.ranks, "ranks", "phi-inv")?;
            let ds = doc.to_durfee()?;
            let image = phi_inverse(&ds, &m)?;
            ("phi-inv", json!({ "ranks": m }), image)
        }
        MapKind::Psi => ("psi", json!({}), psi_lift(&s)?),
        MapKind::PsiInv => {
            let t = required(args.t, "t", "psi-inv")?;
            let image = psi_lift_inverse(&s, &t)?;
            ("psi-inv", json!({ "t": t }), image)
        }
        MapKind::Theta => {
            let p = required(args.p, "p", "theta")?;
            ("theta", json!({ "p": p }), theta(&s, p)?)
        }
        MapKind::Symmetry => {
            let perm = required(args.perm, "perm", "symmetry")?;
            let image = symmetry_map(&s, &perm)?;
            ("symmetry", json!({ "perm": perm }), image)
        }
    };
    writeln!(out, "{}", SymbolDocument::from_symbol(&image).render())?;
    if args.pretty {
        writeln!(out, "{}", image.pretty())?;
    }
    let trailer = json!({
        "map": name,
        "params": params,
        "ranks_before": s.ranks(),
        "ranks_after": image.ranks(),
    });
    writeln!(err, "{trailer}")?;
    Ok(())
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> Result<bool> {
    let mut bounds = Bounds::default();
    for b in &args.bound {
        bounds.apply(b).map_err(anyhow::Error::msg)?;
    }
    if let Some(n) = args.n {
        bounds.n = n;
    }
    if let Some(k) = args.k {
        bounds.k = k;
    }
    if let Some(q) = args.order {
        bounds.order = q;
    }
    if let Some(x) = &args.x {
        bounds.x = parse_point(x)?;
    }
    if let Some(f) = args.flavor {
        bounds.flavors = vec![f];
    }
    if bounds.k < 2 {
        bail!("k must be at least 2");
    }
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse().map_err(anyhow::Error::msg)?]
    };
    let report = Verifier::new(bounds).run(&suites);
    write!(out, "{report}")?;
    Ok(report.passed())
}

fn series(args: SeriesArgs, out: &mut impl Write) -> Result<()> {
    let q = args.order;
    let s: QSeries = match args.kind {
        SeriesKind::Partition => partition_gf(q),
        SeriesKind::Rank => rank_gf(args.m, q),
        SeriesKind::OddRank => odd_rank_gf(args.m, q),
        SeriesKind::Lhs => rk_lhs(&parse_point(&args.x)?, q, args.flavor),
        SeriesKind::Cor11 => rk_rhs_product(&parse_point(&args.x)?, q, args.flavor),
        SeriesKind::Thm7 => rk_rhs_partialfraction(&parse_point(&args.x)?, q, args.flavor)?,
    };
    writeln!(out, "n\tcoefficient")?;
    for (n, c) in s.coeffs().iter().enumerate() {
        writeln!(out, "{n}\t{c}")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring worker threads")?;
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match cli.command {
        Command::Count(a) => count(a, &mut out)?,
        Command::Enumerate(a) => enumerate(a, &mut out)?,
        Command::Map(a) => map(a, &mut out, &mut io::stderr())?,
        Command::Verify(a) => {
            let passed = verify(a, &mut out)?;
            out.flush()?;
            return Ok(passed);
        }
        Command::Series(a) => series(a, &mut out)?,
    }
    out.flush()?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
