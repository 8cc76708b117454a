use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use excludant::bijections::trace::{
    trace_indexed_map, trace_indexed_map_inv, trace_partition_map, trace_partition_map_inv,
};
use excludant::bijections::MapId;
use excludant::partition::parse_unsorted;
use excludant::qseries::{gauss_binomial, gf};
use excludant::verify::{certify_bijection, check_theorem, TheoremId, VerificationReport};
use excludant::{
    enumerate, IndexedPartition, Partition, PartitionClass, PartitionPair, PowerSeries,
};

#[derive(Parser)]
#[command(
    name = "excludant",
    version,
    about = "r-chain mex/maex statistics, bijections and q-series checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Excludant statistics of one partition.
    Stats {
        /// Partition literal such as [7,4,4,3] or [].
        partition: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        /// Accept parts in any order.
        #[arg(long)]
        sort: bool,
    },
    /// List the partitions of n, optionally filtered.
    Enumerate {
        #[arg(long)]
        n: u32,
        /// Chain length used by --class.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        /// Keep only partitions with no part divisible by this value.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        regular: Option<u32>,
        /// Keep only partitions whose multiplicities are all below this value.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        strict: Option<u32>,
    },
    /// Expand a generating function.
    Series {
        #[arg(value_enum)]
        name: SeriesName,
        #[arg(long, default_value_t = gf::DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
        /// Gaussian binomial top index.
        #[arg(long)]
        n: Option<u32>,
        /// Gaussian binomial bottom index.
        #[arg(long)]
        m: Option<u32>,
        /// Truncation in z for the bivariate series (defaults to --order).
        #[arg(long)]
        z_order: Option<usize>,
    },
    /// Apply a bijection or its inverse.
    Bijection(BijectionArgs),
    /// Check an identity or certify a bijection.
    Verify {
        /// A theorem id (thm-1.4 … thm-1.11, q-binomial, przq), a map name
        /// (glaisher, phi, cap-phi, gamma, gamma-star, delta), or `all`.
        target: String,
        /// Chain lengths: `3`, `1..3` (inclusive), `1..=3` or `1,2,5`.
        #[arg(long)]
        r: Option<String>,
        /// Family indices, same syntax as --r.
        #[arg(long)]
        j: Option<String>,
        /// Largest weight checked.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = gf::DEFAULT_ORDER)]
        order: usize,
    },
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(value_enum)]
    map: MapArg,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    r: u32,
    /// Input partition for glaisher, phi and cap-phi (or their inverses).
    #[arg(long)]
    partition: Option<String>,
    /// λ for gamma, gamma-star and delta.
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    i: Option<u32>,
    /// Apply the inverse map.
    #[arg(long)]
    inverse: bool,
    /// α of the pair fed to an inverse.
    #[arg(long)]
    alpha: Option<String>,
    /// β of the pair fed to an inverse.
    #[arg(long)]
    beta: Option<String>,
    /// Color of an empty β (gamma-star inverse).
    #[arg(long, conflicts_with = "beta")]
    color: Option<u32>,
    /// Print the JSON trace with the intermediate values.
    #[arg(long)]
    trace: bool,
    /// Accept parts in any order.
    #[arg(long)]
    sort: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    P0,
    Plus,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    Glaisher,
    Phi,
    CapPhi,
    Gamma,
    GammaStar,
    Delta,
}

impl From<MapArg> for MapId {
    fn from(m: MapArg) -> Self {
        match m {
            MapArg::Glaisher => MapId::Glaisher,
            MapArg::Phi => MapId::Phi,
            MapArg::CapPhi => MapId::CapPhi,
            MapArg::Gamma => MapId::Gamma,
            MapArg::GammaStar => MapId::GammaStar,
            MapArg::Delta => MapId::Delta,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesName {
    Partitions,
    SigmaMex,
    SigmaLargest,
    Max1,
    Strict,
    MexShifted,
    Mexr3,
    Mexr2,
    Maxr1,
    Maxr1Product,
    LargestMultNondivisible,
    SmallestMultFree,
    JParts,
    LargestMultiple,
    Gauss,
    Przq,
}

/// Failure modes, mapped onto exit codes.
enum Failure {
    Usage(String),
    Mismatch(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(out)) => {
            if let Err(e) = emit(&cli, &out) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let out = match &cli.command {
        Command::Stats { partition, r, sort } => {
            stats(cli.format, &parse_partition(partition, *sort)?, *r)
        }
        Command::Enumerate {
            n,
            r,
            class,
            regular,
            strict,
        } => {
            let class = class.map(|c| match c {
                ClassArg::P0 => PartitionClass::Zero(*r),
                ClassArg::Plus => PartitionClass::Plus(*r),
            });
            let parts: Vec<Partition> = enumerate(*n)
                .filter(|p| class.is_none_or(|c| p.in_class(c)))
                .filter(|p| regular.is_none_or(|k| p.is_regular(k)))
                .filter(|p| strict.is_none_or(|k| p.is_strict(k)))
                .collect();
            match cli.format {
                Format::Json => {
                    pretty(&json!({ "n": n, "count": parts.len(), "partitions": parts }))
                }
                Format::Csv => parts.iter().fold("partition\n".to_owned(), |acc, p| {
                    acc + &format!("\"{p}\"\n")
                }),
                Format::Text => parts.iter().map(|p| format!("{p}\n")).collect(),
            }
        }
        Command::Series {
            name,
            order,
            r,
            j,
            n,
            m,
            z_order,
        } => series(
            cli.format,
            *name,
            *order,
            *r,
            *j,
            (*n, *m),
            z_order.unwrap_or(*order),
        )?,
        Command::Bijection(args) => bijection(cli.format, args)?,
        Command::Verify {
            target,
            r,
            j,
            n,
            order,
        } => {
            let reports = verify(target, r.as_deref(), j.as_deref(), *n, *order)?;
            let text = render_reports(cli.format, &reports);
            if reports.iter().all(|rep| rep.passed) {
                text
            } else {
                return Err(Failure::Mismatch(text));
            }
        }
    };
    emit(cli, &out)?;
    Ok(())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn parse_partition(s: &str, sort: bool) -> Result<Partition, Failure> {
    Ok(if sort { parse_unsorted(s)? } else { s.parse()? })
}

fn stats(format: Format, p: &Partition, r: u32) -> String {
    let class = p.class(r).to_string();
    let rows: [(&str, String); 9] = [
        ("partition", p.to_string()),
        ("r", r.to_string()),
        ("mex", p.mex(r).to_string()),
        ("maex", p.maex(r).to_string()),
        ("omega", p.omega(r).to_string()),
        ("Omega", p.big_omega(r).to_string()),
        ("class", class.clone()),
        ("G", p.g_stat(r).to_string()),
        ("largest", p.largest().to_string()),
    ];
    match format {
        Format::Json => pretty(&json!({
            "partition": p,
            "r": r,
            "mex": p.mex(r),
            "maex": p.maex(r),
            "omega": p.omega(r),
            "Omega": p.big_omega(r),
            "class": class,
            "G": p.g_stat(r),
            "largest": p.largest(),
        })),
        Format::Csv => {
            let (keys, vals): (Vec<_>, Vec<_>) =
                rows.iter().map(|(k, v)| (*k, format!("\"{v}\""))).unzip();
            format!("{}\n{}\n", keys.join(","), vals.join(","))
        }
        Format::Text => rows.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
    }
}

fn series(
    format: Format,
    name: SeriesName,
    order: usize,
    r: u32,
    j: u32,
    (n, m): (Option<u32>, Option<u32>),
    z_order: usize,
) -> Result<String, Failure> {
    let need_r2 = |what: &str| {
        if r < 2 {
            Err(Failure::Usage(format!("{what} needs --r >= 2")))
        } else {
            Ok(())
        }
    };
    let s: PowerSeries = match name {
        SeriesName::Partitions => gf::gf_partitions(order),
        SeriesName::SigmaMex => gf::gf_sigma_mex(order),
        SeriesName::SigmaLargest => gf::gf_sigma_largest(order),
        SeriesName::Max1 => gf::gf_max1_rhs(order),
        SeriesName::Strict => gf::gf_strict(r, order),
        SeriesName::MexShifted => gf::gf_mex_shifted_rhs(r, order),
        SeriesName::Mexr3 => gf::gf_mexr3_rhs(r, order),
        SeriesName::Mexr2 => gf::gf_mexr2_rhs(r, order),
        SeriesName::Maxr1 => gf::gf_maxr1_rhs(r, order),
        SeriesName::Maxr1Product => gf::gf_maxr1_rhs_product(r, order),
        SeriesName::LargestMultNondivisible => gf::gf_largest_mult_nondivisible(r, order),
        SeriesName::SmallestMultFree => gf::gf_smallest_mult_free(r, order),
        SeriesName::JParts => {
            need_r2("j-parts")?;
            gf::gf_j_parts(r, j, order)
        }
        SeriesName::LargestMultiple => {
            need_r2("largest-multiple")?;
            gf::gf_largest_multiple_mult(r, j, order)
        }
        SeriesName::Gauss => {
            let (Some(n), Some(m)) = (n, m) else {
                return Err(Failure::Usage("gauss needs --n and --m".into()));
            };
            gauss_binomial(n, m)?
        }
        SeriesName::Przq => {
            let b = gf::przq(r, z_order, order);
            let rows = b.to_decimal_strings();
            return Ok(match format {
                Format::Json => pretty(
                    &json!({ "series": "przq", "r": r, "z_order": z_order, "order": order, "coeffs": rows }),
                ),
                Format::Csv => {
                    let mut out = String::from("m,n,coeff\n");
                    for (zm, row) in rows.iter().enumerate() {
                        for (qn, c) in row.iter().enumerate() {
                            writeln!(out, "{zm},{qn},{c}").unwrap();
                        }
                    }
                    out
                }
                Format::Text => rows
                    .iter()
                    .enumerate()
                    .map(|(zm, row)| format!("z^{zm}: {}\n", row.join(" ")))
                    .collect(),
            });
        }
    };
    Ok(match format {
        Format::Json => pretty(&Value::from(s.to_decimal_strings())),
        Format::Csv => s
            .to_decimal_strings()
            .iter()
            .enumerate()
            .fold("n,coeff\n".to_owned(), |acc, (k, c)| {
                acc + &format!("{k},{c}\n")
            }),
        Format::Text => format!("{s}\n"),
    })
}

fn bijection(format: Format, a: &BijectionArgs) -> Result<String, Failure> {
    let map = MapId::from(a.map);
    let missing = |flag: &str| Failure::Usage(format!("{map} needs --{flag}"));
    let trace = if map.is_indexed() {
        if a.inverse {
            let alpha =
                parse_partition(a.alpha.as_deref().ok_or_else(|| missing("alpha"))?, a.sort)?;
            let pair = match (a.color, a.beta.as_deref()) {
                (Some(c), _) => PartitionPair::colored(alpha, c),
                (None, Some(b)) => PartitionPair::new(alpha, parse_partition(b, a.sort)?),
                (None, None) => return Err(missing("beta")),
            };
            trace_indexed_map_inv(map, &pair, a.r)?
        } else {
            let lambda = parse_partition(
                a.lambda.as_deref().ok_or_else(|| missing("lambda"))?,
                a.sort,
            )?;
            let i = a.i.ok_or_else(|| missing("i"))?;
            trace_indexed_map(map, &IndexedPartition::new(lambda, i), a.r)?
        }
    } else {
        let p = parse_partition(
            a.partition.as_deref().ok_or_else(|| missing("partition"))?,
            a.sort,
        )?;
        if a.inverse {
            trace_partition_map_inv(map, &p, a.r)?
        } else {
            trace_partition_map(map, &p, a.r)?
        }
    };
    if a.trace {
        return Ok(serde_json::to_string_pretty(&trace).expect("json") + "\n");
    }
    Ok(match format {
        Format::Json => pretty(&trace.output),
        Format::Csv | Format::Text => match &trace.output {
            Value::String(s) => format!("{s}\n"),
            Value::Object(o) if o.contains_key("alpha") => {
                format!(
                    "alpha: {}\nbeta: {}\n",
                    plain(&o["alpha"]),
                    plain(&o["beta"])
                )
            }
            Value::Object(o) => format!("lambda: {}\ni: {}\n", plain(&o["lambda"]), o["i"]),
            other => format!("{other}\n"),
        },
    })
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Parses `3`, `1..3`, `1..=3` (both inclusive) or `1,2,5`.
fn parse_range(s: &str) -> Result<Vec<u32>, Failure> {
    let bad = || Failure::Usage(format!("bad range `{s}`"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',').map(num).collect()
}

fn verify(
    target: &str,
    r: Option<&str>,
    j: Option<&str>,
    n: Option<u32>,
    order: usize,
) -> Result<Vec<VerificationReport>, Failure> {
    let rs = r.map(parse_range).transpose()?.unwrap_or_default();
    let js = j.map(parse_range).transpose()?.unwrap_or_default();
    if target == "all" {
        let mut reports = Vec::new();
        for id in TheoremId::ALL {
            reports.push(theorem_report(id, &rs, &js, n, order)?);
        }
        for map in MapId::ALL {
            reports.push(map_report(map, &rs, n)?);
        }
        return Ok(reports);
    }
    if let Ok(id) = target.parse::<TheoremId>() {
        return Ok(vec![theorem_report(id, &rs, &js, n, order)?]);
    }
    if let Ok(map) = target.parse::<MapId>() {
        return Ok(vec![map_report(map, &rs, n)?]);
    }
    Err(Failure::Usage(format!(
        "unknown verification target `{target}`"
    )))
}

fn theorem_report(
    id: TheoremId,
    rs: &[u32],
    js: &[u32],
    n: Option<u32>,
    order: usize,
) -> Result<VerificationReport, Failure> {
    let n_max = n.unwrap_or(id.defaults().2);
    check_theorem(id, rs, js, n_max, order).map_err(Failure::Usage)
}

fn map_report(map: MapId, rs: &[u32], n: Option<u32>) -> Result<VerificationReport, Failure> {
    let family_map = map.min_r() == 2;
    let default_rs: Vec<u32> = if family_map {
        vec![2, 3, 4]
    } else {
        vec![1, 2, 3]
    };
    let rs = if rs.is_empty() { &default_rs[..] } else { rs };
    let n_max = n.unwrap_or(match map {
        MapId::Glaisher | MapId::Phi => 20,
        _ => 16,
    });
    let mut reports = Vec::new();
    for &r in rs {
        reports.push(certify_bijection(map, r, n_max)?);
    }
    Ok(VerificationReport::merge(&format!("bij-{map}"), reports))
}

fn render_reports(format: Format, reports: &[VerificationReport]) -> String {
    match format {
        Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
        Format::Json => serde_json::to_string_pretty(reports).expect("json") + "\n",
        Format::Csv => {
            let mut out = String::from("theorem,r,j,n,lhs,rhs,match\n");
            for rep in reports {
                out.extend(rep.to_csv().lines().skip(1).map(|l| format!("{l}\n")));
            }
            out
        }
        Format::Text => reports.iter().map(VerificationReport::to_text).collect(),
    }
}
