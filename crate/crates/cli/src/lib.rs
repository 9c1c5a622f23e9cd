//! The `mahon` command line: statistics, distributions, and identity checks.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mahon_core::registry::{list_identities, Filter, IdentityRecord, Params, Tag};
use mahon_core::verify::{Verifier, VerifyReport};
use mahon_core::{find, CharName, CharSpec, ColoredPerm, Error, Family, LetterOrder, StatName};

/// Exit status: every verdict as expected.
pub const EXIT_OK: i32 = 0;
/// Exit status: an identity failed, or a selftest value deviated.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit status: bad flags or parameters.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(
    name = "mahon",
    version,
    about = "Exact checks of signed Mahonian identities"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one statistic on one element.
    Stat(StatArgs),
    /// Print the (optionally signed) distribution of a statistic over a group.
    Dist(DistArgs),
    /// Brute-force registered identities and compare with their closed forms.
    Verify(VerifyArgs),
    /// List registered identities as TSV.
    List(ListArgs),
    /// Recompute the worked examples and a few small identities.
    Selftest,
}

#[derive(Debug, Args)]
pub struct StatArgs {
    /// s, b, d or g
    #[arg(long)]
    pub family: String,
    /// Window notation, e.g. "-3 1 -6 2 -5 -4" or "2[1] 1[3] 5 4 3[2]".
    #[arg(long, allow_hyphen_values = true)]
    pub element: String,
    #[arg(long)]
    pub stat: String,
    /// Number of colors; required for family g.
    #[arg(long)]
    pub r: Option<u32>,
    /// Letter order for inv and maj.
    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: Option<u32>,
    /// Statistic in the exponent of q.
    #[arg(long)]
    pub stat: String,
    /// Optional statistic in the exponent of t.
    #[arg(long)]
    pub tstat: Option<String>,
    /// trivial, sign, neg, abssign, invA, or a=<0|1>,b=<k>.
    #[arg(long = "char")]
    pub character: Option<String>,
    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A single identity id.
    #[arg(long, conflicts_with_all = ["all", "filter"])]
    pub id: Option<String>,
    /// Every registered identity.
    #[arg(long)]
    pub all: bool,
    /// Id prefix such as B, G5 or B.len.
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long)]
    pub tag: Option<String>,
    /// Exactly this n.
    #[arg(long, conflicts_with = "max_n")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    /// Exactly this r.
    #[arg(long, conflicts_with = "max_r")]
    pub r: Option<u32>,
    #[arg(long, default_value_t = 4)]
    pub max_r: u32,
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long)]
    pub b: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ListArgs {
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long)]
    pub tag: Option<String>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    text: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            text: format!("error: {e}\n"),
        }
    }
}

/// Runs the tool on `argv` (including the program name) and returns the exit
/// code and everything that should go to stdout.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(f) => (f.code, f.text),
    }
}

fn dispatch(cli: &Cli) -> Result<(i32, String), Failure> {
    match &cli.command {
        Command::Stat(args) => stat(args, cli.format).map(|s| (EXIT_OK, s)),
        Command::Dist(args) => dist(args, cli.format).map(|s| (EXIT_OK, s)),
        Command::Verify(args) => verify(args, cli.format),
        Command::List(args) => list(args, cli.format).map(|s| (EXIT_OK, s)),
        Command::Selftest => Ok(selftest(cli.format)),
    }
}

fn resolve_r(family: Family, r: Option<u32>) -> Result<u32, Error> {
    match (family.fixed_r(), r) {
        (Some(fixed), None) => Ok(fixed),
        (Some(fixed), Some(r)) if r == fixed => Ok(r),
        (Some(fixed), Some(r)) => Err(Error::InvalidParameters(format!(
            "family {family} has r = {fixed}, got --r {r}"
        ))),
        (None, Some(r)) => Ok(r),
        (None, None) => Err(Error::InvalidParameters("family g needs --r".into())),
    }
}

fn parse_order(order: &Option<String>) -> Result<Option<LetterOrder>, Error> {
    order.as_deref().map(str::parse).transpose()
}

fn stat(args: &StatArgs, format: Format) -> Result<String, Failure> {
    let family: Family = args.family.parse()?;
    let r = resolve_r(family, args.r)?;
    let pi = ColoredPerm::parse(&args.element, r)?;
    if !family.contains(&pi) && family != Family::G {
        return Err(Error::InvalidElement(format!("{pi} is not in family {family}")).into());
    }
    let name = StatName::parse(&args.stat, family, parse_order(&args.order)?)?;
    let value = name.eval(&pi)?;
    Ok(match format {
        Format::Human => format!("{value}\n"),
        Format::Tsv => format!("{}\t{name}\t{value}\n", args.element),
        Format::Json => format!(
            "{}\n",
            serde_json::json!({"element": pi.to_string(), "stat": name.to_string(), "value": value})
        ),
    })
}

fn dist(args: &DistArgs, format: Format) -> Result<String, Failure> {
    let family: Family = args.family.parse()?;
    let r = resolve_r(family, args.r)?;
    let order = parse_order(&args.order)?;
    let q_stat = StatName::parse(&args.stat, family, order)?;
    let t_stat = args
        .tstat
        .as_deref()
        .map(|s| StatName::parse(s, family, order))
        .transpose()?;
    let character = args
        .character
        .as_deref()
        .map(|c| {
            c.parse::<CharName>()
                .and_then(|name| CharSpec::new(family, name, r))
        })
        .transpose()?;
    let term = mahon_core::Term {
        weight: character.map_or(mahon_core::TermWeight::One, mahon_core::TermWeight::Char),
        q_stat,
        t_stat,
    };
    let verifier = Verifier::from_env()?;
    let (polys, _) = verifier.fold(
        &mahon_core::Source::Group {
            family,
            n: args.n,
            r,
        },
        &[term],
    )?;
    let p = &polys[0];
    Ok(match format {
        Format::Human => format!("{p}\n"),
        Format::Json => format!("{}\n", p.to_json()),
        Format::Tsv => {
            let mut s = String::from("q\tt\tcoeff\n");
            for (m, c) in p.terms() {
                let _ = writeln!(s, "{}\t{}\t{c}", m.q, m.t);
            }
            s
        }
    })
}

fn filter_of(prefix: Option<&str>, tag: &Option<String>) -> Result<Filter, Error> {
    Ok(Filter {
        prefix: prefix.map(str::to_string),
        tag: tag.as_deref().map(str::parse::<Tag>).transpose()?,
    })
}

/// The parameter tuples selected by the flags for one record.
fn selected_params(record: &IdentityRecord, args: &VerifyArgs) -> Result<Vec<Params>, Error> {
    let max_n = args.n.unwrap_or(args.max_n);
    let max_r = args
        .r
        .unwrap_or(args.max_r)
        .max(record.family.fixed_r().unwrap_or(1));
    let grid: Vec<Params> = record
        .param_grid(max_n, max_r)
        .into_iter()
        .filter(|p| args.n.is_none_or(|n| p.n == n))
        .filter(|p| args.r.is_none_or(|r| p.r == r))
        .filter(|p| args.a.is_none_or(|a| p.a == a))
        .filter(|p| args.b.is_none_or(|b| p.b == b))
        .collect();
    if grid.is_empty() && args.id.is_some() {
        // Report why the explicitly requested point is invalid.
        let n = args.n.unwrap_or(1);
        let r = args.r.or(record.family.fixed_r()).unwrap_or(1);
        record.check_params(&Params::with_chi(
            n,
            r,
            args.a.unwrap_or(0),
            args.b.unwrap_or(0),
        ))?;
    }
    Ok(grid)
}

fn verify(args: &VerifyArgs, format: Format) -> Result<(i32, String), Failure> {
    let records: Vec<&IdentityRecord> = match (&args.id, args.all, &args.filter) {
        (Some(id), _, _) => vec![find(id)?],
        (None, true, _) => list_identities(&filter_of(None, &args.tag)?),
        (None, false, Some(prefix)) => list_identities(&filter_of(Some(prefix), &args.tag)?),
        (None, false, None) => {
            return Err(Failure {
                code: EXIT_USAGE,
                text: "error: verify needs --id, --all or --filter\n".into(),
            })
        }
    };
    if args.max_n == 0 || args.n == Some(0) {
        return Err(Error::InvalidParameters("n must be at least 1".into()).into());
    }
    let verifier = Verifier::from_env()?;
    let mut reports = Vec::new();
    for record in records {
        for p in selected_params(record, args)? {
            reports.push(verifier.verify_record(record, &p)?);
        }
    }
    let unexpected = reports.iter().filter(|r| !r.as_expected()).count();
    let code = if unexpected == 0 {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    Ok((code, render_reports(&reports, unexpected, format)))
}

fn render_reports(reports: &[VerifyReport], unexpected: usize, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Human => {
            for r in reports {
                let _ = writeln!(s, "{}", r.human());
            }
            let _ = writeln!(
                s,
                "{} reports, {} as expected, {unexpected} unexpected",
                reports.len(),
                reports.len() - unexpected
            );
        }
        Format::Json => {
            for r in reports {
                let _ = writeln!(s, "{}", r.to_json());
            }
        }
        Format::Tsv => {
            s.push_str("id\tn\tr\ta\tb\tverdict\tcount\n");
            for r in reports {
                let _ = writeln!(s, "{}", r.tsv_line());
            }
        }
    }
    s
}

fn list(args: &ListArgs, format: Format) -> Result<String, Failure> {
    let records = list_identities(&filter_of(args.filter.as_deref(), &args.tag)?);
    let mut s = String::new();
    match format {
        Format::Json => {
            let rows: Vec<_> = records
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "id": r.id,
                        "family": r.family.to_string(),
                        "domain": r.domain_label(),
                        "constraints": r.constraint_label(),
                        "summary": r.summary,
                        "tags": r.tags.iter().map(|t| t.name()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let _ = writeln!(s, "{}", serde_json::Value::Array(rows));
        }
        Format::Human | Format::Tsv => {
            for r in records {
                let _ = writeln!(s, "{}", r.tsv_line());
            }
        }
    }
    Ok(s)
}

struct Golden {
    label: &'static str,
    r: u32,
    element: &'static str,
    stat: StatName,
    want: u64,
    remark: &'static str,
}

const fn golden(
    label: &'static str,
    r: u32,
    element: &'static str,
    stat: StatName,
    want: u64,
) -> Golden {
    Golden {
        label,
        r,
        element,
        stat,
        want,
        remark: "",
    }
}

fn golden_values() -> Vec<Golden> {
    use LetterOrder::*;
    const B: &str = "-3 1 -6 2 -5 -4";
    const G: &str = "2[1] 1[3] 5 4 3[2]";
    vec![
        golden("fmaj", 2, B, StatName::FmajB, 26),
        golden("Fmaj", 2, B, StatName::FmajCapB, 16),
        golden("major", 2, B, StatName::Major, 11),
        golden("maj_A", 2, B, StatName::Maj(IntegerB), 6),
        golden("neg", 2, B, StatName::Neg, 4),
        Golden {
            remark: "by definition; the published example prints 30",
            ..golden("nmaj", 2, B, StatName::Nmaj, 24)
        },
        golden("fmaj", 4, G, StatName::FmajG, 38),
        golden("rmaj", 4, G, StatName::Rmaj, 19),
        golden("rinv", 4, G, StatName::Rinv, 16),
        golden("fmaf", 4, G, StatName::Fmaf, 34),
    ]
}

fn selftest(format: Format) -> (i32, String) {
    let mut lines: Vec<(bool, String)> = Vec::new();
    for g in golden_values() {
        let got = ColoredPerm::parse(g.element, g.r)
            .and_then(|pi| g.stat.eval(&pi))
            .map_err(|e| e.to_string());
        let ok = got.as_ref().is_ok_and(|&v| v == g.want);
        let got_text = match &got {
            Ok(v) => v.to_string(),
            Err(e) => e.clone(),
        };
        let mut line = format!("{}({}) = {got_text} (want {})", g.label, g.element, g.want);
        if !g.remark.is_empty() {
            let _ = write!(line, " [{}]", g.remark);
        }
        lines.push((ok, line));
    }

    let decompositions = [
        (
            "3 -5 -1 4 -2",
            2,
            LetterOrder::IntegerB,
            "-5 -2 -1 3 4",
            "4 1 3 5 2",
        ),
        (
            "2 4[2] 1[1] 3[2]",
            3,
            LetterOrder::ValueBlockG,
            "4[2] 3[2] 1[1] 2",
            "4 1 3 2",
        ),
    ];
    for (text, r, order, want_tau, want_rho) in decompositions {
        let result = ColoredPerm::parse(text, r).and_then(|pi| mahon_core::decompose(&pi, order));
        let (ok, got) = match result {
            Ok((tau, rho)) => {
                let got = format!("{tau} | {rho}");
                (got == format!("{want_tau} | {want_rho}"), got)
            }
            Err(e) => (false, e.to_string()),
        };
        lines.push((
            ok,
            format!("decompose({text}) = {got} (want {want_tau} | {want_rho})"),
        ));
    }

    let verifier = Verifier::sequential();
    let checks = [
        ("S.gessel-simion", Params::new(6, 1)),
        ("B.len.invA", Params::new(3, 2)),
        ("D.len.invA.printed", Params::new(2, 2)),
        ("G.lmaj.chi", Params::with_chi(2, 3, 1, 2)),
        ("G5.symmetry", Params::new(3, 2)),
    ];
    for (id, p) in checks {
        let (ok, text) = match verifier.verify(id, &p) {
            Ok(rep) => (rep.as_expected(), format!("{id} {p}: {}", rep.verdict)),
            Err(e) => (false, format!("{id} {p}: {e}")),
        };
        lines.push((ok, text));
    }

    let failed = lines.iter().filter(|(ok, _)| !ok).count();
    let mut s = String::new();
    match format {
        Format::Json => {
            let rows: Vec<_> = lines
                .iter()
                .map(|(ok, text)| serde_json::json!({"ok": ok, "check": text}))
                .collect();
            let _ = writeln!(s, "{}", serde_json::Value::Array(rows));
        }
        Format::Human | Format::Tsv => {
            for (ok, text) in &lines {
                let _ = writeln!(s, "{}\t{text}", if *ok { "ok" } else { "FAIL" });
            }
            let _ = writeln!(s, "selftest: {} checks, {failed} failed", lines.len());
        }
    }
    let code = if failed == 0 { EXIT_OK } else { EXIT_MISMATCH };
    (code, s)
}
