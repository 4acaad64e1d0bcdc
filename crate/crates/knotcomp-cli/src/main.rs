//! Command-line front end: component counts, reduction traces, brute-force
//! oracle output, braid words, and verification sweeps.
//!
//! Exit codes: 0 success, 2 invalid parameters or usage, 3 arithmetic
//! overflow, 4 verification failures found, 1 anything else.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use knotcomp::perm::ComponentPartition;
use knotcomp::reduction::Terminal;
use knotcomp::verify::{self, Report};
use knotcomp::{Error, Result, TLink3, TwistedTorusLink};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "knotcomp",
    version,
    about = "Component counts for twisted torus links and three-block T-links"
)]
struct Cli {
    /// Emit JSON instead of plain text (nc, trace, oracle).
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for verification sweeps (0 = one per core).
    #[arg(long, global = true, default_value_t = 0, env = "KNOTCOMP_JOBS")]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Component count of the twisted torus link T(p,q;r,s).
    Nc {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
        #[arg(allow_negative_numbers = true)]
        s: i64,
    },
    /// Reduction trace of T(p,q;r,s): every state, the terminal rule, the count.
    Trace {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
        #[arg(allow_negative_numbers = true)]
        s: i64,
    },
    /// Brute-force cycle count and component partition.
    Oracle {
        #[command(subcommand)]
        link: LinkParams,
    },
    /// Defining braid word, as JSON {"strands", "letters"}.
    Braid {
        #[command(subcommand)]
        link: LinkParams,
    },
    /// Exhaustive verification sweeps; exits 4 if any check fails.
    Verify {
        /// Suite to run (all of them when omitted).
        suite: Option<Suite>,
        /// Twisted-torus sweeps cover 2 <= p <= this bound.
        #[arg(long, default_value_t = 25)]
        p_max: i64,
        /// Three-block sweeps cover block widths up to this bound.
        #[arg(long, default_value_t = 10)]
        tlink_p_max: i64,
        /// The knot family is checked for 1 <= n <= this bound.
        #[arg(long, default_value_t = 50)]
        n_max: i64,
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum LinkParams {
    /// Twisted torus link parameters: p q r s.
    Ttl {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
        #[arg(allow_negative_numbers = true)]
        s: i64,
    },
    /// Three-block T-link parameters: p1 q1 p2 q2 p3 q3.
    Tlink {
        #[arg(allow_negative_numbers = true)]
        p1: i64,
        #[arg(allow_negative_numbers = true)]
        q1: i64,
        #[arg(allow_negative_numbers = true)]
        p2: i64,
        #[arg(allow_negative_numbers = true)]
        q2: i64,
        #[arg(allow_negative_numbers = true)]
        p3: i64,
        #[arg(allow_negative_numbers = true)]
        q3: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    OracleTtl,
    OracleTlink,
    Identities,
    Formulas,
    GcdDivisibility,
    KnotFamily,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // A failure here means a pool already exists; sweeps still run.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::InvalidParam { .. } | Error::Unsupported { .. } => 2,
                Error::Overflow { .. } => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Nc { p, q, r, s } => {
            let link = TwistedTorusLink::new(*p, *q, *r, *s)?;
            let count = link.component_count()?;
            if cli.json {
                println!("{}", json!({"p": p, "q": q, "r": r, "s": s, "count": count}));
            } else {
                println!("{count}");
            }
            Ok(0)
        }
        Command::Trace { p, q, r, s } => {
            let link = TwistedTorusLink::new(*p, *q, *r, *s)?;
            let tr = link.reduction_trace()?;
            let last = tr.states.last().expect("trace has at least one state");
            if cli.json {
                let states: Vec<_> = tr
                    .states
                    .iter()
                    .map(|st| {
                        json!({
                            "p": st.p, "q": st.q, "r": st.r, "s": st.s,
                            "branch": st.branch.name(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "p": p, "q": q, "r": r, "s": s,
                        "trace": states,
                        "terminal": tr.terminal.name(),
                        "count": tr.count,
                    })
                );
            } else {
                for (i, st) in tr.states.iter().enumerate() {
                    println!("{} ({},{},{},{}) {}", i + 1, st.p, st.q, st.r, st.s, st.branch.name());
                }
                match tr.terminal {
                    Terminal::QZero => println!(
                        "QZero {}-{}+gcd({},{})={}",
                        last.p, last.r, last.r, last.s, tr.count
                    ),
                    Terminal::SZero => {
                        println!("SZero gcd({},{})={}", last.p, last.q, tr.count)
                    }
                }
            }
            Ok(0)
        }
        Command::Oracle { link } => {
            let (params, perm) = match link {
                LinkParams::Ttl { p, q, r, s } => {
                    let link = TwistedTorusLink::new(*p, *q, *r, *s)?;
                    let params = json!({"p": p, "q": q, "r": r, "s": s});
                    (params, link.strand_permutation()?)
                }
                LinkParams::Tlink { p1, q1, p2, q2, p3, q3 } => {
                    let link = TLink3::new([(*p1, *q1), (*p2, *q2), (*p3, *q3)])?;
                    let params = json!({"pairs": [[p1, q1], [p2, q2], [p3, q3]]});
                    (params, link.strand_permutation()?)
                }
            };
            let partition = perm.cycle_partition();
            let count = partition.len();
            if cli.json {
                let mut object = params;
                object["count"] = json!(count);
                object["partition"] = json!(partition.cycles());
                println!("{object}");
            } else {
                println!("{count} / {}", partition_text(&partition));
            }
            Ok(0)
        }
        Command::Braid { link } => {
            let word = match link {
                LinkParams::Ttl { p, q, r, s } => {
                    TwistedTorusLink::new(*p, *q, *r, *s)?.braid_word()?
                }
                LinkParams::Tlink { p1, q1, p2, q2, p3, q3 } => {
                    TLink3::new([(*p1, *q1), (*p2, *q2), (*p3, *q3)])?.braid_word()?
                }
            };
            println!("{}", json!({"strands": word.strands, "letters": word.letters}));
            Ok(0)
        }
        Command::Verify { suite, p_max, tlink_p_max, n_max, format } => {
            let reports = match suite {
                None => verify::all_suites(*p_max, *tlink_p_max, *n_max)?,
                Some(Suite::OracleTtl) => vec![verify::oracle_ttl(*p_max)?],
                Some(Suite::OracleTlink) => vec![verify::oracle_tlink(*tlink_p_max)?],
                Some(Suite::Identities) => vec![verify::identities(*p_max)?],
                Some(Suite::Formulas) => vec![verify::formulas(*p_max)?],
                Some(Suite::GcdDivisibility) => {
                    vec![verify::gcd_divisibility(*p_max, *tlink_p_max)?]
                }
                Some(Suite::KnotFamily) => vec![verify::knot_family(*n_max)?],
            };
            print_reports(&reports, *format)?;
            Ok(if reports.iter().all(Report::passed) { 0 } else { 4 })
        }
    }
}

fn partition_text(partition: &ComponentPartition) -> String {
    let sets: Vec<String> = partition
        .cycles()
        .iter()
        .map(|cycle| {
            let members: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    format!("[{}]", sets.join(","))
}

fn print_reports(reports: &[Report], format: Format) -> Result<()> {
    match format {
        Format::Text => {
            for report in reports {
                println!(
                    "suite={} checked={} failures={}",
                    report.suite, report.checked, report.failure_count
                );
                for f in &report.failures {
                    println!(
                        "  check={} params={} expected={} got={}",
                        f.check, f.params, f.expected, f.got
                    );
                }
            }
        }
        Format::Json => {
            let entries: Vec<_> = reports
                .iter()
                .map(|report| {
                    let failures: Vec<_> = report
                        .failures
                        .iter()
                        .map(|f| {
                            json!({
                                "check": f.check, "params": f.params,
                                "expected": f.expected, "got": f.got,
                            })
                        })
                        .collect();
                    json!({
                        "suite": report.suite,
                        "checked": report.checked,
                        "failure_count": report.failure_count,
                        "failures": failures,
                    })
                })
                .collect();
            println!("{}", json!({ "reports": entries }));
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            let io_err = |e: csv::Error| Error::Unsupported {
                message: format!("cannot write CSV: {e}"),
            };
            writer
                .write_record(["suite", "check", "params", "expected", "got"])
                .map_err(io_err)?;
            for report in reports {
                for f in &report.failures {
                    writer
                        .write_record([report.suite, f.check, &f.params, &f.expected, &f.got])
                        .map_err(io_err)?;
                }
            }
            writer.flush().map_err(|e| Error::Unsupported {
                message: format!("cannot write CSV: {e}"),
            })?;
            for report in reports {
                eprintln!(
                    "suite={} checked={} failures={}",
                    report.suite, report.checked, report.failure_count
                );
            }
        }
    }
    Ok(())
}
