use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qcong_core::congruence::{
    instantiate, search, verify_claims, verify_intermediate, Intermediate, Params, Theorem,
    VerifyOptions, DEFAULT_MAX_ORDER,
};
use qcong_core::counting::{count, Kind};
use qcong_core::qfunctions::{eta_quotient_in, standard_cases, verify_identity, IdentityId};
use qcong_core::report::{render_table, VerificationReport};
use qcong_core::suite::{run_all, CriterionResult};
use qcong_core::{Error, EtaQuotient, Ring};

#[derive(Parser)]
#[command(name = "qcong", version, about = "Exact q-series expansion and congruence verification for overpartitions with l-regular non-overlined parts")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Report wall time as 0 so repeated runs give identical output.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    P,
    Overpartition,
    Regular,
    Overlined,
    Rstar,
    D2,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of an eta quotient.
    Expand {
        /// Factors as `scale:exponent` pairs, e.g. `2:1,4:1,1:-2`.
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        modulus: Option<u64>,
        /// Print zero coefficients too.
        #[arg(long)]
        dense: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print partition counts from the combinatorial oracles.
    Count {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long)]
        upto: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check one identity of the catalog, or all of them.
    VerifyLemma {
        /// Identity tag, e.g. PSI_PDISSECT.
        #[arg(long, required_unless_present = "all")]
        id: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// Series order; with --all, overrides each entry's default.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Instantiate and check a theorem family or proof-internal congruence.
    VerifyTheorem {
        /// e.g. thm3.5, thm3.1(ii), thm3.7(iii), or an intermediate tag such as RAST41C.
        #[arg(long)]
        family: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 500)]
        terms: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the full acceptance suite.
    VerifyAll {
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Scan progressions of R*_ell for vanishing congruences.
    Search {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        max_step: u64,
        #[arg(long)]
        max_modulus: u64,
        #[arg(long, default_value_t = 500)]
        order: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    alpha: Option<u32>,
    #[arg(long)]
    ell: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    /// Restricts thm3.7(iii) to one modulus (2 or 4).
    #[arg(long)]
    modulus: Option<u64>,
}

/// What a subcommand produced: the text to emit and whether everything passed.
struct Outcome {
    text: String,
    passed: bool,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}

fn reports_outcome(mut reports: Vec<VerificationReport>, format: Format, no_timing: bool) -> Outcome {
    if no_timing {
        reports.iter_mut().for_each(|r| r.wall_time_us = 0);
    }
    let passed = reports.iter().all(|r| r.passed());
    let text = match format {
        Format::Json => to_json(&reports),
        Format::Text => render_table(&reports),
    };
    Outcome { text, passed }
}

fn kind_of(kind: KindArg, ell: Option<u64>) -> Result<Kind, Error> {
    let ell = || ell.ok_or(Error::MissingParameter("ell"));
    Ok(match kind {
        KindArg::P => Kind::PlainP,
        KindArg::Overpartition => Kind::Overpartition,
        KindArg::Regular => Kind::LRegular(ell()?),
        KindArg::Overlined => Kind::OverlinedLRegular(ell()?),
        KindArg::Rstar => Kind::NonOverlinedLRegular(ell()?),
        KindArg::D2 => Kind::DistinctTwoCopies,
    })
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let no_timing = cli.no_timing;
    match &cli.command {
        Command::Expand {
            eta,
            order,
            modulus,
            dense,
            format,
        } => {
            let quotient: EtaQuotient = eta.parse()?;
            let series = eta_quotient_in(&quotient, Ring::from_modulus(*modulus)?, *order)?;
            let text = match format {
                Format::Text => series.to_text(!dense),
                Format::Json => {
                    let mut s = series.to_json_array();
                    s.push('\n');
                    s
                }
            };
            Ok(Outcome { text, passed: true })
        }
        Command::Count {
            kind,
            ell,
            upto,
            format,
        } => {
            let table = count(kind_of(*kind, *ell)?, *upto)?;
            let text = match format {
                Format::Text => table.to_text(),
                Format::Json => to_json(&table),
            };
            Ok(Outcome { text, passed: true })
        }
        Command::VerifyLemma {
            id,
            p,
            n,
            all,
            order,
            format,
        } => {
            let reports = if *all {
                standard_cases()
                    .into_iter()
                    .map(|c| verify_identity(c.id, c.param, order.unwrap_or(c.order)))
                    .collect::<Result<Vec<_>, _>>()?
            } else {
                let id: IdentityId = id.as_deref().unwrap_or_default().parse()?;
                let param = match id.param_schema() {
                    Some(("n", _)) => *n,
                    Some(_) => *p,
                    None => None,
                };
                vec![verify_identity(id, param, order.unwrap_or(500))?]
            };
            Ok(reports_outcome(reports, *format, no_timing))
        }
        Command::VerifyTheorem {
            family,
            params,
            terms,
            max_order,
            format,
        } => {
            let opts = VerifyOptions {
                max_order: *max_order,
            };
            let reports = if let Ok(id) = family.parse::<Intermediate>() {
                vec![verify_intermediate(id, *terms, &opts)?]
            } else {
                let params = Params {
                    p: params.p,
                    alpha: params.alpha,
                    ell: params.ell,
                    k: params.k,
                    modulus: params.modulus,
                };
                let mut claims = Vec::new();
                for t in Theorem::parse_group(family)? {
                    claims.extend(instantiate(t, &params)?);
                }
                claims.sort_by(|a, b| {
                    (&a.family, &a.params, a.progression).cmp(&(&b.family, &b.params, b.progression))
                });
                let jobs: Vec<_> = claims.into_iter().map(|c| (c, *terms)).collect();
                verify_claims(&jobs, &opts)
                    .into_iter()
                    .collect::<Result<Vec<_>, _>>()?
            };
            Ok(reports_outcome(reports, *format, no_timing))
        }
        Command::VerifyAll { max_order, format } => {
            let mut results = run_all(&VerifyOptions {
                max_order: *max_order,
            });
            if no_timing {
                for r in &mut results {
                    r.reports.iter_mut().chain(r.recorded.iter_mut()).for_each(|x| x.wall_time_us = 0);
                }
            }
            let passed = results.iter().all(CriterionResult::passed);
            let text = match format {
                Format::Json => to_json(&results),
                Format::Text => {
                    let mut out = String::new();
                    for r in &results {
                        out.push_str(&r.summary());
                        out.push('\n');
                        out.push_str(&render_table(&r.reports));
                        if !r.recorded.is_empty() {
                            out.push_str("  recorded:\n");
                            out.push_str(&render_table(&r.recorded));
                        }
                        for e in &r.errors {
                            out.push_str(&format!("  error: {e}\n"));
                        }
                    }
                    out
                }
            };
            Ok(Outcome { text, passed })
        }
        Command::Search {
            ell,
            max_step,
            max_modulus,
            order,
            format,
        } => {
            let found = search(*ell, *max_step, *max_modulus, *order)?;
            let text = match format {
                Format::Json => to_json(&found),
                Format::Text => found
                    .iter()
                    .map(|c| {
                        let label = if c.rediscovers.is_empty() {
                            String::new()
                        } else {
                            format!("  [{}]", c.rediscovers.join(", "))
                        };
                        format!("{} mod {}  evidence={}{label}\n", c.progression, c.modulus, c.evidence)
                    })
                    .collect(),
            };
            Ok(Outcome { text, passed: true })
        }
    }
}

fn emit(path: Option<&PathBuf>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(cli.output.as_ref(), &outcome.text) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
