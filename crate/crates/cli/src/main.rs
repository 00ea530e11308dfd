//! `seifert`: normal forms, complexity bounds and censuses of Seifert fibre
//! spaces from the command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
//! 3 census violation found.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use seifert::census::{compare, enumerate_nonorientable_closed, ingest_census, write_census_tsv};
use seifert::{
    boundary_profile, conjectured_complexity, equivalent, euler_char_base, is_closed, is_orientable,
    normalize, orbifold_summary, reverse_orientation, sharper_estimate_note, upper_bound, Error,
    SeifertParams,
};

#[derive(Parser)]
#[command(name = "seifert", version, about = "Seifert fibre space invariants and complexity bounds")]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form of a parameter set.
    Normalize { params: String },
    /// Whether two parameter sets describe fibre-preserving homeomorphic spaces.
    Eq { a: String, b: String },
    /// Complexity upper bound.
    Bound { params: String },
    /// Canonical form after reversing orientation (ε must be o1 or n2).
    Reverse { params: String },
    /// Orientability, closedness, χ, boundary and base orbifold.
    Info { params: String },
    /// Conjectured exact complexity of a closed non-orientable space.
    Conjecture { params: String },
    #[command(subcommand)]
    Census(CensusCommand),
}

#[derive(Subcommand)]
enum CensusCommand {
    /// Enumerate closed non-orientable spaces with bound <= cmax as TSV.
    Gen {
        #[arg(long)]
        cmax: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a census TSV file against the bounds.
    Check {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        cmax: Option<u64>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. } | Error::CensusLine { .. } => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn parse(text: &str) -> Result<SeifertParams, Failure> {
    Ok(text.parse()?)
}

fn render<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> String {
    if json {
        serde_json::to_string_pretty(value).expect("serializable") + "\n"
    } else {
        text()
    }
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    let out = match cli.command {
        Command::Normalize { params } => {
            let x = normalize(&parse(&params)?)?;
            render(json, &json!({ "normalized": x.to_string(), "params": x }), || format!("{x}\n"))
        }
        Command::Eq { a, b } => {
            let (a, b) = (parse(&a)?, parse(&b)?);
            let eq = equivalent(&a, &b)?;
            let (na, nb) = (normalize(&a)?, normalize(&b)?);
            render(json, &json!({ "equivalent": eq, "a": na.to_string(), "b": nb.to_string() }), || {
                if eq {
                    format!("equivalent\n{na}\n")
                } else {
                    format!("not equivalent\n{na}\n{nb}\n")
                }
            })
        }
        Command::Bound { params } => {
            let x = parse(&params)?;
            let bound = upper_bound(&x)?;
            let note = sharper_estimate_note(&x)?;
            let normalized = normalize(&x)?;
            render(
                json,
                &json!({
                    "normalized": normalized.to_string(),
                    "value": bound.value,
                    "case_tag": bound.case_tag,
                    "exact": bound.exact,
                    "label": bound.label,
                    "note": note,
                }),
                || {
                    let mut s = format!(
                        "normalized: {normalized}\nvalue: {}\ncase: {}\nexact: {}\nlabel: {}\n",
                        bound.value,
                        bound.case_tag,
                        bound.exact,
                        bound.label.as_deref().unwrap_or("-")
                    );
                    if let Some(note) = note {
                        s.push_str(&format!("note: {note}\n"));
                    }
                    s
                },
            )
        }
        Command::Reverse { params } => {
            let x = reverse_orientation(&parse(&params)?)?;
            render(json, &json!({ "reversed": x.to_string(), "params": x }), || format!("{x}\n"))
        }
        Command::Info { params } => {
            let x = parse(&params)?;
            let normalized = normalize(&x)?;
            let boundary = boundary_profile(&normalized);
            let orbifold = orbifold_summary(&normalized);
            let orientable = is_orientable(&normalized);
            let closed = is_closed(&normalized);
            let chi = euler_char_base(&normalized);
            render(
                json,
                &json!({
                    "normalized": normalized.to_string(),
                    "orientable": orientable,
                    "closed": closed,
                    "euler_char_base": chi,
                    "boundary_profile": boundary,
                    "orbifold_summary": orbifold,
                }),
                || {
                    let cones: Vec<String> = orbifold.cone_points.iter().map(ToString::to_string).collect();
                    format!(
                        "normalized: {normalized}\norientable: {orientable}\nclosed: {closed}\nchi: {chi}\n\
                         boundary: tori {} klein_regular {} klein_with_exceptional {} exceptional_annuli {}\n\
                         orbifold: genus {} orientable_base {} cone_points [{}] reflector_circles {} \
                         reflector_arcs {} underlying_boundary_components {} minus_decorations {}\n",
                        boundary.tori,
                        boundary.klein_regular,
                        boundary.klein_with_exceptional,
                        boundary.exceptional_annuli,
                        orbifold.genus,
                        orbifold.orientable_base,
                        cones.join(","),
                        orbifold.reflector_circles,
                        orbifold.reflector_arcs,
                        orbifold.underlying_boundary_components,
                        orbifold.minus_decorations,
                    )
                },
            )
        }
        Command::Conjecture { params } => {
            let x = parse(&params)?;
            let value = conjectured_complexity(&x)?;
            render(json, &json!({ "normalized": normalize(&x)?.to_string(), "conjectured": value }), || {
                match value {
                    Some(v) => format!("{v}\n"),
                    None => "none (reducible or P2-reducible fibration)\n".to_owned(),
                }
            })
        }
        Command::Census(CensusCommand::Gen { cmax, out }) => {
            let entries = enumerate_nonorientable_closed(cmax);
            let text = if json {
                serde_json::to_string_pretty(&json!({ "c_max": cmax, "entries": entries }))
                    .expect("serializable")
                    + "\n"
            } else {
                write_census_tsv(&entries, cmax)
            };
            match out {
                Some(path) => {
                    fs::write(&path, text)
                        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
                    String::new()
                }
                None => text,
            }
        }
        Command::Census(CensusCommand::Check { file, cmax }) => {
            let reader = fs::File::open(&file)
                .map_err(|e| Failure::usage(format!("cannot open {}: {e}", file.display())))?;
            let records = ingest_census(BufReader::new(reader))?;
            let report = compare(&records, cmax)?;
            let code = if report.has_violations() { 3 } else { 0 };
            let text = render(json, &report, || {
                let mut s = String::new();
                for row in &report.rows {
                    s.push_str(&format!(
                        "{}\t{}\trecorded {}\tbound {} ({})\t{}\n",
                        row.name,
                        row.normalized,
                        row.recorded,
                        row.bound.value,
                        row.bound.case_tag,
                        row.status
                    ));
                }
                let sum = &report.summary;
                s.push_str(&format!(
                    "total {} sharp {} overestimate {} violation {} skipped {}\n",
                    sum.total, sum.sharp, sum.overestimate, sum.violation, sum.skipped
                ));
                for o in &sum.overestimates {
                    s.push_str(&format!("overestimate: {} by {} ({})\n", o.name, o.by, o.case_tag));
                }
                for note in &sum.notes {
                    s.push_str(&format!("note: {note}\n"));
                }
                s
            });
            return Ok((text, code));
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            let _ = io::stdout().write_all(text.as_bytes());
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
