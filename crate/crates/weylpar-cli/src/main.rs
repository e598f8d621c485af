//! Command-line front end: parse Cartan-type specs, run the library
//! computations, and emit text, JSON, or CSV.
//!
//! Exit codes: 0 on success, 1 on input error or failed verification,
//! 2 when a computation exceeds its configured bound.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use weylpar::cartan::CartanType;
use weylpar::cuspidal::{cuspidal_set, format_tuple};
use weylpar::engine::{
    parse_group_spec, DEFAULT_ENUM_BOUND, DEFAULT_TABLE_BOUND, HEAVY_ENUM_BOUND,
};
use weylpar::error::Error;
use weylpar::param::{
    count_parameters, enumerate_parameters, parameters_json, series_json, series_report,
};
use weylpar::relative::relative_weyl_group;
use weylpar::roots::{RootSystem, SubsetJ};
use weylpar::verify::{run_all, VerifyConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "weylpar",
    version,
    about = "Exact Weyl-group combinatorics: diagrams, cuspidal labels, relative Weyl groups, and parameter enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Diagram data of a Cartan type: Cartan matrix, root count, group order.
    Diagram { type_spec: String },

    /// The cuspidal label set of a Cartan type.
    Cuspidal { type_spec: String },

    /// The relative Weyl group over a parabolic subset.
    Relative {
        type_spec: String,
        /// Comma-separated 1-based node indices of the parabolic subset.
        #[arg(long, value_delimiter = ',')]
        levi: Vec<usize>,
    },

    /// Enumerate the parameter set of triples (J, epsilon, zeta).
    Enumerate {
        type_spec: String,
        /// Emit only the series counts.
        #[arg(long)]
        count: bool,
    },

    /// Series counts of the parameter set.
    Count { type_spec: String },

    /// The pairs (conjugacy class, irreducible of its centralizer) of a
    /// finite group: presets `S<n>`, `Z<n>`, `Z2^<k>`, `weyl:<type>`, or explicit
    /// cycle-notation generators.
    Mset {
        group: String,
        /// Enumeration bound override.
        #[arg(long)]
        bound: Option<u64>,
    },

    /// Run the verification suite and exit 0 when every check passes.
    Verify {
        /// Scan irreducible types up to this rank.
        #[arg(long, default_value_t = 8)]
        max_rank: u8,
        /// Enable the heavy opt-in jobs (full class count at rank 8).
        #[arg(long)]
        heavy: bool,
        /// Enumeration bound override.
        #[arg(long)]
        bound: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let format = cli.format;
    let out = cli.out.clone();
    match run(cli.command, format) {
        Ok((output, code)) => {
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                let mut stdout = std::io::stdout().lock();
                let _ = stdout.write_all(output.as_bytes());
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BoundExceeded { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(command: Command, format: Format) -> Result<(String, u8), Error> {
    match command {
        Command::Diagram { type_spec } => diagram(&type_spec, format).map(ok),
        Command::Cuspidal { type_spec } => cuspidal(&type_spec, format).map(ok),
        Command::Relative { type_spec, levi } => relative(&type_spec, &levi, format).map(ok),
        Command::Enumerate { type_spec, count } => {
            if count {
                counts(&type_spec, format).map(ok)
            } else {
                enumerate(&type_spec, format).map(ok)
            }
        }
        Command::Count { type_spec } => counts(&type_spec, format).map(ok),
        Command::Mset { group, bound } => mset(&group, bound, format).map(ok),
        Command::Verify {
            max_rank,
            heavy,
            bound,
        } => verify(max_rank, heavy, bound),
    }
}

fn ok(output: String) -> (String, u8) {
    (output, 0)
}

/// Parses a type spec, reporting canonicalization aliases (e.g. `D3 = A3`)
/// on the diagnostic stream.
fn parse_type(spec: &str) -> Result<CartanType, Error> {
    let (ty, notes) = CartanType::parse_with_notes(spec)?;
    for note in &notes {
        eprintln!("note: {note}");
    }
    Ok(ty)
}

fn require_text_or_json(format: Format, verb: &str) -> Result<(), Error> {
    if format == Format::Csv {
        return Err(Error::Unsupported(format!(
            "the {verb} command supports --format text or json"
        )));
    }
    Ok(())
}

fn diagram(spec: &str, format: Format) -> Result<String, Error> {
    require_text_or_json(format, "diagram")?;
    let ty = parse_type(spec)?;
    let rs = RootSystem::new(&ty)?;
    let order = ty
        .weyl_order()
        .map(|o| o.to_string())
        .unwrap_or_else(|| "overflow".to_string());
    let norms: Vec<String> = (0..rs.rank())
        .map(|i| rs.simple_norm2(i).to_string())
        .collect();
    match format {
        Format::Json => {
            let rows: Vec<String> = rs
                .cartan_matrix()
                .iter()
                .map(|row| {
                    format!(
                        "[{}]",
                        row.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                })
                .collect();
            Ok(format!(
                "{{\"type\": \"{}\", \"rank\": {}, \"positive_roots\": {}, \"order\": {}, \"cartan\": [{}], \"norms\": [{}]}}\n",
                ty,
                rs.rank(),
                rs.positive_count(),
                if order == "overflow" { "null".to_string() } else { order },
                rows.join(", "),
                norms.join(", ")
            ))
        }
        _ => {
            let mut out = String::new();
            out.push_str(&format!("type: {ty}\n"));
            out.push_str(&format!("rank: {}\n", rs.rank()));
            out.push_str(&format!("positive roots: {}\n", rs.positive_count()));
            out.push_str(&format!("order: {order}\n"));
            out.push_str("cartan matrix:\n");
            for row in rs.cartan_matrix() {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                out.push_str(&format!(" {}\n", cells.join("")));
            }
            out.push_str(&format!("squared norms: [{}]\n", norms.join(", ")));
            Ok(out)
        }
    }
}

fn cuspidal(spec: &str, format: Format) -> Result<String, Error> {
    require_text_or_json(format, "cuspidal")?;
    let ty = parse_type(spec)?;
    let set = cuspidal_set(&ty);
    let labels: Vec<String> = set.tuples().iter().map(|t| format_tuple(t)).collect();
    match format {
        Format::Json => Ok(format!(
            "{{\"type\": \"{}\", \"count\": {}, \"labels\": [{}]}}\n",
            ty,
            labels.len(),
            labels
                .iter()
                .map(|l| format!("\"{l}\""))
                .collect::<Vec<_>>()
                .join(", ")
        )),
        _ => {
            let mut out = format!("type: {ty}\ncount: {}\n", labels.len());
            for l in &labels {
                out.push_str(l);
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn relative(spec: &str, levi: &[usize], format: Format) -> Result<String, Error> {
    require_text_or_json(format, "relative")?;
    let ty = parse_type(spec)?;
    let rs = RootSystem::new(&ty)?;
    for &i in levi {
        if i == 0 {
            return Err(Error::InvalidSubset("node indices are 1-based".to_string()));
        }
    }
    let zero_based: Vec<usize> = levi.iter().map(|&i| i - 1).collect();
    let j = SubsetJ::from_indices(&zero_based, rs.rank())?;
    let rel = relative_weyl_group(&rs, j)?;
    let gens: Vec<String> = rel
        .generator_nodes
        .iter()
        .map(|&h| (h + 1).to_string())
        .collect();
    let order = rel
        .order()
        .map(|o| o.to_string())
        .unwrap_or_else(|| "overflow".to_string());
    match format {
        Format::Json => {
            let matrix_rows: Vec<String> = rel
                .coxeter_matrix
                .iter()
                .map(|row| {
                    format!(
                        "[{}]",
                        row.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                })
                .collect();
            Ok(format!(
                "{{\"ambient\": \"{}\", \"J\": [{}], \"levi\": \"{}\", \"generators\": [{}], \"coxeter_matrix\": [{}], \"relative\": \"{}\", \"relative_order\": {}}}\n",
                ty,
                j.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(", "),
                rel.levi_type,
                gens.join(", "),
                matrix_rows.join(", "),
                rel.identified_type,
                if order == "overflow" { "null".to_string() } else { order },
            ))
        }
        _ => {
            let mut out = String::new();
            out.push_str(&format!("ambient: {ty}\n"));
            out.push_str(&format!("levi nodes: {j}\n"));
            out.push_str(&format!("levi type: {}\n", rel.levi_type));
            out.push_str(&format!(
                "generators: {}\n",
                gens.iter()
                    .map(|g| format!("sigma_{g}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            out.push_str("coxeter matrix:\n");
            for row in &rel.coxeter_matrix {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
                out.push_str(&format!(" {}\n", cells.join("")));
            }
            out.push_str(&format!("relative type: {}\n", rel.identified_type));
            out.push_str(&format!("relative order: {order}\n"));
            Ok(out)
        }
    }
}

fn enumerate(spec: &str, format: Format) -> Result<String, Error> {
    let ty = parse_type(spec)?;
    match format {
        Format::Json => parameters_json(&ty),
        Format::Csv => {
            let params = enumerate_parameters(&ty)?;
            let mut out = String::from("ambient,J,levi,zeta,relative,epsilon\n");
            for p in &params {
                out.push_str(&p.to_csv_row(&ty));
                out.push('\n');
            }
            Ok(out)
        }
        Format::Text => {
            let params = enumerate_parameters(&ty)?;
            let mut out = format!("ambient: {ty}\ntotal: {}\n", params.len());
            for p in &params {
                out.push_str(&p.to_text_line());
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn counts(spec: &str, format: Format) -> Result<String, Error> {
    let ty = parse_type(spec)?;
    let report = series_report(&ty)?;
    debug_assert_eq!(report.total, count_parameters(&ty)?);
    match format {
        Format::Json => Ok(series_json(&report)),
        Format::Csv => {
            let mut out = String::from("ambient,J,levi,zeta,relative,count\n");
            for s in &report.series {
                let j: Vec<String> = s.subset.iter().map(|i| (i + 1).to_string()).collect();
                let zeta = format_tuple(&s.zeta);
                let fields = [
                    ty.to_string(),
                    j.join(" "),
                    s.levi.to_string(),
                    zeta,
                    s.relative.to_string(),
                    s.member_count.to_string(),
                ];
                let row: Vec<String> = fields
                    .iter()
                    .map(|f| {
                        if f.contains(',') || f.contains('"') {
                            format!("\"{}\"", f.replace('"', "\"\""))
                        } else {
                            f.clone()
                        }
                    })
                    .collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = format!("ambient: {ty}\ntotal: {}\n", report.total);
            for s in &report.series {
                out.push_str(&format!(
                    "J={} levi={} zeta={} relative={} count={}\n",
                    s.subset,
                    s.levi,
                    format_tuple(&s.zeta),
                    s.relative,
                    s.member_count
                ));
            }
            Ok(out)
        }
    }
}

fn mset(group_spec: &str, bound: Option<u64>, format: Format) -> Result<String, Error> {
    require_text_or_json(format, "mset")?;
    let group = parse_group_spec(group_spec)?;
    let enum_bound = bound.unwrap_or(DEFAULT_ENUM_BOUND);
    let store = group.enumerate(enum_bound)?;
    let report = group.m_set(&store, bound.unwrap_or(DEFAULT_TABLE_BOUND))?;
    match format {
        Format::Json => {
            let entries: Vec<String> = report
                .entries
                .iter()
                .map(|e| {
                    format!(
                        "{{\"class\": \"{}\", \"size\": {}, \"centralizer_order\": {}, \"irreducibles\": {}}}",
                        group.decode(&e.class_rep).cycle_notation(),
                        e.class_size,
                        e.centralizer_order,
                        e.irr_count
                    )
                })
                .collect();
            Ok(format!(
                "{{\"group\": \"{}\", \"order\": {}, \"classes\": [{}], \"total\": {}}}\n",
                group_spec,
                store.len(),
                entries.join(", "),
                report.total
            ))
        }
        _ => {
            let mut out = format!("group: {group_spec}\norder: {}\n", store.len());
            for e in &report.entries {
                out.push_str(&format!(
                    "class={} size={} centralizer={} irreducibles={}\n",
                    group.decode(&e.class_rep).cycle_notation(),
                    e.class_size,
                    e.centralizer_order,
                    e.irr_count
                ));
            }
            out.push_str(&format!("total: {}\n", report.total));
            Ok(out)
        }
    }
}

fn verify(max_rank: u8, heavy: bool, bound: Option<u64>) -> Result<(String, u8), Error> {
    let cfg = VerifyConfig {
        max_rank,
        classical_rank: max_rank.max(12),
        enum_bound: bound.unwrap_or(if heavy {
            HEAVY_ENUM_BOUND
        } else {
            DEFAULT_ENUM_BOUND
        }),
        heavy,
    };
    let outcomes = run_all(&cfg)?;
    let mut out = String::new();
    let mut all_passed = true;
    for o in &outcomes {
        if o.passed {
            out.push_str(&format!("ok   {} - {}\n", o.name, o.detail));
        } else {
            all_passed = false;
            out.push_str(&format!("FAIL {} - {}\n", o.name, o.detail));
        }
    }
    out.push_str(&format!(
        "{} of {} checks passed\n",
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    ));
    Ok((out, if all_passed { 0 } else { 1 }))
}
