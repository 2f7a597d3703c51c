use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zetaforge_cli::{
    cmd_field_info, cmd_table, cmd_verify_wilton, cmd_zeta, cmd_zeta_all_routes, parse_batch, parse_complex,
    series_params, wilton_csv, CliError, OutputRecord, RouteArg,
};

/// Zeta and L-values of quadratic fields, with cross-checked routes.
#[derive(Parser, Debug)]
#[command(name = "zetaforge", version, about)]
struct Cli {
    /// Target tolerance for truncated series
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Cap on series terms and on m-sum truncation
    #[arg(long, global = true, env = "ZETAFORGE_MAX_TERMS")]
    max_terms: Option<usize>,

    /// Radius used near integer Meijer parameters
    #[arg(long, global = true)]
    epsilon: Option<f64>,

    /// JSON output, one object per line (default)
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// CSV output
    #[arg(long, global = true)]
    csv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Signature, class number, regulator, residue and ideal counts
    FieldInfo {
        #[arg(short = 'd', long = "disc", allow_hyphen_values = true)]
        d: i64,
    },
    /// Dedekind zeta value (D = 0 gives the Riemann zeta function)
    Zeta {
        #[arg(short = 'd', long = "disc", allow_hyphen_values = true)]
        d: i64,
        #[arg(short = 's', allow_hyphen_values = true)]
        s: String,
        #[arg(long, value_enum, default_value = "factored")]
        route: RouteArg,
        /// Evaluate every applicable route and their differences
        #[arg(long)]
        all_routes: bool,
    },
    /// Residuals of the Wilton-type identity over a list of truncations
    VerifyWilton {
        #[arg(short = 'd', long = "disc", allow_hyphen_values = true)]
        d: i64,
        #[arg(short = 'u', allow_hyphen_values = true)]
        u: String,
        #[arg(short = 'v', allow_hyphen_values = true)]
        v: String,
        /// Strictly increasing truncation points
        #[arg(short = 'M', value_delimiter = ',', default_value = "100,400,1600")]
        m: Vec<usize>,
    },
    /// Batch evaluation of `D,s,route` rows into CSV
    Table {
        /// Batch file with one `D,s,route` row per line
        spec: Option<PathBuf>,
        /// Extra rows given inline
        #[arg(long = "row", allow_hyphen_values = true)]
        rows: Vec<String>,
        /// Output path; stdout when omitted
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

fn emit(records: &[OutputRecord], csv: bool) {
    let mut out = std::io::stdout().lock();
    for r in records {
        let text = if csv { r.to_csv() } else { r.to_json_line() + "\n" };
        let _ = out.write_all(text.as_bytes());
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let p = series_params(cli.tolerance, cli.max_terms, cli.epsilon)?;
    match cli.command {
        Command::FieldInfo { d } => emit(&[cmd_field_info(d)?], cli.csv),
        Command::Zeta { d, s, route, all_routes } => {
            let s = parse_complex(&s)?;
            let r = if all_routes { cmd_zeta_all_routes(d, s, &p)? } else { cmd_zeta(d, s, route, &p)? };
            emit(&[r], cli.csv);
        }
        Command::VerifyWilton { d, u, v, m } => {
            let out = cmd_verify_wilton(d, parse_complex(&u)?, parse_complex(&v)?, &m, &p)?;
            if cli.csv {
                print!("{}", wilton_csv(&out.reports));
            } else {
                emit(&out.records, false);
            }
        }
        Command::Table { spec, rows, output } => {
            let mut batch = match &spec {
                Some(path) => parse_batch(&std::fs::read_to_string(path)?),
                None => Vec::new(),
            };
            batch.extend(parse_batch(&rows.join("\n")));
            let table = cmd_table(&batch, &p);
            match &output {
                Some(path) => {
                    std::fs::write(path, &table.csv)?;
                    let mut r = OutputRecord::new("table");
                    r.input("output", path.display());
                    r.result("rows", table.rows).result("failures", table.failures);
                    emit(&[r], cli.csv);
                }
                None => print!("{}", table.csv),
            }
            if table.failures > 0 {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
