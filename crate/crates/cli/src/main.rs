use clap::{Parser, Subcommand, ValueEnum};
use sovhopf_cli::{build, dims_line, load_file, CliError, CliResult};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "sovhopf", version, about = "Exact verification of cosovereign Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hf,
    Sle,
    Eq,
    Hn,
    Sweedler,
    Cyclic,
    Laurent,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification suite on an input file.
    Verify {
        file: String,
        /// Fixed degree bound instead of the file's setting.
        #[arg(long)]
        degree: Option<usize>,
        /// Escalation cap.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write a self-contained input file for a built-in family.
    Build {
        kind: Kind,
        /// Matrix F for `hf`, rows separated by `;`, entries by `,`.
        #[arg(long)]
        matrix: Option<String>,
        /// `Q` or `Q(<var>)`; inferred from the entries when omitted.
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Arity N of the form for `sle`.
        #[arg(long)]
        arity: Option<usize>,
        /// Nonzero entries for `sle`, as `1,2=1;2,1=-q`.
        #[arg(long)]
        entries: Option<String>,
        /// Parameter q for `eq`.
        #[arg(long, default_value = "q")]
        q: String,
        /// Value of σ(x, x) for `sweedler`.
        #[arg(long, default_value = "1")]
        t: String,
        /// Emit the structure-constant form of Sweedler's algebra.
        #[arg(long)]
        finite: bool,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Print left and right dimensions of a corepresentation.
    Dims {
        file: String,
        #[arg(long)]
        corep: String,
        #[arg(long = "char")]
        character: String,
    },
    /// Print the canonical serialization of an input file.
    Fmt { file: String },
}

fn need<T>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Schema(format!("missing --{flag}")))
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Verify { file, degree, cap, format } => {
            let wb = load_file(&file)?;
            let report = wb.verify(wb.policy(degree, cap))?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            Ok(report.exit_code as u8)
        }
        Command::Build { kind, matrix, field, n, arity, entries, q, t, finite, output } => {
            let input = match kind {
                Kind::Hf => build::hf(&need(matrix, "matrix")?, field.as_deref())?,
                Kind::Sle => build::sle(need(n, "n")?, need(arity, "arity")?, &need(entries, "entries")?, field.as_deref())?,
                Kind::Eq => build::eq(need(n, "n")?, &q, field.as_deref())?,
                Kind::Hn => build::hn(need(n, "n")?)?,
                Kind::Sweedler => build::sweedler(&t, finite)?,
                Kind::Cyclic => build::cyclic(need(n, "n")?)?,
                Kind::Laurent => build::laurent()?,
            };
            let text = sovhopf_cli::schema::to_canonical_json(&input);
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|e| CliError::Io { path, message: e.to_string() })?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Dims { file, corep, character } => {
            let wb = load_file(&file)?;
            println!("{}", dims_line(&wb, &corep, &character, wb.policy(None, None))?);
            Ok(0)
        }
        Command::Fmt { file } => {
            print!("{}", load_file(&file)?.canonical_json());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
