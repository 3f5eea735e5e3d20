use std::io::{IsTerminal, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use motivic_chi::cli::{
    color_enabled, run_eval, run_selftest, CliConfig, CliOutput, Format, Input,
};

#[derive(Parser)]
#[command(
    name = "chi",
    about = "Motivic Euler characteristics in the Grothendieck-Witt ring"
)]
struct Args {
    #[command(subcommand)]
    command: Option<Command>,
    /// Field model: generic, sqrt-minus-one, real-closed or finite:p
    #[arg(long, default_value = "generic")]
    field: String,
    /// Inline expression
    #[arg(long, conflicts_with = "file")]
    expr: Option<String>,
    /// A .chi file holding one expression
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Print the derivation
    #[arg(long)]
    trace: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run the built-in oracle and theorem checks
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn emit(out: CliOutput) -> ! {
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code)
}

fn main() {
    let args = Args::parse();
    let color = color_enabled(
        std::env::var("CHI_COLOR").ok().as_deref(),
        std::io::stdout().is_terminal(),
    );
    if let Some(Command::Selftest) = args.command {
        emit(run_selftest(color));
    }
    let input = match (args.expr, args.file) {
        (Some(e), None) => Input::Expr(e),
        (None, Some(f)) => Input::File(f),
        _ => {
            eprintln!("error: exactly one of --expr or --file is required");
            std::process::exit(1);
        }
    };
    emit(run_eval(&CliConfig {
        field: args.field,
        format: match args.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        trace: args.trace,
        input,
        color,
    }))
}
