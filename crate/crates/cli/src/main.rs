use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use trisect_cli::{run, Command, Complex, Format, Options};

/// Homology, intersection form, w2 and spin verdicts of relative trisection
/// diagrams.
///
/// Exit status: 0 success, 1 rejected diagram, 2 parse error, 3 unsatisfied
/// precondition.
#[derive(Parser)]
#[command(name = "trisect", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the necessary-condition checks and infer (k1, k2, k3).
    Validate(Args),
    /// H_0..H_3 from the Y complex, the Z complex and the closed formulas.
    Homology(Args),
    /// Intersection form on the free part of H_2.
    Form(Args),
    /// Linking matrices and w2 representatives.
    W2(Args),
    /// Spin verdict with a witness.
    Spin(Args),
    /// Everything above plus the convention block.
    Report(Args),
}

#[derive(clap::Args)]
struct Args {
    file: PathBuf,
    #[arg(long, value_enum)]
    complex: Option<ComplexArg>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Assert that (alpha, beta) is in standard position.
    #[arg(long)]
    assert_standard_position: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexArg {
    Y,
    Z,
    Closed,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match cli.command {
        Cmd::Validate(a) => (Command::Validate, a),
        Cmd::Homology(a) => (Command::Homology, a),
        Cmd::Form(a) => (Command::Form, a),
        Cmd::W2(a) => (Command::W2, a),
        Cmd::Spin(a) => (Command::Spin, a),
        Cmd::Report(a) => (Command::Report, a),
    };
    let opts = Options {
        complex: args.complex.map(|c| match c {
            ComplexArg::Y => Complex::Y,
            ComplexArg::Z => Complex::Z,
            ComplexArg::Closed => Complex::Closed,
            ComplexArg::All => Complex::All,
        }),
        format: match args.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        assert_standard_position: args.assert_standard_position,
    };
    let outcome = run(command, &args.file, &opts);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.status.code() as u8)
}
