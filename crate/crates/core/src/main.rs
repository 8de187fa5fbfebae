use clap::{Args, Parser, Subcommand, ValueEnum};
use eom_quantum::cli::{execute, CliError, Command, Format, Overrides};
use eom_quantum::Model;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "eomq", version, about = "Quantum-regime electro-optic modulator simulator")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Single-photon transition amplitudes.
    Spectrum(Common),
    /// Coherent-state output displacements.
    Coherent(Common),
    /// Two-photon output state, one photon per input port.
    TwoPhoton(Common),
    /// Mean field of a coherent output.
    MeanField(Common),
    /// Run the built-in invariant suite.
    Verify {
        #[command(flatten)]
        common: OptionalConfig,
        /// Multiply every tolerance by this factor.
        #[arg(long)]
        tolerance_scale: Option<f64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Exact,
    Optical,
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    config: PathBuf,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OptionalConfig {
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    model: Option<ModelArg>,
}

impl OutputArgs {
    fn overrides(&self, tolerance_scale: Option<f64>) -> Overrides {
        Overrides {
            format: self.format.map(|f| match f {
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            }),
            model: self.model.map(|m| match m {
                ModelArg::Exact => Model::Exact,
                ModelArg::Optical => Model::Optical,
            }),
            tolerance_scale,
        }
    }
}

fn write_output(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|source| CliError::Write {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, config, output, scale) = match &cli.command {
        Sub::Spectrum(c) => (Command::Spectrum, Some(&c.config), &c.output, None),
        Sub::Coherent(c) => (Command::Coherent, Some(&c.config), &c.output, None),
        Sub::TwoPhoton(c) => (Command::TwoPhoton, Some(&c.config), &c.output, None),
        Sub::MeanField(c) => (Command::MeanField, Some(&c.config), &c.output, None),
        Sub::Verify {
            common,
            tolerance_scale,
        } => (
            Command::Verify,
            common.config.as_ref(),
            &common.output,
            *tolerance_scale,
        ),
    };
    let result = execute(command, config.map(PathBuf::as_path), &output.overrides(scale)).and_then(|(text, ok)| {
        write_output(&text, output.out.as_ref())?;
        if ok {
            Ok(())
        } else {
            Err(CliError::VerifyFailed)
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("eomq: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
