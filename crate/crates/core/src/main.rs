//! Command-line front end for the membrane noise-budget library.
//!
//! Data goes to stdout (or `--out`); diagnostics go to stderr only.
//! Exit codes: 0 success, 2 bad input (usage, config, parameter violations),
//! 1 internal error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use msi_noise::{
    budget, config::SystemConfig, oracle, output, BudgetOptions, ChannelKind, Damping, Error,
    TABLE_I_CONFIG,
};

#[derive(Parser)]
#[command(
    name = "msi-noise",
    version,
    about = "Displacement-noise budget of a Michelson-Sagnac interferometer \
             with a translucent membrane oscillator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum DampingArg {
    Viscous,
    Structural,
    Both,
}

impl From<DampingArg> for Damping {
    fn from(value: DampingArg) -> Self {
        match value {
            DampingArg::Viscous => Damping::Viscous,
            DampingArg::Structural => Damping::Structural,
            DampingArg::Both => Damping::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the noise budget over the configured frequency grid.
    Budget {
        /// Config file (`key = value` lines).
        #[arg(long)]
        config: PathBuf,
        /// Toggle signal recycling without editing the config.
        #[arg(long, value_enum, default_value = "on")]
        sr: Toggle,
        /// Damping model entering the total (`both` totals with viscous and
        /// reports structural separately).
        #[arg(long, value_enum, default_value = "both")]
        damping: DampingArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the noise channels at one frequency for each value of a
    /// config parameter.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Config key to vary, e.g. `recycling.r_SR`.
        #[arg(long)]
        param: String,
        /// Comma-separated values.
        #[arg(long, value_delimiter = ',')]
        values: Vec<f64>,
        /// Evaluation frequency (Hz).
        #[arg(long = "f-eval", default_value_t = 1e3)]
        f_eval: f64,
        #[arg(long, value_enum, default_value = "on")]
        sr: Toggle,
    },
    /// Beam-splitter power for a target rad/shot ratio (closed form).
    SolvePower {
        #[arg(long)]
        config: PathBuf,
        /// Target rad/shot amplitude ratio.
        #[arg(long)]
        ratio: f64,
        /// Evaluation frequency (Hz); 0 is the asymptote below resonance.
        #[arg(long = "f-eval", default_value_t = 0.0)]
        f_eval: f64,
        #[arg(long, value_enum, default_value = "on")]
        sr: Toggle,
    },
    /// Beam-splitter power for a target rad/thermal margin at a given
    /// membrane temperature and Q (viscous model, closed form).
    SolveThermal {
        #[arg(long)]
        config: PathBuf,
        /// Membrane temperature (K).
        #[arg(long = "T")]
        temperature: f64,
        /// Mechanical quality factor at that temperature.
        #[arg(long = "Q")]
        quality: f64,
        /// Target rad/thermal amplitude ratio.
        #[arg(long)]
        margin: f64,
        #[arg(long = "f-eval", default_value_t = 0.0)]
        f_eval: f64,
        #[arg(long, value_enum, default_value = "on")]
        sr: Toggle,
    },
    /// Run the quadrature-field oracle suite and print worst-case errors.
    Verify {
        /// Randomized trials per check.
        #[arg(long, default_value_t = 1000)]
        draws: usize,
    },
    /// Print a bundled configuration preset.
    Preset {
        /// Preset name; only `tableI` is bundled.
        name: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help/--version land here with a zero exit
            let code = if err.exit_code() == 0 { 0 } else { 2 };
            let _ = err.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(Error::Io(io)) if io.kind() == std::io::ErrorKind::BrokenPipe => {
            // downstream closed the pipe (e.g. `| head`); not an error
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            if err.is_user_error() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn load_config(path: &PathBuf) -> Result<SystemConfig, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Config {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    SystemConfig::parse(&text)
}

fn write_out(out: Option<&PathBuf>, bytes: &[u8]) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, bytes)?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Budget {
            config,
            sr,
            damping,
            format,
            out,
        } => {
            let cfg = load_config(&config)?;
            let options = BudgetOptions {
                sr_enabled: matches!(sr, Toggle::On),
                damping: damping.into(),
                channels: ChannelKind::ALL.to_vec(),
            };
            let spectrum = budget::compute_budget(
                &cfg.grid,
                &cfg.optics,
                &cfg.membrane,
                &cfg.recycling,
                &options,
            )?;
            let mut bytes = Vec::new();
            match format {
                Format::Csv => output::write_csv(&mut bytes, &spectrum)?,
                Format::Json => {
                    output::write_json(&mut bytes, &spectrum, &cfg, &options)?;
                    bytes.push(b'\n');
                }
            }
            write_out(out.as_ref(), &bytes)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Sweep {
            config,
            param,
            values,
            f_eval,
            sr,
        } => {
            let cfg = load_config(&config)?;
            let rows = budget::sweep(&cfg, &param, &values, f_eval, matches!(sr, Toggle::On))?;
            let mut stdout = std::io::stdout().lock();
            writeln!(
                stdout,
                "value,shot,rad,thermal_viscous,thermal_structural,\
                 rad_over_shot,rad_over_thermal_viscous"
            )?;
            for row in rows {
                writeln!(
                    stdout,
                    "{:.8e},{:.8e},{:.8e},{:.8e},{:.8e},{:.8e},{:.8e}",
                    row.value,
                    row.shot,
                    row.rad,
                    row.thermal_viscous,
                    row.thermal_structural,
                    row.rad_over_shot,
                    row.rad_over_thermal_viscous,
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::SolvePower {
            config,
            ratio,
            f_eval,
            sr,
        } => {
            let cfg = load_config(&config)?;
            let solution = budget::solve_power(
                ratio,
                f_eval,
                &cfg.optics,
                &cfg.membrane,
                &cfg.recycling,
                matches!(sr, Toggle::On),
            )?;
            if solution.beyond_pole {
                eprintln!(
                    "warning: f_eval is at or above the signal-recycling pole; \
                     recycling no longer reduces the required power there"
                );
            }
            let doc = json!({
                "target_ratio": ratio,
                "f_eval_hz": f_eval,
                "effective_power_w": solution.effective_power_w,
                "power_at_bs_w": solution.power_at_bs_w,
            });
            println!("{doc}");
            Ok(ExitCode::SUCCESS)
        }

        Command::SolveThermal {
            config,
            temperature,
            quality,
            margin,
            f_eval,
            sr,
        } => {
            let cfg = load_config(&config)?;
            let solution = budget::solve_thermal_power(
                temperature,
                quality,
                margin,
                f_eval,
                &cfg.optics,
                &cfg.membrane,
                &cfg.recycling,
                matches!(sr, Toggle::On),
            )?;
            let doc = json!({
                "temperature_k": temperature,
                "quality": quality,
                "margin": margin,
                "f_eval_hz": f_eval,
                "effective_power_w": solution.effective_power_w,
                "power_at_bs_w": solution.power_at_bs_w,
            });
            println!("{doc}");
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { draws } => {
            // fixed seed: `verify` output is reproducible run to run
            let report = oracle::run_verification(draws, 0x6d73_695f_6f72_6163);
            let mut stdout = std::io::stdout().lock();
            for check in &report.checks {
                writeln!(
                    stdout,
                    "{:<40} max_rel_err {:9.3e}  (tol {:.0e})  {}",
                    check.name,
                    check.worst_error,
                    check.tolerance,
                    if check.passed() { "PASS" } else { "FAIL" },
                )?;
            }
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("error: oracle disagrees with the closed forms");
                Ok(ExitCode::FAILURE)
            }
        }

        Command::Preset { name } => {
            if name != "tableI" {
                return Err(Error::UnknownParameter(format!("preset `{name}`")));
            }
            print!("{TABLE_I_CONFIG}");
            Ok(ExitCode::SUCCESS)
        }
    }
}
