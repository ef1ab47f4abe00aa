//! Command-line front end.
//!
//! ```text
//! gradual check <EXPR> [--compiler buggy|fixed] [--mode lazy|eager]
//! gradual rat <+|-> <TOP> <BOTTOM> [--strategy bounded|binary|gcd] [--time] [--mode lazy|eager]
//! gradual demo-regimes
//! ```
//!
//! Exit status is 0 on success, 1 when a cast failure was observed and 2 on
//! malformed input. Reports go to the output stream one line at a time;
//! diagnostics go to the error stream.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cast::{CastFault, FailureMode, Refined};
use crate::compiler::{checked_compile, parse_exp, runc, CompilerVariant};
use crate::hocast::cast_fun_dom;
use crate::instances::pred_gt_const;
use crate::rationals::{bench_strategies, cast_rat, IrredStrategy};
use crate::Nat;

pub const EXIT_SUCCESS: u8 = 0;
pub const EXIT_CAST_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Repetitions behind each median printed by `rat --time`.
pub const TIME_REPETITIONS: usize = 5;

#[derive(Debug, Parser)]
#[command(
    name = "gradual",
    version,
    about = "Gradually checked compilation and guarded rationals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile an expression with a checked compiler and run it.
    Check {
        /// Infix expression over naturals with + - * and parentheses.
        expr: String,
        #[arg(long, value_enum, default_value_t)]
        compiler: CompilerArg,
        #[command(flatten)]
        mode: ModeFlag,
    },
    /// Construct a rational through the bottom and irreducibility casts.
    Rat {
        #[arg(value_enum, allow_hyphen_values = true)]
        sign: SignArg,
        top: Nat,
        bottom: Nat,
        #[arg(long, value_enum, default_value_t)]
        strategy: StrategyArg,
        /// Also print the median decision time of every strategy.
        #[arg(long)]
        time: bool,
        #[command(flatten)]
        mode: ModeFlag,
    },
    /// Apply a constant function behind a domain cast at 0, lazily and eagerly.
    DemoRegimes {
        #[arg(long, hide = true, default_value_t = Nat::ZERO)]
        arg: Nat,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ModeFlag {
    /// How a refuted cast is reported.
    #[arg(long = "mode", value_enum, default_value_t)]
    pub value: ModeArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ModeArg {
    #[default]
    Lazy,
    Eager,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum CompilerArg {
    #[default]
    Buggy,
    Fixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum StrategyArg {
    Bounded,
    Binary,
    #[default]
    Gcd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

impl From<ModeArg> for FailureMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Lazy => FailureMode::Lazy,
            ModeArg::Eager => FailureMode::Eager,
        }
    }
}

impl From<CompilerArg> for CompilerVariant {
    fn from(c: CompilerArg) -> Self {
        match c {
            CompilerArg::Buggy => CompilerVariant::Buggy,
            CompilerArg::Fixed => CompilerVariant::Fixed,
        }
    }
}

impl From<StrategyArg> for IrredStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Bounded => IrredStrategy::Bounded,
            StrategyArg::Binary => IrredStrategy::BinaryBounded,
            StrategyArg::Gcd => IrredStrategy::Gcd,
        }
    }
}

/// Settings shared by the commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CliConfig {
    pub mode: FailureMode,
    pub compiler_variant: CompilerVariant,
    pub strategy: IrredStrategy,
}

fn report_fault(out: &mut impl Write, fault: &CastFault) -> io::Result<u8> {
    writeln!(
        out,
        "FAILED_CAST value={} prop={}",
        fault.value_text(),
        fault.prop_text()
    )?;
    Ok(EXIT_CAST_FAILURE)
}

pub fn cmd_check(expr_src: &str, config: &CliConfig, out: &mut impl Write, err: &mut impl Write) -> io::Result<u8> {
    let e = match parse_exp(expr_src) {
        Ok(e) => e,
        Err(pe) => {
            writeln!(err, "error: {pe}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let compiler = checked_compile(config.compiler_variant, config.mode);
    match runc(compiler, &e) {
        Ok(Some(stack)) => {
            let shown: Vec<String> = stack.iter().map(Nat::to_string).collect();
            writeln!(out, "RESULT {}", shown.join(" "))?;
            Ok(EXIT_SUCCESS)
        }
        Ok(None) => {
            writeln!(err, "error: program got stuck")?;
            Ok(EXIT_CAST_FAILURE)
        }
        Err(fault) => report_fault(out, &fault),
    }
}

pub fn cmd_rat(
    sign: bool,
    top: Nat,
    bottom: Nat,
    time: bool,
    config: &CliConfig,
    out: &mut impl Write,
    err: &mut impl Write,
) -> io::Result<u8> {
    let status = match cast_rat(sign, top, bottom, config.strategy, config.mode) {
        Ok(r) => match r.rat() {
            Ok(rat) => {
                let s = if rat.sign() { '+' } else { '-' };
                writeln!(out, "RAT sign={s} top={} bottom={}", rat.top(), rat.bottom())?;
                EXIT_SUCCESS
            }
            Err(fault) => report_fault(out, &fault)?,
        },
        Err(fault) => report_fault(out, &fault)?,
    };
    if time {
        match bench_strategies(top, bottom, TIME_REPETITIONS) {
            Ok(report) => {
                for t in &report.timings {
                    writeln!(out, "TIME strategy={} median_ns={}", t.strategy, t.median.as_nanos())?;
                }
            }
            Err(e) => writeln!(err, "note: no timings, {e}")?,
        }
    }
    Ok(status)
}

pub fn cmd_demo_regimes(arg: Nat, out: &mut impl Write) -> io::Result<u8> {
    for (label, mode) in [("LAZY", FailureMode::Lazy), ("EAGER", FailureMode::Eager)] {
        let g = cast_fun_dom(pred_gt_const(Nat::ZERO), |_: Refined<Nat>| Ok(Nat::ONE), mode);
        match g(&arg) {
            Ok(v) => writeln!(out, "{label}: {v}")?,
            Err(fault) => writeln!(out, "{label}: {}", fault.message())?,
        }
    }
    Ok(EXIT_SUCCESS)
}

/// Runs a parsed command line.
pub fn run(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> io::Result<u8> {
    match &cli.command {
        Command::Check { expr, compiler, mode } => {
            let config = CliConfig {
                mode: mode.value.into(),
                compiler_variant: (*compiler).into(),
                ..CliConfig::default()
            };
            cmd_check(expr, &config, out, err)
        }
        Command::Rat {
            sign,
            top,
            bottom,
            strategy,
            time,
            mode,
        } => {
            let config = CliConfig {
                mode: mode.value.into(),
                strategy: (*strategy).into(),
                ..CliConfig::default()
            };
            cmd_rat(*sign == SignArg::Plus, *top, *bottom, *time, &config, out, err)
        }
        Command::DemoRegimes { arg } => cmd_demo_regimes(*arg, out),
    }
}

/// Parses `args` (program name first) and runs them, returning the exit
/// status. Help and version requests print to `out` and succeed.
pub fn run_from_args<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> io::Result<u8>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) if e.use_stderr() => {
            write!(err, "{}", e.render())?;
            Ok(EXIT_USAGE)
        }
        Err(e) => {
            write!(out, "{}", e.render())?;
            Ok(EXIT_SUCCESS)
        }
    }
}
