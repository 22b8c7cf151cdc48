use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use maxmin_core::{filter2d, generate, SignalKind, WindowParams};

use crate::args::{BenchArgs, Cli, Command, Filter2dArgs, RunArgs, VerifyArgs};
use crate::bench::{bench, write_report, MonotonicClock};
use crate::error::{CliError, CliResult};
use crate::format::{read_grid, read_values, write_grid, write_series};
use crate::verify::{default_candidates, verify_suite};

fn open(path: &Path) -> CliResult<BufReader<File>> {
    File::open(path).map(BufReader::new).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn create(path: &Path) -> CliResult<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// `path` if given, else `stdout`.
fn with_sink(path: Option<&Path>, stdout: &mut dyn Write, f: impl FnOnce(&mut dyn Write) -> CliResult<()>) -> CliResult<()> {
    match path {
        Some(p) => {
            let mut w = create(p)?;
            f(&mut w)?;
            w.flush()?;
            Ok(())
        }
        None => f(stdout),
    }
}

pub fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Run(a) => run(a, stdout),
        Command::Bench(a) => bench_cmd(a, stdout),
        Command::Verify(a) => verify(a, stdout, stderr),
        Command::Filter2d(a) => filter2d_cmd(a, stdout),
    }
}

pub fn run(args: &RunArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let a = match &args.input {
        Some(path) => read_values(open(path)?, &path.display().to_string())?,
        None => {
            if args.signal.signal.is_none() || args.signal.n.is_none() {
                return Err(CliError::Usage("give --input FILE, or --signal and --n".into()));
            }
            generate(&args.signal.spec(SignalKind::Uniform, 0))?
        }
    };
    let params = WindowParams::new(args.w)?;
    let series = args.algo.run(&a, params, maxmin_core::Natural)?;
    let with_args = !args.no_args && args.algo.has_args();
    with_sink(args.output.as_deref(), stdout, |out| write_series(out, &series, with_args))
}

pub fn bench_cmd(args: &BenchArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let spec = args.signal.spec(SignalKind::Sine, 1_000_000);
    let rows = bench(&spec, &args.w, &args.algo, args.repeats, &MonotonicClock)?;
    with_sink(args.output.as_deref(), stdout, |out| write_report(out, &rows))
}

pub fn verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    if args.trials == 0 {
        writeln!(stderr, "warning: 0 trials requested, nothing was checked")?;
    }
    let report = verify_suite(args.trials, args.seed, &default_candidates());
    for f in &report.failures {
        writeln!(stderr, "{f}")?;
    }
    writeln!(stdout, "{}", report.summary())?;
    if report.ok() {
        Ok(())
    } else {
        Err(CliError::VerifyFailed { failures: report.trials - report.passed, trials: report.trials })
    }
}

pub fn filter2d_cmd(args: &Filter2dArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let grid = read_grid(open(&args.input)?, &args.input.display().to_string())?;
    let (max, min) = filter2d(&grid, args.w_row, args.w_col)?;
    match (&args.max_output, &args.min_output) {
        (None, None) => {
            write_grid(stdout, &max)?;
            writeln!(stdout)?;
            write_grid(stdout, &min)
        }
        (mx, mn) => {
            with_sink(mx.as_deref(), stdout, |out| write_grid(out, &max))?;
            with_sink(mn.as_deref(), stdout, |out| write_grid(out, &min))
        }
    }
}
