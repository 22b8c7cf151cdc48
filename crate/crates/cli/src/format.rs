//! Text formats: value lists, grids, and filter output CSV.
//!
//! Floats are written with Rust's shortest round-trip formatting, so reading
//! a written value back yields the same bits.

use std::io::{BufRead, Write};

use maxmin_core::{ExtremaSeries, Grid};

use crate::error::{CliError, CliResult};

fn parse_value(tok: &str, source_name: &str, line: usize) -> CliResult<f64> {
    let bad = |msg: String| CliError::Parse { source_name: source_name.to_string(), line, msg };
    let x: f64 = tok.parse().map_err(|_| bad(format!("not a decimal value: {tok:?}")))?;
    if x.is_nan() {
        return Err(bad("NaN is not allowed".to_string()));
    }
    Ok(x)
}

/// One decimal per line; blank lines are skipped. Line numbers in errors are
/// 1-based.
pub fn read_values(input: impl BufRead, source_name: &str) -> CliResult<Vec<f64>> {
    let mut out = Vec::new();
    for (k, line) in input.lines().enumerate() {
        let line = line?;
        let tok = line.trim();
        if !tok.is_empty() {
            out.push(parse_value(tok, source_name, k + 1)?);
        }
    }
    Ok(out)
}

/// First line `rows cols`, then `rows` lines of `cols` space-separated values.
pub fn read_grid(input: impl BufRead, source_name: &str) -> CliResult<Grid<f64>> {
    let bad = |line: usize, msg: String| CliError::Parse { source_name: source_name.to_string(), line, msg };
    let mut lines = input.lines().enumerate().map(|(k, l)| (k + 1, l)).filter(|(_, l)| match l {
        Ok(s) => !s.trim().is_empty(),
        Err(_) => true,
    });

    let (hl, header) = lines.next().ok_or_else(|| bad(1, "missing \"rows cols\" header".to_string()))?;
    let header = header?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let parse_dim = |s: &str| s.parse::<usize>().ok().filter(|&d| d > 0);
    let (rows, cols) = match dims.as_slice() {
        [r, c] => match (parse_dim(r), parse_dim(c)) {
            (Some(r), Some(c)) => (r, c),
            _ => return Err(bad(hl, format!("bad dimensions: {header:?}"))),
        },
        _ => return Err(bad(hl, format!("expected \"rows cols\", got {header:?}"))),
    };

    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let (ln, line) = lines.next().ok_or_else(|| bad(hl + r + 1, format!("expected {rows} rows, found {r}")))?;
        let line = line?;
        let before = data.len();
        for tok in line.split_whitespace() {
            data.push(parse_value(tok, source_name, ln)?);
        }
        if data.len() - before != cols {
            return Err(bad(ln, format!("expected {cols} values, found {}", data.len() - before)));
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(bad(ln, format!("unexpected data after {rows} rows")));
    }
    Ok(Grid::new(rows, cols, data)?)
}

pub fn write_grid(out: &mut (impl Write + ?Sized), g: &Grid<f64>) -> CliResult<()> {
    writeln!(out, "{} {}", g.rows(), g.cols())?;
    for r in 0..g.rows() {
        let row: Vec<String> = g.row(r).iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(())
}

/// `index,max,min[,argmax,argmin]`, one row per window, `index` being the
/// window's first position.
pub fn write_series(out: &mut (impl Write + ?Sized), s: &ExtremaSeries<f64>, with_args: bool) -> CliResult<()> {
    let args = s.args.as_ref().filter(|_| with_args);
    if args.is_some() {
        writeln!(out, "index,max,min,argmax,argmin")?;
    } else {
        writeln!(out, "index,max,min")?;
    }
    for j in 0..s.len() {
        match args {
            Some(a) => writeln!(out, "{j},{},{},{},{}", s.max[j], s.min[j], a.argmax[j], a.argmin[j])?,
            None => writeln!(out, "{j},{},{}", s.max[j], s.min[j])?,
        }
    }
    Ok(())
}
