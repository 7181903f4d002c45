//! Text formats: signal files, magnitude CSV and 8-bit PGM.
//!
//! Signal file:
//!
//! ```text
//! # N=4
//! 1.0000000000000000e0,0.0000000000000000e0
//! ...
//! ```
//!
//! One `re,im` line per sample, 17 significant digits, so values survive a
//! write/read round trip bit for bit.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::phase_space::{Signal, TorusSize, C64};
use crate::tf_transforms::PhaseFunction;

pub fn format_signal(s: &Signal) -> String {
    let mut out = format!("# N={}\n", s.len());
    for z in s.values() {
        out.push_str(&format!("{:.16e},{:.16e}\n", z.re, z.im));
    }
    out
}

pub fn parse_signal(text: &str) -> Result<Signal> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty signal file".into()))?;
    let n: usize = header
        .strip_prefix("# N=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header {header:?}, expected \"# N=<int>\"")))?;
    let size = TorusSize::new(n)?;
    let mut values = Vec::with_capacity(n);
    for line in lines {
        let (re, im) = line
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("bad sample line {line:?}")))?;
        let re: f64 = re.trim().parse().map_err(|_| Error::Parse(format!("bad number {re:?}")))?;
        let im: f64 = im.trim().parse().map_err(|_| Error::Parse(format!("bad number {im:?}")))?;
        values.push(C64::new(re, im));
    }
    if values.len() != size.get() {
        return Err(Error::Parse(format!(
            "header declares N={n} but file has {} samples",
            values.len()
        )));
    }
    Signal::new(values)
}

pub fn read_signal(path: &Path) -> Result<Signal> {
    parse_signal(&fs::read_to_string(path)?)
}

pub fn write_signal(path: &Path, s: &Signal) -> Result<()> {
    fs::write(path, format_signal(s))?;
    Ok(())
}

/// `|F|` as an `N x N` CSV; row `x`, column `w`, 17 significant digits.
pub fn format_magnitude_csv(func: &PhaseFunction) -> String {
    let len = func.size().get();
    let mut out = String::new();
    for x in 0..len {
        let row: Vec<String> = (0..len).map(|w| format!("{:.16e}", func[(x, w)].norm())).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn parse_csv_matrix(text: &str) -> Result<Vec<Vec<f64>>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            line.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad number {v:?}")))
                })
                .collect()
        })
        .collect()
}

/// Binary (P5) 8-bit grayscale image of `|F|`, scaled so the maximum maps to
/// 255. An all-zero input gives an all-black image.
pub fn encode_magnitude_pgm(func: &PhaseFunction) -> Vec<u8> {
    let len = func.size().get();
    let max = func.max_abs();
    let mut out = Vec::with_capacity(len * len + 16);
    write!(out, "P5\n{len} {len}\n255\n").expect("writing to a Vec cannot fail");
    for x in 0..len {
        for w in 0..len {
            let level = if max > 0.0 {
                (255.0 * func[(x, w)].norm() / max).round().clamp(0.0, 255.0) as u8
            } else {
                0
            };
            out.push(level);
        }
    }
    out
}
