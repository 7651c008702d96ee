//! The alist interchange format for sparse binary matrices.
//!
//! Layout (all indices 1-based on the wire):
//!
//! ```text
//! n m            number of columns (variables), number of rows (checks)
//! cmax rmax      maximum column degree, maximum row degree
//! c1 .. cn       column degrees
//! r1 .. rm       row degrees
//! n lines        per column: row indices, zero-padded to cmax
//! m lines        per row: column indices, zero-padded to rmax
//! ```
//!
//! The parser accepts both zero-padded and unpadded index lists and
//! cross-validates the column lists against the row lists. The emitter
//! always zero-pads, matching the original MacKay files, so
//! `parse_alist(emit_alist(h)) == h` byte-stably.

use crate::error::{Error, Result};
use crate::graphs::ParityCheckMatrix;

pub(super) fn parse_alist(input: &str) -> Result<ParityCheckMatrix> {
    let mut lines = input.lines().enumerate();

    let (n, m) = {
        let (lineno, toks) = next_line(&mut lines, "n m header")?;
        if toks.len() != 2 {
            return Err(parse_err(lineno, "first line must be `n m`"));
        }
        (num(&toks[0], lineno)?, num(&toks[1], lineno)?)
    };
    let (cmax, rmax) = {
        let (lineno, toks) = next_line(&mut lines, "max degree line")?;
        if toks.len() != 2 {
            return Err(parse_err(lineno, "second line must be `cmax rmax`"));
        }
        (num(&toks[0], lineno)?, num(&toks[1], lineno)?)
    };
    let col_deg = degree_line(&mut lines, n, cmax, "column")?;
    let row_deg = degree_line(&mut lines, m, rmax, "row")?;

    let col_lists = index_lists(&mut lines, n, &col_deg, m, "column")?;
    let row_lists = index_lists(&mut lines, m, &row_deg, n, "row")?;

    let mut h = ParityCheckMatrix::zeros(m, n);
    for (c, rows) in col_lists.iter().enumerate() {
        for &r in rows {
            h.set(r, c, true);
        }
    }
    // Cross-validate: the row lists must describe the same matrix.
    for (r, from_rows) in row_lists.iter().enumerate() {
        for c in 0..n {
            let in_rows = from_rows.binary_search(&c).is_ok();
            if h.get(r, c) != in_rows {
                return Err(parse_err(
                    0,
                    &format!(
                        "column and row lists disagree at row {}, column {} (1-based)",
                        r + 1,
                        c + 1
                    ),
                ));
            }
        }
    }
    Ok(h)
}

pub(super) fn emit_alist(h: &ParityCheckMatrix) -> String {
    let n = h.cols();
    let m = h.rows();
    let cols: Vec<Vec<usize>> = (0..n)
        .map(|c| (0..m).filter(|&r| h.get(r, c)).collect())
        .collect();
    let rows: Vec<Vec<usize>> = (0..m)
        .map(|r| (0..n).filter(|&c| h.get(r, c)).collect())
        .collect();
    let cmax = cols.iter().map(Vec::len).max().unwrap_or(0);
    let rmax = rows.iter().map(Vec::len).max().unwrap_or(0);

    let mut out = format!("{n} {m}\n{cmax} {rmax}\n");
    out.push_str(&join(cols.iter().map(Vec::len)));
    out.push('\n');
    out.push_str(&join(rows.iter().map(Vec::len)));
    out.push('\n');
    for list in &cols {
        out.push_str(&padded(list, cmax));
        out.push('\n');
    }
    for list in &rows {
        out.push_str(&padded(list, rmax));
        out.push('\n');
    }
    out
}

/// 1-based, zero-padded to `width`.
fn padded(list: &[usize], width: usize) -> String {
    let mut toks: Vec<String> = list.iter().map(|&i| (i + 1).to_string()).collect();
    while toks.len() < width {
        toks.push("0".into());
    }
    toks.join(" ")
}

fn join(values: impl Iterator<Item = usize>) -> String {
    values.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

type Lines<'a> = std::iter::Enumerate<std::str::Lines<'a>>;

/// Next line as whitespace tokens, skipping blank lines. Header use only;
/// body lines may be legitimately empty and are read positionally.
fn next_line(lines: &mut Lines, what: &str) -> Result<(usize, Vec<String>)> {
    for (idx, line) in lines.by_ref() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let toks = line.split_whitespace().map(String::from).collect();
        return Ok((idx + 1, toks));
    }
    Err(parse_err(
        0,
        &format!("unexpected end of input: missing {what}"),
    ))
}

fn degree_line(lines: &mut Lines, count: usize, max: usize, side: &str) -> Result<Vec<usize>> {
    let (lineno, toks) = next_line(lines, &format!("{side} degree list"))?;
    if toks.len() != count {
        return Err(parse_err(
            lineno,
            &format!(
                "{side} degree list has {} entries, expected {count}",
                toks.len()
            ),
        ));
    }
    let mut degrees = Vec::with_capacity(count);
    for tok in &toks {
        let d = num(tok, lineno)?;
        if d > max {
            return Err(parse_err(
                lineno,
                &format!("{side} degree {d} exceeds declared maximum {max}"),
            ));
        }
        degrees.push(d);
    }
    Ok(degrees)
}

/// Reads `degrees.len()` positional body lines of 1-based indices in
/// `[1, limit]`; zeros are padding and ignored. Returns 0-based sorted lists.
fn index_lists(
    lines: &mut Lines,
    count: usize,
    degrees: &[usize],
    limit: usize,
    side: &str,
) -> Result<Vec<Vec<usize>>> {
    let mut lists = Vec::with_capacity(count);
    for (i, &deg) in degrees.iter().enumerate().take(count) {
        let (idx, line) = lines.next().ok_or_else(|| {
            parse_err(
                0,
                &format!("unexpected end of input: missing {side} list {}", i + 1),
            )
        })?;
        let lineno = idx + 1;
        let mut indices = Vec::with_capacity(deg);
        for tok in line.split_whitespace() {
            let v = num(tok, lineno)?;
            if v == 0 {
                continue; // padding
            }
            if v > limit {
                return Err(parse_err(
                    lineno,
                    &format!("index {v} exceeds maximum {limit}"),
                ));
            }
            indices.push(v - 1);
        }
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_err(
                lineno,
                &format!("duplicate index in {side} list"),
            ));
        }
        if indices.len() != deg {
            return Err(parse_err(
                lineno,
                &format!(
                    "{side} list has {} indices, declared degree is {deg}",
                    indices.len()
                ),
            ));
        }
        lists.push(indices);
    }
    Ok(lists)
}

fn num(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, &format!("expected a number, got {tok:?}")))
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
