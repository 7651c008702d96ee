//! Text formats: edge lists for general graphs and dense 0/1 matrices.
//!
//! Edge-list grammar, one item per line:
//! - `# ...` comment lines and blank lines are skipped;
//! - an optional header `p <n> <m>` may appear as the first non-comment
//!   line and pins the vertex count (the header wins over inference; a
//!   vertex index at or above the declared `n` is an error, as is an edge
//!   count different from `m`);
//! - every other line is `u v`, two 0-based vertex indices.
//!
//! Without a header, `n` is inferred as (max index + 1).

use crate::error::{Error, Result};
use crate::graphs::{Graph, ParityCheckMatrix};

/// Result of parsing an edge-list document.
#[derive(Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// Number of duplicate edge lines that were collapsed away.
    pub duplicates_collapsed: usize,
}

pub(super) fn parse_graph(input: &str) -> Result<ParsedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw_edges: Vec<(usize, usize)> = Vec::new();
    let mut seen_edge_line = false;

    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "p" {
            if seen_edge_line || header.is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "header must be the first non-comment line".into(),
                });
            }
            if toks.len() != 3 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "header must be `p <n> <m>`".into(),
                });
            }
            let n = parse_num(toks[1], lineno)?;
            let m = parse_num(toks[2], lineno)?;
            header = Some((n, m));
            continue;
        }
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected `u v`, got {line:?}"),
            });
        }
        seen_edge_line = true;
        let u = parse_num(toks[0], lineno)?;
        let v = parse_num(toks[1], lineno)?;
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        if let Some((n, _)) = header {
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("vertex index {} out of range [0, {n})", u.max(v)),
                });
            }
        }
        raw_edges.push((u, v));
    }

    let n = match header {
        Some((n, m)) => {
            if raw_edges.len() != m {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("header declares {m} edges, found {}", raw_edges.len()),
                });
            }
            n
        }
        None => raw_edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };

    let raw_count = raw_edges.len();
    let graph = Graph::new(n, raw_edges)?;
    Ok(ParsedGraph {
        duplicates_collapsed: raw_count - graph.edge_count(),
        graph,
    })
}

pub(super) fn emit_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Dense matrix format: header `rows cols`, then `rows` lines of `cols`
/// space-separated 0/1 bits.
pub(super) fn parse_dense(input: &str) -> Result<ParityCheckMatrix> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lineno, head) = lines
        .next()
        .ok_or_else(|| truncated(1, "missing `rows cols` header"))?;
    let toks: Vec<&str> = head.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Parse {
            line: lineno,
            msg: "header must be `rows cols`".into(),
        });
    }
    let rows = parse_num(toks[0], lineno)?;
    let cols = parse_num(toks[1], lineno)?;

    let mut h = ParityCheckMatrix::zeros(rows, cols);
    for r in 0..rows {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| truncated(0, &format!("expected {rows} matrix rows, got {r}")))?;
        let bits: Vec<&str> = line.split_whitespace().collect();
        if bits.len() != cols {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("row has {} entries, expected {cols}", bits.len()),
            });
        }
        for (c, tok) in bits.iter().enumerate() {
            match *tok {
                "0" => {}
                "1" => h.set(r, c, true),
                other => {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("matrix entry must be 0 or 1, got {other:?}"),
                    })
                }
            }
        }
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lineno,
            msg: "trailing content after matrix rows".into(),
        });
    }
    Ok(h)
}

pub(super) fn emit_dense(h: &ParityCheckMatrix) -> String {
    let mut out = format!("{} {}\n", h.rows(), h.cols());
    for r in 0..h.rows() {
        let row: Vec<&str> = (0..h.cols())
            .map(|c| if h.get(r, c) { "1" } else { "0" })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a number, got {tok:?}"),
    })
}

fn truncated(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: format!("unexpected end of input: {msg}"),
    }
}
