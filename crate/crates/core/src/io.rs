//! Text formats: a plain edge list and graph6.
//!
//! Edge list: a header line `n <count>` followed by one `u v` pair per line,
//! 0-based. Blank lines and lines starting with `#` are ignored.
//!
//! graph6 (McKay's ASCII format): a size prefix followed by the upper
//! triangle of the adjacency matrix in column order (`(0,1), (0,2), (1,2),
//! (0,3), …`), six bits per printable byte offset by 63.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Builder, Graph};
use crate::MAX_VERTICES;

const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_err = |line, message: String| Error::Parse { line, message };

    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n <count>` header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| parse_err(line, format!("bad vertex count `{count}`")))?,
        _ => return Err(parse_err(line, format!("expected `n <count>`, found `{header}`"))),
    };
    let mut b = Builder::new(n).map_err(|e| parse_err(line, e.to_string()))?;

    for (line, l) in lines {
        let (u, v) = match l.split_whitespace().collect::<Vec<_>>()[..] {
            [u, v] => match (u.parse::<usize>(), v.parse::<usize>()) {
                (Ok(u), Ok(v)) => (u, v),
                _ => return Err(parse_err(line, format!("malformed edge `{l}`"))),
            },
            _ => return Err(parse_err(line, format!("expected `u v`, found `{l}`"))),
        };
        if u == v {
            return Err(parse_err(line, format!("loop edge {u} {v}")));
        }
        b.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
    }
    Ok(b.build())
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")));
    }

    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => return Err(Error::Capacity { requested: usize::MAX, max: MAX_VERTICES }),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size prefix".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity { requested: n, max: MAX_VERTICES });
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        let what = if body.len() < expected { "truncated" } else { "trailing data after" };
        return Err(Error::Graph6(format!(
            "{what} adjacency stream: {} bytes for n = {n}, expected {expected}",
            body.len()
        )));
    }

    let mut b = Builder::new(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                b.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(b.build())
}

/// Encodes `g` without the optional `>>graph6<<` header or a newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([n >> 12, n >> 6, n].map(|x| (x & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
