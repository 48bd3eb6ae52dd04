//! Text formats: edge lists, graph6, coloured edge lists, affine gadgets and
//! the forest-construction header.
//!
//! Blank lines and lines starting with `#` are ignored by every line-based
//! parser. Inputs with more than [`MAX_VERTICES`] vertices are refused.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloured::ColouredGraph;
use crate::error::{Error, Result};
use crate::gamma::{affine_gamma_on_points, AffineGamma, Point};
use crate::graph::Graph;

pub const MAX_VERTICES: usize = 20_000;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn fields<const K: usize>(line: usize, text: &str) -> Result<[u64; K]> {
    let mut out = [0u64; K];
    let mut it = text.split_whitespace();
    for slot in out.iter_mut() {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line, format!("expected {K} integers")))?;
        *slot = tok
            .parse()
            .map_err(|_| Error::parse(line, format!("`{tok}` is not a non-negative integer")))?;
    }
    if it.next().is_some() {
        return Err(Error::parse(
            line,
            format!("expected {K} integers, found more"),
        ));
    }
    Ok(out)
}

fn vertex_count(line: usize, n: u64) -> Result<usize> {
    if n > MAX_VERTICES as u64 {
        return Err(Error::parse(
            line,
            format!("{n} vertices exceeds the limit of {MAX_VERTICES}"),
        ));
    }
    Ok(n as usize)
}

fn edge_count(line: usize, n: usize, m: u64) -> Result<usize> {
    let max = (n * n.saturating_sub(1) / 2) as u64;
    if m > max {
        return Err(Error::parse(
            line,
            format!("{m} edges exceed C({n},2) = {max}"),
        ));
    }
    Ok(m as usize)
}

fn at_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    }
}

/// Parses `n m` followed by `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header `n m`"))?;
    let [n, m] = fields::<2>(hl, header)?;
    let n = vertex_count(hl, n)?;
    let m = edge_count(hl, n, m)?;
    let mut g = Graph::empty(n);
    let mut last = hl;
    for _ in 0..m {
        let (l, text) = lines
            .next()
            .ok_or_else(|| Error::parse(last + 1, format!("expected {m} edges")))?;
        let [u, v] = fields::<2>(l, text)?;
        g.try_add_edge(u as usize, v as usize).map_err(at_line(l))?;
        last = l;
    }
    if let Some((l, _)) = lines.next() {
        return Err(Error::parse(l, format!("trailing content after {m} edges")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses a single graph6 record, with or without the `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, record) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty graph6 input"))?;
    if let Some((l, _)) = lines.next() {
        return Err(Error::parse(l, "graph6 input holds more than one graph"));
    }
    let record = record
        .strip_prefix(GRAPH6_HEADER)
        .unwrap_or(record)
        .as_bytes();
    if let Some(&b) = record.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(
            line,
            format!("byte {b} outside the graph6 range 63..=126"),
        ));
    }
    let six = |b: u8| (b - 63) as u64;
    let (n, body) = match record {
        [] => return Err(Error::parse(line, "missing graph6 vertex count")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::parse(line, "truncated graph6 vertex count"));
            }
            (
                rest[..6].iter().fold(0, |a, &b| a << 6 | six(b)),
                &rest[6..],
            )
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(line, "truncated graph6 vertex count"));
            }
            (
                rest[..3].iter().fold(0, |a, &b| a << 6 | six(b)),
                &rest[3..],
            )
        }
        [b, rest @ ..] => (six(*b), rest),
    };
    let n = vertex_count(line, n)?;
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::parse(
            line,
            format!(
                "graph6 body has {} bytes, expected {}",
                body.len(),
                bits.div_ceil(6)
            ),
        ));
    }
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(Error::parse(line, "non-zero graph6 padding"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge_unchecked(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push6 = |out: &mut Vec<u8>, value: u64, groups: usize| {
        for i in (0..groups).rev() {
            out.push(((value >> (6 * i)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push6(&mut out, n as u64, 3);
    } else {
        out.extend([126, 126]);
        push6(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    let mut s = String::from_utf8(out).expect("graph6 is ASCII");
    s.push('\n');
    s
}

/// Detects graph6 (a record has no digits or spaces) versus an edge list.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = content_lines(text).next().map(|(_, l)| l).unwrap_or("");
    let graph6 = first.starts_with(GRAPH6_HEADER)
        || (!first.is_empty()
            && !first
                .bytes()
                .any(|b| b.is_ascii_digit() || b.is_ascii_whitespace()));
    if graph6 {
        parse_graph6(text)
    } else {
        parse_edge_list(text)
    }
}

fn parse_coloured_lines<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    after: usize,
) -> Result<ColouredGraph> {
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(after + 1, "missing header `n m q`"))?;
    let [n, m, q] = fields::<3>(hl, header)?;
    let n = vertex_count(hl, n)?;
    let m = edge_count(hl, n, m)?;
    if q == 0 || q > MAX_VERTICES as u64 {
        return Err(Error::parse(hl, format!("palette size {q} out of range")));
    }
    let mut edges = Vec::with_capacity(m);
    let mut g = Graph::empty(n);
    let mut last = hl;
    for _ in 0..m {
        let (l, text) = lines
            .next()
            .ok_or_else(|| Error::parse(last + 1, format!("expected {m} coloured edges")))?;
        let [u, v, c] = fields::<3>(l, text)?;
        g.try_add_edge(u as usize, v as usize).map_err(at_line(l))?;
        if c == 0 || c > q {
            return Err(Error::parse(l, format!("colour {c} outside 1..={q}")));
        }
        edges.push((u as usize, v as usize, c as usize));
        last = l;
    }
    ColouredGraph::from_coloured_edges(n, q as usize, &edges).map_err(at_line(hl))
}

/// Parses `n m q` followed by `m` lines `u v c` with `1 <= c <= q`.
pub fn parse_coloured(text: &str) -> Result<ColouredGraph> {
    let mut lines = content_lines(text);
    let g = parse_coloured_lines(&mut lines, 0)?;
    if let Some((l, _)) = lines.next() {
        return Err(Error::parse(l, "trailing content after coloured edges"));
    }
    Ok(g)
}

pub fn write_coloured(g: &ColouredGraph) -> String {
    let mut out = format!("{} {} {}\n", g.n(), g.graph().m(), g.q());
    for &(u, v, c) in g.coloured_edges() {
        let _ = writeln!(out, "{u} {v} {c}");
    }
    out
}

/// `affine s q N`, then `N` lines `x y`, then the coloured edge list. The
/// gadget is rebuilt from the points and must match the listed edges.
pub fn parse_affine(text: &str) -> Result<AffineGamma> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header `affine s q N`"))?;
    let rest = header
        .strip_prefix("affine")
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| Error::parse(hl, "header must start with `affine`"))?;
    let [s, q, n] = fields::<3>(hl, rest)?;
    let n = vertex_count(hl, n)?;
    if s > 1 << 20 {
        return Err(Error::parse(hl, format!("field order {s} too large")));
    }
    if q == 0 || n == 0 || (n - 1) % q as usize != 0 {
        return Err(Error::parse(
            hl,
            format!("N = {n} is not q(delta-1)+1 for q = {q}"),
        ));
    }
    let delta = (n - 1) / q as usize + 1;
    let mut points: Vec<Point> = Vec::with_capacity(n);
    let mut last = hl;
    for _ in 0..n {
        let (l, text) = lines
            .next()
            .ok_or_else(|| Error::parse(last + 1, format!("expected {n} points")))?;
        let [x, y] = fields::<2>(l, text)?;
        points.push((x, y));
        last = l;
    }
    let listed = parse_coloured_lines(&mut lines, last)?;
    if let Some((l, _)) = lines.next() {
        return Err(Error::parse(l, "trailing content after coloured edges"));
    }
    let gamma = affine_gamma_on_points(s, q as usize, delta, points).map_err(at_line(hl))?;
    if gamma.coloured != listed {
        return Err(Error::parse(
            hl,
            "edge list does not match the affine line structure",
        ));
    }
    Ok(gamma)
}

pub fn write_affine(g: &AffineGamma) -> String {
    let mut out = format!("affine {} {} {}\n", g.s, g.q, g.points.len());
    for &(x, y) in &g.points {
        let _ = writeln!(out, "{x} {y}");
    }
    out.push_str(&write_coloured(&g.coloured));
    out
}

/// Parameters written in the header of a forest-construction graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SzzHeader {
    pub a: usize,
    pub b: usize,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub q: usize,
}

/// `szz a b r s t q` followed by an edge list on `r + s + t` vertices.
pub fn parse_szz(text: &str) -> Result<(SzzHeader, Graph)> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header `szz a b r s t q`"))?;
    let rest = header
        .strip_prefix("szz")
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| Error::parse(hl, "header must start with `szz`"))?;
    let [a, b, r, s, t, q] = fields::<6>(hl, rest)?;
    let total = r
        .checked_add(s)
        .and_then(|x| x.checked_add(t))
        .ok_or_else(|| Error::parse(hl, "r + s + t overflows"))?;
    let h = SzzHeader {
        a: a as usize,
        b: b as usize,
        r: vertex_count(hl, r)?,
        s: vertex_count(hl, s)?,
        t: vertex_count(hl, t)?,
        q: q as usize,
    };
    let body: String = lines.map(|(_, l)| format!("{l}\n")).collect();
    // re-offset line numbers: body starts after the header
    let g = parse_edge_list(&body).map_err(|e| match e {
        Error::Parse { line, message } => Error::parse(line + hl, message),
        other => other,
    })?;
    if g.n() as u64 != total {
        return Err(Error::parse(
            hl,
            format!("graph has {} vertices, header says {total}", g.n()),
        ));
    }
    Ok((h, g))
}

pub fn write_szz(h: &SzzHeader, g: &Graph) -> String {
    format!(
        "szz {} {} {} {} {} {}\n{}",
        h.a,
        h.b,
        h.r,
        h.s,
        h.t,
        h.q,
        write_edge_list(g)
    )
}
