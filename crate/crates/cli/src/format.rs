//! The `.cx` complex file format and the `.cxl` list format.
//!
//! ```text
//! # comment
//! n 4
//! 1 2
//! 1 3
//! 2 4
//! ```
//!
//! One facet per line. When `n <= 9` a facet may also be written as a digit
//! word (`123`). A line holding `∅` is the empty face; a file with no facet
//! lines is the void complex. Output always uses the spaced form.
//!
//! A `.cxl` file has the same header and one complex per line, facets
//! separated by commas.

use std::collections::HashSet;

use fcomplex::complex::{mask_of, vertices};
use fcomplex::{Complex, Mask};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Content lines after the header, with 1-based line numbers.
type Body<'a> = Vec<(usize, &'a str)>;

/// The vertex count from the header, plus the remaining content lines.
fn split_header(text: &str) -> Result<(u32, Body<'_>), ParseError> {
    let mut n = None;
    let mut body = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if n.is_none() {
            let mut words = line.split_whitespace();
            if words.next() != Some("n") {
                return Err(err(i + 1, format!("expected header \"n <N>\", found {line:?}")));
            }
            let value = words
                .next()
                .ok_or_else(|| err(i + 1, "header is missing the vertex count"))?;
            if words.next().is_some() {
                return Err(err(i + 1, "trailing text after the vertex count"));
            }
            let value: u32 = value
                .parse()
                .map_err(|_| err(i + 1, format!("vertex count {value:?} is not a number")))?;
            if !(1..=64).contains(&value) {
                return Err(err(i + 1, format!("vertex count {value} is outside 1..=64")));
            }
            n = Some(value);
        } else {
            body.push((i + 1, line));
        }
    }
    let n = n.ok_or_else(|| err(text.lines().count().max(1), "missing header \"n <N>\""))?;
    Ok((n, body))
}

fn parse_facet(text: &str, n: u32, line: usize) -> Result<Mask, ParseError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    if words == ["∅"] {
        return Ok(0);
    }
    if words.is_empty() {
        return Err(err(line, "empty facet"));
    }
    let shorthand = n <= 9 && words.len() == 1 && words[0].len() > 1;
    let mut verts = Vec::new();
    if shorthand {
        for ch in words[0].chars() {
            let v = ch
                .to_digit(10)
                .ok_or_else(|| err(line, format!("{:?} is not a vertex", words[0])))?;
            verts.push(v);
        }
    } else {
        for w in &words {
            let v: u32 = w
                .parse()
                .map_err(|_| err(line, format!("{w:?} is not a vertex")))?;
            verts.push(v);
        }
    }
    let mut seen = 0u64;
    for &v in &verts {
        if v == 0 || v > n {
            return Err(err(line, format!("vertex {v} is out of range 1..={n}")));
        }
        if seen & 1 << (v - 1) != 0 {
            return Err(err(line, format!("vertex {v} repeats")));
        }
        seen |= 1 << (v - 1);
    }
    mask_of(&verts, n).map_err(|e| err(line, e.to_string()))
}

pub fn parse_complex(text: &str) -> Result<Complex, ParseError> {
    let (n, body) = split_header(text)?;
    let mut facets = Vec::new();
    let mut first_seen: HashSet<Mask> = HashSet::new();
    for (line, content) in body {
        if content.starts_with('n') {
            return Err(err(line, "second header"));
        }
        let facet = parse_facet(content, n, line)?;
        if !first_seen.insert(facet) {
            return Err(err(line, format!("duplicate facet {}", spaced(facet))));
        }
        facets.push((line, facet));
    }
    check_maximal(&facets)?;
    let facets: Vec<Mask> = facets.into_iter().map(|(_, f)| f).collect();
    if facets.is_empty() {
        return Complex::void(n).map_err(|e| err(1, e.to_string()));
    }
    Complex::from_masks(n, facets).map_err(|e| err(1, e.to_string()))
}

/// Every line must be a facet, so no listed set may lie inside another.
fn check_maximal(facets: &[(usize, Mask)]) -> Result<(), ParseError> {
    for &(line, f) in facets {
        if let Some(&(other_line, g)) = facets.iter().find(|&&(_, g)| g != f && f & !g == 0) {
            return Err(err(
                line,
                format!(
                    "{} is not a facet: it lies inside {} (line {other_line})",
                    spaced(f),
                    spaced(g)
                ),
            ));
        }
    }
    Ok(())
}

/// Parses a `.cxl` list: the header, then one complex per line.
pub fn parse_complex_list(text: &str) -> Result<Vec<Complex>, ParseError> {
    let (n, body) = split_header(text)?;
    body.into_iter()
        .map(|(line, content)| {
            let mut facets = Vec::new();
            for part in content.split(',') {
                let facet = parse_facet(part, n, line)?;
                if facets.contains(&facet) {
                    return Err(err(line, format!("duplicate facet {}", spaced(facet))));
                }
                facets.push(facet);
            }
            let tagged: Vec<(usize, Mask)> = facets.iter().map(|&f| (line, f)).collect();
            check_maximal(&tagged)?;
            Complex::from_masks(n, facets).map_err(|e| err(line, e.to_string()))
        })
        .collect()
}

fn spaced(facet: Mask) -> String {
    if facet == 0 {
        return "∅".into();
    }
    vertices(facet)
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Canonical serialization: header, then facets in canonical order.
pub fn write_complex(c: &Complex) -> String {
    let mut out = format!("n {}\n", c.n());
    for &f in c.generators() {
        if c.is_void() {
            break;
        }
        out.push_str(&spaced(f));
        out.push('\n');
    }
    out
}

/// Facets as vertex lists, for structured output.
pub fn facet_lists(c: &Complex) -> Vec<Vec<u32>> {
    if c.is_void() {
        return Vec::new();
    }
    c.generators().iter().map(|&f| vertices(f).collect()).collect()
}
