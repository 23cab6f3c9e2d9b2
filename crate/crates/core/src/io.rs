//! Reading and writing hypergraph files.
//!
//! Two formats are supported and sniffed apart by the first non-space byte:
//!
//! * `whg-1` JSON: `{"format":"whg-1","k":3,"n":5,"edges":[{"v":[0,1,2],"w":1.0}, ...]}`
//! * plain text: a `k n m` header, then one line per edge holding k vertex
//!   indices and the weight. Blank lines and `#` comments are ignored, and
//!   tokens may in fact be split across lines any way.
//!
//! JSON output prints every float with 17 significant digits, which makes a
//! parse of the output bit-identical to the value written.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;

use crate::error::Error;
use crate::hypergraph::WeightedHypergraph;
use crate::scalar::Scalar;

#[derive(Debug, Serialize, Deserialize)]
struct WhgFile {
    format: String,
    k: usize,
    n: usize,
    edges: Vec<WhgEdge>,
}

#[derive(Debug, Serialize, Deserialize)]
struct WhgEdge {
    v: Vec<usize>,
    w: f64,
}

/// Parses either supported format, deciding by the leading byte.
pub fn parse_str<T: Scalar>(s: &str) -> Result<WeightedHypergraph<T>, Error> {
    if s.trim_start().starts_with('{') {
        parse_whg_json(s)
    } else {
        parse_plain(s)
    }
}

/// Parses the `whg-1` JSON format.
pub fn parse_whg_json<T: Scalar>(s: &str) -> Result<WeightedHypergraph<T>, Error> {
    let file: WhgFile = serde_json::from_str(s).map_err(|e| Error::InvalidFormat(e.to_string()))?;
    if file.format != "whg-1" {
        return Err(Error::InvalidFormat(format!(
            "unknown format tag {:?}, expected \"whg-1\"",
            file.format
        )));
    }
    let edges = file
        .edges
        .into_iter()
        .map(|e| (e.v, T::cast(e.w)))
        .collect();
    WeightedHypergraph::new(file.n, file.k, edges).map_err(Error::from)
}

/// Parses the plain text format: `k n m`, then `m * (k + 1)` further tokens.
pub fn parse_plain<T: Scalar>(s: &str) -> Result<WeightedHypergraph<T>, Error> {
    let mut tokens = s
        .lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace);

    let k = take_num::<usize, _>(&mut tokens, "edge size k")?;
    let n = take_num::<usize, _>(&mut tokens, "vertex count n")?;
    let m = take_num::<usize, _>(&mut tokens, "edge count m")?;

    let mut edges = Vec::with_capacity(m);
    for edge in 0..m {
        let mut vs = Vec::with_capacity(k);
        for i in 0..k {
            vs.push(take_num(
                &mut tokens,
                &format!("vertex {i} of edge {edge}"),
            )?);
        }
        let w: f64 = take_num(&mut tokens, &format!("weight of edge {edge}"))?;
        edges.push((vs, T::cast(w)));
    }
    if let Some(extra) = tokens.next() {
        return Err(Error::InvalidFormat(format!(
            "trailing token {extra:?} after {m} edges"
        )));
    }
    WeightedHypergraph::new(n, k, edges).map_err(Error::from)
}

fn take_num<'a, N, I>(tokens: &mut I, what: &str) -> Result<N, Error>
where
    N: std::str::FromStr,
    I: Iterator<Item = &'a str>,
{
    let tok = tokens
        .next()
        .ok_or_else(|| Error::InvalidFormat(format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::InvalidFormat(format!("bad {what} token {tok:?}")))
}

/// Serializes a hypergraph into the `whg-1` JSON format, full precision.
pub fn to_whg_string<T: Scalar>(g: &WeightedHypergraph<T>) -> String {
    let file = WhgFile {
        format: "whg-1".to_string(),
        k: g.k(),
        n: g.n(),
        edges: g
            .edges()
            .iter()
            .map(|e| WhgEdge {
                v: e.vertices().to_vec(),
                w: e.weight().to_f64().expect("weights are finite"),
            })
            .collect(),
    };
    to_json_full_precision(&file)
}

/// Compact JSON with floats printed as `{:.16e}` (17 significant digits), so
/// reading the text back reproduces every f64 bit for bit.
pub struct FullPrecisionFormatter;

impl Formatter for FullPrecisionFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.8e}")
    }
}

/// Serializes any value to compact JSON through [`FullPrecisionFormatter`].
pub fn to_json_full_precision<S: Serialize>(value: &S) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FullPrecisionFormatter);
    value
        .serialize(&mut ser)
        .expect("serialization to a buffer cannot fail");
    String::from_utf8(out).expect("serializer emits utf-8")
}
