//! Plain-text serialization. All three formats are line-oriented, use a
//! single LF as the newline, list elements in ascending order, and list
//! member sets in graded lexicographic order, so serialization is
//! bit-exact for a given value.
//!
//! Matroid:
//!
//! ```text
//! matroid v1
//! n <n>
//! r <r>
//! bases <count>
//! <e1 e2 ... er>        one basis per line
//! ```
//!
//! Encoding (one `level` block per k = 0 .. r-1, count may be 0):
//!
//! ```text
//! vencoding v1
//! n <n>
//! r <r>
//! level <k> <count>
//! <e1 ... e(k+1)>
//! ```
//!
//! Set family:
//!
//! ```text
//! setfamily v1
//! n <n>
//! sets <count>
//! <e1 e2 ...>
//! ```

use crate::encoding::VEncoding;
use crate::matroid::{Matroid, MatroidError};
use crate::sets::{SetFamily, SubSet, MAX_GROUNDSET};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("structurally invalid matroid: {0}")]
    Matroid(#[from] MatroidError),
    #[error("structurally invalid encoding: {0}")]
    Encoding(String),
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Parse {
        line,
        msg: msg.into(),
    })
}

struct Lines<'a> {
    rest: &'a str,
    no: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { rest: text, no: 0 }
    }

    /// Next line, which must exist and must not contain carriage returns.
    fn next(&mut self) -> Result<&'a str, FormatError> {
        if self.rest.is_empty() {
            return err(self.no + 1, "unexpected end of input");
        }
        self.no += 1;
        let (line, rest) = match self.rest.find('\n') {
            Some(i) => (&self.rest[..i], &self.rest[i + 1..]),
            None => (self.rest, ""),
        };
        self.rest = rest;
        if line.contains('\r') {
            return err(self.no, "carriage return in input; the format is LF-only");
        }
        Ok(line)
    }

    fn finish(&mut self) -> Result<(), FormatError> {
        if self.rest.is_empty() {
            Ok(())
        } else {
            err(self.no + 1, "trailing content after the document")
        }
    }
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize, FormatError> {
    tok.parse()
        .map_err(|_| FormatError::Parse {
            line,
            msg: format!("expected {what}, got {tok:?}"),
        })
}

/// Parse `key <value>`.
fn parse_kv(lines: &mut Lines, key: &str) -> Result<usize, FormatError> {
    let line = lines.next()?;
    let no = lines.no;
    match line.split_once(' ') {
        Some((k, v)) if k == key && !v.contains(' ') => parse_usize(no, v, key),
        _ => err(no, format!("expected `{key} <value>`")),
    }
}

fn parse_set(line: &str, no: usize, n: usize) -> Result<SubSet, FormatError> {
    if line.is_empty() {
        return Ok(SubSet::EMPTY);
    }
    let mut out = SubSet::EMPTY;
    for tok in line.split(' ') {
        let e = parse_usize(no, tok, "an element")?;
        if e < 1 || e > n {
            return err(no, format!("element {e} outside the groundset 1..={n}"));
        }
        if out.contains(e) || out.max_element().is_some_and(|m| m >= e) {
            return err(no, "elements must be strictly ascending");
        }
        out = out.with(e);
    }
    Ok(out)
}

fn parse_header(lines: &mut Lines, magic: &str) -> Result<(), FormatError> {
    let line = lines.next()?;
    if line != magic {
        return err(lines.no, format!("expected header `{magic}`"));
    }
    Ok(())
}

fn parse_n(lines: &mut Lines) -> Result<usize, FormatError> {
    let n = parse_kv(lines, "n")?;
    if n > MAX_GROUNDSET {
        return err(lines.no, format!("n {n} exceeds the cap of {MAX_GROUNDSET}"));
    }
    Ok(n)
}

/// Read `count` member lines, each of the expected cardinality (`None` for
/// any), in strictly increasing graded-lex order.
fn parse_family_block(
    lines: &mut Lines,
    n: usize,
    count: usize,
    card: Option<usize>,
) -> Result<SetFamily, FormatError> {
    let mut members = Vec::with_capacity(count);
    let mut prev: Option<SubSet> = None;
    for _ in 0..count {
        let line = lines.next()?;
        let set = parse_set(line, lines.no, n)?;
        if let Some(c) = card {
            if set.len() != c {
                return err(lines.no, format!("expected a set of {c} elements"));
            }
        }
        if let Some(p) = prev {
            if set <= p {
                return err(lines.no, "sets must be in strictly increasing graded-lex order");
            }
        }
        prev = Some(set);
        members.push(set);
    }
    Ok(SetFamily::from_sorted(members))
}

pub fn write_matroid(m: &Matroid) -> String {
    let mut out = String::new();
    writeln!(out, "matroid v1").unwrap();
    writeln!(out, "n {}", m.n()).unwrap();
    writeln!(out, "r {}", m.rank()).unwrap();
    writeln!(out, "bases {}", m.bases().len()).unwrap();
    for b in m.bases().iter() {
        writeln!(out, "{b}").unwrap();
    }
    out
}

pub fn parse_matroid(text: &str) -> Result<Matroid, FormatError> {
    let mut lines = Lines::new(text);
    parse_header(&mut lines, "matroid v1")?;
    let n = parse_n(&mut lines)?;
    let r = parse_kv(&mut lines, "r")?;
    let count = parse_kv(&mut lines, "bases")?;
    let bases = parse_family_block(&mut lines, n, count, Some(r))?;
    lines.finish()?;
    let m = Matroid::from_bases(n, bases)?;
    if m.rank() != r {
        return err(0, "declared rank disagrees with basis cardinality");
    }
    Ok(m)
}

pub fn write_vencoding(enc: &VEncoding) -> String {
    let mut out = String::new();
    writeln!(out, "vencoding v1").unwrap();
    writeln!(out, "n {}", enc.n()).unwrap();
    writeln!(out, "r {}", enc.r()).unwrap();
    for (k, level) in enc.levels().iter().enumerate() {
        writeln!(out, "level {} {}", k, level.len()).unwrap();
        for v in level.iter() {
            writeln!(out, "{v}").unwrap();
        }
    }
    out
}

pub fn parse_vencoding(text: &str) -> Result<VEncoding, FormatError> {
    let mut lines = Lines::new(text);
    parse_header(&mut lines, "vencoding v1")?;
    let n = parse_n(&mut lines)?;
    let r = parse_kv(&mut lines, "r")?;
    let mut levels = Vec::with_capacity(r);
    for k in 0..r {
        let line = lines.next()?;
        let no = lines.no;
        let mut toks = line.split(' ');
        if toks.next() != Some("level") {
            return err(no, format!("expected `level {k} <count>`"));
        }
        let kk = parse_usize(no, toks.next().unwrap_or(""), "a level index")?;
        if kk != k {
            return err(no, format!("levels must appear in order; expected {k}"));
        }
        let count = parse_usize(no, toks.next().unwrap_or(""), "a count")?;
        if toks.next().is_some() {
            return err(no, "trailing tokens after the level header");
        }
        levels.push(parse_family_block(&mut lines, n, count, Some(k + 1))?);
    }
    lines.finish()?;
    VEncoding::new(n, r, levels).map_err(|e| FormatError::Encoding(e.to_string()))
}

pub fn write_family(n: usize, fam: &SetFamily) -> String {
    let mut out = String::new();
    writeln!(out, "setfamily v1").unwrap();
    writeln!(out, "n {n}").unwrap();
    writeln!(out, "sets {}", fam.len()).unwrap();
    for m in fam.iter() {
        writeln!(out, "{m}").unwrap();
    }
    out
}

pub fn parse_family(text: &str) -> Result<(usize, SetFamily), FormatError> {
    let mut lines = Lines::new(text);
    parse_header(&mut lines, "setfamily v1")?;
    let n = parse_n(&mut lines)?;
    let count = parse_kv(&mut lines, "sets")?;
    let fam = parse_family_block(&mut lines, n, count, None)?;
    lines.finish()?;
    Ok((n, fam))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::{fano, parallel_class_matroid};

    #[test]
    fn matroid_roundtrip_is_bit_exact() {
        for m in [Matroid::uniform(2, 4), fano(), Matroid::rank_zero(3), parallel_class_matroid()] {
            let text = write_matroid(&m);
            let back = parse_matroid(&text).unwrap();
            assert_eq!(back, m);
            assert_eq!(write_matroid(&back), text);
        }
    }

    #[test]
    fn rank_zero_basis_line_is_empty() {
        let text = write_matroid(&Matroid::rank_zero(2));
        assert_eq!(text, "matroid v1\nn 2\nr 0\nbases 1\n\n");
        assert_eq!(parse_matroid(&text).unwrap(), Matroid::rank_zero(2));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_matroid("matroid v2\n").is_err());
        assert!(parse_matroid("matroid v1\nn 4\nr 2\nbases 1\n2 1\n").is_err());
        assert!(parse_matroid("matroid v1\nn 4\nr 2\nbases 2\n1 3\n1 2\n").is_err());
        assert!(parse_matroid("matroid v1\nn 4\nr 2\nbases 1\n1 5\n").is_err());
        assert!(parse_matroid("matroid v1\nn 4\nr 2\nbases 1\n1 2\nextra\n").is_err());
        assert!(parse_matroid("matroid v1\r\nn 4\nr 2\nbases 1\n1 2\n").is_err());
    }

    #[test]
    fn family_roundtrip() {
        let fam = crate::testkit::fano_lines();
        let text = write_family(7, &fam);
        let (n, back) = parse_family(&text).unwrap();
        assert_eq!((n, back), (7, fam));
    }

    #[test]
    fn vencoding_roundtrip() {
        use crate::encoding::encode_v;
        for m in [fano(), Matroid::uniform(2, 5), parallel_class_matroid()] {
            let enc = encode_v(&m);
            let text = write_vencoding(&enc);
            let back = parse_vencoding(&text).unwrap();
            assert_eq!(back, enc);
            assert_eq!(write_vencoding(&back), text);
        }
    }
}
