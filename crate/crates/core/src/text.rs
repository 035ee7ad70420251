//! The ".cc" concept-class and ".cubes" collection text formats.
//!
//! Both formats share the header: optional comment lines starting with '#',
//! then a line `n=<int>`. A ".cc" body lists one vertex per line as a
//! length-n string over {0,1}; duplicates are a parse error. A ".cubes" body
//! lists one subcube per line over {0,1,*}, '*' marking a free coordinate.
//! Multi-class streams are ".cc" blocks separated by blank lines.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::cube::{bitpos, ConceptClass, CubeCollection, Subcube};
use crate::error::{Error, Result};

fn parse_header(line: &str, lineno: usize) -> Result<u32> {
    let rest = line
        .strip_prefix("n=")
        .ok_or_else(|| Error::Parse { line: lineno, msg: "expected header n=<int>".to_string() })?;
    let n: u32 = rest
        .trim()
        .parse()
        .map_err(|_| Error::Parse { line: lineno, msg: format!("bad dimension {rest:?}") })?;
    if !(1..=crate::cube::MAX_DIM).contains(&n) {
        return Err(Error::Parse { line: lineno, msg: format!("dimension {n} out of range 1..=24") });
    }
    Ok(n)
}

/// Parses a single concept class.
///
/// ```
/// use cubevc_core::text::parse_class;
/// let c = parse_class("# a square corner\nn=2\n00\n01\n").unwrap();
/// assert_eq!(c.cardinality(), 2);
/// ```
pub fn parse_class(input: &str) -> Result<ConceptClass> {
    let mut n = None;
    let mut class: Option<ConceptClass> = None;
    for (i, raw) in input.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match n {
            None => {
                n = Some(parse_header(line, lineno)?);
                class = Some(ConceptClass::empty(n.unwrap())?);
            }
            Some(n) => {
                let v = parse_vertex_line(line, n, lineno)?;
                let c = class.as_mut().unwrap();
                if c.contains(v) {
                    return Err(Error::Parse { line: lineno, msg: format!("duplicate vertex {line}") });
                }
                *c = c.with_vertex(v);
            }
        }
    }
    class.ok_or_else(|| Error::Parse { line: 0, msg: "missing n=<int> header".to_string() })
}

fn parse_vertex_line(line: &str, n: u32, lineno: usize) -> Result<u32> {
    if line.len() != n as usize {
        return Err(Error::Parse { line: lineno, msg: format!("vertex {line:?} is not {n} characters long") });
    }
    let mut v = 0u32;
    for ch in line.chars() {
        v <<= 1;
        match ch {
            '0' => {}
            '1' => v |= 1,
            _ => {
                return Err(Error::Parse { line: lineno, msg: format!("bad character {ch:?} in vertex") });
            }
        }
    }
    Ok(v)
}

/// Renders a class: header then vertices ascending, one per line.
pub fn write_class(class: &ConceptClass) -> String {
    let mut out = format!("n={}\n", class.n());
    for v in class.vertices() {
        out.push_str(&format!("{v}\n"));
    }
    out
}

/// Parses blank-line separated ".cc" records.
pub fn parse_class_stream(input: &str) -> Result<Vec<ConceptClass>> {
    let mut classes = Vec::new();
    let mut block = String::new();
    let mut block_has_content = false;
    for raw in input.lines().chain(core::iter::once("")) {
        if raw.trim().is_empty() {
            if block_has_content {
                classes.push(parse_class(&block)?);
            }
            block.clear();
            block_has_content = false;
        } else {
            if !raw.trim().starts_with('#') {
                block_has_content = true;
            }
            block.push_str(raw);
            block.push('\n');
        }
    }
    Ok(classes)
}

/// Renders classes as blank-line separated records.
pub fn write_class_stream(classes: &[ConceptClass]) -> String {
    let blocks: Vec<String> = classes.iter().map(write_class).collect();
    blocks.join("\n")
}

/// Parses a cube collection. All cubes must share one dimension.
pub fn parse_collection(input: &str) -> Result<CubeCollection> {
    let mut n = None;
    let mut cubes: Vec<Subcube> = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match n {
            None => n = Some(parse_header(line, lineno)?),
            Some(n) => {
                if line.len() != n as usize {
                    return Err(Error::Parse { line: lineno, msg: format!("cube {line:?} is not {n} characters long") });
                }
                let mut mask = 0u32;
                let mut values = 0u32;
                for (j, ch) in line.chars().enumerate() {
                    let pos = bitpos(n, j as u32 + 1);
                    match ch {
                        '*' => {}
                        '0' => mask |= 1 << pos,
                        '1' => {
                            mask |= 1 << pos;
                            values |= 1 << pos;
                        }
                        _ => {
                            return Err(Error::Parse { line: lineno, msg: format!("bad character {ch:?} in cube") });
                        }
                    }
                }
                cubes.push(Subcube::new(n, mask, values).map_err(|e| Error::Parse { line: lineno, msg: e.to_string() })?);
            }
        }
    }
    let n = n.ok_or_else(|| Error::Parse { line: 0, msg: "missing n=<int> header".to_string() })?;
    if cubes.is_empty() {
        return Err(Error::Parse { line: 0, msg: "collection has no cubes".to_string() });
    }
    let k = cubes[0].dim();
    if cubes.iter().any(|c| c.dim() != k) {
        return Err(Error::Parse { line: 0, msg: "cubes do not share a common dimension".to_string() });
    }
    CubeCollection::new(n, k, cubes).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })
}

/// Renders a collection: header then one {0,1,*} pattern per line.
pub fn write_collection(cc: &CubeCollection) -> String {
    let mut out = format!("n={}\n", cc.n());
    for cube in cc.cubes() {
        out.push_str(&format!("{cube}\n"));
    }
    out
}
