//! Text formats: animal files, minimal-set files, JSON reports, CSV tables
//! and SVG pictures.
//!
//! An animal file looks like
//!
//! ```text
//! # naphthalene
//! lattice: hex
//! adjacency: edge
//! cells:
//! 0 0
//! 1 0
//! ```
//!
//! `adjacency` is optional and defaults to `edge`. A set file is one header
//! line followed by one animal per line:
//!
//! ```text
//! latanim-set lattice=square adjacency=edge n=3 p=7 count=4
//! 0 0,0 1,0 2
//! ```

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::animal::Animal;
use crate::enumerate::MinimalSet;
use crate::error::{Error, Result};
use crate::lattice::{cell_geometry, AdjacencyMode, Cell, Lattice, LatticeKind};

const SET_MAGIC: &str = "latanim-set";

fn parse_pair(s: &str) -> Option<Cell> {
    let mut it = s.split_whitespace().map(str::parse::<i32>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(x)), Some(Ok(y)), None) => Some(Cell::new(x, y)),
        _ => None,
    }
}

pub fn parse_animal(text: &str) -> Result<Animal> {
    let mut kind: Option<LatticeKind> = None;
    let mut mode = AdjacencyMode::Edge;
    let mut lattice: Option<Lattice> = None;
    let mut cells = Vec::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if lattice.is_some() {
            let c = parse_pair(line)
                .ok_or_else(|| Error::syntax(line_no, format!("expected `x y`, found `{line}`")))?;
            cells.push(c);
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| Error::syntax(line_no, format!("expected `key: value`, found `{line}`")))?;
        let value = value.trim();
        match key.trim() {
            "lattice" => kind = Some(value.parse()?),
            "adjacency" => mode = value.parse()?,
            "cells" if value.is_empty() => {
                let k = kind
                    .ok_or_else(|| Error::syntax(line_no, "`cells:` before `lattice:`"))?;
                lattice = Some(Lattice::new(k, mode)?);
            }
            "cells" => return Err(Error::syntax(line_no, "cells go on the lines after `cells:`")),
            other => return Err(Error::syntax(line_no, format!("unknown key `{other}`"))),
        }
    }
    let lattice = lattice.ok_or_else(|| Error::syntax(last, "missing `cells:` section"))?;
    Animal::new(lattice, cells)
}

pub fn serialize_animal(a: &Animal) -> String {
    let mut s = format!(
        "lattice: {}\nadjacency: {}\ncells:\n",
        a.kind(),
        a.lattice().mode()
    );
    for c in a.cells() {
        let _ = writeln!(s, "{} {}", c.x, c.y);
    }
    s
}

pub fn read_animal(path: &Path) -> Result<Animal> {
    parse_animal(&std::fs::read_to_string(path)?)
}

pub fn write_animal(path: &Path, a: &Animal) -> Result<()> {
    Ok(std::fs::write(path, serialize_animal(a))?)
}

pub fn format_set(set: &MinimalSet) -> String {
    let mut s = format!(
        "{SET_MAGIC} lattice={} adjacency={} n={} p={} count={}\n",
        set.lattice.kind(),
        set.lattice.mode(),
        set.n,
        set.p,
        set.len()
    );
    for a in &set.animals {
        let _ = writeln!(s, "{a}");
    }
    s
}

fn header_field<'a>(fields: &[(&'a str, &'a str)], key: &str) -> Result<&'a str> {
    fields
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::syntax(1, format!("header lacks `{key}=`")))
}

fn header_number(fields: &[(&str, &str)], key: &str) -> Result<usize> {
    let v = header_field(fields, key)?;
    v.parse()
        .map_err(|_| Error::syntax(1, format!("`{key}={v}` is not a number")))
}

pub fn parse_set(text: &str) -> Result<MinimalSet> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    let mut words = header.split_whitespace();
    if words.next() != Some(SET_MAGIC) {
        return Err(Error::syntax(1, format!("expected `{SET_MAGIC}` header")));
    }
    let fields: Vec<(&str, &str)> = words
        .map(|w| {
            w.split_once('=')
                .ok_or_else(|| Error::syntax(1, format!("bad header field `{w}`")))
        })
        .collect::<Result<_>>()?;
    let kind: LatticeKind = header_field(&fields, "lattice")?.parse()?;
    let mode: AdjacencyMode = header_field(&fields, "adjacency")?.parse()?;
    let lattice = Lattice::new(kind, mode)?;
    let n = header_number(&fields, "n")?;
    let p = header_number(&fields, "p")?;
    let count = header_number(&fields, "count")?;
    let mut animals = Vec::with_capacity(count);
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        if line.trim().is_empty() {
            continue;
        }
        let cells = line
            .split(',')
            .map(|pair| {
                parse_pair(pair).ok_or_else(|| {
                    Error::syntax(line_no, format!("expected `x y`, found `{}`", pair.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        animals.push(Animal::new(lattice, cells)?);
    }
    if animals.len() != count {
        return Err(Error::syntax(
            1,
            format!("header says {count} animals, found {}", animals.len()),
        ));
    }
    Ok(MinimalSet {
        lattice,
        n,
        p,
        animals,
    })
}

pub fn write_set(path: &Path, set: &MinimalSet) -> Result<()> {
    Ok(std::fs::write(path, format_set(set))?)
}

pub fn read_set(path: &Path) -> Result<MinimalSet> {
    parse_set(&std::fs::read_to_string(path)?)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_report<T: Serialize + ?Sized>(path: &Path, report: &T) -> Result<()> {
    Ok(std::fs::write(path, to_json(report)?)?)
}

/// A CSV table with a header row.
pub fn csv_table<R, I>(header: &[&str], rows: R) -> Result<String>
where
    R: IntoIterator<Item = I>,
    I: IntoIterator,
    I::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv fields are utf-8"))
}

const SCALE: f64 = 24.0;
const GAP: f64 = 1.0;

fn polygon(s: &mut String, class: &str, pts: &[(f64, f64)], dx: f64, top: f64) {
    let points = pts
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", (x + dx) * SCALE, (top - y) * SCALE))
        .collect::<Vec<_>>()
        .join(" ");
    let _ = writeln!(s, r#"<polygon class="{class}" points="{points}"/>"#);
}

/// Animals side by side, cells filled gray and perimeter cells outlined.
pub fn render_svg(animals: &[Animal]) -> String {
    struct Item {
        cells: Vec<Vec<(f64, f64)>>,
        perimeter: Vec<Vec<(f64, f64)>>,
        x0: f64,
        x1: f64,
    }
    let mut items = Vec::with_capacity(animals.len());
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for a in animals {
        let geo = |cs: &[Cell]| -> Vec<Vec<(f64, f64)>> {
            cs.iter().map(|&c| cell_geometry(a.kind(), c)).collect()
        };
        let cells = geo(a.cells());
        let perimeter = geo(&a.perimeter());
        let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in cells.iter().chain(&perimeter).flatten() {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        items.push(Item {
            cells,
            perimeter,
            x0,
            x1,
        });
    }
    if items.is_empty() {
        (y0, y1) = (0.0, 0.0);
    }
    let top = y1 + GAP / 2.0;
    let mut body = String::new();
    let mut cursor = GAP / 2.0;
    for it in &items {
        let dx = cursor - it.x0;
        body.push_str("<g>\n");
        for p in &it.cells {
            polygon(&mut body, "cell", p, dx, top);
        }
        for p in &it.perimeter {
            polygon(&mut body, "perimeter", p, dx, top);
        }
        body.push_str("</g>\n");
        cursor += it.x1 - it.x0 + GAP;
    }
    let width = (cursor - GAP / 2.0).max(GAP) * SCALE;
    let height = (y1 - y0 + GAP) * SCALE;
    format!(
        concat!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.2} {h:.2}">"#,
            "\n<style>\n",
            ".cell {{ fill: #a0a0a0; stroke: #000000; stroke-width: 1 }}\n",
            ".perimeter {{ fill: #ffffff; stroke: #000000; stroke-width: 1 }}\n",
            "</style>\n{body}</svg>\n"
        ),
        w = width,
        h = height,
        body = body
    )
}

pub fn write_svg(path: &Path, animals: &[Animal]) -> Result<()> {
    Ok(std::fs::write(path, render_svg(animals))?)
}
