//! Text renderings of the array: the garden (wall column and the columns to
//! its right) and the tower (columns on both sides with wall markers).

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use clap::ValueEnum;
use ostro_core::towers::{
    array_entry, classify_palindrome, row, wall_profile, PalindromeClass, PalindromeKind, TowerRow, WallProfile,
};
use ostro_core::{Error, NumerationContext, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    Garden,
    Tower,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub d: u32,
    pub rows: usize,
    /// Columns `1..=cols_right`.
    pub cols_right: i64,
    /// Tower only: columns `1 − cols_left ..= 0`.
    pub cols_left: i64,
    pub format: Format,
    pub layout: Layout,
    pub labels: bool,
    pub underline_palindromes: bool,
}

impl RenderSpec {
    pub fn garden(d: u32, rows: usize, cols: i64, format: Format) -> Self {
        Self {
            d,
            rows,
            cols_right: cols,
            cols_left: 0,
            format,
            layout: Layout::Garden,
            labels: false,
            underline_palindromes: false,
        }
    }

    pub fn tower(d: u32, rows: usize, left: i64, cols: i64, format: Format) -> Self {
        Self {
            d,
            rows,
            cols_right: cols,
            cols_left: left,
            format,
            layout: Layout::Tower,
            labels: false,
            underline_palindromes: false,
        }
    }

    fn columns(&self) -> RangeInclusive<i64> {
        match self.layout {
            Layout::Garden => 1..=self.cols_right,
            Layout::Tower => 1 - self.cols_left..=self.cols_right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalindromeJson {
    pub kind: String,
    pub multiplier: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub m: usize,
    /// Most significant digit first.
    pub word: String,
    pub wall: i128,
    pub terms: Vec<i128>,
    pub red_col: i64,
    /// `null` for d = 1, where the left side has no wall profile.
    pub offset_i: Option<u8>,
    pub palindrome: PalindromeJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub d: u32,
    /// Column index of `terms[0]`.
    pub first_col: i64,
    pub rows: Vec<RowJson>,
}

struct RowData {
    row: TowerRow,
    wall: i128,
    profile: Option<WallProfile>,
    palindrome: PalindromeClass,
}

fn collect(ctx: &NumerationContext, spec: &RenderSpec) -> Result<Vec<RowData>> {
    (1..=spec.rows)
        .map(|m| {
            let profile = match wall_profile(ctx, m) {
                Ok(p) => Some(p),
                Err(Error::Unsupported { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok(RowData {
                row: row(ctx, m, spec.columns())?,
                wall: array_entry(ctx, m, 0)?,
                profile,
                palindrome: classify_palindrome(ctx, m)?,
            })
        })
        .collect()
}

pub fn render(ctx: &NumerationContext, spec: &RenderSpec) -> Result<String> {
    if ctx.d() != spec.d {
        return Err(Error::Domain(format!(
            "context is for d = {}, table asks for d = {}",
            ctx.d(),
            spec.d
        )));
    }
    if spec.cols_right < 0 || spec.cols_left < 0 {
        return Err(Error::Domain("column counts must be non-negative".into()));
    }
    let data = collect(ctx, spec)?;
    Ok(match (spec.format, spec.layout) {
        (Format::Json, _) => {
            let table = to_json(spec, &data);
            serde_json::to_string_pretty(&table).expect("table serializes") + "\n"
        }
        (Format::Csv, Layout::Garden) => garden_csv(spec, &data),
        (Format::Csv, Layout::Tower) => tower_csv(spec, &data),
        (Format::Ascii, Layout::Garden) => garden_ascii(&data),
        (Format::Ascii, Layout::Tower) => tower_ascii(spec, &data),
    })
}

fn to_json(spec: &RenderSpec, data: &[RowData]) -> TableJson {
    TableJson {
        d: spec.d,
        first_col: *spec.columns().start(),
        rows: data
            .iter()
            .map(|r| RowJson {
                m: r.row.m,
                word: r.row.word.to_msd_string(),
                wall: r.wall,
                terms: r.row.terms.clone(),
                red_col: r.row.red_col(),
                offset_i: r.profile.map(|p| p.offset_i),
                palindrome: PalindromeJson {
                    kind: r.palindrome.kind.to_string(),
                    multiplier: r.palindrome.multiplier.to_string(),
                },
            })
            .collect(),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn garden_csv(spec: &RenderSpec, data: &[RowData]) -> String {
    let mut out = format!("m,wall,{}\n", join(spec.columns()));
    for r in data {
        let _ = writeln!(out, "{},{},{}", r.row.m, r.wall, join(&r.row.terms));
    }
    out
}

fn tower_csv(spec: &RenderSpec, data: &[RowData]) -> String {
    let mut out = format!("m,word_lsd,red_col,offset_i,palindrome,{}\n", join(spec.columns()));
    for r in data {
        let offset = r.profile.map(|p| p.offset_i.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.row.m,
            r.row.word.to_lsd_string(),
            r.row.red_col(),
            offset,
            r.palindrome.kind,
            join(&r.row.terms)
        );
    }
    out
}

fn widths(cells: &[Vec<String>]) -> Vec<usize> {
    let n = cells.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| cells.iter().map(|r| r[i].len()).max().unwrap_or(0))
        .collect()
}

fn garden_ascii(data: &[RowData]) -> String {
    let cells: Vec<Vec<String>> = data
        .iter()
        .map(|r| {
            std::iter::once(r.wall)
                .chain(r.row.terms.iter().copied())
                .map(|v| v.to_string())
                .collect()
        })
        .collect();
    let w = widths(&cells);
    let mut out = String::new();
    for row in &cells {
        let _ = write!(out, "{:>1$} |", row[0], w[0]);
        for (i, c) in row.iter().enumerate().skip(1) {
            let _ = write!(out, " {:>1$}", c, w[i]);
        }
        out.push('\n');
    }
    out
}

/// Marker on the boundary just left of column `n`.
fn marker(r: &RowData, n: i64) -> char {
    if n == 1 {
        return '|';
    }
    let red = n == r.row.red_col();
    let left = r.profile.is_some_and(|p| p.left_wall_col() == n);
    match (red, left) {
        (true, true) => '#',
        (true, false) => ':',
        (false, true) => '!',
        (false, false) => ' ',
    }
}

fn tower_ascii(spec: &RenderSpec, data: &[RowData]) -> String {
    let cells: Vec<Vec<String>> = data
        .iter()
        .map(|r| r.row.terms.iter().map(|v| v.to_string()).collect())
        .collect();
    let w = widths(&cells);
    let cols: Vec<i64> = spec.columns().collect();
    let end = cols.last().map_or(1 - spec.cols_left, |&c| c + 1);
    let mut out = String::new();
    for (r, row) in data.iter().zip(&cells) {
        let mut line = String::from("...");
        let mut underline_from = None;
        for (i, (&n, c)) in cols.iter().zip(row).enumerate() {
            let _ = write!(line, " {} ", marker(r, n));
            if n == r.row.red_col().max(cols[0]) {
                underline_from = Some(line.len());
            }
            let _ = write!(line, "{:>1$}", c, w[i]);
        }
        let underline_to = line.len();
        let _ = write!(line, " {} ...", marker(r, end));
        if spec.labels {
            let _ = write!(line, "  {}", r.row.word.to_lsd_string());
        }
        out.push_str(line.trim_end());
        out.push('\n');
        if spec.underline_palindromes && r.palindrome.kind != PalindromeKind::None {
            if let Some(from) = underline_from {
                let _ = writeln!(out, "{}{}", " ".repeat(from), "-".repeat(underline_to - from));
            }
        }
    }
    out
}
