//! Text formats: ASCII grid files and JSON line-sum documents.
//!
//! A grid file has one line per row, top to bottom, all lines of equal
//! length. `1` or `#` marks a point, `0` or `.` an empty cell. Output always
//! uses `1`/`0`. A sums file is a JSON object `{"rows": [...], "cols": [...]}`.

use crate::error::{Error, Result};
use crate::grid::{Frame, GridPoint, GridSet, LineSums};

/// Parse a grid file; the frame covers every line and column of the file.
pub fn parse_grid(text: &str) -> Result<(GridSet, Frame)> {
    let mut lines: Vec<&str> = text.lines().map(|l| l.trim_end_matches('\r')).collect();
    while lines.last().is_some_and(|l| l.is_empty()) {
        lines.pop();
    }
    let width = lines.first().map_or(0, |l| l.chars().count());
    let mut set = GridSet::new();
    for (i, line) in lines.iter().enumerate() {
        let len = line.chars().count();
        if len != width {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected {width} cells, found {len}"),
            });
        }
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '1' | '#' => {
                    set.insert(GridPoint::new(i as i64 + 1, j as i64 + 1));
                }
                '0' | '.' => {}
                other => {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("unexpected character {other:?} in column {}", j + 1),
                    })
                }
            }
        }
    }
    Ok((set, Frame::unit(lines.len(), width)))
}

pub fn render_grid(set: &GridSet, frame: &Frame) -> Result<String> {
    let mut cells = vec![vec![b'0'; frame.cols]; frame.rows];
    for p in set {
        if !frame.contains(p) {
            return Err(Error::InvalidParameter(format!(
                "point {p} lies outside the {}x{} frame",
                frame.rows, frame.cols
            )));
        }
        let r = (p.row - frame.row_offset - 1) as usize;
        let c = (p.col - frame.col_offset - 1) as usize;
        cells[r][c] = b'1';
    }
    let mut out = String::with_capacity(frame.rows * (frame.cols + 1));
    for row in cells {
        out.push_str(std::str::from_utf8(&row).expect("ascii"));
        out.push('\n');
    }
    Ok(out)
}

/// The window from `(1,1)` to the largest row and column used by `sets`.
pub fn origin_frame<'a, I>(sets: I) -> Frame
where
    I: IntoIterator<Item = &'a GridSet>,
{
    let mut rows = 0;
    let mut cols = 0;
    for s in sets {
        for p in s {
            rows = rows.max(p.row.max(0) as usize);
            cols = cols.max(p.col.max(0) as usize);
        }
    }
    Frame::unit(rows, cols)
}

pub fn parse_sums(text: &str) -> Result<LineSums> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })
}

pub fn render_sums(sums: &LineSums) -> String {
    let mut s = serde_json::to_string(sums).expect("line sums serialize");
    s.push('\n');
    s
}
