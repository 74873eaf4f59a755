//! Sample-file parsing and output formatting.

use serde::Serialize;
use std::fs;
use std::io::Write;
use std::path::Path;
use trigspline::{GridSpec, Samples};

/// Exit codes: 2 usage / input errors, 3 numerical failures, 1 check failures.
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_CHECK: i32 = 1;

pub fn fail(code: i32, msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(code);
}

/// Read a sample CSV with header `j,f` (node index) or `x,f` (node
/// coordinate). Coordinates must match the grid nodes to 1e-9.
pub fn read_samples(path: &Path, grid: GridSpec) -> Result<Samples, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or("empty sample file")?;
    let cols: Vec<&str> = header.split(',').map(str::trim).collect();
    let by_index = match cols.as_slice() {
        ["j", "f"] => true,
        ["x", "f"] => false,
        _ => {
            return Err(format!(
                "unrecognized header {header:?}; expected `j,f` or `x,f`"
            ))
        }
    };
    let n = grid.len();
    let mut values = vec![f64::NAN; n];
    let mut seen = vec![false; n];
    for (lineno, line) in lines.enumerate() {
        let parts: Vec<&str> = line.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(format!("line {}: expected two columns", lineno + 2));
        }
        let f: f64 = parts[1]
            .parse()
            .map_err(|e| format!("line {}: {e}", lineno + 2))?;
        let j = if by_index {
            let j: usize = parts[0]
                .parse()
                .map_err(|e| format!("line {}: {e}", lineno + 2))?;
            if j < 1 || j > n {
                return Err(format!("line {}: index {j} out of 1..={n}", lineno + 2));
            }
            j
        } else {
            let x: f64 = parts[0]
                .parse()
                .map_err(|e| format!("line {}: {e}", lineno + 2))?;
            let mut found = None;
            for cand in 1..=n {
                if (grid.node(cand).unwrap() - x).abs() <= 1e-9 {
                    found = Some(cand);
                    break;
                }
            }
            found.ok_or(format!(
                "line {}: x = {x} matches no grid node to 1e-9",
                lineno + 2
            ))?
        };
        if seen[j - 1] {
            return Err(format!("node {j} sampled twice"));
        }
        seen[j - 1] = true;
        values[j - 1] = f;
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(format!("node {} has no sample", missing + 1));
    }
    Samples::new(grid, values).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// A table of named columns, rendered as CSV or a JSON array of objects.
/// Floats print with 17 significant digits so they round-trip.
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Text(String),
}

impl Table {
    pub fn new(columns: Vec<String>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn render_cell(cell: &Cell) -> String {
        match cell {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:.16e}"),
            Cell::Text(v) => v.clone(),
        }
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Csv => {
                writeln!(out, "{}", self.columns.join(","))?;
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Self::render_cell).collect();
                    writeln!(out, "{}", cells.join(","))?;
                }
            }
            Format::Json => {
                let objects: Vec<serde_json::Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let map: serde_json::Map<String, serde_json::Value> = self
                            .columns
                            .iter()
                            .zip(row)
                            .map(|(c, cell)| {
                                (c.clone(), serde_json::to_value(cell).expect("serializable"))
                            })
                            .collect();
                        serde_json::Value::Object(map)
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut *out, &objects)?;
                writeln!(out)?;
            }
        }
        Ok(())
    }
}

/// Write a table to a file or stdout.
pub fn emit(table: &Table, format: Format, output: Option<&Path>) {
    let result = match output {
        Some(path) => {
            let mut file = match fs::File::create(path) {
                Ok(f) => f,
                Err(e) => fail(EXIT_USAGE, &format!("{}: {e}", path.display())),
            };
            table.write(format, &mut file)
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            table.write(format, &mut lock)
        }
    };
    if let Err(e) = result {
        fail(EXIT_USAGE, &format!("write failed: {e}"));
    }
}
