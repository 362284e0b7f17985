use anyhow::{Context, Result};
use std::fs;
use std::path::{Path, PathBuf};

/// One CSV cell.  Reals are written with 17 significant digits.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Real(f64),
    Int(i64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Real(v) => format!("{v:.16e}"),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// A named table with a one-line header.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    /// Short name, used as the file-name suffix.
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: impl Into<String>, header: &[&str]) -> Self {
        Table {
            name: name.into(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Appends a row; its length must match the header.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.header.len(), "row width of table {}", self.name);
        self.rows.push(row);
    }

    /// Index of a column by header name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    /// Real values of a column (non-real cells are skipped).
    pub fn reals(&self, name: &str) -> Vec<f64> {
        let Some(c) = self.column(name) else {
            return Vec::new();
        };
        self.rows
            .iter()
            .filter_map(|r| match r[c] {
                Cell::Real(v) => Some(v),
                Cell::Int(v) => Some(v as f64),
                Cell::Text(_) => None,
            })
            .collect()
    }

    /// The table rendered as CSV.
    pub fn to_csv(&self) -> Result<Vec<u8>> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        w.into_inner().context("flushing CSV buffer")
    }
}

/// File names for a command's tables: the first goes to `primary`, the
/// others next to it as `<stem>_<name>.csv`.
pub fn command_paths(primary: &Path, tables: &[Table]) -> Vec<PathBuf> {
    let stem = primary
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("out")
        .to_string();
    let dir = primary.parent().map(Path::to_path_buf).unwrap_or_default();
    tables
        .iter()
        .enumerate()
        .map(|(i, t)| {
            if i == 0 {
                primary.to_path_buf()
            } else {
                dir.join(format!("{stem}_{}.csv", t.name))
            }
        })
        .collect()
}

/// File names `<dir>/<stem>_<name>.csv` for every table.
pub fn bundle_paths(dir: &Path, stem: &str, tables: &[Table]) -> Vec<PathBuf> {
    tables
        .iter()
        .map(|t| dir.join(format!("{stem}_{}.csv", t.name)))
        .collect()
}

/// Writes every table to its path atomically as a group: all contents are
/// first written to temporary files in the target directories, and only
/// when every write succeeded are they renamed into place.
pub fn write_all(tables: &[Table], paths: &[PathBuf]) -> Result<()> {
    assert_eq!(tables.len(), paths.len());
    let mut staged = Vec::with_capacity(tables.len());
    let result = (|| -> Result<()> {
        for (table, path) in tables.iter().zip(paths) {
            let bytes = table.to_csv()?;
            let dir = path
                .parent()
                .filter(|d| !d.as_os_str().is_empty())
                .unwrap_or(Path::new("."));
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let name = path
                .file_name()
                .and_then(|s| s.to_str())
                .context("output path has no file name")?;
            let tmp = dir.join(format!(".{name}.partial"));
            fs::write(&tmp, bytes).with_context(|| format!("writing {}", tmp.display()))?;
            staged.push((tmp, path.clone()));
        }
        Ok(())
    })();
    if let Err(e) = result {
        for (tmp, _) in &staged {
            let _ = fs::remove_file(tmp);
        }
        return Err(e);
    }
    for (tmp, path) in &staged {
        fs::rename(tmp, path).with_context(|| format!("moving output into {}", path.display()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_full_precision() {
        let mut t = Table::new("t", &["a", "b", "c"]);
        t.push(vec![0.1.into(), 3usize.into(), "x".into()]);
        let s = String::from_utf8(t.to_csv().unwrap()).unwrap();
        assert_eq!(s, "a,b,c\n1.0000000000000001e-1,3,x\n");
        assert_eq!(t.reals("a"), vec![0.1]);
    }

    #[test]
    fn secondary_tables_get_suffixes() {
        let tables = vec![Table::new("main", &["a"]), Table::new("fits", &["a"])];
        let paths = command_paths(Path::new("out/run.csv"), &tables);
        assert_eq!(paths[0], PathBuf::from("out/run.csv"));
        assert_eq!(paths[1], PathBuf::from("out/run_fits.csv"));
    }
}
