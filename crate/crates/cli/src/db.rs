//! Known Calabi-Yau invariants, read from a TSV file with the header
//! `H3\tHc2\th11\th12\tlabel`.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use thiserror::Error;

pub const DB_HEADER: &str = "H3\tHc2\th11\th12\tlabel";

#[derive(Debug, Error)]
pub enum DbError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// `(H^3, H.c_2, h^{1,1}, h^{1,2})`
pub type Tuple = (i64, i64, i64, i64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownEntry {
    pub h_y_cubed: i64,
    pub h_c2: i64,
    pub h11: i64,
    pub h12: i64,
    pub label: String,
}

impl KnownEntry {
    pub fn tuple(&self) -> Tuple {
        (self.h_y_cubed, self.h_c2, self.h11, self.h12)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnownCyDatabase {
    entries: Vec<KnownEntry>,
    index: HashMap<Tuple, usize>,
}

impl KnownCyDatabase {
    pub fn load(path: &Path) -> Result<Self, DbError> {
        let text = std::fs::read_to_string(path).map_err(|source| DbError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Parses the file contents. Line numbers in errors are 1-based and
    /// count the header. Blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, DbError> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h == DB_HEADER => {}
            Some((_, h)) => {
                return Err(DbError::Parse {
                    line: 1,
                    msg: format!("expected header {DB_HEADER:?}, found {h:?}"),
                })
            }
            None => {
                return Err(DbError::Parse {
                    line: 1,
                    msg: "missing header".into(),
                })
            }
        }
        let mut db = KnownCyDatabase::default();
        for (i, line) in lines {
            let lineno = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let err = |msg: String| DbError::Parse { line: lineno, msg };
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 5 {
                return Err(err(format!(
                    "expected 5 tab-separated fields, found {}",
                    fields.len()
                )));
            }
            let mut nums = [0i64; 4];
            for (slot, (name, tok)) in nums
                .iter_mut()
                .zip(["H3", "Hc2", "h11", "h12"].into_iter().zip(&fields))
            {
                *slot = tok
                    .parse()
                    .map_err(|_| err(format!("{name} '{tok}' is not an integer")))?;
            }
            let [h_y_cubed, h_c2, h11, h12] = nums;
            if h_y_cubed < 1 {
                return Err(err(format!("H3 = {h_y_cubed} must be at least 1")));
            }
            if h11 < 1 {
                return Err(err(format!("h11 = {h11} must be at least 1")));
            }
            let entry = KnownEntry {
                h_y_cubed,
                h_c2,
                h11,
                h12,
                label: fields[4].to_string(),
            };
            db.insert(entry).map_err(err)?;
        }
        Ok(db)
    }

    fn insert(&mut self, entry: KnownEntry) -> Result<(), String> {
        let t = entry.tuple();
        if let Some(&prev) = self.index.get(&t) {
            return Err(format!(
                "duplicate tuple {t:?} (already listed as '{}')",
                self.entries[prev].label
            ));
        }
        self.index.insert(t, self.entries.len());
        self.entries.push(entry);
        Ok(())
    }

    pub fn entries(&self) -> &[KnownEntry] {
        &self.entries
    }

    pub fn lookup(&self, t: Tuple) -> Option<&KnownEntry> {
        self.index.get(&t).map(|&i| &self.entries[i])
    }
}
