//! Regeneration of the reference tables: first elements and densities of
//! `S_k` and `T_k`, and the `4t + 1` bounds for products of squared paths.
//!
//! Rows are always recomputed from the generators; the embedded reference
//! copies below are used only by [`diff_against_reference`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::construct::two_grid_colour_bound;
use crate::sidon::{density, first_elements, SetKind, SidonError, SmallPrimes};

/// Number of leading elements listed per row.
pub const ROW_LENGTH: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableId {
    S,
    T,
    Grid,
}

impl FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "s" => Ok(TableId::S),
            "t" => Ok(TableId::T),
            "grid" => Ok(TableId::Grid),
            other => Err(format!("unknown table {other:?}; expected s, t or grid")),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableId::S => "s",
            TableId::T => "t",
            TableId::Grid => "grid",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// Values of `k` sharing this row (for the grid table, the single `d`).
    pub keys: Vec<u64>,
    pub label: String,
    pub elements: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density_approx: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub table_id: TableId,
    pub rows: Vec<TableRow>,
}

fn label_for(keys: &[u64]) -> String {
    match keys {
        [first, _, _, .., last] => format!("{first}..{last}"),
        short => short
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(","),
    }
}

/// Rows for `k` in `k_min..=k_max`, merging consecutive `k` that define the same set.
fn sidon_rows(kind: SetKind, k_min: u64, k_max: u64) -> Result<Vec<TableRow>, SidonError> {
    let mut rows: Vec<TableRow> = Vec::new();
    let mut last_key: Option<(Vec<u64>, Vec<u32>)> = None;
    for k in k_min.max(1)..=k_max {
        let small = SmallPrimes::new(k);
        let key = match kind {
            SetKind::T => (small.primes().to_vec(), small.alphas().to_vec()),
            _ => (small.primes().to_vec(), Vec::new()),
        };
        if last_key.as_ref() == Some(&key) {
            if let Some(row) = rows.last_mut() {
                row.keys.push(k);
                row.label = label_for(&row.keys);
            }
            continue;
        }
        last_key = Some(key);
        let dens = density(kind, k)?;
        rows.push(TableRow {
            keys: vec![k],
            label: k.to_string(),
            elements: first_elements(kind, k, ROW_LENGTH)?.elements().to_vec(),
            density: Some(dens.to_string()),
            density_approx: Some(format!("{:.6}", dens.to_f64())),
            bound: None,
        });
    }
    Ok(rows)
}

pub fn reproduce_s_table(k_min: u64, k_max: u64) -> Result<TableReport, SidonError> {
    Ok(TableReport {
        table_id: TableId::S,
        rows: sidon_rows(SetKind::S, k_min, k_max)?,
    })
}

pub fn reproduce_t_table(k_min: u64, k_max: u64) -> Result<TableReport, SidonError> {
    Ok(TableReport {
        table_id: TableId::T,
        rows: sidon_rows(SetKind::T, k_min, k_max)?,
    })
}

/// `4t + 1` for `d = 1..=d_max`, `t` the `d`-th smallest element of `T_2`.
pub fn reproduce_grid_table(d_max: usize) -> Result<TableReport, SidonError> {
    let t2 = first_elements(SetKind::T, 2, d_max)?;
    let rows = (1..=d_max)
        .map(|d| {
            Ok(TableRow {
                keys: vec![d as u64],
                label: d.to_string(),
                elements: vec![t2.elements()[d - 1]],
                density: None,
                density_approx: None,
                bound: Some(two_grid_colour_bound(d)?),
            })
        })
        .collect::<Result<Vec<_>, SidonError>>()?;
    Ok(TableReport {
        table_id: TableId::Grid,
        rows,
    })
}

/// Default ranges: `k <= 30` for `S`, `k <= 15` for `T`, `d <= 15` for the grid.
pub fn reproduce(table: TableId) -> Result<TableReport, SidonError> {
    match table {
        TableId::S => reproduce_s_table(2, 30),
        TableId::T => reproduce_t_table(2, 15),
        TableId::Grid => reproduce_grid_table(15),
    }
}

impl TableReport {
    /// One line per row: `label,elements,density,bound` with space-separated elements.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("key,elements,density,bound\n");
        for row in &self.rows {
            let elements: Vec<String> = row.elements.iter().map(u64::to_string).collect();
            out.push_str(&format!(
                "\"{}\",{},{},{}\n",
                row.label,
                elements.join(" "),
                row.density.as_deref().unwrap_or(""),
                row.bound.map(|b| b.to_string()).unwrap_or_default()
            ));
        }
        out
    }
}

struct ReferenceRow {
    keys: &'static [u64],
    elements: &'static [u64],
    density: &'static str,
}

const S_REFERENCE: &[ReferenceRow] = &[
    ReferenceRow {
        keys: &[2],
        elements: &[1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29],
        density: "1/2",
    },
    ReferenceRow {
        keys: &[3, 4],
        elements: &[1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35, 37, 41, 43],
        density: "1/3",
    },
    ReferenceRow {
        keys: &[5, 6],
        elements: &[1, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 49, 53],
        density: "4/15",
    },
    ReferenceRow {
        keys: &[7, 8, 9, 10],
        elements: &[1, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61],
        density: "8/35",
    },
    ReferenceRow {
        keys: &[11, 12],
        elements: &[1, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67],
        density: "16/77",
    },
    ReferenceRow {
        keys: &[13, 14, 15, 16],
        elements: &[1, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71],
        density: "192/1001",
    },
    ReferenceRow {
        keys: &[17, 18],
        elements: &[1, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73],
        density: "3072/17017",
    },
    ReferenceRow {
        keys: &[19, 20, 21, 22],
        elements: &[1, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79],
        density: "55296/323323",
    },
    ReferenceRow {
        keys: &[23, 24, 25, 26, 27, 28],
        elements: &[1, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83],
        density: "110592/676039",
    },
    ReferenceRow {
        keys: &[29, 30],
        elements: &[1, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89],
        density: "442368/2800733",
    },
];

const T_REFERENCE: &[ReferenceRow] = &[
    ReferenceRow {
        keys: &[2],
        elements: &[1, 3, 4, 5, 7, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21],
        density: "2/3",
    },
    ReferenceRow {
        keys: &[3],
        elements: &[1, 4, 5, 7, 9, 11, 13, 16, 17, 19, 20, 23, 25, 28, 29],
        density: "1/2",
    },
    ReferenceRow {
        keys: &[4],
        elements: &[1, 5, 7, 8, 9, 11, 13, 17, 19, 23, 25, 29, 31, 35, 37],
        density: "3/7",
    },
    ReferenceRow {
        keys: &[5, 6],
        elements: &[1, 7, 8, 9, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43],
        density: "5/14",
    },
    ReferenceRow {
        keys: &[7],
        elements: &[1, 8, 9, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47],
        density: "5/16",
    },
    ReferenceRow {
        keys: &[8],
        elements: &[1, 9, 11, 13, 16, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47],
        density: "7/24",
    },
    ReferenceRow {
        keys: &[9, 10],
        elements: &[1, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47],
        density: "7/26",
    },
    ReferenceRow {
        keys: &[11, 12],
        elements: &[1, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49],
        density: "77/312",
    },
    ReferenceRow {
        keys: &[13, 14, 15],
        elements: &[1, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49, 53],
        density: "11/48",
    },
];

const GRID_REFERENCE: &[u64] = &[5, 13, 17, 21, 29, 37, 45, 49, 53, 61, 65, 69, 77, 81, 85];

/// One cell that differs from the reference copy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub key: u64,
    pub field: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "key {} {}: expected {}, got {}",
            self.key, self.field, self.expected, self.actual
        )
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Compares every key covered by both the report and the reference copy.
///
/// Grouping is compared only when the report spans the whole reference row.
pub fn diff_against_reference(report: &TableReport) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let reference = match report.table_id {
        TableId::S => S_REFERENCE,
        TableId::T => T_REFERENCE,
        TableId::Grid => {
            for row in &report.rows {
                let d = row.keys[0];
                let Some(&expected) = GRID_REFERENCE.get(d as usize - 1) else {
                    continue;
                };
                if row.bound != Some(expected) {
                    out.push(Mismatch {
                        key: d,
                        field: "bound".into(),
                        expected: expected.to_string(),
                        actual: row.bound.map(|b| b.to_string()).unwrap_or_default(),
                    });
                }
            }
            return out;
        }
    };
    let covered: Vec<u64> = report.rows.iter().flat_map(|r| r.keys.clone()).collect();
    for row in &report.rows {
        for &k in &row.keys {
            let Some(refrow) = reference.iter().find(|r| r.keys.contains(&k)) else {
                continue;
            };
            if row.elements != refrow.elements {
                out.push(Mismatch {
                    key: k,
                    field: "elements".into(),
                    expected: join(refrow.elements),
                    actual: join(&row.elements),
                });
            }
            let actual_density = row.density.clone().unwrap_or_default();
            if actual_density != refrow.density {
                out.push(Mismatch {
                    key: k,
                    field: "density".into(),
                    expected: refrow.density.to_string(),
                    actual: actual_density,
                });
            }
            let whole_row_covered = refrow.keys.iter().all(|key| covered.contains(key));
            if whole_row_covered && k == row.keys[0] && row.keys != refrow.keys {
                out.push(Mismatch {
                    key: k,
                    field: "grouping".into(),
                    expected: join(refrow.keys),
                    actual: join(&row.keys),
                });
            }
        }
    }
    out
}
