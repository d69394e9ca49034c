//! Extracted count tables and their CSV/JSON renderings.

use std::io::{self, Write};

use num_bigint::BigInt;
use serde::Serialize;

use crate::coeff::CoeffMode;
use crate::error::Result;
use crate::series::Series;

/// Rows `(n, m, p, count)` of a family: `n` vertices, `m` edges, `p` marked
/// features. Numeric-mode tables carry only `(n, count)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTable {
    pub family: String,
    pub mode: String,
    pub order: u32,
    pub track_m: bool,
    pub track_p: bool,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: u32,
    pub m: Option<u32>,
    pub p: Option<u32>,
    pub count: BigInt,
}

impl FamilyTable {
    pub fn count_at(&self, n: u32, m: Option<u32>, p: Option<u32>) -> BigInt {
        self.rows
            .iter()
            .find(|r| r.n == n && r.m == m && r.p == p)
            .map(|r| r.count.clone())
            .unwrap_or_default()
    }

    /// Sum of counts over `m` and `p` for one `n`.
    pub fn total_at(&self, n: u32) -> BigInt {
        self.rows
            .iter()
            .filter(|r| r.n == n)
            .map(|r| r.count.clone())
            .sum()
    }
}

/// Read the family counts out of a series.
///
/// In Polynomial mode each nonzero term of `c_n` yields one row, keyed by
/// its `w` exponent (edge count) and, when `track_p` is set, its `u`
/// exponent. In Numeric mode the coefficient itself is the count. A zero
/// coefficient still yields one explicit zero row so every `n` appears.
pub fn extract_table(series: &Series, family: &str, track_p: bool) -> Result<FamilyTable> {
    let numeric = series.mode().is_numeric();
    let mut rows = Vec::new();
    for n in 0..=series.order() {
        let c = series.coeff(n);
        if numeric {
            rows.push(TableRow {
                n: n as u32,
                m: None,
                p: None,
                count: c.constant_value().expect("numeric-mode coefficients are constants"),
            });
        } else if c.is_zero() {
            rows.push(TableRow {
                n: n as u32,
                m: Some(0),
                p: if track_p { Some(0) } else { None },
                count: BigInt::from(0),
            });
        } else {
            for (&(e_w, e_u), count) in c.terms() {
                debug_assert!(track_p || e_u == 0, "untracked marker exponent in {family}");
                rows.push(TableRow {
                    n: n as u32,
                    m: Some(e_w),
                    p: if track_p { Some(e_u) } else { None },
                    count: count.clone(),
                });
            }
        }
    }
    rows.sort_by_key(|r| (r.n, r.m, r.p));
    Ok(FamilyTable {
        family: family.to_string(),
        mode: match series.mode() {
            CoeffMode::Polynomial => "poly".to_string(),
            CoeffMode::Numeric { .. } => "numeric".to_string(),
        },
        order: series.order() as u32,
        track_m: !numeric,
        track_p: track_p && !numeric,
        rows,
    })
}

pub fn write_csv(table: &FamilyTable, out: &mut dyn Write) -> io::Result<()> {
    let mut header = vec!["n"];
    if table.track_m {
        header.push("m");
    }
    if table.track_p {
        header.push("p");
    }
    header.push("count");
    writeln!(out, "{}", header.join(","))?;
    for row in &table.rows {
        let mut fields = vec![row.n.to_string()];
        if table.track_m {
            fields.push(row.m.unwrap_or(0).to_string());
        }
        if table.track_p {
            fields.push(row.p.unwrap_or(0).to_string());
        }
        fields.push(row.count.to_string());
        writeln!(out, "{}", fields.join(","))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonTable<'a> {
    family: &'a str,
    mode: &'a str,
    order: u32,
    rows: Vec<JsonRow>,
}

#[derive(Serialize)]
struct JsonRow {
    n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u32>,
    count: String,
}

pub fn write_json(table: &FamilyTable, out: &mut dyn Write) -> io::Result<()> {
    let doc = JsonTable {
        family: &table.family,
        mode: &table.mode,
        order: table.order,
        rows: table
            .rows
            .iter()
            .map(|r| JsonRow {
                n: r.n,
                m: if table.track_m { r.m } else { None },
                p: if table.track_p { r.p } else { None },
                count: r.count.to_string(),
            })
            .collect(),
    };
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)
}
