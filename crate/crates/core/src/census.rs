//! Exhaustive sweeps of `Q(y, x)` over a finite field.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::order::{q_order, q_order_bruteforce};
use crate::pascal::q_matrix;
use crate::scalar::{OrderResult, SearchResult};
use crate::spectral::{diagonalizable_oracle, is_diagonalizable, require_dimension};

/// Independent results attached to a row when a census is verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub oracle_order: SearchResult,
    pub oracle_diagonalizable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub y: FieldElement,
    pub x: FieldElement,
    pub order: OrderResult,
    pub diagonalizable: bool,
    pub check: Option<RowCheck>,
}

impl CensusRow {
    /// False only for a verified row whose oracles disagree with the formulas.
    pub fn consistent(&self) -> bool {
        self.check.as_ref().is_none_or(|c| {
            c.oracle_order.agrees_with(self.order) && c.oracle_diagonalizable == self.diagonalizable
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub field: Field,
    pub n: usize,
    pub rows: Vec<CensusRow>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CensusOptions {
    /// Also run the brute-force order search and the rank-based
    /// diagonalizability check on every row.
    pub verify: bool,
    /// Search budget for verification; `None` uses [`crate::order::default_cap`].
    pub cap: Option<u64>,
}

/// One row per `(y, x)` with `x ≠ 0`, sorted by the canonical indices of
/// `y` then `x`. Rows are computed on the current rayon pool; the output
/// does not depend on its size.
pub fn run_census(field: &Field, n: usize, options: CensusOptions) -> Result<Census> {
    if !field.is_finite() {
        return Err(Error::InfiniteField);
    }
    require_dimension(n)?;
    let elements = field.elements()?;
    let cap = options
        .cap
        .unwrap_or_else(|| crate::order::default_cap::<FieldElement>(field, n));
    let pairs: Vec<(&FieldElement, &FieldElement)> = elements
        .iter()
        .flat_map(|y| elements.iter().skip(1).map(move |x| (y, x)))
        .collect();
    let mut rows = pairs
        .into_par_iter()
        .map(|(y, x)| census_row(y, x, n, options.verify, cap))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.y.canonical_index(), r.x.canonical_index()));
    Ok(Census {
        field: field.clone(),
        n,
        rows,
    })
}

fn census_row(
    y: &FieldElement,
    x: &FieldElement,
    n: usize,
    verify: bool,
    cap: u64,
) -> Result<CensusRow> {
    let check = if verify {
        Some(RowCheck {
            oracle_order: q_order_bruteforce(y, x, n, cap)?,
            oracle_diagonalizable: diagonalizable_oracle(&q_matrix(y, x, n)?)?,
        })
    } else {
        None
    };
    Ok(CensusRow {
        y: y.clone(),
        x: x.clone(),
        order: q_order(y, x, n)?,
        diagonalizable: is_diagonalizable(y, x, n)?,
        check,
    })
}

#[derive(Serialize)]
struct JsonRow {
    y: String,
    x: String,
    order: serde_json::Value,
    diagonalizable: bool,
}

#[derive(Serialize)]
struct JsonCensus {
    field: String,
    n: usize,
    rows: Vec<JsonRow>,
}

fn order_value(order: OrderResult) -> serde_json::Value {
    match order {
        OrderResult::Finite(m) => m.into(),
        OrderResult::Infinite => "infinite".into(),
    }
}

impl Census {
    pub fn mismatches(&self) -> impl Iterator<Item = &CensusRow> {
        self.rows.iter().filter(|r| !r.consistent())
    }

    /// Header `field,n,y,x,order,diagonalizable`; fields containing commas
    /// (extension elements) are quoted.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let field = self.field.to_string();
        let n = self.n.to_string();
        w.write_record(["field", "n", "y", "x", "order", "diagonalizable"])
            .expect("write to memory");
        for r in &self.rows {
            w.write_record([
                field.as_str(),
                n.as_str(),
                &r.y.to_string(),
                &r.x.to_string(),
                &r.order.to_string(),
                if r.diagonalizable { "true" } else { "false" },
            ])
            .expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 output")
    }

    pub fn to_json(&self) -> String {
        let doc = JsonCensus {
            field: self.field.to_string(),
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| JsonRow {
                    y: r.y.to_string(),
                    x: r.x.to_string(),
                    order: order_value(r.order),
                    diagonalizable: r.diagonalizable,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable census") + "\n"
    }

    pub fn to_table(&self) -> String {
        let cells: Vec<[String; 4]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.y.to_string(),
                    r.x.to_string(),
                    r.order.to_string(),
                    r.diagonalizable.to_string(),
                ]
            })
            .collect();
        let header = ["y", "x", "order", "diagonalizable"];
        let widths: Vec<usize> = (0..4)
            .map(|c| {
                cells
                    .iter()
                    .map(|row| row[c].len())
                    .chain([header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = format!("field {}  n = {}\n", self.field, self.n);
        let line = |out: &mut String, row: [&str; 4]| {
            let padded: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect();
            writeln!(out, "{}", padded.join("  ").trim_end()).expect("write to string");
        };
        line(&mut out, header);
        for row in &cells {
            line(&mut out, [&row[0], &row[1], &row[2], &row[3]]);
        }
        out
    }
}
