//! Deterministic table emitters for the named coefficient families.
//!
//! Output is bit-stable: fixed row order, LF line endings, and exact
//! integer literals. Polynomial-valued cells use the polynomial JSON
//! encoding; in CSV they are quoted per the usual escaping rules.

use std::str::FromStr;

use super::identities::{gamma2_row, hatgamma2_row};
use super::{Budget, VerifyError};
use crate::cfrac::{family_derange_big_d, family_derange_small_d, jf_moments};
use crate::perm::{class_de, linear_stats, pattern_stats};
use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    GammaQ,
    InvDe,
    Gamma2,
    HatGamma2,
    DPoly,
    SmallDPoly,
}

impl FromStr for TableName {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, VerifyError> {
        match s {
            "gamma_q" => Ok(TableName::GammaQ),
            "inv_DE" => Ok(TableName::InvDe),
            "gamma2" => Ok(TableName::Gamma2),
            "hatgamma2" => Ok(TableName::HatGamma2),
            "D_poly" => Ok(TableName::DPoly),
            "d_poly" => Ok(TableName::SmallDPoly),
            other => Err(VerifyError::UnknownIdentity(other.to_string())),
        }
    }
}

impl TableName {
    pub fn as_str(&self) -> &'static str {
        match self {
            TableName::GammaQ => "gamma_q",
            TableName::InvDe => "inv_DE",
            TableName::Gamma2 => "gamma2",
            TableName::HatGamma2 => "hatgamma2",
            TableName::DPoly => "D_poly",
            TableName::SmallDPoly => "d_poly",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, VerifyError> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(VerifyError::UnknownIdentity(other.to_string())),
        }
    }
}

enum Cell {
    Int(num_bigint::BigInt),
    Poly(IntPoly),
}

impl Cell {
    fn json(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Poly(p) => p.to_json("q"),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Poly(p) => {
                let raw = p.to_json("q");
                format!("\"{}\"", raw.replace('"', "\"\""))
            }
        }
    }
}

struct Table {
    name: &'static str,
    first_n: usize,
    rows: Vec<Vec<Cell>>,
}

/// Emits one named table for `n = first..=n_max` as CSV or JSON.
pub fn emit_table(
    name: TableName,
    n_max: usize,
    r: u32,
    format: TableFormat,
    budget: &Budget,
) -> Result<String, VerifyError> {
    let table = build(name, n_max, r, budget)?;
    Ok(match format {
        TableFormat::Json => render_json(&table),
        TableFormat::Csv => render_csv(&table),
    })
}

fn build(name: TableName, n_max: usize, r: u32, budget: &Budget) -> Result<Table, VerifyError> {
    match name {
        TableName::GammaQ => {
            budget.check_sn(n_max)?;
            let mut rows = Vec::new();
            for n in 1..=n_max {
                let mut by_k: Vec<Vec<u64>> = vec![Vec::new(); (n - 1) / 2 + 1];
                for sigma in crate::perm::permutations(n) {
                    if crate::perm::dd_sigma0(&sigma) == 0 {
                        let ls = linear_stats(&sigma);
                        let ps = pattern_stats(&sigma);
                        let e = 2 * ps.res + ps.les;
                        let row = &mut by_k[ls.des];
                        if row.len() <= e {
                            row.resize(e + 1, 0);
                        }
                        row[e] += 1;
                    }
                }
                rows.push(
                    by_k.into_iter()
                        .map(|counts| {
                            Cell::Poly(IntPoly::from_coeffs(
                                counts.iter().map(|&c| num_bigint::BigInt::from(c)).collect(),
                            ))
                        })
                        .collect(),
                );
            }
            Ok(Table { name: "gamma_q", first_n: 1, rows })
        }
        TableName::InvDe => {
            budget.check_sn(n_max)?;
            let mut rows = Vec::new();
            for n in 0..=n_max {
                let mut entries = Vec::new();
                for k in 0..=n / 2 {
                    let mut counts = Vec::new();
                    for sigma in class_de(n, k) {
                        let e = linear_stats(&sigma).inv;
                        if counts.len() <= e {
                            counts.resize(e + 1, 0u64);
                        }
                        counts[e] += 1;
                    }
                    entries.push(Cell::Poly(IntPoly::from_coeffs(
                        counts.iter().map(|&c| num_bigint::BigInt::from(c)).collect(),
                    )));
                }
                rows.push(entries);
            }
            Ok(Table { name: "inv_DE", first_n: 0, rows })
        }
        TableName::Gamma2 => {
            budget.check_sn(n_max)?;
            let rows = (0..=n_max)
                .map(|n| gamma2_row(n).into_iter().map(Cell::Int).collect())
                .collect();
            Ok(Table { name: "gamma2", first_n: 0, rows })
        }
        TableName::HatGamma2 => {
            budget.check_sn(n_max)?;
            let rows = (0..=n_max)
                .map(|n| hatgamma2_row(n).into_iter().map(Cell::Int).collect())
                .collect();
            Ok(Table { name: "hatgamma2", first_n: 0, rows })
        }
        TableName::DPoly | TableName::SmallDPoly => {
            // continued-fraction route; no enumeration budget applies
            let big = matches!(name, TableName::DPoly);
            let family = if big {
                family_derange_big_d(r, n_max / 2 + 1)
            } else {
                family_derange_small_d(r, n_max / 2 + 1)
            };
            let moments = jf_moments(&family, n_max)
                .map_err(|e| VerifyError::UnknownIdentity(e.to_string()))?;
            let rows = moments
                .iter()
                .map(|p| {
                    let deg = p.degree().unwrap_or(0);
                    (0..=deg).map(|k| Cell::Int(p.coeff(k))).collect()
                })
                .collect();
            Ok(Table { name: if big { "D_poly" } else { "d_poly" }, first_n: 0, rows })
        }
    }
}

fn render_json(t: &Table) -> String {
    let rows: Vec<String> = t
        .rows
        .iter()
        .enumerate()
        .map(|(i, cells)| {
            let entries: Vec<String> = cells.iter().map(Cell::json).collect();
            format!("{{\"n\":{},\"entries\":[{}]}}", t.first_n + i, entries.join(","))
        })
        .collect();
    format!("{{\"table\":\"{}\",\"rows\":[{}]}}\n", t.name, rows.join(","))
}

fn render_csv(t: &Table) -> String {
    let width = t.rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::from("n");
    for k in 0..width {
        out.push_str(&format!(",k{k}"));
    }
    out.push('\n');
    for (i, cells) in t.rows.iter().enumerate() {
        out.push_str(&(t.first_n + i).to_string());
        for k in 0..width {
            out.push(',');
            if let Some(c) = cells.get(k) {
                out.push_str(&c.csv());
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::data;

    #[test]
    fn gamma2_table_rows() {
        let budget = Budget::default();
        let out = emit_table(TableName::Gamma2, 6, 1, TableFormat::Csv, &budget).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "n,k0,k1,k2,k3,k4,k5,k6");
        assert_eq!(lines[7], "6,0,1,53,184,95,15,1");
    }

    #[test]
    fn hatgamma2_row6() {
        let budget = Budget::default();
        let out = emit_table(TableName::HatGamma2, 6, 1, TableFormat::Csv, &budget).unwrap();
        assert!(out.lines().last().unwrap().starts_with("6,0,1,63,648,2551,4379,2763"));
    }

    #[test]
    fn d_poly_row4_matches_listing() {
        let budget = Budget::default();
        let out = emit_table(TableName::DPoly, 4, 2, TableFormat::Csv, &budget).unwrap();
        assert_eq!(out.lines().last().unwrap(), "4,0,1,15,57,87,57,15,1");
        let want = data::d_big_r2_list();
        assert_eq!(want[4].coeffs().len(), 8);
    }

    #[test]
    fn json_shape_and_unknown_names() {
        let budget = Budget::default();
        let out = emit_table(TableName::Gamma2, 2, 1, TableFormat::Json, &budget).unwrap();
        assert_eq!(out, "{\"table\":\"gamma2\",\"rows\":[{\"n\":0,\"entries\":[1]},{\"n\":1,\"entries\":[0,1]},{\"n\":2,\"entries\":[0,1,1]}]}\n");
        assert!("nope".parse::<TableName>().is_err());
        assert!("csv".parse::<TableFormat>().is_ok());
    }

    #[test]
    fn gamma_q_csv_quotes_polynomials() {
        let budget = Budget::default();
        let out = emit_table(TableName::GammaQ, 3, 1, TableFormat::Csv, &budget).unwrap();
        let row3 = out.lines().nth(3).unwrap();
        assert!(row3.contains("\"{\"\"var\"\":\"\"q\"\""), "row: {row3}");
    }
}
