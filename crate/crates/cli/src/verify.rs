//! Recomputes every table entry from scratch and diffs it against the
//! embedded fixtures, decimal-string exact.

use num_bigint::BigUint;
use std::str::FromStr;

use qmersenne_core::mersenne;
use qmersenne_core::quadform;
use qmersenne_core::units;
use qmersenne_core::{FieldCtx, QuadInt};

use crate::fixtures::{Fixtures, NormTable, UnitTable};

/// One recomputed cell compared against its fixture.
#[derive(Debug, Clone)]
pub struct CellCheck {
    pub cell: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

fn cell(name: String, expected: &str, got: String) -> CellCheck {
    CellCheck {
        pass: expected == got,
        cell: name,
        expected: expected.to_string(),
        got,
    }
}

fn alpha_two_plus_sqrt2() -> QuadInt {
    let field = FieldCtx::new(2).expect("d = 2");
    QuadInt::new(field, 2, 1, 1).expect("2+\u{221a}2")
}

fn verify_table1(fx: &Fixtures, out: &mut Vec<CellCheck>) {
    let alpha = alpha_two_plus_sqrt2();
    out.push(cell(
        "table1.alpha".into(),
        &fx.table1.alpha,
        alpha.to_string(),
    ));
    for row in &fx.table1.rows {
        let name = format!("table1[p={}]", row.p);
        match mersenne::mersenne_element(&alpha, row.p) {
            Ok(m) => {
                out.push(cell(format!("{name}.m"), &row.m, m.to_string()));
                out.push(cell(
                    format!("{name}.norm"),
                    &row.norm,
                    m.norm().magnitude().to_string(),
                ));
            }
            Err(e) => out.push(cell(format!("{name}.m"), &row.m, format!("error: {e}"))),
        }
    }
    for row in &fx.table1.giant_norms {
        let got = mersenne::norm_closed_form(row.p)
            .map(|n| n.to_string())
            .unwrap_or_else(|e| format!("error: {e}"));
        out.push(cell(format!("table1[p={}].norm", row.p), &row.norm, got));
    }
}

fn verify_unit_table(table_no: u8, fx: &UnitTable, out: &mut Vec<CellCheck>) {
    for row in &fx.rows {
        let name = format!("table{table_no}[d={}]", row.d);
        let field = match FieldCtx::new(row.d) {
            Ok(f) => f,
            Err(e) => {
                out.push(cell(format!("{name}.u"), &row.u, format!("error: {e}")));
                continue;
            }
        };
        let unit = units::fundamental_unit(&field);
        out.push(cell(format!("{name}.u"), &row.u, unit.value().to_string()));
        out.push(cell(
            format!("{name}.unit_norm"),
            &fx.unit_norm.to_string(),
            i64::from(unit.norm_sign()).to_string(),
        ));
        match mersenne::classify_alpha(&field, &unit) {
            Ok(choice) => {
                out.push(cell(format!("{name}.alpha"), &row.alpha, choice.alpha.to_string()));
                out.push(cell(
                    format!("{name}.alpha_norm"),
                    &row.alpha_norm,
                    choice.alpha_norm.to_string(),
                ));
            }
            Err(e) => out.push(cell(format!("{name}.alpha"), &row.alpha, format!("error: {e}"))),
        }
    }
}

fn verify_norm_table(table_no: u8, fx: &NormTable, out: &mut Vec<CellCheck>) {
    let field = match FieldCtx::new(fx.d) {
        Ok(f) => f,
        Err(e) => {
            out.push(cell(
                format!("table{table_no}.d"),
                &fx.d.to_string(),
                format!("error: {e}"),
            ));
            return;
        }
    };
    let unit = units::fundamental_unit(&field);
    let alpha = field
        .one()
        .checked_add(unit.value())
        .expect("same field");
    for row in &fx.rows {
        let got = mersenne::mersenne_norm(&alpha, row.p)
            .map(|n| n.to_string())
            .unwrap_or_else(|e| format!("error: {e}"));
        out.push(cell(
            format!("table{table_no}[p={}].norm", row.p),
            &row.norm,
            got,
        ));
    }
}

fn verify_table7(fx: &Fixtures, out: &mut Vec<CellCheck>) {
    let alpha = alpha_two_plus_sqrt2();
    for row in fx.table7.rows.iter().chain(fx.table7.giant_rows.iter()) {
        let name = format!("table7[p={}]", row.p);
        let norm = match mersenne::mersenne_norm(&alpha, row.p) {
            Ok(n) => n,
            Err(e) => {
                out.push(cell(format!("{name}.norm"), &row.norm, format!("error: {e}")));
                continue;
            }
        };
        out.push(cell(format!("{name}.norm"), &row.norm, norm.to_string()));
        match quadform::cornacchia7(&norm) {
            Ok(Some(rep)) => {
                out.push(cell(format!("{name}.x"), &row.x, rep.x.to_string()));
                out.push(cell(format!("{name}.y"), &row.y, rep.y.to_string()));
                let report = quadform::structure_check(&rep);
                out.push(cell(
                    format!("{name}.structure"),
                    "x\u{2261}0(8), y\u{2261}\u{b1}3(8), N\u{2261}\u{2212}1(16)",
                    if report.all_pass() {
                        "x\u{2261}0(8), y\u{2261}\u{b1}3(8), N\u{2261}\u{2212}1(16)".to_string()
                    } else {
                        format!("{report:?}")
                    },
                ));
                // re-multiplication guard against fixture typos
                let x = BigUint::from_str(&row.x).unwrap_or_default();
                let y = BigUint::from_str(&row.y).unwrap_or_default();
                let reconstructed = (&x * &x + 7u8 * &y * &y).to_string();
                out.push(cell(format!("{name}.x2_plus_7y2"), &row.norm, reconstructed));
            }
            Ok(None) => out.push(cell(
                format!("{name}.x"),
                &row.x,
                "error: not representable".into(),
            )),
            Err(e) => out.push(cell(format!("{name}.x"), &row.x, format!("error: {e}"))),
        }
    }
}

/// Recomputes one table; returns a check per cell.
pub fn verify_table(fx: &Fixtures, table: u8) -> Vec<CellCheck> {
    let mut out = Vec::new();
    match table {
        1 => verify_table1(fx, &mut out),
        2 => verify_unit_table(2, &fx.table2, &mut out),
        3 => verify_norm_table(3, &fx.table3, &mut out),
        4 => verify_unit_table(4, &fx.table4, &mut out),
        5 => verify_norm_table(5, &fx.table5, &mut out),
        6 => verify_norm_table(6, &fx.table6, &mut out),
        7 => verify_table7(fx, &mut out),
        _ => {}
    }
    out
}
