//! Implementations of the CLI subcommands.

use std::io::BufRead;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};

use qmersenne_core::mersenne::{
    self, AlphaCase, AlphaChoice, AlphaVerdict, MersenneCandidate,
};
use qmersenne_core::primality::{self, Primality, PrimalityConfig};
use qmersenne_core::quadform;
use qmersenne_core::units;
use qmersenne_core::{FieldCtx, QuadInt};

use crate::output;
use crate::verify;
use crate::CliError;

pub struct RunContext {
    pub json: bool,
    pub seed: u64,
    pub threads: usize,
}

impl RunContext {
    fn config(&self, trial_bound: u64, mr_rounds: u32) -> PrimalityConfig {
        PrimalityConfig {
            trial_bound,
            mr_rounds,
            seed: self.seed,
        }
    }

    /// Prints records plus the trailing manifest. In text mode the manifest
    /// goes to stderr so tables stay clean.
    fn finish(&self, command: &str, parameters: Value, start_ms: u64, records: &[Value]) {
        let end_ms = output::now_ms();
        let manifest =
            output::manifest(command, parameters, self.seed, start_ms, end_ms, records);
        if self.json {
            for record in records {
                println!("{record}");
            }
            println!("{manifest}");
        } else {
            eprintln!("manifest: {manifest}");
        }
    }
}

fn field_for(d: u64) -> Result<FieldCtx, CliError> {
    FieldCtx::new(d).map_err(|e| CliError::Usage(format!("invalid d: {e}")))
}

fn warn_class_number(field: &FieldCtx) {
    if !field.class_number_one() {
        eprintln!(
            "warning: d = {} is not in the embedded class-number-1 table (d < 500); \
             unique factorization may fail and the Mersenne theory assumes class number 1",
            field.d()
        );
    }
}

fn ring_name(field: &FieldCtx) -> String {
    if field.half_basis() {
        format!("Z[(1+\u{221a}{})/2]", field.d())
    } else {
        format!("Z[\u{221a}{}]", field.d())
    }
}

fn case_tag(case: AlphaCase) -> &'static str {
    match case {
        AlphaCase::T1 => "T1",
        AlphaCase::T2 => "T2",
        AlphaCase::T3 => "T3",
        AlphaCase::T4 => "T4",
    }
}

fn case_description(case: AlphaCase) -> &'static str {
    match case {
        AlphaCase::T1 => "d \u{2261} 2,3 (mod 4), N(u) = \u{2212}1",
        AlphaCase::T2 => "d \u{2261} 1 (mod 4), N(u) = \u{2212}1",
        AlphaCase::T3 => "d \u{2261} 2,3 (mod 4), N(u) = +1",
        AlphaCase::T4 => "d \u{2261} 1 (mod 4), N(u) = +1",
    }
}

fn verdict_str(verdict: AlphaVerdict) -> &'static str {
    match verdict {
        AlphaVerdict::Irreducible => "irreducible",
        AlphaVerdict::Reducible => "reducible",
        AlphaVerdict::IsUnit => "is_unit",
    }
}

/// Why this α cannot drive a search, phrased for the exit-3 message.
fn verdict_explanation(choice: &AlphaChoice) -> String {
    match (choice.verdict, choice.case) {
        (AlphaVerdict::IsUnit, _) => format!(
            "\u{3b1} = 1 + u = {} is itself a unit; choose another unit power \
             (e.g. --alpha-power 2)",
            choice.alpha
        ),
        (_, AlphaCase::T3) => format!(
            "\u{3b1} = {} is always reducible when d \u{2261} 2,3 (mod 4) and N(u) = +1: \
             N(\u{3b1}) = 2(1+a) = {}",
            choice.alpha, choice.alpha_norm
        ),
        (_, AlphaCase::T1) => format!(
            "\u{3b1} = {} is reducible: for d \u{2261} 2,3 (mod 4) with N(u) = \u{2212}1, \
             \u{3b1} = 1 + u is irreducible only in Q(\u{221a}2)",
            choice.alpha
        ),
        _ => format!(
            "\u{3b1} = {} is reducible: N(\u{3b1}) = {} is not a rational prime",
            choice.alpha, choice.alpha_norm
        ),
    }
}

fn primality_str(p: &Primality) -> &'static str {
    match p {
        Primality::Composite => "composite",
        Primality::ProbablePrime { .. } => "probable_prime",
        Primality::Unknown => "unknown",
    }
}

/// α = 1 + u^k from the fundamental unit (negative k for inverse powers),
/// classified into the four irreducibility cases.
fn resolve_alpha(field: &FieldCtx, alpha_power: i64) -> Result<AlphaChoice, CliError> {
    if alpha_power == 0 {
        return Err(CliError::Usage("--alpha-power must be nonzero".into()));
    }
    let fundamental = units::fundamental_unit(field);
    let u = if alpha_power > 0 {
        fundamental.power(alpha_power as u64)
    } else {
        fundamental.inverse().power(alpha_power.unsigned_abs())
    };
    mersenne::classify_alpha(field, &u)
        .map_err(|e| CliError::Precondition(format!("cannot classify \u{3b1}: {e}")))
}

pub fn cmd_info(ctx: &RunContext, d: u64) -> Result<(), CliError> {
    let start = output::now_ms();
    let field = field_for(d)?;
    warn_class_number(&field);
    let unit = units::fundamental_unit(&field);
    let choice = resolve_alpha(&field, 1)?;
    let record = json!({
        "d": d,
        "ring": ring_name(&field),
        "class_number_one": field.class_number_one(),
        "unit": unit.value().to_string(),
        "unit_norm": unit.norm_sign() as i64,
        "alpha": choice.alpha.to_string(),
        "alpha_norm": choice.alpha_norm.to_string(),
        "case": case_tag(choice.case),
        "verdict": verdict_str(choice.verdict),
    });
    if !ctx.json {
        println!("field:            Q(\u{221a}{d})");
        println!("ring:             {}", ring_name(&field));
        println!(
            "class number one: {}",
            if field.class_number_one() { "yes" } else { "no (not in table)" }
        );
        println!(
            "fundamental unit: {}   (norm {})",
            unit.value(),
            if unit.norm_sign() < 0 { "-1" } else { "+1" }
        );
        println!(
            "\u{3b1} = 1 + u:        {}   N(\u{3b1}) = {}",
            choice.alpha, choice.alpha_norm
        );
        println!(
            "verdict:          {} (case {}: {})",
            verdict_str(choice.verdict),
            case_tag(choice.case),
            case_description(choice.case)
        );
    }
    ctx.finish("info", json!({"d": d}), start, &[record]);
    Ok(())
}

pub fn cmd_unit(ctx: &RunContext, d: u64) -> Result<(), CliError> {
    let start = output::now_ms();
    let field = field_for(d)?;
    warn_class_number(&field);
    let unit = units::fundamental_unit(&field);
    let expansion = units::omega_expansion(&field);
    let record = json!({
        "d": d,
        "unit": unit.value().to_string(),
        "unit_norm": unit.norm_sign() as i64,
        "period": expansion.period,
    });
    if !ctx.json {
        println!(
            "d = {d}: fundamental unit {}, norm {}, continued-fraction period {}",
            unit.value(),
            if unit.norm_sign() < 0 { "-1" } else { "+1" },
            expansion.period
        );
    }
    ctx.finish("unit", json!({"d": d}), start, &[record]);
    Ok(())
}

fn candidate_record(c: &MersenneCandidate, d: u64, elapsed_ms: u64) -> Value {
    json!({
        "d": d,
        "alpha": c.alpha.to_string(),
        "p": c.p,
        "norm": c.norm_abs.to_string(),
        "primality": primality_str(&c.primality),
        "h": c.riesel.as_ref().map(|r| r.h.to_string()),
        "n": c.riesel.as_ref().map(|r| r.n),
        "elapsed_ms": elapsed_ms,
    })
}

pub fn cmd_search(
    ctx: &RunContext,
    d: u64,
    alpha_power: i64,
    p_max: u64,
    trial_bound: u64,
    mr_rounds: u32,
) -> Result<(), CliError> {
    let start = output::now_ms();
    if p_max < 2 {
        return Err(CliError::Usage("--p-max must be at least 2".into()));
    }
    if ctx.threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let field = field_for(d)?;
    warn_class_number(&field);
    let choice = resolve_alpha(&field, alpha_power)?;
    if choice.verdict != AlphaVerdict::Irreducible {
        return Err(CliError::Precondition(verdict_explanation(&choice)));
    }
    let cfg = ctx.config(trial_bound, mr_rounds);
    cfg.validate()
        .map_err(|e| CliError::Usage(format!("invalid primality config: {e}")))?;

    let alpha = choice.alpha.clone();
    let primes = primality::small_primes(p_max);
    let work = |p: u64| -> (MersenneCandidate, u64) {
        let t0 = Instant::now();
        let candidate = mersenne::evaluate_exponent(&alpha, p, &cfg)
            .expect("\u{3b1} validated irreducible");
        (candidate, t0.elapsed().as_millis() as u64)
    };
    let mut results: Vec<(MersenneCandidate, u64)> = if ctx.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(ctx.threads)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot build thread pool: {e}")))?;
        use rayon::prelude::*;
        pool.install(|| primes.par_iter().map(|&p| work(p)).collect())
    } else {
        primes.iter().map(|&p| work(p)).collect()
    };
    results.sort_by_key(|(c, _)| c.p);

    let records: Vec<Value> = results
        .iter()
        .map(|(c, ms)| candidate_record(c, d, *ms))
        .collect();

    if !ctx.json {
        println!(
            "search: Q(\u{221a}{d}), \u{3b1} = {}, N(\u{3b1}) = {}, p \u{2264} {p_max}",
            choice.alpha, choice.alpha_norm
        );
        let p_width = results
            .iter()
            .map(|(c, _)| c.p.to_string().len())
            .max()
            .unwrap_or(1);
        let m_width = results
            .iter()
            .map(|(c, _)| c.m_element.to_string().len())
            .max()
            .unwrap_or(1)
            .min(48);
        for (c, _) in &results {
            let m = c.m_element.to_string();
            println!(
                "  {:>pw$}  {:mw$}  {}  [{}]",
                c.p,
                m,
                c.norm_abs,
                primality_str(&c.primality).replace('_', " "),
                pw = p_width,
                mw = m_width,
            );
        }
        let hits: Vec<String> = results
            .iter()
            .filter(|(c, _)| c.primality.is_probable_prime())
            .map(|(c, _)| c.p.to_string())
            .collect();
        println!("probable-prime exponents: {{{}}}", hits.join(", "));
    }

    let parameters = json!({
        "d": d,
        "alpha_power": alpha_power,
        "p_max": p_max,
        "trial_bound": trial_bound,
        "mr_rounds": mr_rounds,
        "threads": ctx.threads,
    });
    ctx.finish("search", parameters, start, &records);
    Ok(())
}

fn representation_record(n: &BigUint) -> Result<Value, CliError> {
    let representable = quadform::representable(n)
        .map_err(|e| CliError::Precondition(format!("N = {n}: {e}")))?;
    if !representable {
        return Ok(json!({
            "n": n.to_string(),
            "representable": false,
            "n_mod_28": (n % 28u8).to_u64(),
        }));
    }
    let rep = quadform::cornacchia7(n)
        .map_err(|e| CliError::Precondition(format!("N = {n}: {e}")))?
        .expect("representable");
    let report = quadform::structure_check(&rep);
    Ok(json!({
        "n": n.to_string(),
        "representable": true,
        "x": rep.x.to_string(),
        "y": rep.y.to_string(),
        "structure": {
            "x_div_4": report.x_div_4,
            "x_div_8": report.x_div_8,
            "y_pm3_mod_8": report.y_pm3_mod_8,
            "n_mod_8": report.n_mod_8,
            "n_mod_16": report.n_mod_16,
        },
    }))
}

fn print_representation_text(record: &Value) {
    let n = record["n"].as_str().unwrap_or("?");
    if record["representable"].as_bool() == Some(true) {
        let s = &record["structure"];
        let yn = |key: &str| if s[key].as_bool() == Some(true) { "yes" } else { "no" };
        println!(
            "N = {n} = {}\u{b2} + 7\u{b7}{}\u{b2}   [x\u{2261}0 (mod 8): {}; y\u{2261}\u{b1}3 (mod 8): {}; N\u{2261}\u{2212}1 (mod 16): {}]",
            record["x"].as_str().unwrap_or("?"),
            record["y"].as_str().unwrap_or("?"),
            yn("x_div_8"),
            yn("y_pm3_mod_8"),
            yn("n_mod_16"),
        );
    } else {
        println!(
            "N = {n}: not representable by x\u{b2} + 7y\u{b2} (N mod 28 = {})",
            record["n_mod_28"]
        );
    }
}

pub fn cmd_represent(
    ctx: &RunContext,
    n: Option<String>,
    from_search: bool,
    trial_bound: u64,
    mr_rounds: u32,
) -> Result<(), CliError> {
    let start = output::now_ms();
    let cfg = ctx.config(trial_bound, mr_rounds);
    let mut targets: Vec<BigUint> = Vec::new();
    match (n, from_search) {
        (Some(text), false) => {
            let value = BigUint::from_str(text.trim())
                .map_err(|_| CliError::Usage(format!("N must be a decimal integer, got {text:?}")))?;
            targets.push(value);
        }
        (None, true) => {
            let stdin = std::io::stdin();
            for line in stdin.lock().lines() {
                let line = line.map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                if let Ok(value) = serde_json::from_str::<Value>(line) {
                    // candidate records carry a norm and a primality verdict
                    if value.get("primality").and_then(Value::as_str) == Some("probable_prime") {
                        if let Some(norm) = value.get("norm").and_then(Value::as_str) {
                            let parsed = BigUint::from_str(norm).map_err(|_| {
                                CliError::Usage(format!("bad norm in search record: {norm:?}"))
                            })?;
                            targets.push(parsed);
                        }
                    }
                    continue;
                }
                let parsed = BigUint::from_str(line).map_err(|_| {
                    CliError::Usage(format!("stdin line is neither JSON nor decimal: {line:?}"))
                })?;
                targets.push(parsed);
            }
        }
        (Some(_), true) => {
            return Err(CliError::Usage(
                "give either a positional N or --from-search, not both".into(),
            ))
        }
        (None, false) => {
            return Err(CliError::Usage(
                "missing N (or pass --from-search to read piped records)".into(),
            ))
        }
    }

    let mut records = Vec::new();
    for target in &targets {
        let verdict = primality::is_probable_prime(target, &cfg)
            .map_err(|e| CliError::Usage(format!("N = {target}: {e}")))?;
        if !verdict.is_probable_prime() {
            return Err(CliError::Precondition(format!(
                "N = {target} is composite; representation is defined for (probable) primes"
            )));
        }
        let record = representation_record(target)?;
        if !ctx.json {
            print_representation_text(&record);
        }
        records.push(record);
    }
    let parameters = json!({
        "from_search": from_search,
        "targets": targets.len(),
        "trial_bound": trial_bound,
        "mr_rounds": mr_rounds,
    });
    ctx.finish("represent", parameters, start, &records);
    Ok(())
}

pub fn cmd_verify_tables(ctx: &RunContext, table: Option<u8>) -> Result<(), CliError> {
    let start = output::now_ms();
    if let Some(t) = table {
        if !(1..=7).contains(&t) {
            return Err(CliError::Usage(format!("--table must be 1..=7, got {t}")));
        }
    }
    let fixtures = crate::fixtures::load().map_err(CliError::Usage)?;
    let tables: Vec<u8> = table.map(|t| vec![t]).unwrap_or_else(|| (1..=7).collect());

    let mut records = Vec::new();
    let mut first_failure: Option<String> = None;
    let mut passed = 0usize;
    for t in &tables {
        let cells = verify::verify_table(&fixtures, *t);
        let mismatches: Vec<&verify::CellCheck> = cells.iter().filter(|c| !c.pass).collect();
        let status = if mismatches.is_empty() { "PASS" } else { "FAIL" };
        if mismatches.is_empty() {
            passed += 1;
        } else if first_failure.is_none() {
            let m = mismatches[0];
            first_failure = Some(format!(
                "table {t} cell {}: expected {}, got {}",
                m.cell, m.expected, m.got
            ));
        }
        if !ctx.json {
            println!("table {t}: {status} ({} cells)", cells.len());
            for m in &mismatches {
                println!("  mismatch at {}: expected {}, got {}", m.cell, m.expected, m.got);
            }
        }
        records.push(json!({
            "table": t,
            "status": status,
            "cells": cells.len(),
            "mismatches": mismatches
                .iter()
                .map(|m| json!({"cell": m.cell, "expected": m.expected, "got": m.got}))
                .collect::<Vec<_>>(),
        }));
    }
    if !ctx.json {
        println!("{passed}/{} tables pass", tables.len());
    }
    let parameters = json!({"table": table});
    ctx.finish("verify-tables", parameters, start, &records);
    match first_failure {
        None => Ok(()),
        Some(detail) => Err(CliError::Mismatch(detail)),
    }
}

type Check = (&'static str, fn(u64) -> Result<(), String>);

fn check_pell(_: u64) -> Result<(), String> {
    for n in 1..=1000u64 {
        let pair = mersenne::vw(n);
        let lhs = &pair.v * &pair.v - 2 * &pair.w * &pair.w;
        let rhs = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        if lhs != rhs {
            return Err(format!("v\u{b2} \u{2212} 2w\u{b2} \u{2260} (\u{2212}1)\u{207f} at n = {n}"));
        }
    }
    Ok(())
}

fn check_jumps(_: u64) -> Result<(), String> {
    for k in 1..=6u64 {
        let (a, b, c, d) = mersenne::jump_coefficients(k);
        for n in 1..=100u64 {
            let base = mersenne::vw(n);
            let expect = mersenne::vw(n + k);
            if expect.v != &a * &base.v + &b * &base.w || expect.w != &c * &base.v + &d * &base.w {
                return Err(format!("jump formula fails at n = {n}, k = {k}"));
            }
        }
    }
    Ok(())
}

fn check_mod7_orbit(_: u64) -> Result<(), String> {
    for k in 0..=50u64 {
        let a = mersenne::vw(6 * k + 1);
        let b = mersenne::vw(6 * k + 5);
        let m7 = |x: &BigInt| x.mod_floor(&BigInt::from(7));
        if m7(&a.v) != BigInt::one() || m7(&a.w) != BigInt::one() {
            return Err(format!("(v, w) mod 7 wrong at n = {}", 6 * k + 1));
        }
        if m7(&b.v) != BigInt::from(6) || m7(&b.w) != BigInt::one() {
            return Err(format!("(v, w) mod 7 wrong at n = {}", 6 * k + 5));
        }
    }
    Ok(())
}

// the shift exponents mirror the linkage identities for odd/even n
#[allow(clippy::manual_div_ceil)]
fn check_alpha_powers(_: u64) -> Result<(), String> {
    let field = FieldCtx::new(2).expect("d = 2");
    let alpha = QuadInt::new(field, 2, 1, 1).expect("2+\u{221a}2");
    for n in 1..=64u64 {
        let pw = alpha.pow(n);
        if pw.norm() != BigInt::one() << n {
            return Err(format!("N(\u{3b1}\u{207f}) \u{2260} 2\u{207f} at n = {n}"));
        }
        let pair = mersenne::vw(n);
        let (ea, eb) = if n % 2 == 1 {
            (
                (BigInt::one() << ((n + 1) / 2)) * &pair.w,
                (BigInt::one() << ((n - 1) / 2)) * &pair.v,
            )
        } else {
            (
                (BigInt::one() << (n / 2)) * &pair.v,
                (BigInt::one() << (n / 2)) * &pair.w,
            )
        };
        if *pw.a() != ea || *pw.b() != eb {
            return Err(format!("a/b linkage fails at n = {n}"));
        }
    }
    Ok(())
}

fn check_closed_form(p_max: u64) -> Result<(), String> {
    let field = FieldCtx::new(2).expect("d = 2");
    let alpha = QuadInt::new(field, 2, 1, 1).expect("2+\u{221a}2");
    let mut n = 5;
    while n <= p_max {
        let direct = mersenne::mersenne_norm(&alpha, n).map_err(|e| e.to_string())?;
        let closed = mersenne::norm_closed_form(n).map_err(|e| e.to_string())?;
        if direct != closed {
            return Err(format!("closed form \u{2260} direct norm at n = {n}"));
        }
        n += 2;
    }
    Ok(())
}

fn check_congruences(p_max: u64) -> Result<(), String> {
    for p in primality::small_primes(p_max).into_iter().skip(1) {
        let report = mersenne::congruence_report(p).map_err(|e| e.to_string())?;
        if !report.all_pass() {
            return Err(format!("congruence battery fails at p = {p}: {report:?}"));
        }
    }
    Ok(())
}

fn check_divisibility(_: u64) -> Result<(), String> {
    let field = FieldCtx::new(2).expect("d = 2");
    let alpha = QuadInt::new(field, 2, 1, 1).expect("2+\u{221a}2");
    for n in 1..=60u64 {
        for m in 1..=n {
            if n % m != 0 {
                continue;
            }
            if !mersenne::divisibility_check(&alpha, m, n).map_err(|e| e.to_string())? {
                return Err(format!("M_{m} does not divide M_{n}"));
            }
        }
    }
    Ok(())
}

fn check_coprime_norm_gcd(_: u64) -> Result<(), String> {
    let field = FieldCtx::new(2).expect("d = 2");
    let alpha = QuadInt::new(field, 2, 1, 1).expect("2+\u{221a}2");
    for n in 1..=60u64 {
        for m in 1..n {
            if m.gcd(&n) != 1 {
                continue;
            }
            if !mersenne::divisibility_check(&alpha, m, n).map_err(|e| e.to_string())? {
                return Err(format!("gcd(N(M_{m}), N(M_{n})) \u{2260} 1"));
            }
        }
    }
    Ok(())
}

fn check_riesel(p_max: u64) -> Result<(), String> {
    for p in primality::small_primes(p_max) {
        if p <= 3 {
            continue;
        }
        let r = mersenne::riesel_form(p).map_err(|e| e.to_string())?;
        if !r.h.is_odd() {
            return Err(format!("h even at p = {p}"));
        }
        if r.h_is_power_of_four_minus_one {
            return Err(format!("h = 4^m \u{2212} 1 at p = {p}"));
        }
        let reconstructed = (&r.h << r.n) - 1u8;
        if reconstructed != mersenne::norm_closed_form(p).map_err(|e| e.to_string())? {
            return Err(format!("h\u{b7}2\u{207f} \u{2212} 1 \u{2260} N at p = {p}"));
        }
    }
    Ok(())
}

pub fn cmd_properties(ctx: &RunContext, p_max: u64) -> Result<(), CliError> {
    let start = output::now_ms();
    if p_max < 5 {
        return Err(CliError::Usage("--p-max must be at least 5".into()));
    }
    let checks: [Check; 9] = [
        ("pell-invariant (n \u{2264} 1000)", check_pell),
        ("jump-formulas (k \u{2264} 6, n \u{2264} 100)", check_jumps),
        ("mod-7-orbit (k \u{2264} 50)", check_mod7_orbit),
        ("alpha-powers-and-ab-linkage (n \u{2264} 64)", check_alpha_powers),
        ("closed-form-vs-direct (odd n \u{2264} p_max)", check_closed_form),
        ("congruence-battery (odd primes \u{2264} p_max)", check_congruences),
        ("divisibility (m | n \u{2264} 60)", check_divisibility),
        ("coprime-norm-gcd (pairs \u{2264} 60)", check_coprime_norm_gcd),
        ("riesel-identity (3 < p \u{2264} p_max)", check_riesel),
    ];
    let mut records = Vec::new();
    let mut first_failure = None;
    for (name, check) in checks {
        let result = check(p_max);
        let status = if result.is_ok() { "PASS" } else { "FAIL" };
        if !ctx.json {
            match &result {
                Ok(()) => println!("PASS {name}"),
                Err(detail) => println!("FAIL {name}: {detail}"),
            }
        }
        if let Err(detail) = &result {
            if first_failure.is_none() {
                first_failure = Some(format!("{name}: {detail}"));
            }
        }
        records.push(json!({"check": name, "status": status}));
    }
    ctx.finish("properties", json!({"p_max": p_max}), start, &records);
    match first_failure {
        None => Ok(()),
        Some(detail) => Err(CliError::Mismatch(detail)),
    }
}
