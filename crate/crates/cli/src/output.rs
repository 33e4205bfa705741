//! Canonical JSON records, the run manifest, and the result digest.
//!
//! Records are serde_json values whose maps are BTree-backed, so keys come out
//! sorted and the serialization is canonical. All arbitrary-precision integers
//! are rendered as decimal strings. The digest hashes the canonical records
//! with volatile keys (elapsed_ms) removed, so identical parameters and seed
//! produce an identical digest across runs.

use serde_json::Value;
use sha2::{Digest, Sha256};
use std::time::{SystemTime, UNIX_EPOCH};

fn strip_volatile(value: &Value) -> Value {
    match value {
        Value::Object(map) => Value::Object(
            map.iter()
                .filter(|(k, _)| k.as_str() != "elapsed_ms")
                .map(|(k, v)| (k.clone(), strip_volatile(v)))
                .collect(),
        ),
        Value::Array(items) => Value::Array(items.iter().map(strip_volatile).collect()),
        other => other.clone(),
    }
}

/// Hex SHA-256 of the canonical, volatile-free record stream.
pub fn digest_hex(records: &[Value]) -> String {
    let mut hasher = Sha256::new();
    for record in records {
        hasher.update(strip_volatile(record).to_string().as_bytes());
        hasher.update(b"\n");
    }
    let out = hasher.finalize();
    let mut hex = String::with_capacity(out.len() * 2);
    for byte in out {
        hex.push_str(&format!("{byte:02x}"));
    }
    hex
}

pub fn now_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

/// The trailing manifest record for a run.
pub fn manifest(
    command: &str,
    parameters: Value,
    seed: u64,
    start_ms: u64,
    end_ms: u64,
    records: &[Value],
) -> Value {
    serde_json::json!({
        "type": "manifest",
        "command": command,
        "parameters": parameters,
        "version": env!("CARGO_PKG_VERSION"),
        "seed": seed,
        "start_ms": start_ms,
        "end_ms": end_ms,
        "digest": digest_hex(records),
    })
}
