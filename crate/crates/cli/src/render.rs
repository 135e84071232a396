//! Human-readable tables and the versioned JSON document.

use qksl_core::dims::DimsTable;
use qksl_core::wolf::{Regularity, WolfRow};
use qksl_core::Status;
use serde::Serialize;

use crate::suites::Instance;

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct Document<'a, T: Serialize> {
    pub schema: u32,
    pub suite: &'a str,
    pub instances: &'a [T],
    pub status: Status,
}

pub fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

fn tag(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    }
}

pub fn instance_line(i: &Instance) -> String {
    let mut line = format!("{:<4}  {:<17} {:<40} {:>5} checks", tag(i.status), i.suite.name(), i.params.describe(), i.checks);
    if !i.skipped.is_empty() {
        line += &format!(", {} skipped", i.skipped.len());
    }
    if let Some(ms) = i.timing_ms {
        line += &format!("  {ms} ms");
    }
    if let Some(w) = &i.witness {
        line += &format!("\n      first failure: {}: {}", w.check, w.detail);
    }
    if i.status == Status::Skipped {
        for s in &i.skipped {
            line += &format!("\n      {}: {}", s.check, s.reason);
        }
    }
    line
}

pub fn summary(suite: &str, instances: &[Instance], status: Status) -> String {
    let count = |s| instances.iter().filter(|i| i.status == s).count();
    format!(
        "{suite}: {} ({} passed, {} failed, {} skipped)",
        tag(status),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    )
}

pub fn dims(t: &DimsTable) -> String {
    let mut out = format!("n = {}\n  r  rank S_r\n", t.n);
    for (r, rank) in t.ranks.iter().enumerate() {
        out += &format!("{r:>3}  {rank:>8}\n");
    }
    out += &format!("sum {:>8}\n2^{} {:>7}\n", t.sum, 2 * t.n, t.spinor_dim);
    if !t.consistent() {
        out += "MISMATCH: the ranks do not add up to the spinor dimension\n";
    }
    out
}

pub fn wolf_table(rows: &[WolfRow]) -> String {
    let header = format!(
        "{:<22} {:>3}  {:<8} {:>4}  {:<9} {:<9} {:<10} {}",
        "space", "n", "ideal", "dim", "l", "ρ", "ρ^hyper", "regularity"
    );
    let mut out = header + "\n";
    for row in rows {
        for (k, i) in row.ideals.iter().enumerate() {
            let l = if i.solved { format!("{}*", i.l) } else { i.l.to_string() };
            let hyper = i.rho_hyper.as_ref().map(|h| h.to_string()).unwrap_or_else(|| "·".into());
            let (name, n, verdict) = if k == 0 {
                let v = match row.verdict {
                    Regularity::Regular => "REGULAR",
                    Regularity::Degenerate => "DEGENERATE",
                };
                (row.name.as_str(), row.n.to_string(), v)
            } else {
                ("", String::new(), "")
            };
            out += &format!(
                "{name:<22} {n:>3}  {:<8} {:>4}  {l:<9} {:<9} {hyper:<10} {verdict}\n",
                i.name,
                i.dim,
                i.rho.to_string()
            );
        }
    }
    out += "* solved from Σ dim𝔨_i(1 − l_i) = dim𝔭/2\n";
    out
}
