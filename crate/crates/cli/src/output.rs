//! The JSON document printed by every subcommand, and its plain-text
//! rendering.

use std::fmt::Write;

use dominion::classify::{Census, ClassFlags};
use dominion::harness::VerificationRecord;
use dominion::Zeta;
use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct OutputDocument {
    pub schema_version: &'static str,
    pub indexing: &'static str,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "decimal_opt")]
    pub zeta: Option<Zeta>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sets: Option<Vec<Vec<usize>>>,
    /// Parallel to `sets` when classification was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set_flags: Option<Vec<ClassFlags>>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "census_opt")]
    pub census: Option<Census>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<VerificationRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<String>,
}

impl OutputDocument {
    pub fn new(input: String) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION,
            indexing: "0-based",
            input,
            n: None,
            gamma: None,
            zeta: None,
            status: None,
            sets: None,
            set_flags: None,
            census: None,
            records: None,
            summary: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut row = |k: &str, v: &dyn std::fmt::Display| writeln!(out, "{k:<10} {v}").unwrap();
        row("input", &self.input);
        if let Some(n) = self.n {
            row("n", &n);
        }
        if let Some(g) = self.gamma {
            row("gamma", &g);
        }
        if let Some(z) = self.zeta {
            row("zeta", &z);
        }
        if let Some(s) = self.status {
            row("status", &s);
        }
        if let Some(sets) = &self.sets {
            writeln!(out, "\ngamma-sets (0-based):").unwrap();
            for (i, s) in sets.iter().enumerate() {
                let members: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                write!(out, "  {{{}}}", members.join(",")).unwrap();
                if let Some(f) = self.set_flags.as_ref().map(|f| f[i]) {
                    write!(out, "  {}", flag_names(f)).unwrap();
                }
                out.push('\n');
            }
        }
        if let Some(c) = &self.census {
            writeln!(out, "\ncensus:").unwrap();
            for (name, v) in census_fields(c) {
                writeln!(out, "  {name:<12} {v}").unwrap();
            }
        }
        if let Some(records) = &self.records {
            writeln!(
                out,
                "\n{:<28} {:>4} {:>6} {:>6} {:>14} {:>14} {:<12} {:<20} {:>8}",
                "instance", "n", "g(f)", "g(e)", "zeta(f)", "zeta(e)", "status", "outcome", "ms"
            )
            .unwrap();
            for r in records {
                let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
                let outcome = serde_json::to_value(r.outcome).unwrap();
                writeln!(
                    out,
                    "{:<28} {:>4} {:>6} {:>6} {:>14} {:>14} {:<12} {:<20} {:>8}",
                    r.instance,
                    r.n,
                    opt(r.formula_gamma.map(|g| g.to_string())),
                    opt(r.engine_gamma.map(|g| g.to_string())),
                    r.formula_zeta,
                    opt(r.engine_zeta.map(|z| z.to_string())),
                    r.status,
                    outcome.as_str().unwrap_or_default(),
                    r.elapsed_ms
                )
                .unwrap();
            }
        }
        if let Some(s) = &self.summary {
            writeln!(out, "\n{s}").unwrap();
        }
        out
    }
}

fn flag_names(f: ClassFlags) -> String {
    let names: Vec<&str> = [
        (f.perfect, "perfect"),
        (f.connected, "connected"),
        (f.total, "total"),
        (f.independent, "independent"),
        (f.clique, "clique"),
    ]
    .into_iter()
    .filter_map(|(on, name)| on.then_some(name))
    .collect();
    if names.is_empty() { "-".into() } else { names.join(" ") }
}

fn census_fields(c: &Census) -> [(&'static str, Zeta); 7] {
    [
        ("total_sets", c.total_gamma_sets),
        ("perfect", c.perfect_count),
        ("connected", c.connected_count),
        ("total", c.total_count),
        ("independent", c.independent_count),
        ("clique", c.clique_count),
        ("none", c.none_count),
    ]
}

fn decimal_opt<S: Serializer>(v: &Option<Zeta>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

fn census_opt<S: Serializer>(v: &Option<Census>, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    match v {
        None => s.serialize_none(),
        Some(c) => {
            let mut map = s.serialize_map(Some(7))?;
            for (name, v) in census_fields(c) {
                map.serialize_entry(name, &v.to_string())?;
            }
            map.end()
        }
    }
}
