//! Versioned report tree with text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::pointset::PointSet;
use crate::verify::{Inventory, TheoremReport, Verdict};
use crate::zariski::TripleComparison;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeSection {
    pub ring: String,
    pub backend: String,
    pub points: Option<usize>,
    pub quasi_components: Vec<String>,
    pub clopens: Vec<String>,
    pub totally_separated: bool,
    /// 𝒯₁ vs 𝒯_Z vs 𝒯; `None` with a reason when 𝒯_Z is unavailable.
    pub comparisons: Option<TripleComparison>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub index: usize,
    pub size: usize,
    pub members: Vec<String>,
    pub prime: bool,
    pub minimal_prime: bool,
    pub maximal: bool,
    pub min_max: bool,
    /// `z` when the ideal is I(z).
    pub vanishing_point: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealsSection {
    pub ring: String,
    pub config: String,
    pub ring_size: usize,
    pub lattice_size: usize,
    pub complete: bool,
    pub ideals: Vec<IdealEntry>,
    pub primes: Vec<usize>,
    pub radical: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzSection {
    pub seed: u64,
    pub instances: usize,
    pub counts: BTreeMap<Verdict, usize>,
    /// Only FAIL reports are kept.
    pub failures: Vec<TheoremReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Section {
    Analyze(AnalyzeSection),
    Ideals(IdealsSection),
    Checks { ring: String, reports: Vec<TheoremReport> },
    Generate { primes: usize, inventory: Inventory },
    Fuzz(FuzzSection),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub counts: BTreeMap<Verdict, usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub sections: Vec<Section>,
    pub summary: Summary,
}

impl Default for Report {
    fn default() -> Self {
        Report::new(Vec::new())
    }
}

impl Report {
    pub fn new(sections: Vec<Section>) -> Self {
        let mut counts: BTreeMap<Verdict, usize> = BTreeMap::new();
        for s in &sections {
            match s {
                Section::Checks { reports, .. } => {
                    for r in reports {
                        *counts.entry(r.verdict).or_insert(0) += 1;
                    }
                }
                Section::Fuzz(f) => {
                    for (v, n) in &f.counts {
                        *counts.entry(*v).or_insert(0) += n;
                    }
                }
                _ => {}
            }
        }
        let checks = counts.values().sum();
        Report { schema: SCHEMA, sections, summary: Summary { checks, counts } }
    }

    pub fn extend(self, other: Report) -> Report {
        let mut s = self.sections;
        s.extend(other.sections);
        Report::new(s)
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.summary.counts.get(&v).copied().unwrap_or(0)
    }

    /// 0: all PASS / HYPOTHESIS_UNMET / SKIPPED_INFINITE; 1: any FAIL; 3: budget exceeded.
    pub fn exit_code(&self) -> i32 {
        if self.count(Verdict::Fail) > 0 {
            1
        } else if self.count(Verdict::BudgetExceeded) > 0 {
            3
        } else {
            0
        }
    }
}

pub fn show_sets(sets: &[PointSet]) -> Vec<String> {
    sets.iter().map(|s| s.to_string()).collect()
}

pub fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
        Format::Text => render_text(r),
    }
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, c) in row.iter().enumerate() {
            width[i] = width[i].max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                s += c;
            } else {
                s += &format!("{c}{}  ", " ".repeat(width[i] - c.chars().count()));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    *out += &line(header.to_vec());
    for row in rows {
        *out += &line(row.iter().map(String::as_str).collect());
    }
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "-" }.to_string()
}

fn check_rows(out: &mut String, reports: &[TheoremReport]) {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.checker_id.clone(),
                r.verdict.to_string(),
                format!("{:.1}", r.elapsed_ms),
                r.instance.label(),
                r.detail.clone().unwrap_or_default(),
            ]
        })
        .collect();
    table(out, &["id", "verdict", "ms", "instance", "detail"], &rows);
    for r in reports.iter().filter(|r| r.verdict == Verdict::Fail) {
        let _ = writeln!(out, "  {} witness: {}", r.checker_id, r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default());
        if let Some(d) = &r.discrepancy {
            let _ = writeln!(out, "  {} known discrepancy: {d}", r.checker_id);
        }
    }
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    for s in &r.sections {
        match s {
            Section::Analyze(a) => {
                let _ = writeln!(out, "== analyze {} ({} backend)", a.ring, a.backend);
                if let Some(n) = a.points {
                    let _ = writeln!(out, "points: {n}");
                }
                let _ = writeln!(out, "quasi-components: {}", a.quasi_components.join(" "));
                let _ = writeln!(out, "clopens: {}", a.clopens.join(" "));
                let _ = writeln!(out, "totally separated: {}", yes(a.totally_separated));
                if let Some(c) = &a.comparisons {
                    let _ = writeln!(out, "T1 vs TZ: {}", c.t1_vs_tz.verdict);
                    let _ = writeln!(out, "TZ vs T:  {}", c.tz_vs_t.verdict);
                    let _ = writeln!(out, "T1 vs T:  {}", c.t1_vs_t.verdict);
                }
                if let Some(n) = &a.note {
                    let _ = writeln!(out, "note: {n}");
                }
            }
            Section::Ideals(i) => {
                let _ = writeln!(
                    out,
                    "== ideals {} ({}, {} functions, {} ideals{})",
                    i.ring,
                    i.config,
                    i.ring_size,
                    i.lattice_size,
                    if i.complete { "" } else { ", truncated" }
                );
                let rows: Vec<Vec<String>> = i
                    .ideals
                    .iter()
                    .map(|e| {
                        vec![
                            format!("#{}", e.index),
                            e.size.to_string(),
                            yes(e.prime),
                            yes(e.minimal_prime),
                            yes(e.maximal),
                            yes(e.min_max),
                            e.vanishing_point.map(|z| format!("I({z})")).unwrap_or_else(|| "-".into()),
                            if e.members.len() == e.size { e.members.join(" ") } else { format!("{} …", e.members.join(" ")) },
                        ]
                    })
                    .collect();
                table(&mut out, &["ideal", "size", "prime", "minimal", "maximal", "min-max", "vanishing", "members"], &rows);
                let _ = writeln!(out, "primes: {}", i.primes.iter().map(|p| format!("#{p}")).collect::<Vec<_>>().join(" "));
                let _ = writeln!(out, "radical: {{{}}}", i.radical.join(" "));
            }
            Section::Checks { ring, reports } => {
                let _ = writeln!(out, "== check {ring}");
                check_rows(&mut out, reports);
            }
            Section::Generate { primes, inventory } => {
                let _ = writeln!(out, "== generate {primes} primes over {}", inventory.algebra);
                let _ = writeln!(
                    out,
                    "ring: C(discrete {}, {}), {} functions, {} ideals, {} maximal",
                    inventory.points, inventory.algebra, inventory.ring_size, inventory.lattice_size, inventory.maximal_ideals
                );
                for p in &inventory.primes {
                    let _ = writeln!(out, "I({}): {} members, min-max {}", p.point, p.members.len(), yes(p.min_max));
                }
                let _ = writeln!(out, "radical: {} element(s)", inventory.radical.len());
            }
            Section::Fuzz(f) => {
                let _ = writeln!(out, "== fuzz seed {} over {} instances", f.seed, f.instances);
                for (v, n) in &f.counts {
                    let _ = writeln!(out, "{v}: {n}");
                }
                if !f.failures.is_empty() {
                    check_rows(&mut out, &f.failures);
                }
            }
        }
    }
    let parts: Vec<String> = r.summary.counts.iter().map(|(v, n)| format!("{n} {v}")).collect();
    let noun = if r.summary.checks == 1 { "check" } else { "checks" };
    if parts.is_empty() {
        let _ = writeln!(out, "summary: {} {noun}", r.summary.checks);
    } else {
        let _ = writeln!(out, "summary: {} {noun} ({})", r.summary.checks, parts.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let r = Report::default();
        assert_eq!(render_report(&r, Format::Text), "summary: 0 checks\n");
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn json_has_schema() {
        let j = render_report(&Report::default(), Format::Json);
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["schema"], 1);
    }
}
