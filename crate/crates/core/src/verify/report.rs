use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// One compared pair of exact integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    /// Which comparison inside the report this row belongs to.
    pub check: String,
    pub r: Option<u32>,
    pub j: Option<u32>,
    pub n: u32,
    pub lhs: i128,
    pub rhs: i128,
    #[serde(rename = "match")]
    pub matched: bool,
}

impl Record {
    pub fn new(
        check: impl Into<String>,
        r: Option<u32>,
        j: Option<u32>,
        n: u32,
        lhs: i128,
        rhs: i128,
    ) -> Self {
        Self {
            check: check.into(),
            r,
            j,
            n,
            lhs,
            rhs,
            matched: lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub r: Vec<u32>,
    pub j: Vec<u32>,
    /// Series truncation order, when series are involved.
    pub order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub theorem: String,
    pub params: Params,
    pub n_max: u32,
    pub records: Vec<Record>,
    pub passed: bool,
    /// Excluded from any byte-stability comparison.
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub(crate) fn build(
        theorem: &str,
        params: Params,
        n_max: u32,
        mut records: Vec<Record>,
        start: Instant,
    ) -> Self {
        records.sort_by(|a, b| (&a.check, a.r, a.j, a.n).cmp(&(&b.check, b.r, b.j, b.n)));
        let passed = records.iter().all(|rec| rec.matched);
        Self {
            schema: SCHEMA_VERSION,
            theorem: theorem.to_owned(),
            params,
            n_max,
            records,
            passed,
            wall_time_ms: start.elapsed().as_millis() as u64,
        }
    }

    /// Concatenates reports under one id; `r` and `j` parameters are united,
    /// `n_max` and wall time take the maximum and the sum.
    pub fn merge(theorem: &str, reports: Vec<Self>) -> Self {
        let mut params = Params::default();
        let mut n_max = 0;
        let mut wall = 0;
        let mut records = Vec::new();
        for rep in reports {
            params.r.extend(rep.params.r);
            params.j.extend(rep.params.j);
            params.order = params.order.max(rep.params.order);
            n_max = n_max.max(rep.n_max);
            wall += rep.wall_time_ms;
            records.extend(rep.records);
        }
        for v in [&mut params.r, &mut params.j] {
            v.sort_unstable();
            v.dedup();
        }
        let mut out = Self::build(theorem, params, n_max, records, Instant::now());
        out.wall_time_ms = wall;
        out
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|rec| !rec.matched)
    }

    /// The report with its timing zeroed, for deterministic comparison.
    pub fn without_timing(&self) -> Self {
        Self {
            wall_time_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Flat form with header `theorem,r,j,n,lhs,rhs,match`. The theorem
    /// column carries `<theorem>/<check>`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theorem,r,j,n,lhs,rhs,match\n");
        for rec in &self.records {
            let opt = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{}/{},{},{},{},{},{},{}",
                self.theorem,
                rec.check,
                opt(rec.r),
                opt(rec.j),
                rec.n,
                rec.lhs,
                rec.rhs,
                rec.matched
            )
            .unwrap();
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for rec in &self.records {
            let r = rec.r.map(|x| format!(" r={x}")).unwrap_or_default();
            let j = rec.j.map(|x| format!(" j={x}")).unwrap_or_default();
            let status = if rec.matched { "ok" } else { "MISMATCH" };
            writeln!(
                out,
                "{} {}{r}{j} n={}: {} vs {} {status}",
                self.theorem, rec.check, rec.n, rec.lhs, rec.rhs
            )
            .unwrap();
        }
        let failed = self.mismatches().count();
        writeln!(
            out,
            "{}: {} ({} records, {} mismatches)",
            self.theorem,
            if self.passed { "PASS" } else { "FAIL" },
            self.records.len(),
            failed
        )
        .unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_json_shapes() {
        let recs = vec![
            Record::new("b", Some(2), None, 1, 3, 3),
            Record::new("a", None, Some(1), 0, 1, 2),
        ];
        let report = VerificationReport::build("demo", Params::default(), 1, recs, Instant::now());
        assert!(!report.passed);
        assert_eq!(report.records[0].check, "a");
        let csv = report.to_csv();
        assert_eq!(csv.lines().next(), Some("theorem,r,j,n,lhs,rhs,match"));
        assert_eq!(csv.lines().nth(1), Some("demo/a,,1,0,1,2,false"));
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["records"][1]["match"], true);
        let back: VerificationReport = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
    }
}
