use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub claim: String,
    pub anchor: &'static str,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Counters {
    pub oracle_nodes: u64,
    pub graphs_examined: u64,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub rows: Vec<Row>,
    pub totals: Totals,
    pub counters: Counters,
    #[serde(skip)]
    started: Option<Instant>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            rows: Vec::new(),
            totals: Totals::default(),
            counters: Counters::default(),
            started: Some(Instant::now()),
        }
    }

    pub fn row(
        &mut self,
        anchor: &'static str,
        claim: impl Into<String>,
        expected: impl ToString,
        observed: impl ToString,
        status: Status,
    ) {
        match status {
            Status::Pass => self.totals.pass += 1,
            Status::Fail => self.totals.fail += 1,
            Status::Inconclusive => self.totals.inconclusive += 1,
        }
        self.rows.push(Row {
            claim: claim.into(),
            anchor,
            expected: expected.to_string(),
            observed: observed.to_string(),
            status,
        });
    }

    /// PASS when equal, FAIL otherwise.
    pub fn expect_eq<T: PartialEq + ToString>(&mut self, anchor: &'static str, claim: impl Into<String>, expected: T, observed: T) {
        let status = if expected == observed { Status::Pass } else { Status::Fail };
        self.row(anchor, claim, expected, observed, status);
    }

    pub fn finish(&mut self) {
        if let Some(t) = self.started.take() {
            self.counters.elapsed_ms = t.elapsed().as_millis();
        }
    }

    pub fn failed(&self) -> bool {
        self.totals.fail > 0
    }

    pub fn to_table(&self) -> String {
        let headers = ["STATUS", "ANCHOR", "CLAIM", "EXPECTED", "OBSERVED"];
        let cells: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.status.label().to_string(),
                    r.anchor.to_string(),
                    r.claim.clone(),
                    r.expected.clone(),
                    r.observed.clone(),
                ]
            })
            .collect();
        let mut width = headers.map(str::len);
        for row in &cells {
            for (w, c) in width.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cols: [&str; 5]| {
            let mut s = String::new();
            for (i, c) in cols.iter().enumerate() {
                if i + 1 == cols.len() {
                    s.push_str(c);
                } else {
                    s.push_str(&format!("{c:<w$}  ", w = width[i]));
                }
            }
            s.trim_end().to_string()
        };
        let mut out = format!("suite {}\n", self.suite);
        out.push_str(&line(headers));
        out.push('\n');
        for row in &cells {
            out.push_str(&line([&row[0], &row[1], &row[2], &row[3], &row[4]]));
            out.push('\n');
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} inconclusive; {} oracle nodes, {} graphs, {} ms\n",
            self.totals.pass,
            self.totals.fail,
            self.totals.inconclusive,
            self.counters.oracle_nodes,
            self.counters.graphs_examined,
            self.counters.elapsed_ms
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_and_table() {
        let mut r = SuiteReport::new("demo");
        r.expect_eq("a", "one", 1, 1);
        r.expect_eq("a", "two", 2, 3);
        r.row("b", "three", "x", "budget", Status::Inconclusive);
        r.finish();
        assert_eq!((r.totals.pass, r.totals.fail, r.totals.inconclusive), (1, 1, 1));
        assert!(r.failed());
        let t = r.to_table();
        assert!(t.contains("FAIL"));
        assert_eq!(t.lines().count(), 6);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["rows"][2]["status"], "INCONCLUSIVE");
    }
}
