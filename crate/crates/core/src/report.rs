//! Residual reports: one record per identity instance, serializable to JSON
//! and renderable as a table.

use serde::{Deserialize, Serialize};

use crate::rat;
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Witness {
    /// Component index for vector-valued residuals.
    pub component: usize,
    pub monomial: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ResidualRecord {
    pub identity: String,
    pub params: Vec<i64>,
    /// Residual coefficients are asserted for t-degree ≤ this bound.
    pub window_t: i64,
    pub max_q: i64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl ResidualRecord {
    /// Judge a (possibly vector-valued) residual: pass iff every component
    /// has no nonzero coefficient inside its valid window.
    pub fn from_residual(
        identity: &str,
        params: Vec<i64>,
        components: &[TruncatedSeries],
        max_q: i64,
    ) -> Self {
        let window_t = components.iter().map(|c| c.valid_t()).min().unwrap_or(0);
        let mut witness = None;
        for (i, c) in components.iter().enumerate() {
            if let Some((m, v)) = c.first_nonzero_on_window() {
                witness = Some(Witness {
                    component: i,
                    monomial: m.render(),
                    value: rat::render(v),
                });
                break;
            }
        }
        ResidualRecord {
            identity: identity.to_string(),
            params,
            window_t,
            max_q,
            pass: witness.is_none(),
            witness,
            note: None,
        }
    }

    pub fn failed(identity: &str, params: Vec<i64>, note: String) -> Self {
        ResidualRecord {
            identity: identity.to_string(),
            params,
            window_t: 0,
            max_q: 0,
            pass: false,
            witness: None,
            note: Some(note),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub model: String,
    pub suite: String,
    pub records: Vec<ResidualRecord>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut by_identity: Vec<(&str, usize, usize, i64)> = Vec::new();
        for r in &self.records {
            match by_identity.iter_mut().find(|(n, ..)| *n == r.identity) {
                Some((_, total, passed, min_window)) => {
                    *total += 1;
                    *passed += usize::from(r.pass);
                    *min_window = (*min_window).min(r.window_t);
                }
                None => by_identity.push((&r.identity, 1, usize::from(r.pass), r.window_t)),
            }
        }
        out.push_str(&format!(
            "model {}  suite {}  ({} instances)\n",
            self.model,
            self.suite,
            self.records.len()
        ));
        out.push_str(&format!(
            "{:<34} {:>9} {:>9} {:>8}  status\n",
            "identity", "instances", "passed", "window"
        ));
        for (name, total, passed, window) in &by_identity {
            let status = if passed == total { "ok" } else { "FAIL" };
            out.push_str(&format!(
                "{:<34} {:>9} {:>9} {:>8}  {}\n",
                name, total, passed, window, status
            ));
        }
        for r in self.records.iter().filter(|r| !r.pass) {
            let loc = r
                .witness
                .as_ref()
                .map(|w| format!("component {} at {} = {}", w.component, w.monomial, w.value))
                .or_else(|| r.note.clone())
                .unwrap_or_default();
            out.push_str(&format!(
                "  FAIL {} params {:?}: {}\n",
                r.identity, r.params, loc
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let report = SuiteReport {
            model: "p1".into(),
            suite: "axioms".into(),
            records: vec![
                ResidualRecord {
                    identity: "wdvv".into(),
                    params: vec![0, 1, 1, 0],
                    window_t: 4,
                    max_q: 3,
                    pass: true,
                    witness: None,
                    note: None,
                },
                ResidualRecord {
                    identity: "getzler_relation".into(),
                    params: vec![1, 1, 0, 1],
                    window_t: 3,
                    max_q: 3,
                    pass: false,
                    witness: Some(Witness {
                        component: 0,
                        monomial: "q".into(),
                        value: "24".into(),
                    }),
                    note: None,
                },
            ],
        };
        let text = serde_json::to_string(&report).unwrap();
        let back: SuiteReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.records, report.records);
        assert!(!back.all_pass());
        assert!(back.to_table().contains("FAIL"));
    }
}
