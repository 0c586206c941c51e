//! Deterministic reports: a line-oriented text form with stable ordering and
//! a canonical JSON form (sorted keys) suitable for golden-file testing.
//! Identical inputs produce byte-identical output.

use serde_json::{json, Value};

#[derive(Debug, Clone)]
pub struct Entry {
    pub key: String,
    pub value: String,
    /// Some(true) renders as PASS, Some(false) as FAIL, None as a plain line.
    pub status: Option<bool>,
}

#[derive(Debug, Clone, Default)]
pub struct Section {
    pub title: String,
    pub entries: Vec<Entry>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn line(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.entries.push(Entry {
            key: key.into(),
            value: value.into(),
            status: None,
        });
    }

    pub fn check(&mut self, key: impl Into<String>, passed: bool, witness: impl Into<String>) {
        self.entries.push(Entry {
            key: key.into(),
            value: witness.into(),
            status: Some(passed),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Some(false))
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub sections: Vec<Section>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Structured,
}

impl Report {
    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn all_passed(&self) -> bool {
        self.sections.iter().all(|s| s.all_passed())
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => self.to_text(),
            ReportFormat::Structured => self.to_json(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for section in &self.sections {
            out.push_str(&format!("== {}\n", section.title));
            for e in &section.entries {
                match e.status {
                    Some(true) => {
                        if e.value.is_empty() {
                            out.push_str(&format!("PASS {}\n", e.key));
                        } else {
                            out.push_str(&format!("PASS {}: {}\n", e.key, e.value));
                        }
                    }
                    Some(false) => {
                        if e.value.is_empty() {
                            out.push_str(&format!("FAIL {}\n", e.key));
                        } else {
                            out.push_str(&format!("FAIL {}: {}\n", e.key, e.value));
                        }
                    }
                    None => out.push_str(&format!("{} = {}\n", e.key, e.value)),
                }
            }
        }
        out
    }

    fn to_json(&self) -> String {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let entries: Vec<Value> = s
                    .entries
                    .iter()
                    .map(|e| {
                        json!({
                            "key": e.key,
                            "value": e.value,
                            "status": e.status.map(|b| if b { "pass" } else { "fail" }),
                        })
                    })
                    .collect();
                json!({ "title": s.title, "entries": entries })
            })
            .collect();
        // serde_json maps are sorted, arrays keep insertion order: canonical
        let doc = json!({ "sections": sections });
        let mut text = serde_json::to_string_pretty(&doc).expect("report serialization");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn byte_identical_rendering() {
        let mut r = Report::default();
        let mut s = Section::new("demo");
        s.check("axiom.one", true, "");
        s.check("axiom.two", false, "witness (a, b)");
        s.line("order", "4");
        r.push(s);
        let t1 = r.render(ReportFormat::Text);
        let t2 = r.render(ReportFormat::Text);
        assert_eq!(t1, t2);
        assert_eq!(
            t1,
            "== demo\nPASS axiom.one\nFAIL axiom.two: witness (a, b)\norder = 4\n"
        );
        let j1 = r.render(ReportFormat::Structured);
        let j2 = r.render(ReportFormat::Structured);
        assert_eq!(j1, j2);
        assert!(j1.contains("\"status\": \"fail\""));
        assert!(!r.all_passed());
    }
}
