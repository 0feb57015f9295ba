use serde::{Deserialize, Serialize};

/// One checked instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub ms: u64,
}

/// An instance the suite deliberately does not run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub id: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<Entry>,
    pub failures: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skipped>,
}

impl Report {
    pub fn new(entries: Vec<Entry>, skipped: Vec<Skipped>, seed: u64) -> Self {
        let failures = entries.iter().filter(|e| !e.pass).count();
        Report { entries, failures, seed, skipped }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn failed(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let e = |id: &str, pass| Entry { id: id.into(), expected: "S^1".into(), computed: "H1=Z".into(), pass, ms: 3 };
        let r = Report::new(vec![e("a", true), e("b", false)], vec![], 7);
        assert_eq!(r.failures, 1);
        assert!(!r.passed());
        let text = r.to_json();
        assert!(!text.contains("skipped"));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["entries"][1]["pass"], false);
        assert_eq!(v["seed"], 7);
        assert_eq!(Report::from_json(&text).unwrap(), r);
    }
}
