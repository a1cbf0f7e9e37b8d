//! JSON form of [`DomStarReport`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use twindom_core::DomStarReport;

use crate::trn;

/// Stamped into every report so stored goldens can detect format or
/// algorithm drift.
pub const GENERATOR_VERSION: &str = concat!(
    "twindom/",
    env!("CARGO_PKG_VERSION"),
    " extend+refined-canon/1"
);

/// Field order is the serialized order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomStarJson {
    pub n: usize,
    pub class_count: u64,
    pub dom_star: usize,
    /// Keys serialize as decimal strings in ascending numeric order.
    pub gamma_histogram: BTreeMap<usize, u64>,
    /// `trn`-encoded representatives.
    pub extremal: Vec<String>,
    pub generator_version: String,
}

impl From<&DomStarReport> for DomStarJson {
    fn from(r: &DomStarReport) -> Self {
        DomStarJson {
            n: r.n,
            class_count: r.class_count,
            dom_star: r.dom_star,
            gamma_histogram: r.gamma_histogram.clone(),
            extremal: r.extremal.iter().map(trn::encode).collect(),
            generator_version: GENERATOR_VERSION.to_string(),
        }
    }
}

/// Pretty-printed document with a trailing newline.
pub fn to_json(report: &DomStarReport) -> String {
    let mut s =
        serde_json::to_string_pretty(&DomStarJson::from(report)).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use twindom_core::enumeration::dom_star;

    #[test]
    fn field_order_and_keys() {
        let json = to_json(&dom_star(4).unwrap());
        let pos = |k: &str| json.find(&format!("\"{k}\"")).unwrap();
        let order = [
            "n",
            "class_count",
            "dom_star",
            "gamma_histogram",
            "extremal",
            "generator_version",
        ];
        assert!(order.windows(2).all(|w| pos(w[0]) < pos(w[1])), "{json}");
        let parsed: DomStarJson = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.class_count, 4);
        assert_eq!(parsed.gamma_histogram.values().sum::<u64>(), 4);
        assert_eq!(
            parsed.dom_star,
            *parsed.gamma_histogram.keys().last().unwrap()
        );
        for t in &parsed.extremal {
            trn::decode(t).unwrap();
        }
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(value["gamma_histogram"].get("2").is_some());
    }
}
