//! Stable JSON report schema:
//! `{group, class_spec, k, h, flags:{E,C,M,D}, radical_order,
//!   full_reduction:{order, iso_name?},
//!   pairs:[{normal_order, k_quotient, k_normal, equality, consistent}]}`
//! plus the suite result shape `{suite, instances, violations, millis}`.

use serde::{Deserialize, Serialize};

use crate::reduction::{ClassFlags, ReductionReport};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlagsJson {
    #[serde(rename = "E")]
    pub e: bool,
    #[serde(rename = "C")]
    pub c: bool,
    #[serde(rename = "M")]
    pub m: bool,
    #[serde(rename = "D")]
    pub d: bool,
}

impl From<ClassFlags> for FlagsJson {
    fn from(f: ClassFlags) -> Self {
        FlagsJson {
            e: f.e_x,
            c: f.c_x,
            m: f.m_x,
            d: f.d_x,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairJson {
    pub normal_order: u64,
    pub k_quotient: usize,
    pub k_normal: usize,
    pub equality: bool,
    pub consistent: bool,
}

impl From<&ReductionReport> for PairJson {
    fn from(r: &ReductionReport) -> Self {
        PairJson {
            normal_order: r.normal_order,
            k_quotient: r.k_quotient,
            k_normal: r.k_n,
            equality: r.equality,
            consistent: r.theorem_consistent,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FullReductionJson {
    pub order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_name: Option<String>,
}

/// One group/class report; subcommands fill the fields they computed.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct GroupReportJson {
    pub group: String,
    pub class_spec: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flags: Option<FlagsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radical_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub full_reduction: Option<FullReductionJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub pairs: Vec<PairJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub scheme: Vec<SchemeEntryJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SchemeEntryJson {
    pub order: u64,
    pub class_size: u64,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ViolationJson {
    pub context: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteJson {
    pub suite: String,
    pub instances: usize,
    pub violations: Vec<ViolationJson>,
    pub millis: u128,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_field_names_are_stable() {
        let report = GroupReportJson {
            group: "Alt(5)".into(),
            class_spec: "pi{2,3}".into(),
            k: Some(2),
            h: Some(1),
            flags: Some(FlagsJson {
                e: true,
                c: true,
                m: false,
                d: false,
            }),
            radical_order: Some(1),
            full_reduction: Some(FullReductionJson {
                order: 60,
                iso_name: Some("Alt(5)".into()),
            }),
            pairs: vec![PairJson {
                normal_order: 60,
                k_quotient: 1,
                k_normal: 2,
                equality: false,
                consistent: true,
            }],
            scheme: vec![],
        };
        let v: serde_json::Value = serde_json::to_value(&report).unwrap();
        assert_eq!(v["flags"]["E"], true);
        assert_eq!(v["flags"]["M"], false);
        assert_eq!(v["pairs"][0]["k_normal"], 2);
        assert_eq!(v["full_reduction"]["order"], 60);
        assert_eq!(v["radical_order"], 1);
    }

    #[test]
    fn empty_suite_serializes_with_empty_violations() {
        let s = SuiteJson {
            suite: "theorem1".into(),
            instances: 0,
            violations: vec![],
            millis: 0,
            notes: vec![],
        };
        let v: serde_json::Value = serde_json::to_value(&s).unwrap();
        assert!(v["violations"].as_array().unwrap().is_empty());
    }
}
