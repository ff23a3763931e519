use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use serde_json::Value;

use super::ScenarioPoint;
use crate::chern::Verdict;
use crate::indices::{LocalBounds, PointClass, PointIndices, TangentCone};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    HypothesesNotMet,
    Skipped(String),
}

impl Status {
    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn from_verdict(v: Verdict) -> Self {
        match v {
            Verdict::Holds => Status::Pass,
            Verdict::Fails => Status::Fail,
            Verdict::HypothesesNotMet => Status::HypothesesNotMet,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::HypothesesNotMet => write!(f, "hypotheses-not-met"),
            Status::Skipped(reason) => write!(f, "{reason}"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictEntry {
    pub name: String,
    pub status: Status,
    /// Computed side of the comparison.
    pub lhs: Option<String>,
    /// Reference side of the comparison.
    pub rhs: Option<String>,
    pub detail: Option<String>,
    /// Reported but not counted in the exit code.
    pub advisory: bool,
}

impl VerdictEntry {
    pub fn new(name: &str, status: Status) -> Self {
        Self::new_owned(name.to_string(), status)
    }

    pub fn new_owned(name: String, status: Status) -> Self {
        Self { name, status, lhs: None, rhs: None, detail: None, advisory: false }
    }

    pub fn sides(mut self, lhs: &BigInt, rhs: &BigInt) -> Self {
        self.lhs = Some(lhs.to_string());
        self.rhs = Some(rhs.to_string());
        self
    }

    pub fn detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }

    pub fn advisory(mut self) -> Self {
        self.advisory = true;
        self
    }

    /// A failure that counts against the exit code.
    pub fn is_blocking_failure(&self) -> bool {
        self.status == Status::Fail && !self.advisory
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalValues {
    #[serde(rename = "integral_X", serialize_with = "crate::as_decimal")]
    pub integral_x: BigInt,
    #[serde(serialize_with = "crate::as_decimal")]
    pub baum_bott_total: BigInt,
    #[serde(serialize_with = "crate::as_decimal")]
    pub gsv_total: BigInt,
    #[serde(serialize_with = "crate::as_decimal")]
    pub schwartz_total: BigInt,
    #[serde(rename = "chi_D", serialize_with = "crate::as_decimal")]
    pub chi_d: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointReport {
    pub index: usize,
    pub label: String,
    pub chart: u32,
    pub coords: Vec<String>,
    pub class: Option<PointClass>,
    pub indices: Option<PointIndices>,
    pub bounds: Option<LocalBounds>,
    pub tangent_cone: Option<TangentCone>,
    pub error: Option<String>,
    /// The indices at this point could not be computed.
    pub refused: bool,
}

impl PointReport {
    pub(super) fn new(index: usize, p: &ScenarioPoint) -> Self {
        Self {
            index: index + 1,
            label: p.display_name(index),
            chart: p.chart,
            coords: p.coords.iter().map(ToString::to_string).collect(),
            class: None,
            indices: None,
            bounds: None,
            tangent_cone: None,
            error: None,
            refused: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub n: usize,
    pub d: u64,
    pub k: u64,
    pub complete: bool,
    pub points: Vec<PointReport>,
    pub globals: Option<GlobalValues>,
    pub verdicts: Vec<VerdictEntry>,
    pub warnings: Vec<String>,
}

/// Replaces every JSON number by its decimal string.
pub fn numbers_as_strings(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(items) => Value::Array(items.into_iter().map(numbers_as_strings).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, numbers_as_strings(v))).collect()),
        other => other,
    }
}

fn opt<T: fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn class_name(c: Option<PointClass>) -> &'static str {
    match c {
        Some(PointClass::FoliationOffHypersurface) => "sing F, off D",
        Some(PointClass::FoliationOnSmoothHypersurface) => "sing F, smooth D",
        Some(PointClass::FoliationAndHypersurface) => "sing F, sing D",
        Some(PointClass::HypersurfaceOnly) => "sing D only",
        Some(PointClass::Regular) => "regular",
        None => "-",
    }
}

impl IndexReport {
    /// 0 when every counted verdict passes, 2 when some point could not be
    /// computed, 3 when a verdict fails.
    pub fn exit_code(&self) -> u8 {
        if self.points.iter().any(|p| p.refused) {
            2
        } else if self.verdicts.iter().any(VerdictEntry::is_blocking_failure) {
            3
        } else {
            0
        }
    }

    pub fn verdict(&self, name: &str) -> Option<&VerdictEntry> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    /// Structured document with sorted keys and numbers as decimal strings.
    pub fn to_json(&self) -> Value {
        numbers_as_strings(serde_json::to_value(self).expect("report serializes"))
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn points_table(&self) -> String {
        let header = ["point", "chart", "at", "class", "mu_F", "mu_D", "tau", "m", "GSV", "Sch", "Res_cn"];
        let mut rows: Vec<Vec<String>> = vec![header.iter().map(ToString::to_string).collect()];
        for p in &self.points {
            let ix = p.indices.clone().unwrap_or_default();
            rows.push(vec![
                p.label.clone(),
                p.chart.to_string(),
                format!("({})", p.coords.join(", ")),
                class_name(p.class).to_string(),
                opt(ix.mu_f),
                opt(ix.mu_d),
                opt(ix.tjurina),
                opt(ix.multiplicity),
                opt(ix.gsv),
                opt(ix.schwartz),
                opt(ix.residue_cn),
            ]);
        }
        let widths: Vec<usize> =
            (0..header.len()).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for row in &rows {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
        }
        for p in &self.points {
            if let Some(ix) = &p.indices {
                let levels: Vec<String> = [
                    ("mu_F", &ix.certification.mu_f),
                    ("mu_D", &ix.certification.mu_d),
                    ("tau", &ix.certification.tjurina),
                    ("<f,a>", &ix.certification.f_and_field),
                    ("<h,a>", &ix.certification.cofactor_and_field),
                ]
                .iter()
                .filter_map(|(name, r)| r.as_ref().map(|r| format!("{name}@{}", r.truncation_level)))
                .collect();
                if !levels.is_empty() {
                    writeln!(out, "  {}: certified at {}", p.label, levels.join(" ")).unwrap();
                }
            }
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "scenario n={} d={} k={} complete={}", self.n, self.d, self.k, self.complete).unwrap();
        writeln!(out).unwrap();
        out.push_str(&self.points_table());
        if let Some(g) = &self.globals {
            writeln!(out).unwrap();
            writeln!(out, "integral_X       {}", g.integral_x).unwrap();
            writeln!(out, "baum_bott_total  {}", g.baum_bott_total).unwrap();
            writeln!(out, "gsv_total        {}", g.gsv_total).unwrap();
            writeln!(out, "schwartz_total   {}", g.schwartz_total).unwrap();
            writeln!(out, "chi_D            {}", g.chi_d).unwrap();
        }
        writeln!(out).unwrap();
        let width = self.verdicts.iter().map(|v| v.name.len()).max().unwrap_or(0);
        for v in &self.verdicts {
            let mut line = format!("{:<width$}  {}", v.name, v.status);
            if let (Some(l), Some(r)) = (&v.lhs, &v.rhs) {
                write!(line, "  ({l} vs {r})").unwrap();
            }
            if let Some(d) = &v.detail {
                write!(line, "  {d}").unwrap();
            }
            if v.advisory {
                line.push_str("  [advisory]");
            }
            writeln!(out, "{line}").unwrap();
        }
        if !self.warnings.is_empty() {
            writeln!(out).unwrap();
            for w in &self.warnings {
                writeln!(out, "warning: {w}").unwrap();
            }
        }
        out
    }
}
