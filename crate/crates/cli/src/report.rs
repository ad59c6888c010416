use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use schurpp_core::identities::IdentityResult;
use schurpp_core::planepart::EnumerationCaps;

/// One executed check with its timing.
#[derive(Clone, Debug, Serialize)]
pub struct Run {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_monomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl Run {
    pub fn from_result(result: &IdentityResult, wall_time_ms: Option<u64>) -> Run {
        Run {
            identity: result.identity.clone(),
            params: result.params.iter().cloned().collect(),
            holds: result.holds,
            witness_monomial: if result.holds {
                None
            } else {
                result.witness_monomial.clone()
            },
            wall_time_ms,
        }
    }

    fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct EngineConfig {
    pub max_rows: usize,
    pub max_cols: usize,
    pub max_height: u32,
    pub degree: u32,
    pub workers: usize,
}

impl EngineConfig {
    pub fn new(caps: EnumerationCaps, degree: u32, workers: usize) -> EngineConfig {
        EngineConfig {
            max_rows: caps.max_rows,
            max_cols: caps.max_cols,
            max_height: caps.max_height,
            degree,
            workers,
        }
    }
}

/// Full machine-readable output of a `verify` invocation. With the
/// timestamp suppressed the serialization is byte-stable for fixed flags
/// (timings are dropped along with it).
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub engine_config: EngineConfig,
    pub runs: Vec<Run>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(runs: Vec<Run>, engine_config: EngineConfig, timestamp: Option<u64>) -> Self {
        let pass = runs.iter().filter(|r| r.holds).count();
        let fail = runs.len() - pass;
        VerificationReport {
            timestamp,
            engine_config,
            runs,
            summary: Summary { pass, fail },
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn write_pretty(&self, out: &mut impl Write) -> std::io::Result<()> {
        for run in &self.runs {
            let verdict = if run.holds { "PASS" } else { "FAIL" };
            let timing = run
                .wall_time_ms
                .map(|ms| format!("  ({ms} ms)"))
                .unwrap_or_default();
            let witness = run
                .witness_monomial
                .as_deref()
                .map(|w| format!("  witness {w}"))
                .unwrap_or_default();
            writeln!(
                out,
                "{verdict}  {} {}{timing}{witness}",
                run.identity,
                run.params_string()
            )?;
        }
        writeln!(
            out,
            "{} passed, {} failed",
            self.summary.pass, self.summary.fail
        )
    }

    pub fn write_json(&self, out: &mut impl Write) -> std::io::Result<()> {
        let body = serde_json::to_string_pretty(self).expect("report serializes");
        writeln!(out, "{body}")
    }

    pub fn write_csv(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "identity,params,holds,witness_monomial,wall_time_ms")?;
        for run in &self.runs {
            writeln!(
                out,
                "{},{},{},{},{}",
                run.identity,
                run.params_string(),
                run.holds,
                run.witness_monomial.as_deref().unwrap_or(""),
                run.wall_time_ms.map(|t| t.to_string()).unwrap_or_default()
            )?;
        }
        Ok(())
    }
}
