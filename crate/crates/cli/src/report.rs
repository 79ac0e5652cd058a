//! Machine-readable report emitted by every command.

use serde::Serialize;
use serde_json::Value;

use logconvex::dynamics::ConvexityVerdict;
use logconvex::props::PropertyReport;

#[derive(Serialize)]
pub struct InputDescriptor {
    pub kind: String,
    pub name: String,
    pub params: Value,
    pub n: usize,
    pub sha256: String,
}

/// Echo of everything needed to reproduce the run.
#[derive(Serialize)]
pub struct ConfigEcho {
    pub seed: u64,
    pub tol_abs: f64,
    pub tol_rel: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_max: Option<f64>,
    pub n_points: usize,
    pub grid: String,
    pub angles: usize,
    pub samples: usize,
    pub starts: usize,
    pub iters: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u0: Option<String>,
    pub assert: bool,
}

/// Scalar summary values; only the fields the command computed are present.
#[derive(Serialize, Default)]
pub struct Summary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_a2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutator_lambda_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criterion_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_prime0_analytic: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_prime0_numeric: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_prime0_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral_abscissa: Option<f64>,
}

#[derive(Serialize)]
pub struct Report {
    pub tool_version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    pub input: InputDescriptor,
    pub config: ConfigEcho,
    pub properties: Vec<PropertyReport>,
    pub verdicts: Vec<ConvexityVerdict>,
    pub summary: Summary,
}

impl Report {
    pub fn new(input: InputDescriptor, config: ConfigEcho, with_timestamp: bool) -> Self {
        Report {
            tool_version: env!("CARGO_PKG_VERSION"),
            timestamp: with_timestamp.then(|| chrono::Utc::now().to_rfc3339()),
            input,
            config,
            properties: Vec::new(),
            verdicts: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn any_violated(&self) -> bool {
        self.properties.iter().any(|p| p.violated())
            || self
                .verdicts
                .iter()
                .any(|v| v.status == logconvex::dynamics::VerdictStatus::Violated)
    }
}
