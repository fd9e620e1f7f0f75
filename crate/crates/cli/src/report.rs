//! Versioned JSON run reports and the role sidecar for gadget instances.

use megset::{GadgetInstance, Role, SolveStats};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// One JSON object per CLI run. Field presence depends on the subcommand;
/// absent fields are omitted entirely so output bytes stay stable. The only
/// field that varies between identical runs is `wall_us`.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counters: Option<SolveStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub document: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roles: Option<RoleSidecar>,
    pub wall_us: u64,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input_digest: None,
            method: None,
            k: None,
            ratio: None,
            epsilon: None,
            size: None,
            solution: None,
            certified: None,
            counters: None,
            pairs: None,
            document: None,
            roles: None,
            wall_us: 0,
        }
    }
}

/// One pair and the edges it monitors, as endpoint tuples.
#[derive(Debug, Clone, Serialize)]
pub struct PairEntry {
    pub x: usize,
    pub y: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Sidecar mapping gadget vertex ids to their construction roles. Written
/// next to the gadget document and embedded in reduction reports; enough to
/// reassemble the instance later.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleSidecar {
    pub schema_version: u32,
    pub source_n: usize,
    pub copies: usize,
    pub roles: Vec<RoleEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleEntry {
    pub id: usize,
    #[serde(flatten)]
    pub role: Role,
}

impl RoleSidecar {
    pub fn from_instance(inst: &GadgetInstance) -> Self {
        RoleSidecar {
            schema_version: SCHEMA_VERSION,
            source_n: inst.source_n(),
            copies: inst.copies,
            roles: inst
                .roles
                .iter()
                .enumerate()
                .map(|(id, &role)| RoleEntry { id, role })
                .collect(),
        }
    }
}

/// Machine-readable error object; every failure path emits one on stdout.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorReport {
    pub schema_version: u32,
    pub error: ErrorBody,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

impl ErrorReport {
    pub fn new(kind: &str, message: &str) -> Self {
        ErrorReport {
            schema_version: SCHEMA_VERSION,
            error: ErrorBody {
                kind: kind.to_string(),
                message: message.to_string(),
            },
        }
    }
}
