//! The `decompose` and `branch` commands.

use serde_json::json;

use octoverify_core::roots::{
    alt_power, branch, decompose, irrep_character, parse_weight, weyl_dim, Projection, RootSystem,
    VirtualRep, Weight,
};

use crate::format::{irrep_label, rep_sum};

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] octoverify_core::Error),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Usage(_) => 2,
            CommandError::Engine(_) => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Md,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "md" => Ok(OutputFormat::Md),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DecomposeRequest {
    pub algebra: String,
    pub weight: String,
    pub power: Option<usize>,
    pub branch_to: Option<String>,
    pub format: OutputFormat,
}

fn parse_algebra(text: &str) -> Result<RootSystem, CommandError> {
    text.parse()
        .map_err(|e| CommandError::Usage(format!("algebra `{text}`: {e}")))
}

/// Λᵏ of an irrep (or the irrep itself), decomposed, optionally restricted
/// along the preset projection to `branch_to`.
pub fn run_decompose(req: &DecomposeRequest) -> Result<String, CommandError> {
    let source = parse_algebra(&req.algebra)?;
    let hw = parse_weight(&source, &req.weight)
        .map_err(|e| CommandError::Usage(format!("weight `{}`: {e}", req.weight)))?;
    let target = req.branch_to.as_deref().map(parse_algebra).transpose()?;

    let ch = irrep_character(&source, &hw)?;
    let ch = match req.power {
        None => (*ch).clone(),
        Some(k) => {
            let dim = weyl_dim(&source, &hw)?;
            if num_bigint::BigUint::from(k) > dim {
                return Err(CommandError::Usage(format!(
                    "power {k} exceeds the dimension {dim}"
                )));
            }
            alt_power(&ch, k)?
        }
    };
    let mut rep = decompose(&ch, &source)?;
    let mut rs = source.clone();
    if let Some(target) = target {
        let projection = Projection::preset(&source, &target)?;
        rep = branch(&rep, &source, &target, &projection)?;
        rs = target;
    }
    render(req, &source, &hw, &rs, &rep)
}

fn render(
    req: &DecomposeRequest,
    source: &RootSystem,
    hw: &Weight,
    rs: &RootSystem,
    rep: &VirtualRep,
) -> Result<String, CommandError> {
    let sum = rep_sum(rs, rep)?;
    let dim = rep.dim(rs)?;
    match req.format {
        OutputFormat::Json => {
            let out = json!({
                "algebra": source.label(),
                "highest_weight": source.dynkin_labels(hw),
                "power": req.power,
                "branch_to": req.branch_to.as_ref().map(|_| rs.label()),
                "dim": dim.to_string(),
                "sum": sum,
                "result": rep.to_json(rs)?,
            });
            let mut s = serde_json::to_string_pretty(&out).expect("json value");
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Md => {
            let mut out = format!(
                "{} irrep {:?}{}{}\n\n",
                source.label(),
                source.dynkin_labels(hw),
                req.power.map(|k| format!(", Λ^{k}")).unwrap_or_default(),
                req.branch_to
                    .as_ref()
                    .map(|_| format!(", restricted to {}", rs.label()))
                    .unwrap_or_default()
            );
            out.push_str("| irrep | Dynkin labels | multiplicity |\n|---|---|---|\n");
            for t in rep.terms() {
                out.push_str(&format!(
                    "| {} | {:?} | {} |\n",
                    irrep_label(rs, &t.hw)?,
                    rs.dynkin_labels(&t.hw),
                    t.coeff
                ));
            }
            out.push_str(&format!("\n{sum} (dim {dim})\n"));
            Ok(out)
        }
    }
}
