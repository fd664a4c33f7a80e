//! Ingestion of state-set documents.
//!
//! The accepted shape is JSON: an object with a positive integer `dim`,
//! a `states` array of amplitude lists (each amplitude a `[re, im]`
//! pair), and an optional `labels` array. States must arrive normalized:
//! a squared norm off by more than `1e-6` is a validation error naming
//! the state index, never silently rescaled. Deviations inside that
//! tolerance (hand-typed constants) are corrected exactly and reported
//! as diagnostics.

use serde::Deserialize;

use statequant::hilbert::{PureState, C64, NORM_TOL};
use statequant::measures::StateSet;

/// Largest accepted deviation of a squared norm from 1; generous for
/// hand-authored files.
pub const DOCUMENT_NORM_TOL: f64 = 1e-6;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateSetDocument {
    dim: usize,
    states: Vec<Vec<[f64; 2]>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

/// Parses and validates a state-set document, returning the
/// deduplicated set together with human-readable diagnostics (norm
/// corrections and dedup merges).
pub fn parse_state_set(text: &str) -> Result<(StateSet, Vec<String>), String> {
    let doc: StateSetDocument =
        serde_json::from_str(text).map_err(|e| format!("parse error: {e}"))?;

    if doc.dim == 0 {
        return Err("dim must be a positive integer".to_string());
    }
    if doc.states.is_empty() {
        return Err("states must be a nonempty array".to_string());
    }
    if let Some(labels) = &doc.labels {
        if labels.len() != doc.states.len() {
            return Err(format!(
                "labels has {} entries but states has {}",
                labels.len(),
                doc.states.len()
            ));
        }
    }

    let label = |i: usize| -> String {
        match &doc.labels {
            Some(labels) => format!("state {i} ({})", labels[i]),
            None => format!("state {i}"),
        }
    };

    let mut diagnostics = Vec::new();
    let mut states = Vec::with_capacity(doc.states.len());
    for (i, amplitudes) in doc.states.iter().enumerate() {
        if amplitudes.len() != doc.dim {
            return Err(format!(
                "{} has {} amplitudes, expected dim {}",
                label(i),
                amplitudes.len(),
                doc.dim
            ));
        }
        let v: Vec<C64> = amplitudes.iter().map(|[re, im]| C64::new(*re, *im)).collect();
        let norm_sq: f64 = v.iter().map(|a| a.norm_sqr()).sum();
        if !norm_sq.is_finite() {
            return Err(format!("{} contains a non-finite amplitude", label(i)));
        }
        let deviation = (norm_sq - 1.0).abs();
        if deviation > DOCUMENT_NORM_TOL {
            return Err(format!(
                "{} is not normalized: squared norm {} deviates from 1 by more than {}",
                label(i),
                norm_sq,
                DOCUMENT_NORM_TOL
            ));
        }
        if deviation > NORM_TOL {
            diagnostics.push(format!(
                "{}: squared norm {} corrected to unit norm",
                label(i),
                norm_sq
            ));
        }
        states.push(PureState::normalized(v).map_err(|e| format!("{}: {e}", label(i)))?);
    }

    let set = StateSet::new(states).map_err(|e| e.to_string())?;
    for merge in set.dedup_merges() {
        diagnostics.push(format!(
            "deduplicated {} into {} (overlap {})",
            label(merge.dropped),
            label(merge.kept),
            merge.overlap
        ));
    }
    Ok((set, diagnostics))
}
