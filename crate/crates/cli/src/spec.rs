//! `w0,...,wn/d1,...,dc` model strings.

use cydouble::WciModel;

use crate::CliError;

fn parse_list(part: &str, what: &str) -> Result<Vec<u64>, CliError> {
    let part = part.trim();
    if part.is_empty() {
        return Ok(Vec::new());
    }
    part.split(',')
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<u64>() {
                Ok(n) if n > 0 => Ok(n),
                _ => Err(CliError::Usage(format!(
                    "invalid {what} '{tok}': expected a positive integer"
                ))),
            }
        })
        .collect()
}

/// Parses weights and degrees separated by a single `/`. The degree list
/// may be empty, which gives the ambient weighted projective space.
pub fn parse_model_spec(s: &str) -> Result<WciModel, CliError> {
    let Some((weights, degrees)) = s.split_once('/') else {
        return Err(CliError::Usage(format!(
            "model '{s}' is missing '/' between weights and degrees"
        )));
    };
    if degrees.contains('/') {
        return Err(CliError::Usage(format!(
            "model '{s}' has more than one '/'"
        )));
    }
    let weights = parse_list(weights, "weight")?;
    if weights.is_empty() {
        return Err(CliError::Usage(format!("model '{s}' has no weights")));
    }
    let degrees = parse_list(degrees, "degree")?;
    Ok(WciModel::new(weights, degrees)?)
}
