//! Sweep parameter assembly: flat key=value config files, command-line
//! overrides, and validation of the resulting grid.

use std::collections::BTreeMap;
use std::path::Path;

use glqchar::arith::prime_power;
use glqchar::statistics::StatKind;

use crate::render::TableFormat;
use crate::CliError;

/// Fully validated sweep parameters.
pub struct SweepSpec {
    pub kind: StatKind,
    pub q_values: Vec<u64>,
    pub d_values: Vec<u64>,
    pub n0_values: Vec<u32>,
    pub n_values: Vec<u32>,
    pub format: TableFormat,
    pub out: Option<std::path::PathBuf>,
}

impl SweepSpec {
    /// Merges a config file (if any) with command-line flags; flags override
    /// config keys wholesale. Validates the grid.
    #[allow(clippy::too_many_arguments)]
    pub fn assemble(
        config_path: Option<&Path>,
        kind: Option<String>,
        q: &[String],
        d: &[String],
        n0: &[String],
        n: &[String],
        format: Option<String>,
        out: Option<std::path::PathBuf>,
    ) -> Result<SweepSpec, CliError> {
        let file_keys = match config_path {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))?;
                parse_config(&text)?
            }
            None => BTreeMap::new(),
        };

        let pick = |flag: &[String], key: &str| -> Vec<String> {
            if !flag.is_empty() {
                flag.to_vec()
            } else {
                file_keys.get(key).cloned().unwrap_or_default()
            }
        };

        let q_values = parse_u64_list(&pick(q, "q"), "q")?;
        let d_values = parse_u64_list(&pick(d, "d"), "d")?;
        let n0_values: Vec<u32> = parse_u64_list(&pick(n0, "n0"), "n0")?
            .into_iter()
            .map(|v| u32::try_from(v).map_err(|_| CliError::usage("n0 out of range")))
            .collect::<Result<_, _>>()?;
        let n_values: Vec<u32> = parse_u64_list(&pick(n, "n"), "n")?
            .into_iter()
            .map(|v| u32::try_from(v).map_err(|_| CliError::usage("n out of range")))
            .collect::<Result<_, _>>()?;

        let kind_text = kind
            .or_else(|| file_keys.get("kind").and_then(|v| v.last().cloned()))
            .unwrap_or_else(|| {
                if n0_values.is_empty() {
                    "degree-divisible".to_string()
                } else {
                    "value-certified".to_string()
                }
            });
        let kind: StatKind = kind_text
            .parse()
            .map_err(|e| CliError::usage(format!("{e}")))?;

        let format_text = format
            .or_else(|| file_keys.get("format").and_then(|v| v.last().cloned()))
            .unwrap_or_else(|| "csv".to_string());
        let format = TableFormat::parse(&format_text)?;
        if format == TableFormat::Table {
            return Err(CliError::usage("sweep output must be csv or json"));
        }

        let out = out.or_else(|| {
            file_keys
                .get("out")
                .and_then(|v| v.last().cloned())
                .map(std::path::PathBuf::from)
        });

        validate(kind, &q_values, &d_values, &n0_values, &n_values)?;
        Ok(SweepSpec {
            kind,
            q_values,
            d_values,
            n0_values,
            n_values,
            format,
            out,
        })
    }
}

fn validate(
    kind: StatKind,
    q_values: &[u64],
    d_values: &[u64],
    n0_values: &[u32],
    n_values: &[u32],
) -> Result<(), CliError> {
    if n_values.is_empty() {
        return Err(CliError::usage("sweep needs a nonempty n range (--n)"));
    }
    if q_values.is_empty() {
        return Err(CliError::usage("sweep needs at least one q (--q)"));
    }
    for &q in q_values {
        if prime_power(q).is_none() {
            return Err(CliError::usage(format!(
                "q = {q} is not a prime power >= 2"
            )));
        }
    }
    if n_values.contains(&0) {
        return Err(CliError::usage("n must be positive"));
    }
    match kind {
        StatKind::PDivisible => {}
        StatKind::DegreeDivisible => {
            if d_values.is_empty() {
                return Err(CliError::usage(
                    "degree-divisible sweeps need at least one d (--d)",
                ));
            }
        }
        StatKind::ValueCertified => {
            if d_values.is_empty() {
                return Err(CliError::usage(
                    "value-certified sweeps need at least one d (--d)",
                ));
            }
            if n0_values.is_empty() {
                return Err(CliError::usage(
                    "value-certified sweeps need at least one n0 (--n0)",
                ));
            }
            let min_n = *n_values.iter().min().unwrap();
            for &n0 in n0_values {
                if n0 == 0 || n0 > min_n {
                    return Err(CliError::usage(format!(
                        "n0 = {n0} must satisfy 1 <= n0 <= min(n) = {min_n}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Parses a flat key=value file. `#` starts a comment; repeated keys
/// accumulate into lists.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, Vec<String>>, CliError> {
    let mut keys: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::usage(format!(
                "config line {}: expected key=value, got '{line}'",
                lineno + 1
            )));
        };
        keys.entry(key.trim().to_string())
            .or_default()
            .push(value.trim().to_string());
    }
    Ok(keys)
}

/// Expands a list of tokens into numbers: each token may be a plain value,
/// a comma list, or an inclusive range `a..b`.
fn parse_u64_list(tokens: &[String], name: &str) -> Result<Vec<u64>, CliError> {
    let mut out = Vec::new();
    for token in tokens {
        for piece in token.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            if let Some((lo, hi)) = piece.split_once("..") {
                let lo: u64 = parse_number(lo, name)?;
                let hi: u64 = parse_number(hi, name)?;
                if lo > hi {
                    return Err(CliError::usage(format!("empty range {piece} for {name}")));
                }
                out.extend(lo..=hi);
            } else {
                out.push(parse_number(piece, name)?);
            }
        }
    }
    Ok(out)
}

fn parse_number(text: &str, name: &str) -> Result<u64, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::usage(format!("invalid {name} value '{}'", text.trim())))
}
