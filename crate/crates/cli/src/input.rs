use std::path::Path;

use serde::de::DeserializeOwned;
use serde_json::Value;
use strictmono::constructions::SequenceProfile;
use strictmono::core_monotone::LengthProfile;

use crate::{Malformed, ProfileArgs};

pub fn read_json(path: &Path) -> Result<Value, Malformed> {
    let text = std::fs::read_to_string(path).map_err(|e| Malformed(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Malformed(format!("{}: {e}", path.display())))
}

pub fn decode<T: DeserializeOwned>(value: Value) -> Result<T, Malformed> {
    Ok(serde_json::from_value(value)?)
}

/// `--profile` holds inline JSON when it starts with `{`, else a file path.
pub fn profile_json(args: &ProfileArgs) -> Result<Option<Value>, Malformed> {
    match &args.profile {
        None => Ok(None),
        Some(text) if text.trim_start().starts_with('{') => Ok(Some(serde_json::from_str(text)?)),
        Some(path) => read_json(Path::new(path)).map(Some),
    }
}

fn uniform_params(args: &ProfileArgs) -> Result<(usize, u64), Malformed> {
    match (args.n, args.ell) {
        (Some(n), Some(ell)) => Ok((n, ell)),
        _ => Err(Malformed("give --profile, or both --n and --ell".into())),
    }
}

fn check_dim(args: &ProfileArgs, n: usize) -> Result<(), Malformed> {
    match args.n {
        Some(m) if m != n => Err(Malformed(format!("--n {m} disagrees with profile dimension {n}"))),
        _ => Ok(()),
    }
}

pub fn length_profile(args: &ProfileArgs, strict: bool) -> Result<LengthProfile, Malformed> {
    if let Some(v) = profile_json(args)? {
        let p: LengthProfile = decode(v)?;
        if p.is_strict() != strict {
            return Err(Malformed(format!(
                "expected a {} profile",
                if strict { "strict" } else { "nonstrict" }
            )));
        }
        check_dim(args, p.dim())?;
        return Ok(p);
    }
    let (n, ell) = uniform_params(args)?;
    Ok(LengthProfile::uniform(n, strict, ell)?)
}

pub fn sequence_profile(args: &ProfileArgs) -> Result<SequenceProfile, Malformed> {
    if let Some(v) = profile_json(args)? {
        let p: SequenceProfile = decode(v)?;
        check_dim(args, p.dim())?;
        return Ok(p);
    }
    let (n, ell) = uniform_params(args)?;
    Ok(SequenceProfile::uniform(n, ell)?)
}
