use thiserror::Error;

/// Failures raised by the evaluators.
///
/// Every variant names the offending parameter so the CLI can report it
/// verbatim and map it onto an exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {param} {reason} (got {value})")]
    Domain {
        param: &'static str,
        value: String,
        reason: &'static str,
    },

    #[error("singular term: zero base raised to negative exponent {exponent} at {location}")]
    SingularTerm { location: String, exponent: i64 },

    #[error("resource limit: {param}={value} exceeds the configured cap {cap}")]
    Resource {
        param: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("parse error: cannot read {input:?} as {expected}")]
    Parse {
        input: String,
        expected: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive_m(m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::Domain {
            param: "m",
            value: m.to_string(),
            reason: "must be at least 1",
        });
    }
    Ok(())
}
