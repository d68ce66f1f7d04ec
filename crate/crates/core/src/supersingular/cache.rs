//! Versioned text record for a supersingular set:
//!
//! ```text
//! ordcert-supersingular-set v1
//! p=11
//! degree=2
//! coefficients=0 10 1
//! sha256=<hex digest of the four lines above, newline-terminated>
//! ```

use sha2::{Digest, Sha256};

use super::ss::SupersingularSet;
use crate::error::{Error, Result};
use crate::ffield::ExtensionField;
use crate::polyring::FieldPolynomial;

pub const CACHE_HEADER: &str = "ordcert-supersingular-set v1";

fn digest(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

pub fn serialize_record(ss: &SupersingularSet) -> String {
    let coeffs: Vec<String> = ss.polynomial().raw_coefficients().iter().map(u64::to_string).collect();
    let body = format!(
        "{CACHE_HEADER}\np={}\ndegree={}\ncoefficients={}\n",
        ss.p(),
        ss.count(),
        coeffs.join(" ")
    );
    let sum = digest(&body);
    format!("{body}sha256={sum}\n")
}

fn field<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str> {
    line.and_then(|l| l.strip_prefix(key)?.strip_prefix('='))
        .ok_or_else(|| Error::CacheRecord(format!("missing `{key}`")))
}

/// Parses and fully re-validates a record; any mismatch is an error, never a partial result.
pub fn parse_record(text: &str) -> Result<SupersingularSet> {
    let Some((body, tail)) = text.rsplit_once("sha256=") else {
        return Err(Error::CacheRecord("missing checksum".into()));
    };
    if tail.trim_end() != digest(body) {
        return Err(Error::CacheRecord("checksum mismatch".into()));
    }
    let mut lines = body.lines();
    if lines.next() != Some(CACHE_HEADER) {
        return Err(Error::CacheRecord("unknown header".into()));
    }
    let num = |s: &str| s.trim().parse::<u64>().map_err(|e| Error::CacheRecord(e.to_string()));
    let p = num(field(lines.next(), "p")?)?;
    let degree = num(field(lines.next(), "degree")?)?;
    let coeffs = field(lines.next(), "coefficients")?
        .split_whitespace()
        .map(num)
        .collect::<Result<Vec<u64>>>()?;
    if coeffs.len() as u64 != degree + 1 || coeffs.iter().any(|&c| c >= p) {
        return Err(Error::CacheRecord("coefficient list inconsistent with p and degree".into()));
    }
    let f = ExtensionField::prime(p).map_err(|e| Error::CacheRecord(e.to_string()))?;
    let ints: Vec<i64> = coeffs.iter().map(|&c| c as i64).collect();
    let poly = FieldPolynomial::from_ints(&f, &ints);
    SupersingularSet::from_polynomial(poly).map_err(|e| Error::CacheRecord(e.to_string()))
}
