//! Deterministic JSON rendering helpers.
//!
//! Floats are rounded to 15 significant digits before serialisation. Any
//! decimal with at most 15 significant digits survives the round trip through
//! `f64`, so the shortest-representation printer used by `serde_json` emits
//! exactly the rounded digits, independent of locale.

use serde::ser::SerializeSeq;
use serde::Serializer;

/// Rounds to 15 significant decimal digits.
pub fn round_sig15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

pub fn sig15<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig15(*x))
}

pub fn sig15_opt<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_f64(round_sig15(*v)),
        None => s.serialize_none(),
    }
}

pub fn sig15_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&round_sig15(*x))?;
    }
    seq.end()
}

/// Pretty-printed JSON followed by a newline.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialise infallibly");
    s.push('\n');
    s
}
