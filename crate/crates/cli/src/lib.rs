//! Batch driver for `lietrace` jobs.
//!
//! A job is a JSON document with a `kind` of `trace`, `genus`, `sweep` or
//! `verify`. Rationals are always JSON strings such as `"3"` or `"-5/8"`.
//! [`parse_job`] validates a document, [`run_job`] evaluates it and
//! [`emit_csv`] writes the resulting [`Report`].

pub mod error;
pub mod job;
pub mod report;
pub mod run;

pub use error::CliError;
pub use job::{parse_job, JobSpec, OutputFormat};
pub use report::{emit_csv, render_csv, Report};
pub use run::{run_job, verify_catalog, Limits};

/// Formats a rational as `p/q`, or `p` when it is an integer.
pub fn format_rational(q: &lietrace::Rational) -> String {
    q.to_string()
}

/// Parses `p/q` or `p`; rejects zero denominators and surrounding junk.
pub fn parse_rational(s: &str) -> Option<lietrace::Rational> {
    let t = s.trim();
    if t.is_empty() || t != s || t.starts_with('+') || t.contains("/+") || t.contains("/-") {
        return None;
    }
    t.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use lietrace::{frac, rat};

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&rat(3)), "3");
        assert_eq!(format_rational(&frac(-10, 16)), "-5/8");
        assert_eq!(parse_rational("-5/8"), Some(frac(-5, 8)));
        assert_eq!(parse_rational("4/2"), Some(rat(2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational(" 1"), None);
        assert_eq!(parse_rational("1.5"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(parse_rational(""), None);
    }
}
