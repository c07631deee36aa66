//! Shared printing conventions for sums of terms.

use std::fmt;

use crate::scalars::is_atomic_display;

/// Render one term: a coefficient followed by `*`-joined basis factors.
pub(crate) fn render_term(coeff: &str, factors: &[String]) -> String {
    if factors.is_empty() {
        return if is_atomic_display(coeff) { coeff.to_string() } else { format!("({coeff})") };
    }
    let basis = factors.join("*");
    match coeff {
        "1" => basis,
        "-1" => format!("-{basis}"),
        c if is_atomic_display(c) => format!("{c}*{basis}"),
        c => format!("({c})*{basis}"),
    }
}

/// Join rendered terms with ` + ` / ` - `; an empty sum prints as `0`.
pub(crate) fn write_sum<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = String>,
{
    let mut first = true;
    for term in terms {
        if first {
            f.write_str(&term)?;
            first = false;
        } else if let Some(rest) = term.strip_prefix('-') {
            write!(f, " - {rest}")?;
        } else {
            write!(f, " + {term}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn exponent_list(entries: &[i64]) -> String {
    let body: Vec<String> = entries.iter().map(i64::to_string).collect();
    format!("[{}]", body.join(","))
}
