//! Helpers for the stable machine-readable report encoding.
//!
//! Reports print with a fixed field order and floats pinned to 9 decimal
//! places so repeated runs are byte-identical; wall-clock timings are
//! deliberately excluded from the stable encoding.

/// Fixed 9-decimal float form used in every report.
pub fn fixed9(x: f64) -> String {
    format!("{x:.9}")
}

/// JSON string literal with the characters that matter here escaped.
pub fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// `["a","b"]` from string-ish items.
pub fn json_str_array<I: IntoIterator<Item = String>>(items: I) -> String {
    let body: Vec<String> = items.into_iter().map(|s| json_str(&s)).collect();
    format!("[{}]", body.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_decimals_always() {
        assert_eq!(fixed9(2.0), "2.000000000");
        assert_eq!(fixed9(18f64.sqrt()), "4.242640687");
        assert_eq!(fixed9(-1.0), "-1.000000000");
    }

    #[test]
    fn strings_escape() {
        assert_eq!(json_str("a\"b"), "\"a\\\"b\"");
        assert_eq!(json_str_array(vec!["x".into(), "y".into()]), "[\"x\",\"y\"]");
    }
}
