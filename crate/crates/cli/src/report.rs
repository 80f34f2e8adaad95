//! Text-report formatting: 12 significant digits for human output;
//! machine output goes through serde_json at full precision.

/// Format with 12 significant digits, fixed-point where the magnitude
/// allows and scientific notation otherwise.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0.000000000000".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:e}");
    let mag: i32 = sci
        .split('e')
        .nth(1)
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    if !(-4..=15).contains(&mag) {
        return format!("{x:.11e}");
    }
    let prec = (11 - mag).max(0) as usize;
    format!("{x:.prec$}")
}

/// CSV cell with 17 significant digits for exact f64 round-tripping.
pub fn fmt_csv(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(1.0), "1.00000000000");
        assert_eq!(fmt_sig(0.5), "0.500000000000");
        assert_eq!(fmt_sig(0.1), "0.100000000000");
        assert_eq!(fmt_sig(0.0), "0.000000000000");
        assert_eq!(fmt_sig(123.456), "123.456000000");
        assert_eq!(fmt_sig(1e-7), "1.00000000000e-7");
    }

    #[test]
    fn csv_round_trip() {
        for &x in &[0.1, 1.0 / 3.0, 2f64.sqrt(), 1e-12] {
            let s = fmt_csv(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
        }
    }
}
