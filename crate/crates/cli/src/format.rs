//! Deterministic number formatting for stdout, SVG and goldens.

/// Twelve significant digits in the style of C's `%.12g`: fixed notation
/// for exponents in `-4..12`, scientific otherwise, trailing zeros dropped.
/// Ties round half to even.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{}{:02}", trim_zeros(mantissa.to_string()), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

/// Six decimals, never printing a negative zero.
pub fn fixed6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".to_string()
    } else {
        t.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(2f64.cbrt()), "1.25992104989");
        assert_eq!(sig12(-1.0), "-1");
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(-0.0), "0");
        assert_eq!(sig12(1e-5), "1e-05");
        assert_eq!(sig12(2.5e-16), "2.5e-16");
        assert_eq!(sig12(123456789012345.0), "1.23456789012e+14");
        assert_eq!(sig12(0.0001234), "0.0001234");
        assert_eq!(sig12(100.0), "100");
        assert_eq!(sig12(999999999999.5), "1e+12");
    }

    #[test]
    fn half_even_ties() {
        // 0.5 and 2.5 are exact binary ties at the last kept digit.
        assert_eq!(sig12(1.0000000000005), "1");
        assert_eq!(sig12(0.125e-3), "0.000125");
        assert_eq!(format!("{:.0}", 2.5f64), "2");
    }

    #[test]
    fn six_decimals() {
        assert_eq!(fixed6(20.0000000000001), "20.000000");
        assert_eq!(fixed6(-1e-9), "0.000000");
        assert_eq!(fixed6(2.0), "2.000000");
    }
}
