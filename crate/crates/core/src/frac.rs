//! Exact fraction arithmetic for supports, confidences and thresholds.
//!
//! Every comparison in the library is made on reduced integer fractions;
//! binary floating point is only used when rendering a decimal column in
//! reports. This keeps boundary cases such as an interest value exactly
//! equal to the threshold reproducible.

use num_rational::Rational64;

pub type Frac = Rational64;

/// Shorthand constructor. Panics if `den` is zero.
pub fn frac(num: i64, den: i64) -> Frac {
    Frac::new(num, den)
}

/// Parse a fraction from `"3/10"`, `"0.3"`, `".3"` or `"1"`.
///
/// Decimal inputs become exact decimal fractions (`0.07` -> `7/100`);
/// they are never routed through binary floating point.
pub fn parse_frac(s: &str) -> std::result::Result<Frac, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty value".to_string());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in '{s}'"))?;
        let den: i64 = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in '{s}'"))?;
        if den == 0 {
            return Err(format!("zero denominator in '{s}'"));
        }
        return Ok(Frac::new(num, den));
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, s),
    };
    let (int_part, dec_part) = match body.split_once('.') {
        Some((i, d)) => (i, d),
        None => (body, ""),
    };
    if int_part.is_empty() && dec_part.is_empty() {
        return Err(format!("'{s}' is not a number"));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !dec_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(format!("'{s}' is not a number"));
    }
    if dec_part.len() > 15 {
        return Err(format!("'{s}' has too many decimal digits (max 15)"));
    }
    let int_val: i64 = if int_part.is_empty() {
        0
    } else {
        int_part.parse().map_err(|_| format!("'{s}' out of range"))?
    };
    let scale = 10i64.pow(dec_part.len() as u32);
    let dec_val: i64 = if dec_part.is_empty() {
        0
    } else {
        dec_part.parse().map_err(|_| format!("'{s}' out of range"))?
    };
    let num = int_val
        .checked_mul(scale)
        .and_then(|v| v.checked_add(dec_val))
        .ok_or_else(|| format!("'{s}' out of range"))?;
    Ok(Frac::new(sign * num, scale))
}

/// Reduced fraction string, `"9/50"` or plain `"3"` for integers.
pub fn frac_str(f: &Frac) -> String {
    if *f.denom() == 1 {
        format!("{}", f.numer())
    } else {
        format!("{}/{}", f.numer(), f.denom())
    }
}

/// Nearest f64, for the decimal column of reports.
pub fn frac_f64(f: &Frac) -> f64 {
    *f.numer() as f64 / *f.denom() as f64
}

/// Combined display form used throughout the text report: `"9/50 (0.18)"`.
pub fn frac_display(f: &Frac) -> String {
    format!("{} ({})", frac_str(f), frac_f64(f))
}
