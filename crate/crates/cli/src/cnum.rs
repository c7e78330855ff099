//! Parsing and printing of complex numbers for the command line.
//!
//! Accepted forms: `0.5`, `0.5i`, `1+2i`, `1-2i`, `i`, `-i`, and the
//! comma-separated pair `re,im`. Exponent notation works in every component
//! (`1e-3+2.5e-4i`). Printing is locale-independent with a fixed 7-decimal
//! default.

use discstrip::Cpx;

pub fn parse_complex(text: &str) -> Result<Cpx, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some((re, im)) = s.split_once(',') {
        let re = parse_real(re.trim())?;
        let im = parse_real(im.trim())?;
        return Ok(Cpx::new(re, im));
    }
    // find the split between real and imaginary parts: a sign that is not
    // leading and not part of an exponent
    let bytes = s.as_bytes();
    let mut split = None;
    for i in 1..bytes.len() {
        let b = bytes[i];
        if (b == b'+' || b == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
        }
    }
    if let Some(i) = split {
        let re = parse_real(&s[..i])?;
        let im = parse_imaginary(&s[i..])?;
        Ok(Cpx::new(re, im))
    } else if s.ends_with('i') || s.ends_with('I') {
        Ok(Cpx::new(0.0, parse_imaginary(s)?))
    } else {
        Ok(Cpx::new(parse_real(s)?, 0.0))
    }
}

fn parse_real(s: &str) -> Result<f64, String> {
    s.parse::<f64>()
        .map_err(|_| format!("cannot parse `{s}` as a number"))
}

fn parse_imaginary(s: &str) -> Result<f64, String> {
    let body = s
        .strip_suffix('i')
        .or_else(|| s.strip_suffix('I'))
        .ok_or_else(|| format!("imaginary part `{s}` must end in i"))?;
    match body {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real(body),
    }
}

fn unsign_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

pub fn fmt_real(x: f64) -> String {
    format!("{:.7}", unsign_zero(x))
}

pub fn fmt_complex(z: Cpx) -> String {
    format!("{:.7}{:+.7}i", unsign_zero(z.re), unsign_zero(z.im))
}
