//! Number formatting and the CSV row type shared by the scans.

use std::io::Write;

use crate::CliError;

/// Margins below this count as violations.
pub const VIOLATION_TOL: f64 = 1e-12;

/// Twelve significant digits, trailing zeros trimmed but at least one
/// decimal, scientific notation outside `[1e-4, 1e12)`.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0.0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    if !(-4..12).contains(&exp) {
        let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        return format!("{sign}{int}.{}e{exp}", trim(frac));
    }
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let (int, frac) = if exp >= 0 {
        let split = exp as usize + 1;
        (digits[..split].to_string(), digits[split..].to_string())
    } else {
        ("0".to_string(), "0".repeat((-exp - 1) as usize) + &digits)
    };
    format!("{sign}{int}.{}", trim(&frac))
}

fn trim(frac: &str) -> &str {
    let t = frac.trim_end_matches('0');
    if t.is_empty() {
        "0"
    } else {
        t
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Int(usize),
    Real(f64),
}

impl Value {
    fn render(self) -> String {
        match self {
            Value::Int(n) => n.to_string(),
            Value::Real(x) => format_number(x),
        }
    }
}

/// One evaluated point of a scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    /// Named parameter values, in column order.
    pub inputs: Vec<(&'static str, Value)>,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`.
    pub margin: f64,
}

impl ScanResult {
    pub fn violated(&self) -> bool {
        self.margin < -VIOLATION_TOL
    }

    /// The margin with cancellation noise shown as zero: a difference within a
    /// few ulps of the larger side carries no digits.
    pub fn display_margin(&self) -> f64 {
        let scale = self.lhs.abs().max(self.rhs.abs());
        if self.margin.abs() <= 8.0 * f64::EPSILON * scale {
            0.0
        } else {
            self.margin
        }
    }

    fn is_finite(&self) -> bool {
        self.lhs.is_finite() && self.rhs.is_finite() && self.margin.is_finite()
    }
}

/// A scan row; `Skipped` cells keep their inputs and leave the values empty.
#[derive(Debug, Clone, PartialEq)]
pub enum Row {
    Point(ScanResult),
    Skipped(Vec<(&'static str, Value)>),
}

impl Row {
    fn inputs(&self) -> &[(&'static str, Value)] {
        match self {
            Row::Point(r) => &r.inputs,
            Row::Skipped(inputs) => inputs,
        }
    }
}

/// Writes `inputs,lhs,rhs,margin,violated` rows; fails without writing if any
/// value is not finite.
pub fn write_scan(out: &mut dyn Write, rows: &[Row]) -> Result<(), CliError> {
    for row in rows {
        if let Row::Point(r) = row {
            if !r.is_finite() {
                let at: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k}={}", v.render())).collect();
                return Err(CliError::Numerical(format!("non-finite result at {}", at.join(", "))));
            }
        }
    }
    let Some(first) = rows.first() else {
        return Ok(());
    };
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = first.inputs().iter().map(|(k, _)| *k).collect();
    header.extend(["lhs", "rhs", "margin", "violated"]);
    w.write_record(&header)?;
    for row in rows {
        let mut record: Vec<String> = row.inputs().iter().map(|(_, v)| v.render()).collect();
        match row {
            Row::Point(r) => {
                record.extend([r.lhs, r.rhs, r.display_margin()].map(format_number));
                record.push(r.violated().to_string());
            }
            Row::Skipped(_) => {
                record.extend(["", "", ""].map(String::from));
                record.push("skipped".into());
            }
        }
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}
