use std::fmt::Write as _;

use num_complex::Complex64;

use super::{CorrelationProfile, Values};

/// Zone boundaries written as `#` comment rows ahead of the CSV header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZoneAnnotation {
    /// Front zone `|τ| ≤ zcz`.
    pub zcz: usize,
    /// Also mark the tail zone `|τ| ≥ N - zcz`.
    pub tail: bool,
}

/// Renders `x` with 9 significant digits in the style of C's `%.9g`.
/// Zero (of either sign) renders as `0`.
pub fn format_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..9).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        format!("{}e{}{:02}", trim(mantissa.to_string()), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

impl CorrelationProfile {
    /// CSV with columns `shift,magnitude,real,imag`, one row per shift in
    /// ascending order. Exact zeros print as `0`; in exact mode, float
    /// components at roundoff level are also printed as `0`.
    pub fn to_csv(&self, annotation: Option<ZoneAnnotation>) -> String {
        let mut out = String::new();
        let n = self.len as i64;
        if let Some(a) = annotation {
            let z = a.zcz.min(self.len) as i64;
            let _ = writeln!(out, "# zone,front,{},{}", -z.min(n - 1), z.min(n - 1));
            if a.tail && z >= 1 {
                let lo = (n - z).max(1);
                let _ = writeln!(out, "# zone,tail,{},{}", -(n - 1), -lo);
                let _ = writeln!(out, "# zone,tail,{},{}", lo, n - 1);
            }
        }
        out.push_str("shift,magnitude,real,imag\n");
        for (idx, tau) in self.shifts().enumerate() {
            let v = match &self.values {
                Values::Exact(vals) => {
                    let c = &vals[idx];
                    if c.is_zero() {
                        Complex64::new(0.0, 0.0)
                    } else {
                        let scale: i64 = c.counts().iter().map(|n| n.abs()).sum();
                        let eps = 1e-9 * (scale as f64 + 1.0);
                        let z = c.to_complex();
                        let snap = |x: f64| if x.abs() < eps { 0.0 } else { x };
                        Complex64::new(snap(z.re), snap(z.im))
                    }
                }
                Values::Float(vals) => vals[idx],
            };
            let _ = writeln!(
                out,
                "{tau},{},{},{}",
                format_sig9(v.norm()),
                format_sig9(v.re),
                format_sig9(v.im)
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{Code, PhaseSequence};
    use crate::correlation::flock_profile;

    #[test]
    fn sig9_formatting() {
        assert_eq!(format_sig9(0.0), "0");
        assert_eq!(format_sig9(-0.0), "0");
        assert_eq!(format_sig9(81.0), "81");
        assert_eq!(format_sig9(-4.5), "-4.5");
        assert_eq!(format_sig9(0.1 + 0.2), "0.3");
        assert_eq!(format_sig9(3f64.sqrt()), "1.73205081");
        assert_eq!(format_sig9(123456789.0), "123456789");
        assert_eq!(format_sig9(1234567890.0), "1.23456789e+09");
        assert_eq!(format_sig9(1.5e-7), "1.5e-07");
        assert_eq!(format_sig9(0.000123), "0.000123");
        assert_eq!(format_sig9(0.0000123), "1.23e-05");
        assert_eq!(format_sig9(999999999.7), "1e+09");
    }

    #[test]
    fn csv_layout() {
        let s = |v: &[u8]| PhaseSequence::new(2, v.to_vec()).unwrap();
        let code = Code::new(vec![s(&[0, 0, 0, 1]), s(&[0, 0, 1, 0])]).unwrap();
        let csv = flock_profile(&code, &code).unwrap().to_csv(Some(ZoneAnnotation { zcz: 1, tail: true }));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "# zone,front,-1,1");
        assert_eq!(lines[1], "# zone,tail,-3,-3");
        assert_eq!(lines[2], "# zone,tail,3,3");
        assert_eq!(lines[3], "shift,magnitude,real,imag");
        assert_eq!(lines[4], "-3,0,0,0");
        assert_eq!(lines[7], "0,8,8,0");
        assert_eq!(lines.len(), 11);
    }
}
