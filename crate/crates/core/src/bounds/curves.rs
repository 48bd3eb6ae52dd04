use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Regime of `p = n^(-x)` among the leading-order cases for `q~(H)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `n^(-k/(2k-1)) << p << n^(-(k+1)/(2k+1))`.
    A,
    /// `p = Theta(n^(-(k+1)/(2k+1)))`.
    B,
    /// `p = n^(-1/2) / f` with `f` growing slower than any power.
    C,
    /// `n^(-1/2) << p << (log n / n)^(1/2)`.
    D,
    Unclassified,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::A => "a",
            Regime::B => "b",
            Regime::C => "c",
            Regime::D => "d",
            Regime::Unclassified => "unclassified",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveConfig {
    /// Half-width, in the exponent `x`, of the window treated as `Theta` at a
    /// regime boundary.
    pub margin: f64,
    /// Largest `k` given its own regime; exponents between `1/2` and the
    /// `k_max` window fall to regime (c).
    pub k_max: usize,
}

impl Default for CurveConfig {
    fn default() -> Self {
        CurveConfig {
            margin: 0.001,
            k_max: 20,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveRow {
    pub p: f64,
    /// `x` with `p = n^(-x)`.
    pub exponent: f64,
    pub regime: Regime,
    pub k: Option<usize>,
    pub f: Option<f64>,
    /// Leading-order values; `None` where the regime gives no bound.
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub flags: Vec<String>,
}

/// Parses `geometric:a:b:count`, `linear:a:b:count` or a comma-separated
/// list of probabilities; every value must lie in `(0, 1)`.
pub fn parse_p_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = |msg: String| Error::invalid(format!("p grid {spec:?}: {msg}"));
    let number = |s: &str| -> Result<f64> {
        s.trim()
            .parse::<f64>()
            .map_err(|e| bad(format!("{s:?}: {e}")))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    let grid = match parts.as_slice() {
        [kind @ ("geometric" | "linear"), a, b, count] => {
            let (a, b) = (number(a)?, number(b)?);
            let count: usize = count
                .trim()
                .parse()
                .map_err(|e| bad(format!("count: {e}")))?;
            if count == 0 || count > 1_000_000 {
                return Err(bad("count must be in 1..=1000000".into()));
            }
            if !(a > 0.0 && a <= b && b < 1.0) {
                return Err(bad("need 0 < a <= b < 1".into()));
            }
            (0..count)
                .map(|i| {
                    if count == 1 {
                        return a;
                    }
                    let t = i as f64 / (count - 1) as f64;
                    if *kind == "geometric" {
                        a * (b / a).powf(t)
                    } else {
                        a + (b - a) * t
                    }
                })
                .collect()
        }
        [list] => list.split(',').map(number).collect::<Result<Vec<f64>>>()?,
        _ => {
            return Err(bad(
                "expected geometric:a:b:count, linear:a:b:count or a list".into(),
            ))
        }
    };
    if let Some(p) = grid.iter().find(|p| !(**p > 0.0 && **p < 1.0)) {
        return Err(bad(format!("{p} is not in (0, 1)")));
    }
    Ok(grid)
}

fn classify(n: f64, p: f64, cfg: &CurveConfig) -> CurveRow {
    let ln_n = n.ln();
    let x = -p.ln() / ln_n;
    let mut row = CurveRow {
        p,
        exponent: x,
        regime: Regime::Unclassified,
        k: None,
        f: None,
        lower: None,
        upper: None,
        flags: vec!["leading_order".into()],
    };
    let m = cfg.margin;
    let np = n * p;
    if (x - 2.0 / 3.0).abs() <= m {
        row.flags.push("boundary".into());
        return row;
    }
    if x > 2.0 / 3.0 {
        row.flags.push("neighbourhood_empty".into());
        return row;
    }
    for k in 2..=cfg.k_max {
        let hi = k as f64 / (2 * k - 1) as f64;
        let lo = (k + 1) as f64 / (2 * k + 1) as f64;
        if (x - lo).abs() <= m {
            row.regime = Regime::B;
            row.k = Some(k);
            row.lower = Some(np / ((k + 1) * (k + 1)) as f64);
            row.upper = Some(np / (k - 1) as f64);
            row.flags.push("boundary".into());
            return row;
        }
        if x < hi - m && x > lo + m {
            row.regime = Regime::A;
            row.k = Some(k);
            row.lower = Some(np / (k * k) as f64);
            row.upper = Some(np / (k - 1) as f64);
            return row;
        }
    }
    if (x - 0.5).abs() <= m {
        row.flags.push("boundary".into());
        return row;
    }
    if x > 0.5 {
        let f = n.powf(-0.5) / p;
        row.regime = Regime::C;
        row.f = Some(f);
        let lf = f.ln();
        row.lower = Some(np / ln_n * (16.0 * lf * lf / ln_n).max(1.0 / 80.0));
        row.upper = Some(2.0 * np * (f * f * ln_n).ln() / ln_n);
        return row;
    }
    if p * n.powf(m) < (ln_n / n).sqrt() {
        row.regime = Regime::D;
        row.lower = Some(1.0);
        row.upper = Some(8.0 / p);
        return row;
    }
    row.flags.push("dense".into());
    row
}

/// Leading-order bounds for `H ~ G(n, p)` at every `p` of the grid, with
/// `o(1)` terms dropped.
pub fn corollary_curves(n: u64, grid: &[f64], cfg: &CurveConfig) -> Result<Vec<CurveRow>> {
    if n < 3 {
        return Err(Error::invalid("n must be at least 3"));
    }
    if !(cfg.margin >= 0.0 && cfg.margin < 0.05) || cfg.k_max < 2 {
        return Err(Error::invalid(
            "margin must be in [0, 0.05) and k_max at least 2",
        ));
    }
    if let Some(p) = grid.iter().find(|p| !(**p > 0.0 && **p < 1.0)) {
        return Err(Error::invalid(format!("p = {p} is not in (0, 1)")));
    }
    Ok(grid.iter().map(|&p| classify(n as f64, p, cfg)).collect())
}

/// Writes `p,regime,k_or_f,lower,upper,flags`; absent values are empty
/// fields and flags are `;`-separated.
pub fn write_curves_csv<W: Write>(rows: &[CurveRow], mut out: W) -> std::io::Result<()> {
    let opt = |v: Option<f64>| v.map(|v| v.to_string()).unwrap_or_default();
    writeln!(out, "p,regime,k_or_f,lower,upper,flags")?;
    for r in rows {
        let k_or_f = match (r.k, r.f) {
            (Some(k), _) => k.to_string(),
            (None, Some(f)) => f.to_string(),
            _ => String::new(),
        };
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.p,
            r.regime.label(),
            k_or_f,
            opt(r.lower),
            opt(r.upper),
            r.flags.join(";")
        )?;
    }
    Ok(())
}
