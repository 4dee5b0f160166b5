//! `spin`, `meson` and `zeno`: CSV scans.

use std::io::Write;

use realism_core::exec::{meson_grid, spin_scan, zeno_table, Execution, GridAxis};
use realism_core::meson::{lgw2_meson_margin, parse_params, preset, MesonError, Species};

use crate::output::{format_number, write_scan, Row, ScanResult, Value};
use crate::{CliError, MesonArgs, SpinArgs, ZenoArgs};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// `A:B` with `A <= B`.
pub fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || usage(format!("invalid range `{text}`, expected A:B"));
    let (a, b) = text.split_once(':').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(usage(format!("invalid range `{text}`: start exceeds end")));
    }
    Ok((a, b))
}

pub fn spin(args: &SpinArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (a, b) = match (args.n, &args.n_range) {
        (Some(n), None) => (n, n),
        (None, Some(r)) => parse_range(r)?,
        _ => return Err(usage("give either --n or --n-range")),
    };
    if a < 3 {
        return Err(usage(format!("chain length must be at least 3, got {a}")));
    }
    let margins = spin_scan(a..=b, Execution::default()).map_err(|e| usage(e.to_string()))?;
    let rows: Vec<Row> = margins
        .into_iter()
        .map(|(n, m)| {
            Row::Point(ScanResult {
                inputs: vec![("n", Value::Int(n))],
                lhs: m.lhs,
                rhs: m.rhs,
                margin: m.margin,
            })
        })
        .collect();
    write_scan(out, &rows)
}

/// `alpha=LO:HI:STEPS,beta=LO:HI:STEPS`, in either order.
pub fn parse_scan(text: &str) -> Result<(GridAxis, GridAxis), CliError> {
    let mut alpha = None;
    let mut beta = None;
    for part in text.split(',') {
        let bad = || usage(format!("invalid scan axis `{part}`, expected NAME=LO:HI:STEPS"));
        let (name, bounds) = part.split_once('=').ok_or_else(bad)?;
        let fields: Vec<&str> = bounds.split(':').map(str::trim).collect();
        let [lo, hi, steps] = fields[..] else {
            return Err(bad());
        };
        let lo: f64 = lo.parse().map_err(|_| bad())?;
        let hi: f64 = hi.parse().map_err(|_| bad())?;
        let steps: usize = steps.parse().map_err(|_| bad())?;
        if !lo.is_finite() || !hi.is_finite() || steps == 0 {
            return Err(bad());
        }
        let slot = match name.trim() {
            "alpha" => &mut alpha,
            "beta" => &mut beta,
            other => return Err(usage(format!("unknown scan axis `{other}`"))),
        };
        if slot.replace(GridAxis::new(lo, hi, steps)).is_some() {
            return Err(usage(format!("scan axis `{}` given twice", name.trim())));
        }
    }
    match (alpha, beta) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(usage("scan needs both alpha and beta axes")),
    }
}

fn kappa(args: &MesonArgs) -> Result<f64, CliError> {
    let params = if let Some(path) = &args.params {
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
        Some(parse_params(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?)
    } else if let Some(name) = &args.preset {
        let species: Species = name.parse().map_err(|e: MesonError| usage(e.to_string()))?;
        Some(preset(species))
    } else {
        None
    };
    match params {
        Some(p) => p.kappa().map_err(|e| CliError::Numerical(e.to_string())),
        None => Ok(args.kappa.unwrap_or(0.0)),
    }
}

fn meson_inputs(kappa: f64, alpha: f64, beta: f64) -> Vec<(&'static str, Value)> {
    vec![
        ("kappa", Value::Real(kappa)),
        ("alpha", Value::Real(alpha)),
        ("beta", Value::Real(beta)),
    ]
}

/// Angles are echoed in radians whatever the input unit.
pub fn meson(args: &MesonArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let kappa = kappa(args)?;
    let unit = if args.degrees { std::f64::consts::PI / 180.0 } else { 1.0 };
    let rows = match (&args.scan, args.alpha, args.beta) {
        (Some(scan), None, None) => {
            let (a, b) = parse_scan(scan)?;
            let scale = |g: GridAxis| GridAxis::new(g.lo * unit, g.hi * unit, g.steps);
            meson_grid(kappa, scale(a), scale(b), Execution::default())
                .into_iter()
                .map(|p| match p.result {
                    Some(m) => Row::Point(ScanResult {
                        inputs: meson_inputs(p.kappa, p.alpha, p.beta),
                        lhs: m.lhs,
                        rhs: m.rhs,
                        margin: m.margin,
                    }),
                    None => Row::Skipped(meson_inputs(p.kappa, p.alpha, p.beta)),
                })
                .collect()
        }
        (None, Some(alpha), Some(beta)) => {
            let (alpha, beta) = (alpha * unit, beta * unit);
            let m = lgw2_meson_margin(kappa, alpha, beta).map_err(|e| usage(e.to_string()))?;
            vec![Row::Point(ScanResult {
                inputs: meson_inputs(kappa, alpha, beta),
                lhs: m.lhs,
                rhs: m.rhs,
                margin: m.margin,
            })]
        }
        _ => return Err(usage("give either --alpha and --beta, or --scan")),
    };
    write_scan(out, &rows)
}

pub fn zeno(args: &ZenoArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.n_max < 3 {
        return Err(usage(format!("--n-max must be at least 3, got {}", args.n_max)));
    }
    let rows = zeno_table(args.n_max, Execution::default()).map_err(|e| usage(e.to_string()))?;
    if let Some(r) = rows
        .iter()
        .find(|r| !(r.pair_prob.is_finite() && r.bound.is_finite() && r.ratio().is_finite()))
    {
        return Err(CliError::Numerical(format!("non-finite Zeno row at n={}", r.n)));
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "pair_prob", "bound", "ratio"])?;
    for r in &rows {
        w.write_record([
            r.n.to_string(),
            format_number(r.pair_prob),
            format_number(r.bound),
            format_number(r.ratio()),
        ])?;
    }
    w.flush()?;
    Ok(())
}
