//! Fixed-width text output. Column order is stable so golden tests can
//! compare whole strings.

use std::fmt::Write;

use interval_total::bounds::{BoundKind, BoundReport, BoundTarget, ExactValues};
use interval_total::search::{SpectrumResult, Status};
use interval_total::{Certificate, Color, VerifyOutcome};

pub fn status(s: Status) -> &'static str {
    match s {
        Status::Feasible => "feasible",
        Status::Infeasible => "infeasible",
        Status::Budget => "budget",
    }
}

fn opt(x: Option<Color>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn certificate(cert: &Certificate, names: &[String]) -> String {
    let c = &cert.coloring;
    let mut s = format!("t = {}\n{:<12} {:>5}\n", c.t, "vertex", "color");
    for (name, color) in names.iter().zip(&c.vertex_colors) {
        let _ = writeln!(s, "{name:<12} {color:>5}");
    }
    let _ = writeln!(s, "{:<12} {:>5}", "edge", "color");
    for (&(a, b), color) in cert.graph.edges().iter().zip(&c.edge_colors) {
        let _ = writeln!(s, "{:<12} {color:>5}", format!("{}-{}", names[a], names[b]));
    }
    s
}

pub fn verify(outcome: &VerifyOutcome) -> String {
    if outcome.valid {
        return "valid\n".to_string();
    }
    let mut s = format!("invalid: {} violation(s)\n", outcome.failures.len());
    for f in &outcome.failures {
        let _ = writeln!(s, "  {f}");
    }
    s
}

pub fn spectrum(r: &SpectrumResult) -> String {
    let mut s = format!("{:>4}  {:<10}\n", "t", "status");
    for v in &r.verdicts {
        let _ = writeln!(s, "{:>4}  {:<10}", v.t, status(v.status));
    }
    let _ = writeln!(s, "w_tau = {}", opt(r.w_tau));
    let _ = writeln!(s, "W_tau = {}", opt(r.max_tau));
    s
}

pub fn bounds(report: &BoundReport) -> String {
    let mut s = format!(
        "{:<28} {:<5} {:<6} {:>6} {:<10} {}\n",
        "name", "kind", "target", "value", "applicable", "ref"
    );
    for b in &report.bounds {
        let kind = match b.kind {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
        };
        let target = match b.target {
            BoundTarget::MinColors => "w_tau",
            BoundTarget::MaxColors => "W_tau",
        };
        let _ = writeln!(
            s,
            "{:<28} {:<5} {:<6} {:>6} {:<10} {}",
            b.name,
            kind,
            target,
            b.value,
            if b.applicable { "yes" } else { "no" },
            b.reference
        );
    }
    s
}

/// Known exact values for a named family, kept apart from the bound rows.
pub fn family_values(exact: Option<ExactValues>, chi: Option<Color>) -> String {
    let Some(e) = exact else {
        return match chi {
            Some(c) => format!("family: chi'' = {c}\n"),
            None => String::new(),
        };
    };
    let spectrum = e
        .spectrum
        .map_or_else(|| "-".to_string(), |(a, b)| format!("[{a}, {b}]"));
    format!(
        "family: chi'' = {}, w_tau = {}, W_tau = {}, spectrum = {spectrum}\n",
        opt(chi),
        opt(e.w_tau),
        opt(e.max_tau)
    )
}
