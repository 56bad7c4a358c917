//! Text and CSV rendering. Numbers use Rust's `e` formatting with 17
//! significant digits, so every value round-trips exactly and the output does
//! not depend on the locale.

use std::fmt::Write;

use sgcoherence::validation::ValidationReport;
use sgcoherence::{CoherenceReport, EntropyConvention, ExperimentParams, Profile, TimeSeries};

pub const SERIES_HEADER: &str = "t_s,coherence,entropy_paper,entropy_purity,sep_position,sep_momentum";
pub const PROFILE_HEADER: &str = "z_m,density_plus,density_minus,density_total";

pub fn number(x: f64) -> String {
    format!("{x:.16e}")
}

fn push_row(out: &mut String, values: &[f64]) {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&number(*v));
    }
    out.push('\n');
}

pub fn series_csv(s: &TimeSeries) -> String {
    let mut out = String::with_capacity(128 * (s.len() + 1));
    out.push_str(SERIES_HEADER);
    out.push('\n');
    for i in 0..s.len() {
        push_row(
            &mut out,
            &[
                s.times[i],
                s.coherence[i],
                s.entropy_paper[i],
                s.entropy_purity[i],
                s.sep_position[i],
                s.sep_momentum[i],
            ],
        );
    }
    out
}

pub fn profile_csv(p: &Profile) -> String {
    let mut out = String::with_capacity(96 * (p.z.len() + 1));
    out.push_str(PROFILE_HEADER);
    out.push('\n');
    for i in 0..p.z.len() {
        push_row(
            &mut out,
            &[p.z[i], p.density_plus[i], p.density_minus[i], p.density_total[i]],
        );
    }
    out
}

pub fn report_text(
    params: &ExperimentParams,
    r: &CoherenceReport,
    entropy: EntropyConvention,
    entropy_at_tau: f64,
) -> String {
    let mut out = String::new();
    let number = |x: f64| format!("{x:.12e}");
    let mut line = |name: &str, value: String, unit: &str| {
        let _ = writeln!(out, "{name:<22} {value:>20} {unit}");
    };
    line("mass", number(params.mass()), "kg");
    line("magnetic_moment", number(params.magnetic_moment()), "J/T");
    line("field_gradient", number(params.field_gradient()), "T/m");
    line("sigma0", number(params.sigma0()), "m");
    line("force", number(params.force()), "N");
    line("spreading_time", number(params.spreading_time()), "s");
    line("chi", number(r.chi), "1");
    line("regime", r.regime.as_str().to_string(), "");
    line("tau", number(r.tau), "s");
    line("tau1", number(r.tau1), "s");
    line("tau2", number(r.tau2), "s");
    line(
        "sep_position_at_tau",
        number(r.sep_position_at_tau),
        "1 (dz_bar/sigma_t)",
    );
    line(
        "sep_momentum_at_tau",
        number(r.sep_momentum_at_tau),
        "1 (dp/(hbar/2sigma))",
    );
    line(&format!("entropy_at_tau_{entropy}"), number(entropy_at_tau), "1");
    out
}

pub fn validation_text(report: &ValidationReport) -> String {
    let mut out = String::new();
    for check in &report.checks {
        let _ = writeln!(out, "{check}");
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    let _ = writeln!(out, "{passed}/{} checks passed", report.checks.len());
    out
}
