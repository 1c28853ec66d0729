// SPDX-License-Identifier: Apache-2.0

//! Verification suites that turn the model's operator identities and
//! spectral claims into pass/fail reports.

use std::fmt;
use std::io::{self, Write};

use faer::{c64, Mat, Scale};

use crate::algebra::{re, Algebra, Poly, Weyl, I};
use crate::coefficients::{
    coefficient_set, constraint_residual, constraint_scale, couplings_from_sigma, doublewell_bounded_form,
    hermitian_coefficients_printed, hermitian_coefficients_simplified, CoefficientSet, DysonCoefficients,
};
use crate::error::{Error, Result};
use crate::fmt_f64;
use crate::gridref::{fd_doublewell_auto, Grid};
use crate::operators::{
    build_dyson_image, build_dyson_map, build_energy_operator, build_gauge_left, build_gauge_right, build_h,
    build_h_real_line, build_hhat, build_htilde, forms, interior_max, right_projected_max, BchTarget, Basis,
    MatrixAlgebra,
};
use crate::profiles::TimeProfile;
use crate::spectra::{converged_levels, default_omega_sweep, match_levels, OmegaChoice, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    AtMost,
    AtLeast,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub relation: Relation,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub fn at_most(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Check { name: name.into(), value, relation: Relation::AtMost, tolerance, pass: value <= tolerance }
    }

    pub fn at_least(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Check { name: name.into(), value, relation: Relation::AtLeast, tolerance: bound, pass: value >= bound }
    }

    /// A check that could not be evaluated.
    pub fn failed(name: impl Into<String>, tolerance: f64) -> Self {
        Check { name: name.into(), value: f64::NAN, relation: Relation::AtMost, tolerance, pass: false }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub t: Option<f64>,
    pub basis: Option<Basis>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, t: Option<f64>, basis: Option<Basis>) -> Self {
        VerificationReport { suite: suite.into(), t, basis, checks: Vec::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// True iff every check passes; an empty report does not pass.
    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn csv_header() -> &'static str {
        "suite,t,n,omega,check,value,relation,tolerance,pass"
    }

    pub fn write_csv_rows<W: Write>(&self, mut w: W) -> io::Result<()> {
        let t = self.t.map(fmt_f64).unwrap_or_default();
        let (n, om) = self.basis.map(|b| (b.n.to_string(), fmt_f64(b.omega))).unwrap_or_default();
        for c in &self.checks {
            let rel = match c.relation {
                Relation::AtMost => "<=",
                Relation::AtLeast => ">=",
            };
            writeln!(
                w,
                "{},{},{},{},{},{},{},{},{}",
                self.suite,
                t,
                n,
                om,
                csv_field(&c.name),
                fmt_f64(c.value),
                rel,
                fmt_f64(c.tolerance),
                c.pass
            )?;
        }
        Ok(())
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite {}", self.suite)?;
        if let Some(t) = self.t {
            write!(f, " t={t}")?;
        }
        if let Some(b) = self.basis {
            write!(f, " N={} omega={}", b.n, b.omega)?;
        }
        writeln!(f, " : {}", if self.pass() { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            let rel = if c.relation == Relation::AtMost { "<=" } else { ">=" };
            writeln!(
                f,
                "  {:<5} {} = {:.3e} ({rel} {:.1e})",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.value,
                c.tolerance
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// A report holding a single failed check for an error that stopped a suite.
pub fn error_report(suite: &str, t: Option<f64>, basis: Option<Basis>, e: &Error) -> VerificationReport {
    let mut r = VerificationReport::new(suite, t, basis);
    r.push(Check::failed("evaluation", 0.0));
    r.note(e.to_string());
    r
}

fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Scaled residual of the compatibility condition over a time grid.
pub fn verify_constraint(profile: &TimeProfile, ts: &[f64], c2: f64) -> VerificationReport {
    const TOL: f64 = 1e-9;
    let mut r = VerificationReport::new("constraint", None, None);
    for &t in ts {
        let name = format!("scaled_residual@t={t}");
        match profile.eval_jet(t, 4).and_then(|j| couplings_from_sigma(&j, c2)) {
            Ok(c) => r.push(Check::at_most(name, constraint_residual(&c).abs() / constraint_scale(&c), TOL)),
            Err(e) => {
                r.push(Check::failed(name, TOL));
                r.note(format!("t={t}: {e}"));
            }
        }
    }
    r
}

/// |m(t)| over a grid for a profile expected to be massless.
pub fn verify_massless(profile: &TimeProfile, ts: &[f64], c2: f64) -> VerificationReport {
    const TOL: f64 = 1e-12;
    let mut r = VerificationReport::new("massless", None, None);
    let mut worst = 0.0f64;
    for &t in ts {
        match profile.eval_jet(t, 4).and_then(|j| couplings_from_sigma(&j, c2)) {
            Ok(c) => worst = worst.max(c.m.abs()),
            Err(e) => {
                worst = f64::NAN;
                r.note(format!("t={t}: {e}"));
            }
        }
    }
    r.push(Check::at_most("max_abs_m", worst, TOL));
    r
}

/// Brute-force conjugation η A η⁻¹ against the six closed forms on the
/// interior block Π_k, k = N − 16.
pub fn verify_bch(d: &DysonCoefficients, b: &Basis, tol: f64) -> Result<VerificationReport> {
    let (eta, eta_inv) = build_dyson_map(d, b)?;
    let alg = MatrixAlgebra::new(b);
    let k = b.interior();
    let mut r = VerificationReport::new("bch", Some(d.t), Some(*b));
    for t in BchTarget::ALL {
        let bare = t.bare(&alg);
        let brute = &eta.data * &bare * &eta_inv.data;
        let closed = forms::bch_closed_form(&alg, d, t);
        r.push(Check::at_most(format!("dev[{}]", t.label()), interior_max(&(brute - closed), k), tol));
    }
    let id = Mat::<c64>::identity(b.n, b.n);
    r.note(format!("|eta*eta_inv - 1| on interior block = {:.3e}", interior_max(&(&eta.data * &eta_inv.data - id), k)));
    Ok(r)
}

fn exact_eta_image(d: &DysonCoefficients, a: &Poly) -> Result<Poly> {
    let w = Weyl;
    let inner = w.conjugate(&forms::momentum_exponent(&w, d), a)?;
    w.conjugate(&w.scale(&w.x(), re(d.alpha)), &inner)
}

fn poly_scale(p: &Poly) -> f64 {
    p.max_abs().max(1.0)
}

/// The six closed forms against exact conjugation in the Weyl algebra.
pub fn verify_bch_exact(d: &DysonCoefficients, tol: f64) -> Result<VerificationReport> {
    let w = Weyl;
    let mut r = VerificationReport::new("bch_exact", Some(d.t), None);
    for t in BchTarget::ALL {
        let exact = exact_eta_image(d, &t.bare(&w))?;
        let closed = forms::bch_closed_form(&w, d, t);
        let dev = w.sub(&exact, &closed).max_abs() / poly_scale(&exact);
        r.push(Check::at_most(format!("rel_dev[{}]", t.label()), dev, tol));
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DysonRoute {
    /// η H η⁻¹ from the closed-form conjugation identities.
    ClosedForm,
    /// η H η⁻¹ from matrix exponentials.
    Exponential,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DysonOptions {
    pub route: DysonRoute,
    /// Rank of the projector Π_k.
    pub k: usize,
    pub tol: f64,
    /// Minimum residual growth demanded of each 10% perturbation.
    pub control_factor: f64,
}

impl DysonOptions {
    pub fn for_basis(b: &Basis) -> Self {
        DysonOptions { route: DysonRoute::ClosedForm, k: b.n / 2, tol: 1e-5, control_factor: 100.0 }
    }
}

fn dyson_image(cs: &CoefficientSet, d: &DysonCoefficients, b: &Basis, route: DysonRoute) -> Result<Mat<c64>> {
    match route {
        DysonRoute::ClosedForm => Ok(build_dyson_image(&cs.couplings, d, b).data),
        DysonRoute::Exponential => {
            let (eta, eta_inv) = build_dyson_map(d, b)?;
            let h = build_h_real_line(&cs.couplings, b);
            Ok(&eta.data * &h.data * &eta_inv.data + build_gauge_left(d, b).data)
        }
    }
}

/// R = η H η⁻¹ + i η̇ η⁻¹ − h, measured as max |(R Π_k)_ij|, plus an exact
/// operator-algebra residual and single-coefficient negative controls.
pub fn verify_dyson_residual(
    profile: &TimeProfile,
    t: f64,
    c1: f64,
    c2: f64,
    b: &Basis,
    opts: &DysonOptions,
) -> Result<VerificationReport> {
    let cs = coefficient_set(profile, t, c1, c2)?;
    let h = build_h(&cs.hermitian, b);
    let mut r = VerificationReport::new("dyson", Some(t), Some(*b));
    let image = dyson_image(&cs, &cs.dyson, b, opts.route)?;
    let residual = right_projected_max(&(&image - &h.data), opts.k);
    r.push(Check::at_most(format!("residual[Pi_{}]", opts.k), residual, opts.tol));
    let herm = interior_max(&(&image - image.adjoint()), opts.k);
    r.push(Check::at_most(format!("hermiticity_defect[Pi_{}]", opts.k), herm, opts.tol));

    let w = Weyl;
    let exact = w.sub(&forms::dyson_image(&w, &cs.couplings, &cs.dyson), &forms::hermitian_hamiltonian(&w, &cs.hermitian));
    let scale = poly_scale(&forms::hermitian_hamiltonian(&w, &cs.hermitian));
    r.push(Check::at_most("exact_algebra_residual", exact.max_abs() / scale, 1e-10));

    let floor = residual.max(1e-300);
    let names = ["alpha", "beta", "gamma", "delta"];
    for (i, name) in names.iter().enumerate() {
        let mut d = cs.dyson;
        match i {
            0 => d.alpha *= 1.1,
            1 => d.beta *= 1.1,
            2 => d.gamma *= 1.1,
            _ => d.delta *= 1.1,
        }
        let perturbed = dyson_image(&cs, &d, b, opts.route)?;
        let res = right_projected_max(&(&perturbed - &h.data), opts.k);
        r.push(Check::at_least(format!("control_ratio[{name}]"), res / floor, opts.control_factor));
    }
    r.note(match opts.route {
        DysonRoute::ClosedForm => "conjugation evaluated through the closed-form identities",
        DysonRoute::Exponential => "conjugation evaluated with matrix exponentials",
    });
    Ok(r)
}

/// Closed-form gauge terms against central differences of η(t), their
/// mutual consistency, and their exact operator-algebra values.
pub fn verify_gauge_forms(
    profile: &TimeProfile,
    t: f64,
    c1: f64,
    c2: f64,
    b: &Basis,
    tol: f64,
) -> Result<VerificationReport> {
    const EPS: f64 = 1e-4;
    let cs = coefficient_set(profile, t, c1, c2)?;
    let d = cs.dyson;
    let k = b.interior();
    let mut r = VerificationReport::new("gauge", Some(t), Some(*b));

    let w = Weyl;
    let (exact_left, exact_right) = exact_gauge(&d)?;
    let gl = forms::gauge_left(&w, &d);
    let gr = forms::gauge_right(&w, &d);
    r.push(Check::at_most("exact_left", w.sub(&gl, &exact_left).max_abs() / poly_scale(&exact_left), 1e-12));
    r.push(Check::at_most("exact_right", w.sub(&gr, &exact_right).max_abs() / poly_scale(&exact_right), 1e-12));

    let left = build_gauge_left(&d, b).data;
    let right = build_gauge_right(&d, b).data;
    let at = |s: f64| -> Result<_> {
        let cs = coefficient_set(profile, s, c1, c2)?;
        build_dyson_map(&cs.dyson, b)
    };
    let fd = (|| -> Result<_> {
        let (eta, eta_inv) = at(t)?;
        let (plus, _) = at(t + EPS)?;
        let (minus, _) = at(t - EPS)?;
        let deta = Scale(c64::new(0.0, 0.5 / EPS)) * (&plus.data - &minus.data);
        Ok((eta, eta_inv, deta))
    })();
    match fd {
        Ok((eta, eta_inv, ideta)) => {
            let fd_left = &ideta * &eta_inv.data;
            let fd_right = &eta_inv.data * &ideta;
            r.push(Check::at_most("fd_left", interior_max(&(fd_left - &left), k), tol));
            r.push(Check::at_most("fd_right", interior_max(&(fd_right - &right), k), tol));
            let moved = &eta.data * &right * &eta_inv.data;
            r.push(Check::at_most("left_vs_conjugated_right", interior_max(&(moved - &left), k), tol));
        }
        Err(e) => {
            for name in ["fd_left", "fd_right", "left_vs_conjugated_right"] {
                r.push(Check::failed(name, tol));
            }
            r.note(format!("finite differences of eta unavailable: {e}"));
        }
    }
    Ok(r)
}

/// i η̇ η⁻¹ and i η⁻¹ η̇ computed exactly in the Weyl algebra.
fn exact_gauge(d: &DysonCoefficients) -> Result<(Poly, Poly)> {
    let w = Weyl;
    let (x, p) = (w.x(), w.p());
    let p2 = w.mul(&p, &p);
    let p3 = w.mul(&p2, &p);
    let bdot = w.lin(&[(re(d.beta_dot), &p3), (I * d.gamma_dot, &p2), (I * d.delta_dot, &p)]);
    let ax = w.scale(&x, re(d.alpha));
    let mom = forms::momentum_exponent(&w, d);
    let left = w.add(&w.scale(&x, re(d.alpha_dot)), &w.conjugate(&ax, &bdot)?);
    let neg_mom = w.scale(&mom, re(-1.0));
    let right = w.add(&w.conjugate(&neg_mom, &w.scale(&x, re(d.alpha_dot)))?, &bdot);
    Ok((w.scale(&left, I), w.scale(&right, I)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralOptions {
    pub levels: usize,
    /// Smaller of the two truncations; the larger is 2N.
    pub n: usize,
    pub omega: OmegaChoice,
    /// Basis scale used when `omega` is [`OmegaChoice::Fixed`].
    pub fixed_omega: f64,
    /// Relative N → 2N change below which a level counts as converged.
    pub convergence_tol: f64,
    pub tol_hhat: f64,
    pub tol_htilde: f64,
    pub tol_energy: f64,
    pub tol_imag: f64,
    pub tol_grid: f64,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            levels: 5,
            n: 256,
            omega: OmegaChoice::Sweep(default_omega_sweep()),
            fixed_omega: 1.0,
            convergence_tol: 1e-8,
            tol_hhat: 1e-7,
            tol_htilde: 1e-5,
            tol_energy: 1e-5,
            tol_imag: 1e-6,
            tol_grid: 1e-4,
        }
    }
}

/// Converged spectra behind a spectral-equivalence report.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    pub h: Spectrum,
    pub hhat: Spectrum,
    pub htilde: Spectrum,
    pub energy: Spectrum,
    pub grid_ground: Option<f64>,
}

/// Which operator a spectrum run diagonalizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    H,
    Hhat,
    Htilde,
    Energy,
}

impl Which {
    pub fn label(self) -> &'static str {
        match self {
            Which::H => "h",
            Which::Hhat => "hhat",
            Which::Htilde => "htilde",
            Which::Energy => "energy-op",
        }
    }
}

/// Converged low-lying spectrum of one builder at one time.
pub fn operator_spectrum(cs: &CoefficientSet, which: Which, opts: &SpectralOptions) -> Result<Spectrum> {
    let b0 = Basis::new(opts.n, opts.fixed_omega)?;
    let k = opts.levels;
    let tol = opts.convergence_tol;
    match which {
        Which::H => converged_levels(|b| Ok(build_h(&cs.hermitian, b)), k, &b0, tol, &opts.omega),
        Which::Hhat => converged_levels(|b| Ok(build_hhat(&cs.hermitian, b)), k, &b0, tol, &opts.omega),
        Which::Htilde => converged_levels(|b| Ok(build_htilde(&cs.potential, b)), k, &b0, tol, &opts.omega),
        Which::Energy => converged_levels(
            |b| Ok(build_energy_operator(&cs.couplings, &cs.dyson, b)),
            k,
            &b0,
            tol,
            &opts.omega,
        ),
    }
}

/// Spectra of h, ĥ, h̃ and H̃ compared level by level, with the
/// finite-difference ground state of h̃ as an independent reference.
pub fn verify_spectral_equivalence(
    profile: &TimeProfile,
    t: f64,
    c1: f64,
    c2: f64,
    opts: &SpectralOptions,
) -> Result<(VerificationReport, SpectralData)> {
    let cs = coefficient_set(profile, t, c1, c2)?;
    let k = opts.levels;
    let h = operator_spectrum(&cs, Which::H, opts)?;
    let hhat = operator_spectrum(&cs, Which::Hhat, opts)?;
    let htilde = operator_spectrum(&cs, Which::Htilde, opts)?;
    let energy = operator_spectrum(&cs, Which::Energy, opts)?;

    let mut r = VerificationReport::new("spectral", Some(t), Some(h.basis));
    for (name, s) in [("h", &h), ("hhat", &hhat), ("htilde", &htilde), ("energy-op", &energy)] {
        r.push(Check::at_least(format!("converged_levels[{name}]"), s.converged_count as f64, k as f64));
        r.note(format!("{name}: N={} omega={} levels={:?}", s.basis.n, s.basis.omega, s.real_parts()));
    }
    let hr = h.real_parts();
    r.push(Check::at_most("match[h,hhat]", match_levels(&hr, &hhat.real_parts(), k), opts.tol_hhat));
    r.push(Check::at_most("match[h,htilde]", match_levels(&hr, &htilde.real_parts(), k), opts.tol_htilde));
    r.push(Check::at_most("match[h,energy-op]", match_levels(&hr, &energy.real_parts(), k), opts.tol_energy));
    r.push(Check::at_most("max_abs_imag[energy-op]", energy.max_abs_imag(k), opts.tol_imag));
    r.push(Check::at_least("a4", cs.potential.a4, f64::MIN_POSITIVE));

    let grid_ground = match fd_doublewell_auto(&cs.potential, &Grid::default(), 1) {
        Ok(g) => {
            let e = g.levels[0];
            r.push(Check::at_most("gridref_ground", rel_diff(hr[0], e), opts.tol_grid));
            Some(e)
        }
        Err(e) => {
            r.push(Check::failed("gridref_ground", opts.tol_grid));
            r.note(format!("gridref: {e}"));
            None
        }
    };
    Ok((r, SpectralData { h, hhat, htilde, energy, grid_ground }))
}

/// Internal consistency of the printed coefficient formulas: the general
/// f-block against the g, m form and the two lines of the double-well form.
/// Disagreements are reported, never corrected.
pub fn verify_transcription(profile: &TimeProfile, t: f64) -> Result<VerificationReport> {
    const TOL: f64 = 1e-10;
    let cs = coefficient_set(profile, t, 0.0, 0.0)?;
    let f = cs.hermitian;
    let printed = hermitian_coefficients_printed(&cs.jet, 0.0, 0.0)?;
    let simple = hermitian_coefficients_simplified(&cs.couplings)?;
    let bounded = doublewell_bounded_form(&cs.couplings)?;
    let mut r = VerificationReport::new("transcription", Some(t), None);
    for (name, a, b) in [
        ("simplified_vs_fblock[sigma3]", simple.sigma3, f.sigma3),
        ("simplified_vs_fblock[fpp]", simple.fpp, f.fpp),
        ("simplified_vs_fblock[fxp]", simple.fxp, f.fxp),
        ("simplified_vs_fblock[fp]", simple.fp, f.fp),
        ("simplified_vs_fblock[fx]", simple.fx, f.fx),
        ("simplified_vs_fblock[fxx]", simple.fxx, f.fxx),
        ("simplified_vs_fblock[C]", simple.c, f.c),
        ("printed_fp_vs_used_fp", printed.fp, f.fp),
        ("bounded_vs_first_line[a4]", bounded.a4, cs.potential.a4),
        ("bounded_vs_first_line[a2]", bounded.a2, cs.potential.a2),
        ("bounded_vs_first_line[a1]", bounded.a1, cs.potential.a1),
        ("bounded_vs_first_line[a0]", bounded.a0, cs.potential.a0),
    ] {
        r.push(Check::at_most(name, rel_diff(a, b), TOL));
    }
    r.note("f_p in use: (2c1 + ln 4σ³)[σ(4c2 + σ̇² − 2σσ̈) + 2]/(12σσ̇²)");
    Ok(r)
}
