//! Scattering data on future null infinity: ingestion, charge and
//! compatibility checks, transport reconstruction of the sigma/rho limits,
//! the scri connection B, and the weighted data norms.
//!
//! Gauge: B_u = 0 with B_omega(u_max) = 0, so D_u = d_u on freshly built
//! data; gauge-transformed copies carry nonzero B_u and the covariant
//! machinery uses it throughout.

pub mod manifest;

use crate::grid::{cumint_rows, cumint_series, deriv_rows, pchip_complex};
use crate::scalar::Real as _;
use crate::sphere::{idx_lm, GridValues, OneForm, ScalarField};
use crate::{Error, Result, SphereGrid, C, R};
use manifest::{DataManifest, FieldKind, Profile};

/// order of the u finite-difference stencils used on scri
const U_FD_ORDER: usize = 6;

/// Radiation-field data on scri, sampled on a uniform retarded-time grid.
#[derive(Debug, Clone)]
pub struct ScatteringData {
    pub sphere: SphereGrid,
    pub u_min: R,
    pub du: R,
    pub n_u: usize,
    /// the 1-form radiation field per u-node (real)
    pub abar: Vec<OneForm<R>>,
    /// the complex scalar radiation field per u-node
    pub phi: Vec<ScalarField<R>>,
    /// scri connection: angular part (zero until `build_connection_b`)
    pub b_omega: Vec<OneForm<R>>,
    /// scri connection: retarded component (zero in the native gauge)
    pub b_u: Vec<ScalarField<R>>,
}

/// Transported limits on scri.
#[derive(Debug, Clone)]
pub struct ScriFluxes {
    /// [r^2 sigma]^infinity per u-node
    pub sigma_inf: Vec<ScalarField<R>>,
    /// [r^2 rho]^infinity per u-node (terminal value 0 at u_max)
    pub rho_inf: Vec<ScalarField<R>>,
}

#[derive(Debug, Clone)]
pub struct CompatReport {
    pub q0: R,
    pub anisotropy: R,
    /// sup over omega of the integrated sigma-transport source
    pub star_div_sup: R,
    pub tol: R,
    pub pass: bool,
}

impl ScatteringData {
    pub fn from_manifest(m: &DataManifest) -> Result<Self> {
        m.validate()?;
        let sphere = SphereGrid::new(m.l_max);
        let n_u = m.n_u;
        let du = (m.u_max - m.u_min) / (n_u as R - 1.0);
        let nc = crate::sphere::n_coeffs(m.l_max);
        let mut abar = vec![OneForm::zeros(m.l_max); n_u];
        let mut phi = vec![ScalarField::zeros(m.l_max); n_u];
        let window = taper_window(n_u, m.taper_fraction);
        for mode in &m.modes {
            let prof = sample_profile(&mode.profile, m.u_min, du, n_u)?;
            let k = idx_lm(mode.l, mode.m);
            debug_assert!(k < nc);
            for i in 0..n_u {
                let a = prof[i] * window[i];
                match mode.field {
                    FieldKind::Phi => phi[i].c[k] += a,
                    FieldKind::AbarElectric => abar[i].e[k] += a,
                    FieldKind::AbarMagnetic => abar[i].b[k] += a,
                }
            }
        }
        // the radiation 1-form is real: symmetrize the (l, +-m) pairs
        for x in abar.iter_mut() {
            realize_oneform(x);
        }
        let zero_f = vec![ScalarField::zeros(m.l_max); n_u];
        let zero_x = vec![OneForm::zeros(m.l_max); n_u];
        Ok(Self {
            sphere,
            u_min: m.u_min,
            du,
            n_u,
            abar,
            phi,
            b_omega: zero_x,
            b_u: zero_f,
        })
    }

    #[inline]
    pub fn u_at(&self, i: usize) -> R {
        self.u_min + self.du * i as R
    }

    pub fn u_max(&self) -> R {
        self.u_at(self.n_u - 1)
    }

    /// Index of the grid node closest to `u`.
    pub fn nearest_node(&self, u: R) -> usize {
        (((u - self.u_min) / self.du).round().max(0.0) as usize).min(self.n_u - 1)
    }

    /// Monotone-cubic samplers for every spectral mode of (abar, phi) at an
    /// arbitrary retarded time inside the grid.
    pub fn sample_phi(&self, u: R) -> ScalarField<R> {
        let rows: Vec<&[C]> = self.phi.iter().map(|f| f.c.as_slice()).collect();
        ScalarField {
            l_max: self.sphere.l_max,
            c: sample_rows(&rows, self.u_min, self.du, u),
        }
    }

    pub fn sample_abar(&self, u: R) -> OneForm<R> {
        let e_rows: Vec<&[C]> = self.abar.iter().map(|f| f.e.as_slice()).collect();
        let b_rows: Vec<&[C]> = self.abar.iter().map(|f| f.b.as_slice()).collect();
        OneForm {
            l_max: self.sphere.l_max,
            e: sample_rows(&e_rows, self.u_min, self.du, u),
            b: sample_rows(&b_rows, self.u_min, self.du, u),
        }
    }

    /// Covariant retarded derivative D_u phi = (d_u + i B_u) phi per node.
    pub fn d_u_phi(&self) -> Vec<ScalarField<R>> {
        let rows: Vec<Vec<C>> = self.phi.iter().map(|f| f.c.clone()).collect();
        let dr = deriv_rows(&rows, self.du, U_FD_ORDER);
        (0..self.n_u)
            .map(|i| {
                let mut f = ScalarField {
                    l_max: self.sphere.l_max,
                    c: dr[i].clone(),
                };
                if self.b_u[i].c.iter().any(|z| z.norm_sqr() > 0.0) {
                    let prod = self.sphere.mul(&self.b_u[i], &self.phi[i]);
                    f = f.add(&prod.scale(C::new(0.0, 1.0)));
                }
                f
            })
            .collect()
    }

    /// Pointwise integrand Im(Phi conj(D_u Phi)) per node, as a spectral field.
    fn charge_integrand(&self) -> Vec<ScalarField<R>> {
        let dphi = self.d_u_phi();
        (0..self.n_u)
            .map(|i| {
                let pv = self.sphere.synth(&self.phi[i]);
                let dv = self.sphere.synth(&dphi[i]);
                let mut vals = GridValues::zeros(pv.n_theta, pv.n_phi);
                for k in 0..vals.v.len() {
                    vals.v[k] = C::new((pv.v[k] * dv.v[k].conj()).im, 0.0);
                }
                self.sphere.analyze(&vals)
            })
            .collect()
    }

    /// Checks that the taper left numerically-zero bands at both grid ends.
    fn check_tapered(&self) -> Result<()> {
        let amp = |i: usize| -> R {
            self.abar[i].norm_sq().sqrt() + self.phi[i].norm_sq().sqrt()
        };
        let bulk = (0..self.n_u).map(amp).fold(0.0, R::max);
        let edge = amp(0) + amp(self.n_u - 1);
        if bulk > 0.0 && edge > 1e-10 * bulk {
            return Err(Error::InsufficientDecay(format!(
                "data at the grid ends ({edge:.3e}) is not in the zero band of the bulk ({bulk:.3e})"
            )));
        }
        Ok(())
    }
}

/// Total charge and its angular anisotropy:
/// q0(omega) = int [ Im(Phi conj(D_u Phi)) - div Abar ] du must be constant
/// over the sphere; returns (angular mean, L^2 deviation).
pub fn compute_charge(data: &ScatteringData) -> Result<(R, R)> {
    data.check_tapered()?;
    let integrand = charge_density_rows(data);
    let total = integrate_rows_full(&integrand, data.du);
    let sqrt4pi = (4.0 * std::f64::consts::PI).sqrt();
    let mean = total[0].re / sqrt4pi;
    let mut dev = 0.0;
    for k in 1..total.len() {
        dev += total[k].norm_sqr();
    }
    Ok((mean, dev.sqrt()))
}

/// rows of Im(Phi conj(D_u Phi)) - div Abar per node (coefficient space)
fn charge_density_rows(data: &ScatteringData) -> Vec<Vec<C>> {
    let im_part = data.charge_integrand();
    (0..data.n_u)
        .map(|i| {
            let div = data.abar[i].sdiv();
            im_part[i].sub(&div).c
        })
        .collect()
}

/// Second compatibility integral: int div(*Abar) du, returned per mode.
fn star_div_rows(data: &ScatteringData) -> Vec<Vec<C>> {
    (0..data.n_u)
        .map(|i| data.abar[i].star().sdiv().c.clone())
        .collect()
}

fn integrate_rows_full(rows: &[Vec<C>], h: R) -> Vec<C> {
    let c = cumint_rows(rows, h);
    c.last().cloned().unwrap_or_default()
}

/// Both admissibility conditions with a pass/fail verdict.
pub fn check_compatibility(data: &ScatteringData, tol: R) -> CompatReport {
    let (q0, anisotropy) = match compute_charge(data) {
        Ok(x) => x,
        Err(_) => (R::NAN, R::INFINITY),
    };
    let sd = integrate_rows_full(&star_div_rows(data), data.du);
    let f = ScalarField {
        l_max: data.sphere.l_max,
        c: sd,
    };
    let star_div_sup = data.sphere.synth(&f).max_abs();
    CompatReport {
        q0,
        anisotropy,
        star_div_sup,
        tol,
        pass: anisotropy < tol && star_div_sup < tol,
    }
}

/// Integrates the transport equations for [r^2 sigma]^inf and [r^2 rho]^inf
/// backwards from u_max with zero terminal values:
///   d/du [r^2 sigma]^inf = -div(*Abar),
///   d/du [r^2 rho]^inf   =  div(Abar) - Im(Phi conj(D_u Phi)).
pub fn transport_limits(data: &ScatteringData) -> Result<ScriFluxes> {
    data.check_tapered()?;
    let l_max = data.sphere.l_max;
    // sigma: sigma(u) = int_u^{umax} div(*Abar) du'
    let sig_src = star_div_rows(data);
    let sigma_inf = backward_integral(&sig_src, data.du, l_max);
    // rho: rho(u) = int_u^{umax} [ Im(...) - div Abar ] du'
    let rho_src = charge_density_rows(data);
    let rho_inf = backward_integral(&rho_src, data.du, l_max);
    Ok(ScriFluxes { sigma_inf, rho_inf })
}

/// F(u) = int_u^{umax} src du', per node.
fn backward_integral(src: &[Vec<C>], h: R, l_max: usize) -> Vec<ScalarField<R>> {
    let n = src.len();
    let rev: Vec<Vec<C>> = (0..n).map(|i| src[n - 1 - i].clone()).collect();
    let cum = cumint_rows(&rev, h);
    (0..n)
        .map(|i| ScalarField {
            l_max,
            c: cum[n - 1 - i].clone(),
        })
        .collect()
}

/// Builds the scri connection: B_u = 0, B_omega(u) = -int_u^{umax} Abar du',
/// and verifies that d B reproduces F+ = sigma_inf E + du ^ Abar discretely.
pub fn build_connection_b(data: &ScatteringData, tol: R) -> Result<ScatteringData> {
    let fluxes = transport_limits(data)?;
    let e_rows: Vec<Vec<C>> = data.abar.iter().map(|f| f.e.clone()).collect();
    let b_rows: Vec<Vec<C>> = data.abar.iter().map(|f| f.b.clone()).collect();
    let l_max = data.sphere.l_max;
    let be = backward_integral(&e_rows, data.du, l_max);
    let bb = backward_integral(&b_rows, data.du, l_max);
    let mut out = data.clone();
    for i in 0..data.n_u {
        out.b_omega[i] = OneForm {
            l_max,
            e: be[i].c.iter().map(|z| -*z).collect(),
            b: bb[i].c.iter().map(|z| -*z).collect(),
        };
    }
    // discrete exterior-derivative check: scurl B_omega = sigma_inf,
    // d_u B_omega = Abar
    let mut worst = 0.0;
    for i in 0..data.n_u {
        let curl = out.b_omega[i].scurl();
        let diff = curl.sub(&fluxes.sigma_inf[i]);
        worst = R::max(worst, diff.norm_sq().sqrt());
    }
    if worst > tol {
        return Err(Error::IncompatibleData(format!(
            "curl of B mismatches the transported sigma limit by {worst:.3e}"
        )));
    }
    Ok(out)
}

/// Gauge transformation of the scri data: Phi -> e^{i xi} Phi,
/// B_u -> B_u - d_u xi, B_omega -> B_omega - sgrad xi. Abar is untouched.
pub fn gauge_transform(data: &ScatteringData, xi: &[ScalarField<R>]) -> ScatteringData {
    assert_eq!(xi.len(), data.n_u);
    let mut out = data.clone();
    let rows: Vec<Vec<C>> = xi.iter().map(|f| f.c.clone()).collect();
    let dxi = deriv_rows(&rows, data.du, U_FD_ORDER);
    for i in 0..data.n_u {
        // e^{i xi} Phi pointwise
        let xv = data.sphere.synth(&xi[i]);
        let pv = data.sphere.synth(&data.phi[i]);
        let mut vals = GridValues::zeros(xv.n_theta, xv.n_phi);
        for k in 0..vals.v.len() {
            let x = xv.v[k].re;
            vals.v[k] = pv.v[k] * C::new(x.cos(), x.sin());
        }
        out.phi[i] = data.sphere.analyze(&vals);
        out.b_u[i] = data.b_u[i].sub(&ScalarField {
            l_max: data.sphere.l_max,
            c: dxi[i].clone(),
        });
        out.b_omega[i] = data.b_omega[i].sub(&xi[i].sgrad());
    }
    out
}

/// Options for the weighted data norms.
#[derive(Debug, Clone, Copy)]
pub struct NormLimits {
    pub max_n_abar: usize,
    pub max_n_phi: usize,
}

impl Default for NormLimits {
    fn default() -> Self {
        Self {
            max_n_abar: 2,
            max_n_phi: 3,
        }
    }
}

/// The gauge-invariant weighted data norm on [U_star, infinity):
/// sum_{n<=2, |beta|<=6-2n} int <u>^{6+2n} |d_u^n Omega^beta Abar|^2
/// + sum_{n<=3, |beta|<=7-2 max(n,1)} int <u>^{4+2n} |D_u^n D_Omega^beta Phi|^2.
pub fn sn_norm(data: &ScatteringData, u_star: R) -> Result<R> {
    weighted_norm(data, u_star, data.u_max(), |n| 6.0 + 2.0 * n as R, |n| {
        4.0 + 2.0 * n as R
    })
}

/// The scattering energy E_eps1 = SN_0 norm plus the past-weighted tail on
/// (-infinity, 0]: weights <u>^{2+2n-eps1} (Abar) and <u>^{2n-eps1} (Phi).
pub fn weighted_energy_eps1(data: &ScatteringData, eps1: R) -> Result<R> {
    let sn0 = sn_norm(data, 0.0)?;
    let tail = weighted_norm(
        data,
        data.u_min,
        0.0,
        move |n| 2.0 + 2.0 * n as R - eps1,
        move |n| 2.0 * n as R - eps1,
    )?;
    Ok(sn0 + tail)
}

fn weighted_norm(
    data: &ScatteringData,
    u_lo: R,
    u_hi: R,
    w_abar: impl Fn(usize) -> R,
    w_phi: impl Fn(usize) -> R,
) -> Result<R> {
    if data.n_u < U_FD_ORDER + 2 {
        return Err(Error::GridTooCoarse(
            "u grid cannot support the norm's derivative stencils".into(),
        ));
    }
    if u_hi < data.u_min || u_lo > data.u_max() {
        return Ok(0.0);
    }
    let lim = NormLimits::default();
    let l_max = data.sphere.l_max;
    let mut total = 0.0;
    // Abar block: angular word first, then plain u-derivatives
    for word in omega_words(6) {
        let wlen: usize = word.iter().sum();
        let worded: Vec<OneForm<R>> = data
            .abar
            .iter()
            .map(|x| apply_word_oneform(x, &word))
            .collect();
        let mut e_rows: Vec<Vec<C>> = worded.iter().map(|f| f.e.clone()).collect();
        let mut b_rows: Vec<Vec<C>> = worded.iter().map(|f| f.b.clone()).collect();
        for n in 0..=lim.max_n_abar {
            if wlen <= 6 - 2 * n {
                let g: Vec<R> = (0..data.n_u)
                    .map(|i| {
                        e_rows[i].iter().chain(&b_rows[i]).map(|z| z.norm_sqr()).sum()
                    })
                    .collect();
                total += weighted_integral(data, &g, w_abar(n), u_lo, u_hi);
            }
            if n < lim.max_n_abar {
                e_rows = deriv_rows(&e_rows, data.du, U_FD_ORDER);
                b_rows = deriv_rows(&b_rows, data.du, U_FD_ORDER);
            }
        }
    }
    // Phi block: covariant angular word first, then covariant u-derivatives
    let b_cache = BOmegaCache::build(data);
    for word in omega_words(7) {
        let wlen: usize = word.iter().sum();
        let mut fields = apply_word_phi(data, &b_cache, &data.phi, &word);
        for n in 0..=lim.max_n_phi {
            if wlen <= 7 - 2 * n.max(1) {
                let g: Vec<R> = fields.iter().map(|f| f.norm_sq()).collect();
                total += weighted_integral(data, &g, w_phi(n), u_lo, u_hi);
            }
            if n < lim.max_n_phi {
                let rows: Vec<Vec<C>> = fields.iter().map(|f| f.c.clone()).collect();
                let dr = deriv_rows(&rows, data.du, U_FD_ORDER);
                fields = (0..data.n_u)
                    .map(|i| {
                        let mut f = ScalarField {
                            l_max,
                            c: dr[i].clone(),
                        };
                        if data.b_u[i].c.iter().any(|z| z.norm_sqr() > 0.0) {
                            let prod = data.sphere.mul(&data.b_u[i], &fields[i]);
                            f = f.add(&prod.scale(C::new(0.0, 1.0)));
                        }
                        f
                    })
                    .collect();
            }
        }
    }
    Ok(total)
}

/// All monomial words Omega_23^a Omega_31^b Omega_12^c with a+b+c <= bmax.
fn omega_words(bmax: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for total in 0..=bmax {
        for a in 0..=total {
            for b in 0..=(total - a) {
                out.push([a, b, total - a - b]);
            }
        }
    }
    out
}

const AXES: [(usize, usize); 3] = [(2, 3), (3, 1), (1, 2)];

fn apply_word_oneform(x: &OneForm<R>, word: &[usize; 3]) -> OneForm<R> {
    let mut f = x.clone();
    for (ax, &count) in AXES.iter().zip(word.iter()) {
        for _ in 0..count {
            f = f.rotate_gen(*ax);
        }
    }
    f
}

/// Pointwise values of B(Omega_axis) per node, cached once per norm
/// evaluation. Empty when the connection vanishes (the native gauge).
struct BOmegaCache {
    vals: Option<Vec<[GridValues<R>; 3]>>,
}

impl BOmegaCache {
    fn build(data: &ScatteringData) -> Self {
        if data.b_omega.iter().all(|b| b.norm_sq() == 0.0) {
            return Self { vals: None };
        }
        let sph = &data.sphere;
        let vals = (0..data.n_u)
            .map(|i| {
                let (bt, bp) = sph.synth_oneform(&data.b_omega[i]);
                std::array::from_fn(|axis| {
                    let (a, b) = (AXES[axis].0 - 1, AXES[axis].1 - 1);
                    let mut g = GridValues::zeros(sph.n_theta, sph.n_phi);
                    for it in 0..sph.n_theta {
                        for jp in 0..sph.n_phi {
                            let w = sph.omega(it, jp);
                            // tangent vector Omega_ab at omega: x_a e_b - x_b e_a
                            let mut vec3 = [0.0; 3];
                            vec3[b] += w[a];
                            vec3[a] -= w[b];
                            let et = sph.e_theta(it, jp);
                            let ep = sph.e_phi(it, jp);
                            let vt = vec3[0] * et[0] + vec3[1] * et[1] + vec3[2] * et[2];
                            let vp = vec3[0] * ep[0] + vec3[1] * ep[1] + vec3[2] * ep[2];
                            *g.at_mut(it, jp) = bt.at(it, jp) * vt + bp.at(it, jp) * vp;
                        }
                    }
                    g
                })
            })
            .collect();
        Self { vals: Some(vals) }
    }
}

/// Covariant angular word D_Omega^word applied to a per-node scalar row,
/// D_Omega = Omega + i B(Omega).
fn apply_word_phi(
    data: &ScatteringData,
    cache: &BOmegaCache,
    fields: &[ScalarField<R>],
    word: &[usize; 3],
) -> Vec<ScalarField<R>> {
    let sph = &data.sphere;
    let mut cur: Vec<ScalarField<R>> = fields.to_vec();
    for (axis, &count) in word.iter().enumerate() {
        for _ in 0..count {
            cur = cur
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let mut g = f.rotate_gen(AXES[axis]);
                    if let Some(vals) = &cache.vals {
                        let fv = sph.synth(f);
                        let mut pv = GridValues::zeros(sph.n_theta, sph.n_phi);
                        for k in 0..pv.v.len() {
                            pv.v[k] = C::new(0.0, 1.0) * vals[i][axis].v[k] * fv.v[k];
                        }
                        g = g.add(&sph.analyze(&pv));
                    }
                    g
                })
                .collect();
        }
    }
    cur
}

/// int <u>^p g(u) du over [u_lo, u_hi] intersected with the grid.
fn weighted_integral(data: &ScatteringData, g: &[R], p: R, u_lo: R, u_hi: R) -> R {
    let vals: Vec<C> = (0..data.n_u)
        .map(|i| {
            let u = data.u_at(i);
            if u < u_lo - 0.5 * data.du || u > u_hi + 0.5 * data.du {
                C::new(0.0, 0.0)
            } else {
                let w = (u * u + 1.0).sqrt().powf(p);
                C::new(w * g[i], 0.0)
            }
        })
        .collect();
    cumint_series(&vals, data.du).last().map(|z| z.re).unwrap_or(0.0)
}

fn sample_rows(rows: &[&[C]], x0: R, dx: R, x: R) -> Vec<C> {
    let nc = rows[0].len();
    let n = rows.len();
    (0..nc)
        .map(|k| {
            let col: Vec<C> = (0..n).map(|i| rows[i][k]).collect();
            pchip_complex(x0, dx, &col)(x)
        })
        .collect()
}

fn sample_profile(p: &Profile, u_min: R, du: R, n_u: usize) -> Result<Vec<C>> {
    match p {
        Profile::Gaussian {
            center,
            width,
            amp,
            phase,
        } => Ok((0..n_u)
            .map(|i| {
                let u = u_min + du * i as R;
                let s = (u - center) / width;
                let mag = amp * (-s * s).exp();
                let ph = phase * (u - center);
                C::new(mag * ph.cos(), mag * ph.sin())
            })
            .collect()),
        Profile::Table { path } => {
            let (us, vals) = manifest::read_profile_table(std::path::Path::new(path))?;
            Ok((0..n_u)
                .map(|i| {
                    let u = u_min + du * i as R;
                    interp_table(&us, &vals, u)
                })
                .collect())
        }
    }
}

/// Monotone cubic interpolation of a (possibly nonuniform) table; zero
/// outside the tabulated range.
fn interp_table(xs: &[R], ys: &[C], x: R) -> C {
    let n = xs.len();
    if x <= xs[0] || x >= xs[n - 1] {
        return C::new(0.0, 0.0);
    }
    let k = xs.partition_point(|&t| t <= x).saturating_sub(1).min(n - 2);
    let h = xs[k + 1] - xs[k];
    let t = (x - xs[k]) / h;
    let comp = |pick: &dyn Fn(C) -> R| -> R {
        let y: Vec<R> = ys.iter().map(|z| pick(*z)).collect();
        let sec = |j: usize| (y[j + 1] - y[j]) / (xs[j + 1] - xs[j]);
        let slope_at = |j: usize| -> R {
            if j == 0 {
                sec(0)
            } else if j == n - 1 {
                sec(n - 2)
            } else {
                let (d0, d1) = (sec(j - 1), sec(j));
                if d0 * d1 > 0.0 {
                    let (h0, h1) = (xs[j] - xs[j - 1], xs[j + 1] - xs[j]);
                    let (w0, w1) = (2.0 * h1 + h0, h1 + 2.0 * h0);
                    (w0 + w1) / (w0 / d0 + w1 / d1)
                } else {
                    0.0
                }
            }
        };
        let (m0, m1) = (slope_at(k) * h, slope_at(k + 1) * h);
        let (t2, t3) = (t * t, t * t * t);
        (2.0 * t3 - 3.0 * t2 + 1.0) * y[k]
            + (t3 - 2.0 * t2 + t) * m0
            + (-2.0 * t3 + 3.0 * t2) * y[k + 1]
            + (t3 - t2) * m1
    };
    C::new(comp(&|z: C| z.re), comp(&|z: C| z.im))
}

/// Smooth compactly-supported window, identically 1 away from the tapered
/// ends and identically 0 at the boundary nodes.
pub fn taper_window(n: usize, frac: f64) -> Vec<R> {
    let e = |t: f64| if t <= 0.0 { 0.0 } else { (-1.0 / t).exp() };
    let s = |t: f64| {
        let a = e(t);
        let b = e(1.0 - t);
        a / (a + b)
    };
    (0..n)
        .map(|i| {
            let x = i as f64 / (n as f64 - 1.0);
            if frac <= 0.0 {
                1.0
            } else {
                s(x / frac) * s((1.0 - x) / frac)
            }
        })
        .collect()
}

fn realize_oneform(x: &mut OneForm<R>) {
    let mut e = ScalarField {
        l_max: x.l_max,
        c: x.e.clone(),
    };
    let mut b = ScalarField {
        l_max: x.l_max,
        c: x.b.clone(),
    };
    e.realize();
    b.realize();
    x.e = e.c;
    x.b = b.c;
}

#[cfg(test)]
mod tests;
