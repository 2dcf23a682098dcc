//! Spectral calculus on the unit sphere.
//!
//! Scalars live in the orthonormal complex harmonic basis Y_{lm}; tangential
//! 1-forms in the electric/magnetic (gradient/curl) vector-harmonic basis,
//! which diagonalizes every angular operator used by the evolution and keeps
//! the poles out of the arithmetic. Nonlinear products are formed pointwise
//! on a padded Gauss-Legendre x equispaced-longitude quadrature grid and
//! re-projected, so quadratic and cubic source terms do not alias.

mod legendre;

use crate::scalar::Real;
use crate::{Error, Result};
use legendre::{gauss_legendre, idx_pos, plm_tables};
use num_complex::Complex;
use std::sync::Arc;

/// Flat index for (l, m) with |m| <= l: k = l(l+1) + m.
#[inline]
pub fn idx_lm(l: usize, m: i64) -> usize {
    (l * (l + 1)) as usize + (m + l as i64) as usize - l
}

/// Number of coefficients through degree l_max.
#[inline]
pub fn n_coeffs(l_max: usize) -> usize {
    (l_max + 1) * (l_max + 1)
}

/// Quadrature grid and precomputed transform tables.
///
/// `n_theta` Gauss-Legendre colatitude nodes, `n_phi` equispaced longitudes.
/// The default constructor pads the quadrature so that cubic products of
/// band-limited fields project exactly onto degree <= l_max.
#[derive(Debug, Clone)]
pub struct SphereGrid<T: Real> {
    pub l_max: usize,
    pub n_theta: usize,
    pub n_phi: usize,
    tables: Arc<Tables<T>>,
}

#[derive(Debug)]
struct Tables<T: Real> {
    cos_theta: Vec<T>,
    sin_theta: Vec<T>,
    w_theta: Vec<T>,
    phi: Vec<T>,
    /// Pbar_{lm}(theta_i), m >= 0, packed [i_theta * npos + idx_pos(l, m)]
    plm: Vec<T>,
    /// d/dtheta Pbar_{lm}
    dplm: Vec<T>,
    /// m Pbar_{lm} / sin(theta)
    mplm_sin: Vec<T>,
    /// e^{i m phi_j}, packed [m * n_phi + j], 0 <= m <= l_max
    expmphi: Vec<Complex<T>>,
    npos: usize,
}

impl<T: Real> SphereGrid<T> {
    /// Grid padded for exact projection of cubic nonlinearities
    /// (the 3/2-rule padding rounded up to cubic exactness).
    pub fn new(l_max: usize) -> Self {
        Self::with_sizes(l_max, 2 * l_max + 2, 4 * l_max + 1).expect("padded sizes are valid")
    }

    pub fn with_sizes(l_max: usize, n_theta: usize, n_phi: usize) -> Result<Self> {
        if n_theta < l_max + 1 {
            return Err(Error::GridTooCoarse(format!(
                "n_theta = {n_theta} < l_max + 1 = {}",
                l_max + 1
            )));
        }
        if n_phi < 2 * l_max + 1 {
            return Err(Error::GridTooCoarse(format!(
                "n_phi = {n_phi} < 2 l_max + 1 = {}",
                2 * l_max + 1
            )));
        }
        let (x, w) = gauss_legendre::<T>(n_theta);
        let mut cos_theta = Vec::with_capacity(n_theta);
        let mut sin_theta = Vec::with_capacity(n_theta);
        let npos = (l_max + 1) * (l_max + 2) / 2;
        let mut plm = Vec::with_capacity(n_theta * npos);
        let mut dplm = Vec::with_capacity(n_theta * npos);
        let mut mplm_sin = Vec::with_capacity(n_theta * npos);
        for i in 0..n_theta {
            // descending theta as x ascends; keep x ascending, theta = acos(x)
            let ct = x[i];
            let st = (T::one() - ct * ct).sqrt();
            cos_theta.push(ct);
            sin_theta.push(st);
            let (p, dp, mps) = plm_tables(l_max, ct, st);
            plm.extend_from_slice(&p);
            dplm.extend_from_slice(&dp);
            mplm_sin.extend_from_slice(&mps);
        }
        let mut phi = Vec::with_capacity(n_phi);
        let two_pi = T::of(2.0) * T::PI();
        for j in 0..n_phi {
            phi.push(two_pi * T::of_usize(j) / T::of_usize(n_phi));
        }
        let mut expmphi = Vec::with_capacity((l_max + 1) * n_phi);
        for m in 0..=l_max {
            for j in 0..n_phi {
                let a = T::of_usize(m) * phi[j];
                expmphi.push(Complex::new(a.cos(), a.sin()));
            }
        }
        Ok(Self {
            l_max,
            n_theta,
            n_phi,
            tables: Arc::new(Tables {
                cos_theta,
                sin_theta,
                w_theta: w,
                phi,
                plm,
                dplm,
                mplm_sin,
                expmphi,
                npos,
            }),
        })
    }

    #[inline]
    pub fn n_nodes(&self) -> usize {
        self.n_theta * self.n_phi
    }

    pub fn zero_scalar(&self) -> ScalarField<T> {
        ScalarField::zeros(self.l_max)
    }

    pub fn zero_oneform(&self) -> OneForm<T> {
        OneForm::zeros(self.l_max)
    }

    pub fn zero_values(&self) -> GridValues<T> {
        GridValues::zeros(self.n_theta, self.n_phi)
    }

    #[inline]
    pub fn cos_theta(&self, i: usize) -> T {
        self.tables.cos_theta[i]
    }
    #[inline]
    pub fn sin_theta(&self, i: usize) -> T {
        self.tables.sin_theta[i]
    }
    #[inline]
    pub fn phi(&self, j: usize) -> T {
        self.tables.phi[j]
    }

    /// Quadrature weight of node (i, j); weights sum to 4 pi.
    #[inline]
    pub fn weight(&self, i: usize) -> T {
        self.tables.w_theta[i] * T::of(2.0) * T::PI() / T::of_usize(self.n_phi)
    }

    /// Cartesian radial unit vector at node (i, j).
    #[inline]
    pub fn omega(&self, i: usize, j: usize) -> [T; 3] {
        let (ct, st) = (self.cos_theta(i), self.sin_theta(i));
        let (cp, sp) = (self.phi(j).cos(), self.phi(j).sin());
        [st * cp, st * sp, ct]
    }

    /// Cartesian colatitude unit vector e_theta at node (i, j).
    #[inline]
    pub fn e_theta(&self, i: usize, j: usize) -> [T; 3] {
        let (ct, st) = (self.cos_theta(i), self.sin_theta(i));
        let (cp, sp) = (self.phi(j).cos(), self.phi(j).sin());
        [ct * cp, ct * sp, -st]
    }

    /// Cartesian longitude unit vector e_phi at node (i, j).
    #[inline]
    pub fn e_phi(&self, _i: usize, j: usize) -> [T; 3] {
        let (cp, sp) = (self.phi(j).cos(), self.phi(j).sin());
        [-sp, cp, T::zero()]
    }

    /// Synthesis: spectral coefficients to grid samples.
    pub fn synth(&self, f: &ScalarField<T>) -> GridValues<T> {
        assert_eq!(f.l_max, self.l_max, "field degree must match grid");
        let t = &*self.tables;
        let mut out = GridValues::zeros(self.n_theta, self.n_phi);
        let l_max = self.l_max as i64;
        for i in 0..self.n_theta {
            let prow = &t.plm[i * t.npos..(i + 1) * t.npos];
            for m in -l_max..=l_max {
                let ma = m.unsigned_abs() as usize;
                // g_m(theta_i) = sum_l c_{lm} s_m Pbar_{l|m|}
                let mut g = Complex::new(T::zero(), T::zero());
                let sgn = if m < 0 && ma % 2 == 1 { -T::one() } else { T::one() };
                for l in ma..=self.l_max {
                    g += f.c[idx_lm(l, m)] * (sgn * prow[idx_pos(l, ma)]);
                }
                for j in 0..self.n_phi {
                    let e = t.expmphi[ma * self.n_phi + j];
                    let e = if m < 0 { e.conj() } else { e };
                    out.v[i * self.n_phi + j] += g * e;
                }
            }
        }
        out
    }

    /// Analysis: project grid samples onto degree <= l_max.
    pub fn analyze(&self, g: &GridValues<T>) -> ScalarField<T> {
        assert_eq!((g.n_theta, g.n_phi), (self.n_theta, self.n_phi), "grid shape");
        let t = &*self.tables;
        let mut f = ScalarField::zeros(self.l_max);
        let l_max = self.l_max as i64;
        let dphi_w = T::of(2.0) * T::PI() / T::of_usize(self.n_phi);
        for i in 0..self.n_theta {
            let prow = &t.plm[i * t.npos..(i + 1) * t.npos];
            let wi = t.w_theta[i] * dphi_w;
            for m in -l_max..=l_max {
                let ma = m.unsigned_abs() as usize;
                // F_m(theta_i) = sum_j g e^{-i m phi_j}
                let mut fm = Complex::new(T::zero(), T::zero());
                for j in 0..self.n_phi {
                    let e = t.expmphi[ma * self.n_phi + j];
                    let e = if m < 0 { e } else { e.conj() };
                    fm += g.v[i * self.n_phi + j] * e;
                }
                let sgn = if m < 0 && ma % 2 == 1 { -T::one() } else { T::one() };
                for l in ma..=self.l_max {
                    f.c[idx_lm(l, m)] += fm * (sgn * prow[idx_pos(l, ma)] * wi);
                }
            }
        }
        f
    }

    /// Gradient synthesis: frame components (d/dtheta f, (1/sin) d/dphi f).
    pub fn synth_grad(&self, f: &ScalarField<T>) -> (GridValues<T>, GridValues<T>) {
        assert_eq!(f.l_max, self.l_max);
        let t = &*self.tables;
        let mut gt = GridValues::zeros(self.n_theta, self.n_phi);
        let mut gp = GridValues::zeros(self.n_theta, self.n_phi);
        let l_max = self.l_max as i64;
        let iu = Complex::new(T::zero(), T::one());
        for i in 0..self.n_theta {
            let drow = &t.dplm[i * t.npos..(i + 1) * t.npos];
            let mrow = &t.mplm_sin[i * t.npos..(i + 1) * t.npos];
            for m in -l_max..=l_max {
                let ma = m.unsigned_abs() as usize;
                let sgn = if m < 0 && ma % 2 == 1 { -T::one() } else { T::one() };
                let msign = if m < 0 { -T::one() } else { T::one() };
                let mut a = Complex::new(T::zero(), T::zero());
                let mut b = Complex::new(T::zero(), T::zero());
                for l in ma..=self.l_max {
                    let c = f.c[idx_lm(l, m)];
                    a += c * (sgn * drow[idx_pos(l, ma)]);
                    // i m Pbar/sin: signed m
                    b += c * iu * (sgn * msign * mrow[idx_pos(l, ma)]);
                }
                for j in 0..self.n_phi {
                    let e = t.expmphi[ma * self.n_phi + j];
                    let e = if m < 0 { e.conj() } else { e };
                    gt.v[i * self.n_phi + j] += a * e;
                    gp.v[i * self.n_phi + j] += b * e;
                }
            }
        }
        (gt, gp)
    }

    /// 1-form synthesis to frame components (X_theta, X_phi).
    pub fn synth_oneform(&self, x: &OneForm<T>) -> (GridValues<T>, GridValues<T>) {
        assert_eq!(x.l_max, self.l_max);
        // E_lm = grad Y_lm / nu ; B_lm = *E_lm = (-E_phi, E_theta)
        let mut ec = ScalarField::zeros(self.l_max);
        let mut bc = ScalarField::zeros(self.l_max);
        for l in 1..=self.l_max {
            let nu = T::of_usize(l * (l + 1)).sqrt();
            for m in -(l as i64)..=(l as i64) {
                let k = idx_lm(l, m);
                ec.c[k] = x.e[k] / nu;
                bc.c[k] = x.b[k] / nu;
            }
        }
        let (et, ep) = self.synth_grad(&ec);
        let (bt, bp) = self.synth_grad(&bc);
        // X = sum e E + b B: X_theta = grad_t(ec) - grad_p(bc); X_phi = grad_p(ec) + grad_t(bc)
        let mut xt = et;
        let mut xp = ep;
        for k in 0..xt.v.len() {
            xt.v[k] -= bp.v[k];
            xp.v[k] += bt.v[k];
        }
        (xt, xp)
    }

    /// 1-form analysis from frame components.
    pub fn analyze_oneform(&self, xt: &GridValues<T>, xp: &GridValues<T>) -> OneForm<T> {
        let t = &*self.tables;
        let mut out = OneForm::zeros(self.l_max);
        let l_max = self.l_max as i64;
        let dphi_w = T::of(2.0) * T::PI() / T::of_usize(self.n_phi);
        let iu = Complex::new(T::zero(), T::one());
        for i in 0..self.n_theta {
            let drow = &t.dplm[i * t.npos..(i + 1) * t.npos];
            let mrow = &t.mplm_sin[i * t.npos..(i + 1) * t.npos];
            let wi = t.w_theta[i] * dphi_w;
            for m in -l_max..=l_max {
                let ma = m.unsigned_abs() as usize;
                let mut ft = Complex::new(T::zero(), T::zero());
                let mut fp = Complex::new(T::zero(), T::zero());
                for j in 0..self.n_phi {
                    let e = t.expmphi[ma * self.n_phi + j];
                    let e = if m < 0 { e } else { e.conj() };
                    ft += xt.v[i * self.n_phi + j] * e;
                    fp += xp.v[i * self.n_phi + j] * e;
                }
                let sgn = if m < 0 && ma % 2 == 1 { -T::one() } else { T::one() };
                let msign = if m < 0 { -T::one() } else { T::one() };
                for l in ma.max(1)..=self.l_max {
                    let nu = T::of_usize(l * (l + 1)).sqrt();
                    let dth = sgn * drow[idx_pos(l, ma)] / nu;
                    // conj(i m Pbar/sin) = -i m Pbar/sin
                    let dph = -iu * (sgn * msign * mrow[idx_pos(l, ma)] / nu);
                    let k = idx_lm(l, m);
                    // e = <X, conj E>, E = (dth, i m ...): conj E = (dth, dph)
                    out.e[k] += (ft * dth + fp * dph) * wi;
                    // B = (-E_phi, E_theta): conj B = (-conj E_phi, conj E_theta) = (-dph, dth)
                    out.b[k] += (-ft * dph + fp * dth) * wi;
                }
            }
        }
        out
    }

    /// Quadrature of grid samples over the sphere.
    pub fn integrate(&self, g: &GridValues<T>) -> Complex<T> {
        let mut s = Complex::new(T::zero(), T::zero());
        for i in 0..self.n_theta {
            let wi = self.weight(i);
            for j in 0..self.n_phi {
                s += g.v[i * self.n_phi + j] * wi;
            }
        }
        s
    }

    /// Integral of a spectral scalar over the sphere: sqrt(4 pi) c_{00}.
    pub fn integrate_field(&self, f: &ScalarField<T>) -> Complex<T> {
        f.c[0] * (T::of(4.0) * T::PI()).sqrt()
    }

    /// Pointwise product of two band-limited scalars, re-projected.
    pub fn mul(&self, f: &ScalarField<T>, g: &ScalarField<T>) -> ScalarField<T> {
        let fv = self.synth(f);
        let gv = self.synth(g);
        let mut p = fv;
        for (a, b) in p.v.iter_mut().zip(gv.v.iter()) {
            *a *= *b;
        }
        self.analyze(&p)
    }
}

/// Spectral scalar field: complex amplitudes c_{lm}, k = l(l+1)+m.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField<T: Real> {
    pub l_max: usize,
    pub c: Vec<Complex<T>>,
}

impl<T: Real> ScalarField<T> {
    pub fn zeros(l_max: usize) -> Self {
        Self {
            l_max,
            c: vec![Complex::new(T::zero(), T::zero()); n_coeffs(l_max)],
        }
    }

    pub fn from_mode(l_max: usize, l: usize, m: i64, amp: Complex<T>) -> Self {
        let mut f = Self::zeros(l_max);
        f.c[idx_lm(l, m)] = amp;
        f
    }

    /// Constant field with value `a`.
    pub fn constant(l_max: usize, a: Complex<T>) -> Self {
        let mut f = Self::zeros(l_max);
        f.c[0] = a * (T::of(4.0) * T::PI()).sqrt();
        f
    }

    #[inline]
    pub fn get(&self, l: usize, m: i64) -> Complex<T> {
        self.c[idx_lm(l, m)]
    }

    /// L^2(S^2) norm squared (Parseval).
    pub fn norm_sq(&self) -> T {
        self.c.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b)
    }

    /// Laplace-Beltrami: multiplies mode l by -l(l+1).
    pub fn laplacian(&self) -> Self {
        let mut out = self.clone();
        for l in 0..=self.l_max {
            let ev = -T::of_usize(l * (l + 1));
            for m in -(l as i64)..=(l as i64) {
                out.c[idx_lm(l, m)] = self.c[idx_lm(l, m)] * ev;
            }
        }
        out
    }

    /// Tangential gradient as a 1-form (electric type).
    pub fn sgrad(&self) -> OneForm<T> {
        let mut out = OneForm::zeros(self.l_max);
        for l in 1..=self.l_max {
            let nu = T::of_usize(l * (l + 1)).sqrt();
            for m in -(l as i64)..=(l as i64) {
                out.e[idx_lm(l, m)] = self.c[idx_lm(l, m)] * nu;
            }
        }
        out
    }

    /// Action of the rotation generator Omega_{ab} (a,b in {1,2,3}), exact in
    /// coefficient space. Omega_{12} = d/dphi; the others mix adjacent m.
    pub fn rotate_gen(&self, axes: (usize, usize)) -> Self {
        rotate_gen_coeffs(self.l_max, &self.c, axes, |c| ScalarField {
            l_max: self.l_max,
            c,
        })
    }

    pub fn scale(&self, a: Complex<T>) -> Self {
        Self {
            l_max: self.l_max,
            c: self.c.iter().map(|z| *z * a).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.l_max, other.l_max);
        Self {
            l_max: self.l_max,
            c: self.c.iter().zip(&other.c).map(|(a, b)| *a + *b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.l_max, other.l_max);
        Self {
            l_max: self.l_max,
            c: self.c.iter().zip(&other.c).map(|(a, b)| *a - *b).collect(),
        }
    }

    /// Coefficients of the complex conjugate field.
    pub fn conj_field(&self) -> Self {
        let mut out = Self::zeros(self.l_max);
        for l in 0..=self.l_max {
            for m in -(l as i64)..=(l as i64) {
                let sgn = if m.rem_euclid(2) == 1 { -T::one() } else { T::one() };
                out.c[idx_lm(l, m)] = self.c[idx_lm(l, -m)].conj() * sgn;
            }
        }
        out
    }

    /// Projects onto the real subspace: c_{l,-m} = (-1)^m conj(c_{lm}).
    pub fn realize(&mut self) {
        let half = T::of(0.5);
        for l in 0..=self.l_max {
            for m in 0..=(l as i64) {
                let sgn = if m.rem_euclid(2) == 1 { -T::one() } else { T::one() };
                let a = self.c[idx_lm(l, m)];
                let b = self.c[idx_lm(l, -m)];
                let avg = (a + b.conj() * sgn) * half;
                self.c[idx_lm(l, m)] = avg;
                self.c[idx_lm(l, -m)] = avg.conj() * sgn;
            }
        }
    }
}

/// Tangential 1-form in the electric/magnetic vector-harmonic basis,
/// X = sum_{l>=1,m} e_{lm} E_lm + b_{lm} B_lm with E_lm = grad Y_lm / sqrt(l(l+1)),
/// B_lm = *E_lm. The l = 0 sector is identically absent.
#[derive(Debug, Clone, PartialEq)]
pub struct OneForm<T: Real> {
    pub l_max: usize,
    pub e: Vec<Complex<T>>,
    pub b: Vec<Complex<T>>,
}

impl<T: Real> OneForm<T> {
    pub fn zeros(l_max: usize) -> Self {
        let z = vec![Complex::new(T::zero(), T::zero()); n_coeffs(l_max)];
        Self {
            l_max,
            e: z.clone(),
            b: z,
        }
    }

    pub fn from_mode(l_max: usize, l: usize, m: i64, amp: Complex<T>, magnetic: bool) -> Self {
        assert!(l >= 1, "1-forms have no l = 0 sector");
        let mut x = Self::zeros(l_max);
        if magnetic {
            x.b[idx_lm(l, m)] = amp;
        } else {
            x.e[idx_lm(l, m)] = amp;
        }
        x
    }

    /// Hodge star: (e, b) -> (-b, e). Fixed orientation: the area form is the
    /// outward one, (star X)_j = X^i eps_{ij} with eps(e_theta, e_phi) = 1.
    pub fn star(&self) -> Self {
        Self {
            l_max: self.l_max,
            e: self.b.iter().map(|z| -*z).collect(),
            b: self.e.clone(),
        }
    }

    /// Sphere divergence: only the electric part contributes.
    pub fn sdiv(&self) -> ScalarField<T> {
        let mut out = ScalarField::zeros(self.l_max);
        for l in 1..=self.l_max {
            let nu = -T::of_usize(l * (l + 1)).sqrt();
            for m in -(l as i64)..=(l as i64) {
                out.c[idx_lm(l, m)] = self.e[idx_lm(l, m)] * nu;
            }
        }
        out
    }

    /// Scalar curl: only the magnetic part contributes; scurl = -sdiv(star X).
    pub fn scurl(&self) -> ScalarField<T> {
        let mut out = ScalarField::zeros(self.l_max);
        for l in 1..=self.l_max {
            let nu = -T::of_usize(l * (l + 1)).sqrt();
            for m in -(l as i64)..=(l as i64) {
                out.c[idx_lm(l, m)] = self.b[idx_lm(l, m)] * nu;
            }
        }
        out
    }

    pub fn rotate_gen(&self, axes: (usize, usize)) -> Self {
        let e = rotate_gen_coeffs(self.l_max, &self.e, axes, |c| c);
        let b = rotate_gen_coeffs(self.l_max, &self.b, axes, |c| c);
        Self {
            l_max: self.l_max,
            e,
            b,
        }
    }

    pub fn norm_sq(&self) -> T {
        let s = |v: &[Complex<T>]| v.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b);
        s(&self.e) + s(&self.b)
    }

    pub fn scale(&self, a: Complex<T>) -> Self {
        Self {
            l_max: self.l_max,
            e: self.e.iter().map(|z| *z * a).collect(),
            b: self.b.iter().map(|z| *z * a).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.l_max, other.l_max);
        Self {
            l_max: self.l_max,
            e: self.e.iter().zip(&other.e).map(|(a, b)| *a + *b).collect(),
            b: self.b.iter().zip(&other.b).map(|(a, b)| *a + *b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.l_max, other.l_max);
        Self {
            l_max: self.l_max,
            e: self.e.iter().zip(&other.e).map(|(a, b)| *a - *b).collect(),
            b: self.b.iter().zip(&other.b).map(|(a, b)| *a - *b).collect(),
        }
    }
}

fn rotate_gen_coeffs<T: Real, O>(
    l_max: usize,
    c: &[Complex<T>],
    axes: (usize, usize),
    wrap: impl FnOnce(Vec<Complex<T>>) -> O,
) -> O {
    let mut out = vec![Complex::new(T::zero(), T::zero()); c.len()];
    let iu = Complex::new(T::zero(), T::one());
    let lam_p = |l: i64, m: i64| T::of(((l - m) * (l + m + 1)) as f64).sqrt();
    let lam_m = |l: i64, m: i64| T::of(((l + m) * (l - m + 1)) as f64).sqrt();
    for l in 0..=l_max {
        let li = l as i64;
        for m in -li..=li {
            let k = idx_lm(l, m);
            match axes {
                (1, 2) => out[k] = c[k] * iu * T::of(m as f64),
                (2, 3) | (3, 1) => {
                    // contributions from m-1 (via L_+) and m+1 (via L_-)
                    let mut up = Complex::new(T::zero(), T::zero());
                    let mut dn = Complex::new(T::zero(), T::zero());
                    if m - 1 >= -li {
                        up = c[idx_lm(l, m - 1)] * lam_p(li, m - 1);
                    }
                    if m + 1 <= li {
                        dn = c[idx_lm(l, m + 1)] * lam_m(li, m + 1);
                    }
                    let half = T::of(0.5);
                    out[k] = if axes == (2, 3) {
                        (up + dn) * iu * half
                    } else {
                        (up - dn) * half
                    };
                }
                _ => panic!("rotation axes must be (1,2), (2,3) or (3,1)"),
            }
        }
    }
    wrap(out)
}

/// Complex samples on the quadrature grid, row-major in (theta, phi).
#[derive(Debug, Clone, PartialEq)]
pub struct GridValues<T: Real> {
    pub n_theta: usize,
    pub n_phi: usize,
    pub v: Vec<Complex<T>>,
}

impl<T: Real> GridValues<T> {
    pub fn zeros(n_theta: usize, n_phi: usize) -> Self {
        Self {
            n_theta,
            n_phi,
            v: vec![Complex::new(T::zero(), T::zero()); n_theta * n_phi],
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Complex<T> {
        self.v[i * self.n_phi + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Complex<T> {
        &mut self.v[i * self.n_phi + j]
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self {
            n_theta: self.n_theta,
            n_phi: self.n_phi,
            v: self.v.iter().map(|z| f(*z)).collect(),
        }
    }

    pub fn max_abs(&self) -> T {
        self.v
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }
}

/// Operator kinds for the generic angular dispatcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngularKind {
    Laplacian,
    SDiv,
    SCurl,
    SGrad,
    Star,
}

/// A scalar or a tangential 1-form.
#[derive(Debug, Clone)]
pub enum AnyField<T: Real> {
    Scalar(ScalarField<T>),
    One(OneForm<T>),
}

/// Rank-checked dispatcher over the angular operators.
pub fn angular_op<T: Real>(kind: AngularKind, field: &AnyField<T>) -> Result<AnyField<T>> {
    match (kind, field) {
        (AngularKind::Laplacian, AnyField::Scalar(f)) => Ok(AnyField::Scalar(f.laplacian())),
        (AngularKind::SGrad, AnyField::Scalar(f)) => Ok(AnyField::One(f.sgrad())),
        (AngularKind::SDiv, AnyField::One(x)) => Ok(AnyField::Scalar(x.sdiv())),
        (AngularKind::SCurl, AnyField::One(x)) => Ok(AnyField::Scalar(x.scurl())),
        (AngularKind::Star, AnyField::One(x)) => Ok(AnyField::One(x.star())),
        (AngularKind::Laplacian | AngularKind::SGrad, AnyField::One(_)) => {
            Err(Error::RankMismatch("operator expects a scalar field"))
        }
        (AngularKind::SDiv | AngularKind::SCurl | AngularKind::Star, AnyField::Scalar(_)) => {
            Err(Error::RankMismatch("operator expects a 1-form"))
        }
    }
}

/// Realizes the sphere integral of a spectral scalar.
pub fn integrate_sphere<T: Real>(grid: &SphereGrid<T>, f: &ScalarField<T>) -> Complex<T> {
    grid.integrate_field(f)
}

/// Pointwise evaluation of a spectral scalar at (theta, phi).
pub fn eval_scalar<T: Real>(f: &ScalarField<T>, theta: T, phi: T) -> Complex<T> {
    let (p, _, _) = plm_tables::<T>(f.l_max, theta.cos(), theta.sin());
    let mut s = Complex::new(T::zero(), T::zero());
    for l in 0..=f.l_max {
        for m in -(l as i64)..=(l as i64) {
            let ma = m.unsigned_abs() as usize;
            let sgn = if m < 0 && ma % 2 == 1 { -T::one() } else { T::one() };
            let a = T::of(m as f64) * phi;
            s += f.c[idx_lm(l, m)] * (sgn * p[idx_pos(l, ma)]) * Complex::new(a.cos(), a.sin());
        }
    }
    s
}

/// Pointwise frame components (X_theta, X_phi) of a spectral 1-form.
pub fn eval_oneform<T: Real>(x: &OneForm<T>, theta: T, phi: T) -> (Complex<T>, Complex<T>) {
    let (_, dp, mps) = plm_tables::<T>(x.l_max, theta.cos(), theta.sin());
    let mut xt = Complex::new(T::zero(), T::zero());
    let mut xp = Complex::new(T::zero(), T::zero());
    let iu = Complex::new(T::zero(), T::one());
    for l in 1..=x.l_max {
        let nu = T::of_usize(l * (l + 1)).sqrt();
        for m in -(l as i64)..=(l as i64) {
            let ma = m.unsigned_abs() as usize;
            let sgn = if m < 0 && ma % 2 == 1 { -T::one() } else { T::one() };
            let msign = if m < 0 { -T::one() } else { T::one() };
            let a = T::of(m as f64) * phi;
            let e = Complex::new(a.cos(), a.sin());
            let et = sgn * dp[idx_pos(l, ma)] / nu;
            let ep = iu * (sgn * msign * mps[idx_pos(l, ma)] / nu);
            let k = idx_lm(l, m);
            // X = e E + b B with B = (-E_phi, E_theta)
            xt += (x.e[k] * et - x.b[k] * ep) * e;
            xp += (x.e[k] * ep + x.b[k] * et) * e;
        }
    }
    (xt, xp)
}

#[cfg(test)]
mod tests;
