//! Finite-difference stencils and lattice containers shared by the scri,
//! nullframe and diagnostics layers.

use crate::scalar::Real;
use num_complex::Complex;

/// Fornberg weights: coefficients w_k such that f^(m)(x0) ~ sum w_k f(xs[k]).
/// Exact for polynomials of degree <= xs.len() - 1.
pub fn fornberg_weights<T: Real>(x0: T, xs: &[T], m: usize) -> Vec<T> {
    let n = xs.len();
    assert!(m < n);
    let mut c = vec![T::zero(); n * (m + 1)];
    let idx = |i: usize, j: usize| i * (m + 1) + j;
    let mut c1 = T::one();
    let mut c4 = xs[0] - x0;
    c[idx(0, 0)] = T::one();
    for i in 1..n {
        let mut c2 = T::one();
        let c5 = c4;
        c4 = xs[i] - x0;
        for j in 0..i {
            let c3 = xs[i] - xs[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=m.min(i)).rev() {
                    c[idx(i, k)] =
                        c1 * (T::of_usize(k) * c[idx(i - 1, k - 1)] - c5 * c[idx(i - 1, k)]) / c2;
                }
                c[idx(i, 0)] = -c1 * c5 * c[idx(i - 1, 0)] / c2;
            }
            for k in (1..=m.min(i)).rev() {
                c[idx(j, k)] = (c4 * c[idx(j, k)] - T::of_usize(k) * c[idx(j, k - 1)]) / c3;
            }
            c[idx(j, 0)] = c4 * c[idx(j, 0)] / c3;
        }
        c1 = c2;
    }
    (0..n).map(|i| c[idx(i, m)]).collect()
}

/// First derivative of a uniformly sampled series, `order`-accurate
/// (centered stencils inside, one-sided of the same order at the ends).
pub fn deriv_series<T: Real>(f: &[Complex<T>], h: T, order: usize) -> Vec<Complex<T>> {
    let n = f.len();
    assert!(n >= order + 2, "series too short for requested order");
    let mut out = vec![Complex::new(T::zero(), T::zero()); n];
    let half = order / 2;
    for i in 0..n {
        let lo = i.saturating_sub(half).min(n - (order + 1));
        let xs: Vec<T> = (0..=order).map(|k| T::of_usize(lo + k) * h).collect();
        let ws = fornberg_weights(T::of_usize(i) * h, &xs, 1);
        let mut s = Complex::new(T::zero(), T::zero());
        for (k, wk) in ws.iter().enumerate() {
            s += f[lo + k] * *wk;
        }
        out[i] = s;
    }
    out
}

/// Cumulative integral F(x_n) = int_{x_0}^{x_n} f, 4th-order (exact on cubics).
pub fn cumint_series<T: Real>(f: &[Complex<T>], h: T) -> Vec<Complex<T>> {
    let n = f.len();
    let zero = Complex::new(T::zero(), T::zero());
    let mut out = vec![zero; n];
    if n < 2 {
        return out;
    }
    let half = T::of(0.5);
    if n < 4 {
        for k in 1..n {
            out[k] = out[k - 1] + (f[k - 1] + f[k]) * half * h;
        }
        return out;
    }
    let c = T::of(1.0 / 24.0) * h;
    // segment [0,1]: forward cubic
    out[1] = (f[0] * T::of(9.0) + f[1] * T::of(19.0) - f[2] * T::of(5.0) + f[3]) * c;
    // segment [1,2]: interior cubic
    out[2] = out[1] + (-f[0] + f[1] * T::of(13.0) + f[2] * T::of(13.0) - f[3]) * c;
    for k in 3..n {
        out[k] = out[k - 1]
            + (f[k - 3] - f[k - 2] * T::of(5.0) + f[k - 1] * T::of(19.0) + f[k] * T::of(9.0)) * c;
    }
    out
}

/// Row-wise first derivative over a sequence of coefficient vectors.
pub fn deriv_rows<T: Real>(rows: &[Vec<Complex<T>>], h: T, order: usize) -> Vec<Vec<Complex<T>>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let nc = rows[0].len();
    let n = rows.len();
    let mut out = vec![vec![Complex::new(T::zero(), T::zero()); nc]; n];
    let mut buf = vec![Complex::new(T::zero(), T::zero()); n];
    for k in 0..nc {
        for (i, r) in rows.iter().enumerate() {
            buf[i] = r[k];
        }
        let d = deriv_series(&buf, h, order);
        for i in 0..n {
            out[i][k] = d[i];
        }
    }
    out
}

/// Row-wise cumulative integral over a sequence of coefficient vectors.
pub fn cumint_rows<T: Real>(rows: &[Vec<Complex<T>>], h: T) -> Vec<Vec<Complex<T>>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let nc = rows[0].len();
    let n = rows.len();
    let mut out = vec![vec![Complex::new(T::zero(), T::zero()); nc]; n];
    let mut buf = vec![Complex::new(T::zero(), T::zero()); n];
    for k in 0..nc {
        for (i, r) in rows.iter().enumerate() {
            buf[i] = r[k];
        }
        let s = cumint_series(&buf, h);
        for i in 0..n {
            out[i][k] = s[i];
        }
    }
    out
}

/// Monotone cubic (Fritsch-Carlson) interpolant on a uniform grid.
#[derive(Debug, Clone)]
pub struct Pchip<T: Real> {
    x0: T,
    dx: T,
    y: Vec<T>,
    slope: Vec<T>,
}

impl<T: Real> Pchip<T> {
    pub fn new(x0: T, dx: T, y: Vec<T>) -> Self {
        let n = y.len();
        assert!(n >= 2);
        let mut d = vec![T::zero(); n - 1];
        for k in 0..n - 1 {
            d[k] = (y[k + 1] - y[k]) / dx;
        }
        let mut slope = vec![T::zero(); n];
        slope[0] = d[0];
        slope[n - 1] = d[n - 2];
        for k in 1..n - 1 {
            if d[k - 1] * d[k] > T::zero() {
                // harmonic mean of the secants (uniform-spacing PCHIP)
                slope[k] = T::of(2.0) * d[k - 1] * d[k] / (d[k - 1] + d[k]);
            }
        }
        Self { x0, dx, y, slope }
    }

    pub fn eval(&self, x: T) -> T {
        let n = self.y.len();
        let s = (x - self.x0) / self.dx;
        let k = s
            .floor()
            .to_f64x()
            .max(0.0)
            .min((n - 2) as f64) as usize;
        let t = s - T::of_usize(k);
        let (y0, y1) = (self.y[k], self.y[k + 1]);
        let (m0, m1) = (self.slope[k] * self.dx, self.slope[k + 1] * self.dx);
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = T::of(2.0) * t3 - T::of(3.0) * t2 + T::one();
        let h10 = t3 - T::of(2.0) * t2 + t;
        let h01 = -T::of(2.0) * t3 + T::of(3.0) * t2;
        let h11 = t3 - t2;
        h00 * y0 + h10 * m0 + h01 * y1 + h11 * m1
    }
}

/// Per-mode monotone cubic resampling of a complex coefficient row.
pub fn pchip_complex<T: Real>(x0: T, dx: T, y: &[Complex<T>]) -> impl Fn(T) -> Complex<T> {
    let re = Pchip::new(x0, dx, y.iter().map(|z| z.re).collect());
    let im = Pchip::new(x0, dx, y.iter().map(|z| z.im).collect());
    move |x| Complex::new(re.eval(x), im.eval(x))
}

/// Rectangular (u, v) lattice of spectral coefficient vectors.
#[derive(Debug, Clone)]
pub struct CoeffGrid<T: Real> {
    pub nu: usize,
    pub nv: usize,
    pub nc: usize,
    pub data: Vec<Complex<T>>,
}

impl<T: Real> CoeffGrid<T> {
    pub fn zeros(nu: usize, nv: usize, nc: usize) -> Self {
        Self {
            nu,
            nv,
            nc,
            data: vec![Complex::new(T::zero(), T::zero()); nu * nv * nc],
        }
    }

    #[inline]
    pub fn at(&self, iu: usize, iv: usize) -> &[Complex<T>] {
        let o = (iu * self.nv + iv) * self.nc;
        &self.data[o..o + self.nc]
    }

    #[inline]
    pub fn at_mut(&mut self, iu: usize, iv: usize) -> &mut [Complex<T>] {
        let o = (iu * self.nv + iv) * self.nc;
        &mut self.data[o..o + self.nc]
    }

    /// First derivative in the u direction (order-accurate stencils).
    pub fn deriv_u(&self, du: T, order: usize) -> Self {
        let mut out = Self::zeros(self.nu, self.nv, self.nc);
        let mut buf = vec![Complex::new(T::zero(), T::zero()); self.nu];
        for iv in 0..self.nv {
            for k in 0..self.nc {
                for iu in 0..self.nu {
                    buf[iu] = self.at(iu, iv)[k];
                }
                let d = deriv_series(&buf, du, order);
                for iu in 0..self.nu {
                    out.at_mut(iu, iv)[k] = d[iu];
                }
            }
        }
        out
    }

    /// First derivative in the v direction.
    pub fn deriv_v(&self, dv: T, order: usize) -> Self {
        let mut out = Self::zeros(self.nu, self.nv, self.nc);
        let mut buf = vec![Complex::new(T::zero(), T::zero()); self.nv];
        for iu in 0..self.nu {
            for k in 0..self.nc {
                for iv in 0..self.nv {
                    buf[iv] = self.at(iu, iv)[k];
                }
                let d = deriv_series(&buf, dv, order);
                for iv in 0..self.nv {
                    out.at_mut(iu, iv)[k] = d[iv];
                }
            }
        }
        out
    }
}
