//! Gauss-Legendre quadrature and normalized associated Legendre tables.

use crate::scalar::Real;

/// Gauss-Legendre nodes (ascending in x = cos theta) and weights on [-1, 1].
/// Newton iteration on P_n; weights sum to 2.
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    assert!(n >= 1);
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = T::of_usize(n);
    for i in 0..n {
        // Chebyshev-like seed, then Newton on P_n(x).
        let seed = (T::PI() * (T::of_usize(i) + T::of(0.75)) / (nf + T::of(0.5))).cos();
        let mut x = seed;
        for _ in 0..100 {
            let (p, dp) = legendre_pair::<T>(n, x);
            let dx = p / dp;
            x = x - dx;
            if dx.abs() <= T::epsilon() * (T::one() + x.abs()) {
                break;
            }
        }
        let (_, dp) = legendre_pair::<T>(n, x);
        // descending seed order: store ascending
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = T::of(2.0) / ((T::one() - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_pair<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    if n == 0 {
        return (p0, T::zero());
    }
    for k in 2..=n {
        let kf = T::of_usize(k);
        let p2 = ((T::of(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = T::of_usize(n) * (x * p1 - p0) / (x * x - T::one());
    (p1, dp)
}

/// Fully normalized associated Legendre values at one node: tables of
/// Pbar_{lm}(cos theta), d/dtheta Pbar_{lm}, and m*Pbar_{lm}/sin(theta),
/// for 0 <= m <= l <= l_max, packed by `idx_pos`. Normalization is such that
/// Y_{lm} = Pbar_{lm} e^{i m phi} has unit L^2 norm on the sphere, with the
/// Condon-Shortley phase folded in.
pub fn plm_tables<T: Real>(l_max: usize, cos_t: T, sin_t: T) -> (Vec<T>, Vec<T>, Vec<T>) {
    let n = (l_max + 1) * (l_max + 2) / 2;
    let mut p = vec![T::zero(); n];
    let mut dp = vec![T::zero(); n];
    let mut mps = vec![T::zero(); n];
    let four_pi = T::of(4.0) * T::PI();
    // diagonal: Pbar_mm
    p[idx_pos(0, 0)] = (T::one() / four_pi).sqrt();
    for m in 1..=l_max {
        let mf = T::of_usize(m);
        let f = -((T::of(2.0) * mf + T::one()) / (T::of(2.0) * mf)).sqrt();
        p[idx_pos(m, m)] = f * sin_t * p[idx_pos(m - 1, m - 1)];
    }
    // off-diagonal upward recurrence
    for m in 0..=l_max {
        if m + 1 <= l_max {
            let mf = T::of_usize(m);
            p[idx_pos(m + 1, m)] = (T::of(2.0) * mf + T::of(3.0)).sqrt() * cos_t * p[idx_pos(m, m)];
        }
        for l in (m + 2)..=l_max {
            let (lf, mf) = (T::of_usize(l), T::of_usize(m));
            let a = ((T::of(4.0) * lf * lf - T::one()) / (lf * lf - mf * mf)).sqrt();
            let b = (((lf - T::one()) * (lf - T::one()) - mf * mf)
                / (T::of(4.0) * (lf - T::one()) * (lf - T::one()) - T::one()))
            .sqrt();
            p[idx_pos(l, m)] = a * (cos_t * p[idx_pos(l - 1, m)] - b * p[idx_pos(l - 2, m)]);
        }
    }
    // sin(theta) d/dtheta Pbar_lm = l cos(theta) Pbar_lm - c_lm Pbar_{l-1,m}
    for m in 0..=l_max {
        for l in m..=l_max {
            let (lf, mf) = (T::of_usize(l), T::of_usize(m));
            let mut s = lf * cos_t * p[idx_pos(l, m)];
            if l > m {
                let c = ((T::of(2.0) * lf + T::one()) * (lf * lf - mf * mf)
                    / (T::of(2.0) * lf - T::one()))
                .sqrt();
                s -= c * p[idx_pos(l - 1, m)];
            }
            dp[idx_pos(l, m)] = s / sin_t;
            mps[idx_pos(l, m)] = mf * p[idx_pos(l, m)] / sin_t;
        }
    }
    (p, dp, mps)
}

/// Packed index for (l, m) with 0 <= m <= l.
#[inline]
pub fn idx_pos(l: usize, m: usize) -> usize {
    l * (l + 1) / 2 + m
}
