//! Double-null geometry of Minkowski space: null frame, symmetry vector
//! fields and their commutator algebra, null decomposition of 2-forms,
//! covariant-derivative bookkeeping, currents and the commutator source Q.
//!
//! Coordinates: u = (t-r)/2, v = (t+r)/2, so Lbar = d_u = d_t - d_r and
//! L = d_v = d_t + d_r; the metric is diag(-1,1,1,1) and g(Lbar, L) = -2.
//! Tangential objects are stored spectrally; the local orthonormal frame
//! {e_1, e_2} = {e_theta, e_phi} is only ever materialized pointwise.

mod fields;

pub use fields::{lie_oneform, lie_twoform, GaugeState, Lattice, OneFormGrid, TwoFormGrid, TWO_FORM_PAIRS};

use crate::scalar::Real;
use crate::{Error, Result};
use num_complex::Complex;

/// Double-null point: direction given as colatitude/longitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point<F: Real> {
    pub u: F,
    pub v: F,
    pub theta: F,
    pub phi: F,
}

impl<F: Real> Point<F> {
    pub fn new(u: F, v: F, theta: F, phi: F) -> Self {
        Self { u, v, theta, phi }
    }

    #[inline]
    pub fn r(&self) -> F {
        self.v - self.u
    }

    #[inline]
    pub fn t(&self) -> F {
        self.u + self.v
    }

    #[inline]
    pub fn omega(&self) -> [F; 3] {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        [st * cp, st * sp, ct]
    }

    #[inline]
    pub fn e_theta(&self) -> [F; 3] {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        [ct * cp, ct * sp, -st]
    }

    #[inline]
    pub fn e_phi(&self) -> [F; 3] {
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        [-sp, cp, F::zero()]
    }

    /// Cartesian position (t, x).
    #[inline]
    pub fn x4(&self) -> [F; 4] {
        let r = self.r();
        let w = self.omega();
        [self.t(), r * w[0], r * w[1], r * w[2]]
    }

    /// Null frame vectors as Cartesian 4-vectors: (Lbar, L, e_1, e_2).
    pub fn frame(&self) -> [[F; 4]; 4] {
        let w = self.omega();
        let e1 = self.e_theta();
        let e2 = self.e_phi();
        [
            [F::one(), -w[0], -w[1], -w[2]],
            [F::one(), w[0], w[1], w[2]],
            [F::zero(), e1[0], e1[1], e1[2]],
            [F::zero(), e2[0], e2[1], e2[2]],
        ]
    }
}

/// Minkowski metric diag(-1, 1, 1, 1) applied to an index.
#[inline]
pub fn eta<F: Real>(mu: usize) -> F {
    if mu == 0 {
        -F::one()
    } else {
        F::one()
    }
}

/// Null decomposition of an antisymmetric 2-form at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoFormNull<F: Real> {
    pub alphab: [F; 2],
    pub rho: F,
    pub sigma: F,
    pub alpha: [F; 2],
}

impl<F: Real> TwoFormNull<F> {
    pub fn zero() -> Self {
        Self {
            alphab: [F::zero(); 2],
            rho: F::zero(),
            sigma: F::zero(),
            alpha: [F::zero(); 2],
        }
    }

    pub fn max_abs(&self) -> F {
        let vals = [
            self.alphab[0].abs(),
            self.alphab[1].abs(),
            self.rho.abs(),
            self.sigma.abs(),
            self.alpha[0].abs(),
            self.alpha[1].abs(),
        ];
        vals.into_iter().fold(F::zero(), |a, b| if b > a { b } else { a })
    }
}

/// The Coulomb 2-form q r^{-2} dt wedge dr as Cartesian components.
pub fn coulomb_form<F: Real>(q: F, p: &Point<F>) -> [[F; 4]; 4] {
    let mut g = [[F::zero(); 4]; 4];
    let r = p.r();
    let w = p.omega();
    let a = q / (r * r);
    // dt wedge dr = dt otimes dr - dr otimes dt, dr = omega_i dx^i
    for i in 0..3 {
        g[0][1 + i] = a * w[i];
        g[1 + i][0] = -a * w[i];
    }
    g
}

/// rho, alphab, alpha, sigma of an antisymmetric matrix at p.
pub fn null_decompose<F: Real>(g: &[[F; 4]; 4], p: &Point<F>) -> Result<TwoFormNull<F>> {
    if p.r() <= F::zero() {
        return Err(Error::DegenerateFrame);
    }
    let fr = p.frame();
    let ap = |x: &[F; 4], y: &[F; 4]| {
        let mut s = F::zero();
        for mu in 0..4 {
            for nu in 0..4 {
                s += g[mu][nu] * x[mu] * y[nu];
            }
        }
        s
    };
    Ok(TwoFormNull {
        rho: F::of(0.5) * ap(&fr[0], &fr[1]),
        alphab: [ap(&fr[0], &fr[2]), ap(&fr[0], &fr[3])],
        alpha: [ap(&fr[1], &fr[2]), ap(&fr[1], &fr[3])],
        sigma: ap(&fr[2], &fr[3]),
    })
}

/// Inverse of `null_decompose`.
pub fn null_recompose<F: Real>(d: &TwoFormNull<F>, p: &Point<F>) -> Result<[[F; 4]; 4]> {
    if p.r() <= F::zero() {
        return Err(Error::DegenerateFrame);
    }
    let w = p.omega();
    let e1 = p.e_theta();
    let e2 = p.e_phi();
    // coefficients of d_mu in the frame: d_mu = a Lbar + b L + c1 e1 + c2 e2
    let half = F::of(0.5);
    let coef = |mu: usize| -> [F; 4] {
        if mu == 0 {
            [half, half, F::zero(), F::zero()]
        } else {
            let i = mu - 1;
            [-half * w[i], half * w[i], e1[i], e2[i]]
        }
    };
    let mut g = [[F::zero(); 4]; 4];
    for mu in 0..4 {
        let a = coef(mu);
        for nu in 0..4 {
            let b = coef(nu);
            let two_rho = (a[0] * b[1] - a[1] * b[0]) * F::of(2.0) * d.rho;
            let mut s = two_rho;
            for i in 0..2 {
                s += (a[0] * b[2 + i] - a[2 + i] * b[0]) * d.alphab[i];
                s += (a[1] * b[2 + i] - a[2 + i] * b[1]) * d.alpha[i];
            }
            s += (a[2] * b[3] - a[3] * b[2]) * d.sigma;
            g[mu][nu] = s;
        }
    }
    Ok(g)
}

/// Frame and symmetry vector fields of the double-null foliation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vf {
    Lbar,
    L,
    E1,
    E2,
    T,
    S,
    K,
    /// Rotation Omega_{ab} = x_a d_b - x_b d_a, 1 <= a < b <= 3.
    Omega(u8, u8),
}

impl Vf {
    /// K-weight of the field (the chi_K bookkeeping of derivative words).
    pub fn chi_k(&self) -> usize {
        usize::from(*self == Vf::K)
    }

    /// Cartesian components at (t, x).
    pub fn vector_at<F: Real>(&self, x4: [F; 4]) -> [F; 4] {
        let (t, x) = (x4[0], [x4[1], x4[2], x4[3]]);
        let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
        let two = F::of(2.0);
        match *self {
            Vf::T => [F::one(), F::zero(), F::zero(), F::zero()],
            Vf::S => [t, x[0], x[1], x[2]],
            Vf::K => [t * t + r * r, two * t * x[0], two * t * x[1], two * t * x[2]],
            Vf::Lbar => {
                let w = [x[0] / r, x[1] / r, x[2] / r];
                [F::one(), -w[0], -w[1], -w[2]]
            }
            Vf::L => {
                let w = [x[0] / r, x[1] / r, x[2] / r];
                [F::one(), w[0], w[1], w[2]]
            }
            Vf::Omega(a, b) => {
                let (a, b) = (a as usize, b as usize);
                let mut v = [F::zero(); 4];
                v[b] = x[a - 1];
                v[a] = -x[b - 1];
                v
            }
            Vf::E1 | Vf::E2 => panic!("tangential frame vectors need a Point, not coordinates"),
        }
    }

    /// Jacobian d_mu Z^nu at (t, x).
    pub fn grad_at<F: Real>(&self, x4: [F; 4]) -> [[F; 4]; 4] {
        let (t, x) = (x4[0], [x4[1], x4[2], x4[3]]);
        let two = F::of(2.0);
        let mut j = [[F::zero(); 4]; 4];
        match *self {
            Vf::T => {}
            Vf::S => {
                for mu in 0..4 {
                    j[mu][mu] = F::one();
                }
            }
            Vf::K => {
                j[0][0] = two * t;
                for i in 0..3 {
                    j[1 + i][0] = two * x[i];
                    j[0][1 + i] = two * x[i];
                    j[1 + i][1 + i] = two * t;
                }
            }
            Vf::Omega(a, b) => {
                let (a, b) = (a as usize, b as usize);
                j[a][b] = F::one();
                j[b][a] = -F::one();
            }
            Vf::Lbar | Vf::L => {
                let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
                let w = [x[0] / r, x[1] / r, x[2] / r];
                let s = if *self == Vf::L { F::one() } else { -F::one() };
                for a in 0..3 {
                    for b in 0..3 {
                        let kron = if a == b { F::one() } else { F::zero() };
                        j[1 + a][1 + b] = s * (kron - w[a] * w[b]) / r;
                    }
                }
            }
            Vf::E1 | Vf::E2 => panic!("gradient table does not cover the tangential frame"),
        }
        j
    }

    fn name(&self) -> String {
        match *self {
            Vf::Omega(a, b) => format!("Omega_{a}{b}"),
            other => format!("{other:?}"),
        }
    }
}

/// Coefficient functions appearing in the commutator table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coef {
    Const(f64),
    /// c * u
    U(f64),
    /// c * v
    V(f64),
}

impl Coef {
    pub fn eval<F: Real>(&self, u: F, v: F) -> F {
        match *self {
            Coef::Const(c) => F::of(c),
            Coef::U(c) => F::of(c) * u,
            Coef::V(c) => F::of(c) * v,
        }
    }
}

/// A finite combination sum_k coef_k * Z_k of frame fields.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LinComb {
    pub terms: Vec<(Coef, Vf)>,
}

impl LinComb {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    fn one(c: Coef, z: Vf) -> Self {
        Self { terms: vec![(c, z)] }
    }

    pub fn vector_at<F: Real>(&self, p: &Point<F>) -> [F; 4] {
        let x4 = p.x4();
        let mut out = [F::zero(); 4];
        for (c, z) in &self.terms {
            let zv = z.vector_at(x4);
            let cv = c.eval(p.u, p.v);
            for mu in 0..4 {
                out[mu] += cv * zv[mu];
            }
        }
        out
    }

    fn neg(mut self) -> Self {
        for (c, _) in self.terms.iter_mut() {
            *c = match *c {
                Coef::Const(a) => Coef::Const(-a),
                Coef::U(a) => Coef::U(-a),
                Coef::V(a) => Coef::V(-a),
            };
        }
        self
    }
}

/// Closed-form commutator [Z1, Z2] for the implemented table: the symmetry
/// algebra [T,S] = T, [T,K] = 2S, [S,K] = K, the rotation algebra, and the
/// null-direction relations of the frame against T, S, K, Omega.
pub fn vectorfield_commutator(z1: Vf, z2: Vf) -> Result<LinComb> {
    use Vf::*;
    if let Some(lc) = commutator_ordered(z1, z2) {
        return Ok(lc);
    }
    if let Some(lc) = commutator_ordered(z2, z1) {
        return Ok(lc.neg());
    }
    match (z1, z2) {
        (Omega(a1, b1), Omega(a2, b2)) => Ok(rotation_commutator(a1, b1, a2, b2)),
        _ => Err(Error::UnsupportedPair(z1.name(), z2.name())),
    }
}

fn commutator_ordered(z1: Vf, z2: Vf) -> Option<LinComb> {
    use Vf::*;
    let c = |x: f64| Coef::Const(x);
    match (z1, z2) {
        (T, S) => Some(LinComb::one(c(1.0), T)),
        (T, K) => Some(LinComb::one(c(2.0), S)),
        (S, K) => Some(LinComb::one(c(1.0), K)),
        (T, T) | (S, S) | (K, K) => Some(LinComb::zero()),
        (Lbar, T) | (L, T) => Some(LinComb::zero()),
        (Lbar, S) => Some(LinComb::one(c(1.0), Lbar)),
        (L, S) => Some(LinComb::one(c(1.0), L)),
        (Lbar, K) => Some(LinComb::one(Coef::U(4.0), Lbar)),
        (L, K) => Some(LinComb::one(Coef::V(4.0), L)),
        (Lbar, Omega(..)) | (L, Omega(..)) => Some(LinComb::zero()),
        (T, Omega(..)) | (S, Omega(..)) | (K, Omega(..)) => Some(LinComb::zero()),
        (Lbar, L) | (Lbar, Lbar) | (L, L) => Some(LinComb::zero()),
        _ => None,
    }
}

fn rotation_commutator(a1: u8, b1: u8, a2: u8, b2: u8) -> LinComb {
    // [Omega_ab, Omega_cd] = delta_bc Omega_ad + delta_ad Omega_bc
    //                      - delta_ac Omega_bd - delta_bd Omega_ac
    let mut terms: Vec<(f64, u8, u8)> = Vec::new();
    let mut push = |s: f64, p: u8, q: u8| {
        if p == q {
            return;
        }
        let (s, p, q) = if p < q { (s, p, q) } else { (-s, q, p) };
        terms.push((s, p, q));
    };
    if b1 == a2 {
        push(1.0, a1, b2);
    }
    if a1 == b2 {
        push(1.0, b1, a2);
    }
    if a1 == a2 {
        push(-1.0, b1, b2);
    }
    if b1 == b2 {
        push(-1.0, a1, a2);
    }
    let mut lc = LinComb::zero();
    for (s, p, q) in terms {
        lc.terms.push((Coef::Const(s), Vf::Omega(p, q)));
    }
    lc
}

/// Matter current J_nu = Im(f conj(D_nu f)) in null components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Current<F: Real> {
    pub j_lbar: F,
    pub j_l: F,
    pub slashed: [F; 2],
}

impl<F: Real> Current<F> {
    pub fn zero() -> Self {
        Self {
            j_lbar: F::zero(),
            j_l: F::zero(),
            slashed: [F::zero(); 2],
        }
    }
}

/// Pointwise current from the scalar and its covariant derivative 4-vector.
pub fn current_null<F: Real>(f: Complex<F>, df: [Complex<F>; 4], p: &Point<F>) -> Current<F> {
    let fr = p.frame();
    let comp = |x: &[F; 4]| {
        let mut d = Complex::new(F::zero(), F::zero());
        for mu in 0..4 {
            d += df[mu] * x[mu];
        }
        (f * d.conj()).im
    };
    Current {
        j_lbar: comp(&fr[0]),
        j_l: comp(&fr[1]),
        slashed: [comp(&fr[2]), comp(&fr[3])],
    }
}

/// The commutator source Q(f, G; Z) = 2i G_{mu nu} Z^nu D^mu f
/// + i nabla^mu (Z^nu G_{mu nu}) f, evaluated pointwise. `div_g` carries
/// dG_nu = partial^mu G_{mu nu} (index already raised on mu).
pub fn compute_q<F: Real>(
    f: Complex<F>,
    df: [Complex<F>; 4],
    g: &[[F; 4]; 4],
    div_g: [F; 4],
    z: Vf,
    p: &Point<F>,
) -> Complex<F> {
    let x4 = p.x4();
    let zv = z.vector_at(x4);
    let dz = z.grad_at(x4);
    let iu = Complex::new(F::zero(), F::one());
    // 2i G_{mu nu} Z^nu D^mu f, D^mu = eta^{mu mu} D_mu
    let mut s = Complex::new(F::zero(), F::zero());
    for mu in 0..4 {
        let mut gz = F::zero();
        for nu in 0..4 {
            gz += g[mu][nu] * zv[nu];
        }
        s += df[mu] * (eta::<F>(mu) * gz);
    }
    let mut t1 = iu * s * F::of(2.0);
    // i [ (partial^mu Z^nu) G_{mu nu} + Z^nu dG_nu ] f
    let mut scal = F::zero();
    for mu in 0..4 {
        for nu in 0..4 {
            scal += eta::<F>(mu) * dz[mu][nu] * g[mu][nu];
        }
    }
    for nu in 0..4 {
        scal += zv[nu] * div_g[nu];
    }
    t1 += iu * f * scal;
    t1
}
