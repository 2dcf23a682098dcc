//! Field containers on a double-null (u, v) x sphere lattice, with Lie
//! derivatives along the symmetry fields and gauge-covariant calculus.
//!
//! Cartesian components of tensors are smooth scalars on the sphere and are
//! stored spectrally per lattice node; frame components are only formed
//! pointwise on the quadrature grid.

use super::{Point, Vf};
use crate::grid::CoeffGrid;
use crate::scalar::Real;
use crate::sphere::{GridValues, ScalarField, SphereGrid};
use num_complex::Complex;

/// Uniform rectangular (u, v) lattice carrying a sphere grid.
#[derive(Debug, Clone)]
pub struct Lattice<F: Real> {
    pub sphere: SphereGrid<F>,
    pub u0: F,
    pub du: F,
    pub nu: usize,
    pub v0: F,
    pub dv: F,
    pub nv: usize,
    /// accuracy order of the (u, v) finite-difference stencils
    pub fd_order: usize,
}

impl<F: Real> Lattice<F> {
    pub fn new(sphere: SphereGrid<F>, u0: F, du: F, nu: usize, v0: F, dv: F, nv: usize) -> Self {
        Self {
            sphere,
            u0,
            du,
            nu,
            v0,
            dv,
            nv,
            fd_order: 4,
        }
    }

    #[inline]
    pub fn u_at(&self, iu: usize) -> F {
        self.u0 + F::of_usize(iu) * self.du
    }

    #[inline]
    pub fn v_at(&self, iv: usize) -> F {
        self.v0 + F::of_usize(iv) * self.dv
    }

    #[inline]
    pub fn r_at(&self, iu: usize, iv: usize) -> F {
        self.v_at(iv) - self.u_at(iu)
    }

    pub fn point(&self, iu: usize, iv: usize, i_theta: usize, j_phi: usize) -> Point<F> {
        Point {
            u: self.u_at(iu),
            v: self.v_at(iv),
            theta: self.sphere.cos_theta(i_theta).acos(),
            phi: self.sphere.phi(j_phi),
        }
    }

    pub fn zero_field(&self) -> CoeffGrid<F> {
        CoeffGrid::zeros(self.nu, self.nv, crate::sphere::n_coeffs(self.sphere.l_max))
    }

    fn field_of(&self, coeffs: &[Complex<F>]) -> ScalarField<F> {
        ScalarField {
            l_max: self.sphere.l_max,
            c: coeffs.to_vec(),
        }
    }

    pub fn synth_node(&self, g: &CoeffGrid<F>, iu: usize, iv: usize) -> GridValues<F> {
        self.sphere.synth(&self.field_of(g.at(iu, iv)))
    }

    /// Directional derivative along a symmetry field: the (u, v) part by
    /// finite differences, the rotational part exactly in coefficient space.
    pub fn directional(&self, z: Vf, g: &CoeffGrid<F>) -> CoeffGrid<F> {
        match z {
            Vf::T => {
                let gu = g.deriv_u(self.du, self.fd_order);
                let gv = g.deriv_v(self.dv, self.fd_order);
                let mut out = self.zero_field();
                let half = F::of(0.5);
                for k in 0..out.data.len() {
                    out.data[k] = (gu.data[k] + gv.data[k]) * half;
                }
                out
            }
            Vf::Lbar => g.deriv_u(self.du, self.fd_order),
            Vf::L => g.deriv_v(self.dv, self.fd_order),
            Vf::S => {
                let gu = g.deriv_u(self.du, self.fd_order);
                let gv = g.deriv_v(self.dv, self.fd_order);
                let mut out = self.zero_field();
                for iu in 0..self.nu {
                    let u = self.u_at(iu);
                    for iv in 0..self.nv {
                        let v = self.v_at(iv);
                        let (a, b) = (gu.at(iu, iv), gv.at(iu, iv));
                        let o = out.at_mut(iu, iv);
                        for k in 0..o.len() {
                            o[k] = a[k] * u + b[k] * v;
                        }
                    }
                }
                out
            }
            Vf::K => {
                let gu = g.deriv_u(self.du, self.fd_order);
                let gv = g.deriv_v(self.dv, self.fd_order);
                let mut out = self.zero_field();
                let two = F::of(2.0);
                for iu in 0..self.nu {
                    let u = self.u_at(iu);
                    for iv in 0..self.nv {
                        let v = self.v_at(iv);
                        let (a, b) = (gu.at(iu, iv), gv.at(iu, iv));
                        let o = out.at_mut(iu, iv);
                        for k in 0..o.len() {
                            o[k] = (a[k] * u * u + b[k] * v * v) * two;
                        }
                    }
                }
                out
            }
            Vf::Omega(a, b) => {
                let mut out = self.zero_field();
                for iu in 0..self.nu {
                    for iv in 0..self.nv {
                        let f = self.field_of(g.at(iu, iv));
                        let rot = f.rotate_gen((a as usize, b as usize));
                        out.at_mut(iu, iv).copy_from_slice(&rot.c);
                    }
                }
                out
            }
            Vf::E1 | Vf::E2 => panic!("directional derivative along e_i is not a lattice operation"),
        }
    }

    /// Cartesian partial derivatives (d_t, d_x, d_y, d_z) of a scalar grid.
    pub fn cart_derivs(&self, g: &CoeffGrid<F>) -> [CoeffGrid<F>; 4] {
        let gu = g.deriv_u(self.du, self.fd_order);
        let gv = g.deriv_v(self.dv, self.fd_order);
        let sph = &self.sphere;
        let half = F::of(0.5);
        let mut dt = self.zero_field();
        let mut dx = [self.zero_field(), self.zero_field(), self.zero_field()];
        for iu in 0..self.nu {
            for iv in 0..self.nv {
                let r = self.r_at(iu, iv);
                let a = gu.at(iu, iv);
                let b = gv.at(iu, iv);
                let o = dt.at_mut(iu, iv);
                for k in 0..o.len() {
                    o[k] = (a[k] + b[k]) * half;
                }
                // spatial: omega_i d_r + (1/r) tangential gradient
                let f = self.field_of(g.at(iu, iv));
                let (ft, fp) = sph.synth_grad(&f);
                let mut dr = vec![Complex::new(F::zero(), F::zero()); a.len()];
                for k in 0..a.len() {
                    dr[k] = (b[k] - a[k]) * half;
                }
                let drv = sph.synth(&self.field_of(&dr));
                for comp in 0..3 {
                    let mut vals = GridValues::zeros(sph.n_theta, sph.n_phi);
                    for i in 0..sph.n_theta {
                        for j in 0..sph.n_phi {
                            let w = sph.omega(i, j)[comp];
                            let e1 = sph.e_theta(i, j)[comp];
                            let e2 = sph.e_phi(i, j)[comp];
                            let tang = (ft.at(i, j) * e1 + fp.at(i, j) * e2) / r;
                            *vals.at_mut(i, j) = drv.at(i, j) * w + tang;
                        }
                    }
                    let c = sph.analyze(&vals);
                    dx[comp].at_mut(iu, iv).copy_from_slice(&c.c);
                }
            }
        }
        let [x, y, z] = dx;
        [dt, x, y, z]
    }
}

/// Antisymmetric 2-form on a lattice, Cartesian components
/// (F_01, F_02, F_03, F_12, F_13, F_23) stored spectrally per node.
#[derive(Debug, Clone)]
pub struct TwoFormGrid<F: Real> {
    pub c: [CoeffGrid<F>; 6],
}

pub const TWO_FORM_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl<F: Real> TwoFormGrid<F> {
    pub fn zeros(lat: &Lattice<F>) -> Self {
        Self {
            c: std::array::from_fn(|_| lat.zero_field()),
        }
    }

    /// Values of all six components at one node.
    pub fn synth_at(&self, lat: &Lattice<F>, iu: usize, iv: usize) -> [GridValues<F>; 6] {
        std::array::from_fn(|k| lat.synth_node(&self.c[k], iu, iv))
    }

    /// Real antisymmetric matrix at a quadrature point.
    pub fn mat_at(vals: &[GridValues<F>; 6], i: usize, j: usize) -> [[F; 4]; 4] {
        let mut g = [[F::zero(); 4]; 4];
        for (k, (mu, nu)) in TWO_FORM_PAIRS.iter().enumerate() {
            let v = vals[k].at(i, j).re;
            g[*mu][*nu] = v;
            g[*nu][*mu] = -v;
        }
        g
    }

    pub fn max_abs(&self) -> F {
        self.c
            .iter()
            .flat_map(|g| g.data.iter())
            .map(|z| z.norm())
            .fold(F::zero(), |a, b| if b > a { b } else { a })
    }
}

/// Cartesian 1-form (current) on a lattice.
#[derive(Debug, Clone)]
pub struct OneFormGrid<F: Real> {
    pub c: [CoeffGrid<F>; 4],
}

impl<F: Real> OneFormGrid<F> {
    pub fn zeros(lat: &Lattice<F>) -> Self {
        Self {
            c: std::array::from_fn(|_| lat.zero_field()),
        }
    }
}

/// Lie derivative of a 2-form along a symmetry field:
/// (L_Z G)_{mu nu} = Z(G_{mu nu}) + G_{gamma nu} d_mu Z^gamma
///                 + G_{mu gamma} d_nu Z^gamma.
pub fn lie_twoform<F: Real>(lat: &Lattice<F>, z: Vf, g: &TwoFormGrid<F>) -> TwoFormGrid<F> {
    let dir: [CoeffGrid<F>; 6] = std::array::from_fn(|k| lat.directional(z, &g.c[k]));
    let sph = &lat.sphere;
    let mut out = TwoFormGrid::zeros(lat);
    for iu in 0..lat.nu {
        for iv in 0..lat.nv {
            let vals = g.synth_at(lat, iu, iv);
            let dvals: [GridValues<F>; 6] = std::array::from_fn(|k| lat.synth_node(&dir[k], iu, iv));
            let mut acc: [GridValues<F>; 6] =
                std::array::from_fn(|_| GridValues::zeros(sph.n_theta, sph.n_phi));
            for i in 0..sph.n_theta {
                for j in 0..sph.n_phi {
                    let p = lat.point(iu, iv, i, j);
                    let x4 = p.x4();
                    let gm = TwoFormGrid::mat_at(&vals, i, j);
                    let dz = z.grad_at(x4);
                    for (k, (mu, nu)) in TWO_FORM_PAIRS.iter().enumerate() {
                        let mut s = dvals[k].at(i, j);
                        let mut alg = F::zero();
                        for gam in 0..4 {
                            alg += gm[gam][*nu] * dz[*mu][gam] + gm[*mu][gam] * dz[*nu][gam];
                        }
                        s += Complex::new(alg, F::zero());
                        *acc[k].at_mut(i, j) = s;
                    }
                }
            }
            for k in 0..6 {
                let c = sph.analyze(&acc[k]);
                out.c[k].at_mut(iu, iv).copy_from_slice(&c.c);
            }
        }
    }
    out
}

/// Lie derivative of a 1-form along a symmetry field:
/// (L_Z J)_mu = Z(J_mu) + J_gamma d_mu Z^gamma.
pub fn lie_oneform<F: Real>(lat: &Lattice<F>, z: Vf, jf: &OneFormGrid<F>) -> OneFormGrid<F> {
    let dir: [CoeffGrid<F>; 4] = std::array::from_fn(|k| lat.directional(z, &jf.c[k]));
    let sph = &lat.sphere;
    let mut out = OneFormGrid::zeros(lat);
    for iu in 0..lat.nu {
        for iv in 0..lat.nv {
            let vals: [GridValues<F>; 4] = std::array::from_fn(|k| lat.synth_node(&jf.c[k], iu, iv));
            let dvals: [GridValues<F>; 4] = std::array::from_fn(|k| lat.synth_node(&dir[k], iu, iv));
            let mut acc: [GridValues<F>; 4] =
                std::array::from_fn(|_| GridValues::zeros(sph.n_theta, sph.n_phi));
            for i in 0..sph.n_theta {
                for j in 0..sph.n_phi {
                    let p = lat.point(iu, iv, i, j);
                    let dz = z.grad_at(p.x4());
                    for mu in 0..4 {
                        let mut s = dvals[mu].at(i, j);
                        for gam in 0..4 {
                            s += vals[gam].at(i, j) * dz[mu][gam];
                        }
                        *acc[mu].at_mut(i, j) = s;
                    }
                }
            }
            for mu in 0..4 {
                let c = sph.analyze(&acc[mu]);
                out.c[mu].at_mut(iu, iv).copy_from_slice(&c.c);
            }
        }
    }
    out
}

/// Lorenz-pair state on a lattice: Cartesian connection components and the
/// complex scalar, with D = partial + i A.
#[derive(Debug, Clone)]
pub struct GaugeState<F: Real> {
    pub lat: Lattice<F>,
    pub a: [CoeffGrid<F>; 4],
    pub phi: CoeffGrid<F>,
}

impl<F: Real> GaugeState<F> {
    pub fn zeros(lat: Lattice<F>) -> Self {
        let a = std::array::from_fn(|_| lat.zero_field());
        let phi = lat.zero_field();
        Self { lat, a, phi }
    }

    /// Covariant derivative D_mu phi = (partial_mu + i A_mu) phi as
    /// coefficient grids.
    pub fn cov_derivs(&self) -> [CoeffGrid<F>; 4] {
        self.cov_derivs_of(&self.phi)
    }

    /// Covariant Cartesian derivatives of an arbitrary charged scalar grid.
    pub fn cov_derivs_of(&self, f: &CoeffGrid<F>) -> [CoeffGrid<F>; 4] {
        let d = self.lat.cart_derivs(f);
        let sph = &self.lat.sphere;
        std::array::from_fn(|mu| {
            let mut out = d[mu].clone();
            for iu in 0..self.lat.nu {
                for iv in 0..self.lat.nv {
                    let av = self.lat.synth_node(&self.a[mu], iu, iv);
                    let pv = self.lat.synth_node(f, iu, iv);
                    let mut dv = self.lat.synth_node(&d[mu], iu, iv);
                    for k in 0..dv.v.len() {
                        dv.v[k] += Complex::new(F::zero(), F::one()) * av.v[k] * pv.v[k];
                    }
                    let c = sph.analyze(&dv);
                    out.at_mut(iu, iv).copy_from_slice(&c.c);
                }
            }
            out
        })
    }

    /// Maxwell field F = dA by lattice differentiation.
    pub fn f_cart(&self) -> TwoFormGrid<F> {
        let da: [[CoeffGrid<F>; 4]; 4] = std::array::from_fn(|nu| self.lat.cart_derivs(&self.a[nu]));
        // da[nu][mu] = d_mu A_nu
        let mut out = TwoFormGrid::zeros(&self.lat);
        for (k, (mu, nu)) in TWO_FORM_PAIRS.iter().enumerate() {
            for idx in 0..out.c[k].data.len() {
                out.c[k].data[idx] = da[*nu][*mu].data[idx] - da[*mu][*nu].data[idx];
            }
        }
        out
    }

    /// Matter current J_mu = Im(phi conj(D_mu phi)) as a Cartesian 1-form.
    pub fn current(&self) -> OneFormGrid<F> {
        let dphi = self.cov_derivs();
        let sph = &self.lat.sphere;
        let mut out = OneFormGrid::zeros(&self.lat);
        for iu in 0..self.lat.nu {
            for iv in 0..self.lat.nv {
                let pv = self.lat.synth_node(&self.phi, iu, iv);
                for mu in 0..4 {
                    let dv = self.lat.synth_node(&dphi[mu], iu, iv);
                    let mut jv = GridValues::zeros(sph.n_theta, sph.n_phi);
                    for k in 0..jv.v.len() {
                        let im = (pv.v[k] * dv.v[k].conj()).im;
                        jv.v[k] = Complex::new(im, F::zero());
                    }
                    let c = sph.analyze(&jv);
                    out.c[mu].at_mut(iu, iv).copy_from_slice(&c.c);
                }
            }
        }
        out
    }

    /// A(Z) = Z^mu A_mu contracted pointwise.
    pub fn contract_a(&self, z: Vf) -> CoeffGrid<F> {
        let sph = &self.lat.sphere;
        let mut out = self.lat.zero_field();
        for iu in 0..self.lat.nu {
            for iv in 0..self.lat.nv {
                let av: [GridValues<F>; 4] =
                    std::array::from_fn(|mu| self.lat.synth_node(&self.a[mu], iu, iv));
                let mut vals = GridValues::zeros(sph.n_theta, sph.n_phi);
                for i in 0..sph.n_theta {
                    for j in 0..sph.n_phi {
                        let p = self.lat.point(iu, iv, i, j);
                        let zv = z.vector_at(p.x4());
                        let mut s = Complex::new(F::zero(), F::zero());
                        for mu in 0..4 {
                            s += av[mu].at(i, j) * zv[mu];
                        }
                        *vals.at_mut(i, j) = s;
                    }
                }
                let c = sph.analyze(&vals);
                out.at_mut(iu, iv).copy_from_slice(&c.c);
            }
        }
        out
    }

    /// Null-frame components (Dhat_Lbar f, Dhat_L f, D_e1 f, D_e2 f) at one
    /// node, given the field and its covariant Cartesian derivatives.
    /// Dhat = r^{-1} D(r .): Dhat_Lbar f = D_Lbar f - f/r, Dhat_L f = D_L f + f/r.
    pub fn dhat_null_at(
        &self,
        f: &CoeffGrid<F>,
        df: &[CoeffGrid<F>; 4],
        iu: usize,
        iv: usize,
    ) -> [GridValues<F>; 4] {
        let sph = &self.lat.sphere;
        let fv = self.lat.synth_node(f, iu, iv);
        let dv: [GridValues<F>; 4] = std::array::from_fn(|mu| self.lat.synth_node(&df[mu], iu, iv));
        let r = self.lat.r_at(iu, iv);
        let mut out: [GridValues<F>; 4] =
            std::array::from_fn(|_| GridValues::zeros(sph.n_theta, sph.n_phi));
        for i in 0..sph.n_theta {
            for j in 0..sph.n_phi {
                let p = self.lat.point(iu, iv, i, j);
                let fr = p.frame();
                for c in 0..4 {
                    let mut s = Complex::new(F::zero(), F::zero());
                    for mu in 0..4 {
                        s += dv[mu].at(i, j) * fr[c][mu];
                    }
                    if c == 0 {
                        s -= fv.at(i, j) / r;
                    } else if c == 1 {
                        s += fv.at(i, j) / r;
                    }
                    *out[c].at_mut(i, j) = s;
                }
            }
        }
        out
    }

    /// First-order commuted current J^(Z) by the expansion
    /// J^(Z)_mu = Im(phi^(Z) conj(Dhat_mu phi)) + Im(phi conj(Dhat_mu phi^(Z)))
    ///          - |phi|^2 F_{Z mu},
    /// returned as null components (Lbar, L, e1, e2) per lattice node.
    pub fn commuted_current_null(&self, z: Vf, fgrid: &TwoFormGrid<F>) -> Vec<[GridValues<F>; 4]> {
        let sph = &self.lat.sphere;
        let phi_z = self.phi_z(z);
        let dphi = self.cov_derivs();
        let dphi_z = self.cov_derivs_of(&phi_z);
        let mut out = Vec::with_capacity(self.lat.nu * self.lat.nv);
        for iu in 0..self.lat.nu {
            for iv in 0..self.lat.nv {
                let pv = self.lat.synth_node(&self.phi, iu, iv);
                let pzv = self.lat.synth_node(&phi_z, iu, iv);
                let dh = self.dhat_null_at(&self.phi, &dphi, iu, iv);
                let dhz = self.dhat_null_at(&phi_z, &dphi_z, iu, iv);
                let fvals = fgrid.synth_at(&self.lat, iu, iv);
                let mut node: [GridValues<F>; 4] =
                    std::array::from_fn(|_| GridValues::zeros(sph.n_theta, sph.n_phi));
                for i in 0..sph.n_theta {
                    for j in 0..sph.n_phi {
                        let p = self.lat.point(iu, iv, i, j);
                        let fr = p.frame();
                        let gm = TwoFormGrid::mat_at(&fvals, i, j);
                        let zv = z.vector_at(p.x4());
                        let phi = pv.at(i, j);
                        let phiz = pzv.at(i, j);
                        for c in 0..4 {
                            let mut f_z_mu = F::zero();
                            for al in 0..4 {
                                for be in 0..4 {
                                    f_z_mu += zv[al] * gm[al][be] * fr[c][be];
                                }
                            }
                            let val = (phiz * dh[c].at(i, j).conj()).im
                                + (phi * dhz[c].at(i, j).conj()).im
                                - phi.norm_sqr() * f_z_mu;
                            *node[c].at_mut(i, j) = Complex::new(val, F::zero());
                        }
                    }
                }
                out.push(node);
            }
        }
        out
    }

    /// Independent oracle for the commuted current: r^{-2} L_Z (r^2 J) in
    /// null components per node.
    pub fn current_lie_oracle_null(&self, z: Vf) -> Vec<[GridValues<F>; 4]> {
        let sph = &self.lat.sphere;
        let j = self.current();
        let mut r2j = j.clone();
        for mu in 0..4 {
            for iu in 0..self.lat.nu {
                for iv in 0..self.lat.nv {
                    let r = self.lat.r_at(iu, iv);
                    for c in r2j.c[mu].at_mut(iu, iv) {
                        *c *= r * r;
                    }
                }
            }
        }
        let lie = lie_oneform(&self.lat, z, &r2j);
        let mut out = Vec::with_capacity(self.lat.nu * self.lat.nv);
        for iu in 0..self.lat.nu {
            for iv in 0..self.lat.nv {
                let r = self.lat.r_at(iu, iv);
                let vals: [GridValues<F>; 4] =
                    std::array::from_fn(|mu| self.lat.synth_node(&lie.c[mu], iu, iv));
                let mut node: [GridValues<F>; 4] =
                    std::array::from_fn(|_| GridValues::zeros(sph.n_theta, sph.n_phi));
                for i in 0..sph.n_theta {
                    for jj in 0..sph.n_phi {
                        let p = self.lat.point(iu, iv, i, jj);
                        let fr = p.frame();
                        for c in 0..4 {
                            let mut s = Complex::new(F::zero(), F::zero());
                            for mu in 0..4 {
                                s += vals[mu].at(i, jj) * fr[c][mu];
                            }
                            *node[c].at_mut(i, jj) = s / (r * r);
                        }
                    }
                }
                out.push(node);
            }
        }
        out
    }

    /// First-order commuted scalar phi^(Z) = r^{-1} D_Z (r phi).
    pub fn phi_z(&self, z: Vf) -> CoeffGrid<F> {
        // r phi
        let mut rphi = self.phi.clone();
        for iu in 0..self.lat.nu {
            for iv in 0..self.lat.nv {
                let r = self.lat.r_at(iu, iv);
                for c in rphi.at_mut(iu, iv) {
                    *c *= r;
                }
            }
        }
        let dz = self.lat.directional(z, &rphi);
        let az = self.contract_a(z);
        let sph = &self.lat.sphere;
        let mut out = self.lat.zero_field();
        for iu in 0..self.lat.nu {
            for iv in 0..self.lat.nv {
                let r = self.lat.r_at(iu, iv);
                let dv = self.lat.synth_node(&dz, iu, iv);
                let av = self.lat.synth_node(&az, iu, iv);
                let rv = self.lat.synth_node(&rphi, iu, iv);
                let mut vals = GridValues::zeros(sph.n_theta, sph.n_phi);
                for k in 0..vals.v.len() {
                    vals.v[k] =
                        (dv.v[k] + Complex::new(F::zero(), F::one()) * av.v[k] * rv.v[k]) / r;
                }
                let c = sph.analyze(&vals);
                out.at_mut(iu, iv).copy_from_slice(&c.c);
            }
        }
        out
    }
}
