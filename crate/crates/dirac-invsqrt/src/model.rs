//! Field configurations, physical constants and the derived parameter maps
//! (A, B, α₁, α₂, ν, g, the y(x) substitution, λ and θ).
//!
//! Sign conventions.  The printed source formulas for (α₁, α₂) make the
//! Gaussian factor of the transformed solution grow and the y-map imaginary;
//! we use the self-consistent decaying pair
//!
//!   α₁ = −B/(cħ√(−2A)),   α₂ = −√(−A)/(2cħ)  (< 0),
//!
//! the y-shift convention y(0) = −sgn(B)√(2ν) (which matches the arguments of
//! the quantization equations), and the mixing coefficient
//!
//!   g = −α₁/√(−2α₂) − i √(V1−S1) √(V1+S1) / (√(−α₂) cħ).
//!
//! All three are arbitrated by the ODE-residual tests in `wavefun`: with this
//! triple the closed forms satisfy their governing equations to ~1e-13 and
//! reduce to the symmetric-case formulas exactly.

use num_complex::Complex64;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// The two eigenvalue subsets: branch A collects the states with ψ_A(0) = 0,
/// branch B those with ψ_B(0) = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Branch {
    A,
    B,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Branch::A => write!(f, "A"),
            Branch::B => write!(f, "B"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("A = {a} must be negative for bound-state work")]
    NonNegativeA { a: f64 },
    #[error("energy {e} outside the bound window |E| < {mc2}")]
    EnergyOutOfWindow { e: f64, mc2: f64 },
    #[error("coordinate x = {x} must be non-negative (callers handle x < 0 by parity)")]
    NegativeX { x: f64 },
}

/// The (m, ħ, c) triple carried explicitly through every formula.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhysicalConstants {
    pub m: f64,
    pub hbar: f64,
    pub c: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        PhysicalConstants { m: 1.0, hbar: 1.0, c: 1.0 }
    }
}

impl PhysicalConstants {
    pub fn mc2(&self) -> f64 {
        self.m * self.c * self.c
    }
    pub fn chbar(&self) -> f64 {
        self.c * self.hbar
    }
}

/// Coefficients of the basic configuration V = V0 + V1/√x, W = W0,
/// S = S0 + S1/√x.  Complex values are admitted by the evaluation routines;
/// bound-state work uses real coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneralConfig {
    pub v0: Complex64,
    pub v1: Complex64,
    pub w0: Complex64,
    pub s0: Complex64,
    pub s1: Complex64,
}

impl GeneralConfig {
    pub fn real(v0: f64, v1: f64, w0: f64, s0: f64, s1: f64) -> Self {
        GeneralConfig { v0: c(v0), v1: c(v1), w0: c(w0), s0: c(s0), s1: c(s1) }
    }
}

/// Spin-symmetric configuration: V = V1/√x, W = W1/√x, S = Cs + V1/√x
/// (S − V = Cs constant).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinSymConfig {
    pub v1: f64,
    pub w1: f64,
    pub cs: f64,
}

/// Pseudo-spin partner of [`SpinSymConfig`], obtained by the formal change
/// (ψ_A, Cs) → (ψ_B, Cp), (V1, W1, E) → (−V1, −W1, −E).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PseudoSpinConfig {
    pub v1: f64,
    pub w1: f64,
    pub cp: f64,
}

/// Pure electrostatic configuration V = V1/√|x|, W = S = 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ElectrostaticConfig {
    pub v1: f64,
}

/// Derived quantities of the reduction.  `a`/`b` are the printed A and B,
/// `lambda`/`theta` the dimensionless coupling parameters.
#[derive(Clone, Copy, Debug)]
pub struct ReducedParams {
    pub a: Complex64,
    pub b: Complex64,
    pub alpha1: Complex64,
    pub alpha2: Complex64,
    pub nu: Complex64,
    pub g: Complex64,
    pub lambda: f64,
    pub theta: f64,
}

impl ReducedParams {
    /// The substitution y(x) with the resolved shift sign.
    pub fn y(&self, x: f64) -> Result<Complex64, ModelError> {
        map_y(x, self.alpha1, self.alpha2)
    }
    /// dy/dx = √(−2α₂)/√(2x).
    pub fn dy_dx(&self, x: f64) -> Complex64 {
        (-2.0 * self.alpha2).sqrt() / (2.0 * x).sqrt()
    }
}

/// A = (E−V0)² − (mc²+S0)² − W0²,  B = −2((E−V0)V1 + (mc²+S0)S1).
pub fn compute_ab(cfg: &GeneralConfig, e: f64, k: &PhysicalConstants) -> (Complex64, Complex64) {
    let ev = c(e) - cfg.v0;
    let ms = c(k.mc2()) + cfg.s0;
    let a = ev * ev - ms * ms - cfg.w0 * cfg.w0;
    let b = -2.0 * (ev * cfg.v1 + ms * cfg.s1);
    (a, b)
}

/// The decaying-convention substitution coefficients
/// α₁ = −B/(cħ√(−2A)), α₂ = −√(−A)/(2cħ).
pub fn alphas_from_ab(
    a: Complex64,
    b: Complex64,
    k: &PhysicalConstants,
) -> Result<(Complex64, Complex64), ModelError> {
    alphas_signed(a, b, k.chbar())
}

/// As [`alphas_from_ab`] but with a signed cħ: the second independent
/// fundamental solution is generated by cħ → −cħ.
pub(crate) fn alphas_signed(
    a: Complex64,
    b: Complex64,
    chs: f64,
) -> Result<(Complex64, Complex64), ModelError> {
    if a.im == 0.0 && a.re >= 0.0 {
        return Err(ModelError::NonNegativeA { a: a.re });
    }
    let alpha1 = -b / (chs * (-2.0 * a).sqrt());
    let alpha2 = -(-a).sqrt() / (2.0 * chs);
    Ok((alpha1, alpha2))
}

/// Shared (ν, g) map: `vs_sq` plays the role of V1²−S1² and `p` the role of
/// √(V1−S1)√(V1+S1) in the transformed equation (the spin-symmetric family
/// enters with vs_sq = −W1², p = −iW1).
pub(crate) fn nu_g_from_raw(
    alpha1: Complex64,
    alpha2: Complex64,
    vs_sq: Complex64,
    p: Complex64,
    chs: f64,
) -> (Complex64, Complex64) {
    let nu = -alpha1 * alpha1 / (4.0 * alpha2) - vs_sq / (2.0 * alpha2 * chs * chs);
    let g = -alpha1 / (-2.0 * alpha2).sqrt() - Complex64::i() * p / ((-alpha2).sqrt() * chs);
    (nu, g)
}

/// (ν, g) of the general fundamental solution.
pub fn nu_g_general(
    cfg: &GeneralConfig,
    e: f64,
    k: &PhysicalConstants,
) -> Result<(Complex64, Complex64), ModelError> {
    let (a, b) = compute_ab(cfg, e, k);
    let (alpha1, alpha2) = alphas_from_ab(a, b, k)?;
    let vs_sq = cfg.v1 * cfg.v1 - cfg.s1 * cfg.s1;
    let p = (cfg.v1 - cfg.s1).sqrt() * (cfg.v1 + cfg.s1).sqrt();
    Ok(nu_g_from_raw(alpha1, alpha2, vs_sq, p, k.chbar()))
}

/// ν = B²/(4cħ(−A)^{3/2}) of the symmetric (S1² = V1²) reduction.
pub fn nu_symmetric(a: f64, b: f64, k: &PhysicalConstants) -> Result<f64, ModelError> {
    if a >= 0.0 {
        return Err(ModelError::NonNegativeA { a });
    }
    Ok(b * b / (4.0 * k.chbar() * (-a).powf(1.5)))
}

/// ν = (m²c³V1²/ħ)/(m²c⁴ − E²)^{3/2} of the electrostatic family.
pub fn nu_electrostatic(e: f64, v1: f64, k: &PhysicalConstants) -> Result<f64, ModelError> {
    let mc2 = k.mc2();
    if e.abs() >= mc2 {
        return Err(ModelError::EnergyOutOfWindow { e, mc2 });
    }
    let num = k.m * k.m * k.c.powi(3) * v1 * v1 / k.hbar;
    Ok(num / (mc2 * mc2 - e * e).powf(1.5))
}

/// y = √(−2α₂)(√(2x) − α₁/(2α₂)); strictly increasing in x, with
/// y(0) = −sgn(B)√(2ν) in the symmetric case.
pub fn map_y(x: f64, alpha1: Complex64, alpha2: Complex64) -> Result<Complex64, ModelError> {
    if x < 0.0 {
        return Err(ModelError::NegativeX { x });
    }
    Ok((-2.0 * alpha2).sqrt() * (c((2.0 * x).sqrt()) - alpha1 / (2.0 * alpha2)))
}

/// Symmetric-form variant of the substitution,
/// y = √(√(−4A)/cħ)(√x + B/(2A)); identical to [`map_y`] built from the
/// resolved α's.
pub fn map_y_symmetric(x: f64, a: f64, b: f64, k: &PhysicalConstants) -> Result<f64, ModelError> {
    if a >= 0.0 {
        return Err(ModelError::NonNegativeA { a });
    }
    if x < 0.0 {
        return Err(ModelError::NegativeX { x });
    }
    Ok(((-4.0 * a).sqrt() / k.chbar()).sqrt() * (x.sqrt() + b / (2.0 * a)))
}

/// λ = V1²/(mħc³) and θ = λ/(3^{3/2} ν).
pub fn lambda_theta(v1: f64, k: &PhysicalConstants, nu: f64) -> (f64, f64) {
    let lambda = v1 * v1 / (k.m * k.hbar * k.c.powi(3));
    let theta = lambda / (3.0_f64.powf(1.5) * nu);
    (lambda, theta)
}

/// Bundle of all derived quantities for a general configuration.
pub fn reduced_params(
    cfg: &GeneralConfig,
    e: f64,
    k: &PhysicalConstants,
) -> Result<ReducedParams, ModelError> {
    reduced_params_signed(cfg, e, k, 1.0)
}

/// As [`reduced_params`] with a signed cħ (chbar_sign = −1 selects the second
/// fundamental solution of the transformed equation).
pub fn reduced_params_signed(
    cfg: &GeneralConfig,
    e: f64,
    k: &PhysicalConstants,
    chbar_sign: f64,
) -> Result<ReducedParams, ModelError> {
    let chs = chbar_sign * k.chbar();
    let (a, b) = compute_ab(cfg, e, k);
    let (alpha1, alpha2) = alphas_signed(a, b, chs)?;
    let vs_sq = cfg.v1 * cfg.v1 - cfg.s1 * cfg.s1;
    let p = (cfg.v1 - cfg.s1).sqrt() * (cfg.v1 + cfg.s1).sqrt();
    let (nu, g) = nu_g_from_raw(alpha1, alpha2, vs_sq, p, chs);
    let (lambda, theta) =
        lambda_theta((cfg.v1 * cfg.v1).re.abs().sqrt(), k, nu.re.max(f64::MIN_POSITIVE));
    Ok(ReducedParams { a, b, alpha1, alpha2, nu, g, lambda, theta })
}

/// Reduced parameters of the spin-symmetric family (effective couplings
/// A = E² − (mc²+Cs)², B = −2V1(E+mc²+Cs), with W1 entering through the
/// transformed equation's F² and F′ terms).
pub fn reduced_params_spinsym(
    cfg: &SpinSymConfig,
    e: f64,
    k: &PhysicalConstants,
) -> Result<ReducedParams, ModelError> {
    let ms = k.mc2() + cfg.cs;
    let a = e * e - ms * ms;
    let b = -2.0 * cfg.v1 * (e + ms);
    let (alpha1, alpha2) = alphas_from_ab(c(a), c(b), k)?;
    let (nu, g) = nu_g_from_raw(
        alpha1,
        alpha2,
        c(-cfg.w1 * cfg.w1),
        Complex64::new(0.0, -cfg.w1),
        k.chbar(),
    );
    let (lambda, theta) = lambda_theta(cfg.v1, k, nu.re.max(f64::MIN_POSITIVE));
    Ok(ReducedParams { a: c(a), b: c(b), alpha1, alpha2, nu, g, lambda, theta })
}

impl ElectrostaticConfig {
    pub fn as_general(&self) -> GeneralConfig {
        GeneralConfig::real(0.0, self.v1, 0.0, 0.0, 0.0)
    }
}

impl PseudoSpinConfig {
    /// The involutive parameter map onto the spin-symmetric family.
    pub fn as_spinsym(&self) -> SpinSymConfig {
        SpinSymConfig { v1: -self.v1, w1: -self.w1, cs: self.cp }
    }
}

/// V1 with λ fixed and the sign admitting bound states (sgn(AB) = −1 requires
/// V1 < 0 for the direct families).
pub fn v1_from_lambda(lambda: f64, k: &PhysicalConstants) -> f64 {
    -(lambda * k.m * k.hbar * k.c.powi(3)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    const K: PhysicalConstants = PhysicalConstants { m: 1.0, hbar: 1.0, c: 1.0 };

    #[test]
    fn compute_ab_specializations() {
        // spin-symmetric overlap config (S1 = V1 = −1, rest zero) at E = 0
        let cfg = GeneralConfig::real(0.0, -1.0, 0.0, 0.0, -1.0);
        let (a, b) = compute_ab(&cfg, 0.0, &K);
        assert_eq!(a.re, -1.0);
        assert_eq!(b.re, 2.0);
        // electrostatic (S1 = 0) at E = 0: B vanishes
        let cfg = GeneralConfig::real(0.0, -1.0, 0.0, 0.0, 0.0);
        let (a, b) = compute_ab(&cfg, 0.0, &K);
        assert_eq!(a.re, -1.0);
        assert_eq!(b.re, 0.0);
        // free-particle reduction
        let cfg = GeneralConfig::real(0.0, 0.0, 0.0, 0.0, 0.0);
        let (a, b) = compute_ab(&cfg, 0.3, &K);
        assert!((a.re - (0.09 - 1.0)).abs() < 1e-15);
        assert_eq!(b.re, 0.0);
    }

    #[test]
    fn alphas_examples() {
        let (a1, a2) = alphas_from_ab(Complex64::new(-1.0, 0.0), Complex64::new(2.0, 0.0), &K).unwrap();
        assert!((a1.re - (-2.0_f64.sqrt())).abs() < 1e-15);
        assert!((a2.re - (-0.5)).abs() < 1e-15);
        let (a1, _) = alphas_from_ab(Complex64::new(-1.0, 0.0), Complex64::new(0.0, 0.0), &K).unwrap();
        assert_eq!(a1.re, 0.0);
        assert!(alphas_from_ab(Complex64::new(0.5, 0.0), Complex64::new(1.0, 0.0), &K).is_err());
    }

    #[test]
    fn nu_symmetric_examples() {
        assert!((nu_symmetric(-1.0, 2.0, &K).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(nu_symmetric(-1.0, 0.0, &K).unwrap(), 0.0);
        // λ=1 spin-symmetric at the second exact level E = 0.279904
        let e = 0.279904;
        let a = e * e - 1.0;
        let b = -2.0 * (-1.0) * (e + 1.0);
        let nu = nu_symmetric(a, b, &K).unwrap();
        assert!((nu - 1.851).abs() < 1e-3);
    }

    #[test]
    fn nu_electrostatic_examples() {
        assert!((nu_electrostatic(0.0, -1.0, &K).unwrap() - 1.0).abs() < 1e-15);
        let nu = nu_electrostatic(0.297679, -1.0, &K).unwrap();
        assert!((nu - 1.14937).abs() < 5e-4);
        // monotone increasing toward the continuum edge
        assert!(nu_electrostatic(0.99, -1.0, &K).unwrap() > nu_electrostatic(0.5, -1.0, &K).unwrap());
        assert!(nu_electrostatic(1.0, -1.0, &K).is_err());
    }

    #[test]
    fn general_nu_matches_specializations() {
        // electrostatic specialization over a deterministic (E, V1) grid
        for i in 0..50 {
            let e = -0.9 + 1.8 * (i as f64) / 49.0;
            let v1 = -2.0 + 0.07 * i as f64;
            if v1.abs() < 1e-3 {
                continue;
            }
            let cfg = GeneralConfig::real(0.0, v1, 0.0, 0.0, 0.0);
            let (nu, _) = nu_g_general(&cfg, e, &K).unwrap();
            let nu_ref = nu_electrostatic(e, v1, &K).unwrap();
            assert!((nu.re - nu_ref).abs() < 1e-12 * nu_ref.max(1.0), "e={e} v1={v1}");
            assert!(nu.im.abs() < 1e-12);
        }
        // spin-symmetric specialization S1 = V1
        for i in 0..50 {
            let e = -0.8 + 1.6 * (i as f64) / 49.0;
            let v1 = -1.3;
            let cfg = GeneralConfig::real(0.0, v1, 0.0, 0.0, v1);
            let (a, b) = compute_ab(&cfg, e, &K);
            let (nu, g) = nu_g_general(&cfg, e, &K).unwrap();
            let nu_ref = nu_symmetric(a.re, b.re, &K).unwrap();
            assert!((nu.re - nu_ref).abs() < 1e-12 * nu_ref.max(1.0));
            assert!(g.im.abs() < 1e-14, "Im(g) = {} should vanish for S1 = V1", g.im);
        }
    }

    #[test]
    fn map_y_examples() {
        // symmetric A=−1, B=2: y(0) = −√2 = −sgn(B)√(2ν) with ν = 1
        let (a1, a2) = alphas_from_ab(Complex64::new(-1.0, 0.0), Complex64::new(2.0, 0.0), &K).unwrap();
        let y0 = map_y(0.0, a1, a2).unwrap();
        assert!((y0.re - (-2.0_f64.sqrt())).abs() < 1e-14);
        // α₁ = 0 centres the map at the origin
        let y0 = map_y(0.0, Complex64::new(0.0, 0.0), a2).unwrap();
        assert_eq!(y0.re, 0.0);
        // monotone in x
        let y1 = map_y(0.5, a1, a2).unwrap();
        let y2 = map_y(1.5, a1, a2).unwrap();
        assert!(y2.re > y1.re && y1.re > y0.re - 2.0);
        assert!(map_y(-0.1, a1, a2).is_err());
        // Eq-17-form variant agrees with the α-form
        for x in [0.0, 0.3, 1.0, 4.2] {
            let ys = map_y_symmetric(x, -1.0, 2.0, &K).unwrap();
            let ya = map_y(x, a1, a2).unwrap();
            assert!((ys - ya.re).abs() < 1e-13, "x={x}: {ys} vs {}", ya.re);
        }
    }

    #[test]
    fn lambda_theta_examples() {
        assert_eq!(lambda_theta(-1.0, &K, 1.0).0, 1.0);
        assert_eq!(lambda_theta(-3.0, &K, 1.0).0, 9.0);
        let nu = 1.0 / 3.0_f64.powf(1.5);
        let (_, theta) = lambda_theta(-1.0, &K, nu);
        assert!((theta - 1.0).abs() < 1e-14);
    }

    #[test]
    fn dimensionless_params_scale_invariant() {
        // electrostatic at fixed ε = E/mc², λ = 1, in two unit systems
        let k2 = PhysicalConstants { m: 2.0, hbar: 0.5, c: 3.0 };
        let eps = 0.3;
        let p1 = reduced_params(
            &GeneralConfig::real(0.0, v1_from_lambda(1.0, &K), 0.0, 0.0, 0.0),
            eps * K.mc2(),
            &K,
        )
        .unwrap();
        let p2 = reduced_params(
            &GeneralConfig::real(0.0, v1_from_lambda(1.0, &k2), 0.0, 0.0, 0.0),
            eps * k2.mc2(),
            &k2,
        )
        .unwrap();
        assert!((p1.nu.re - p2.nu.re).abs() < 1e-12 * p1.nu.re);
        assert!((p1.g - p2.g).norm() < 1e-12 * p1.g.norm());
        assert!((p1.lambda - p2.lambda).abs() < 1e-12);
        assert!((p1.theta - p2.theta).abs() < 1e-12);
    }

    #[test]
    fn pseudospin_map_is_involutive() {
        let p = PseudoSpinConfig { v1: 1.2, w1: -0.3, cp: 0.1 };
        let s = p.as_spinsym();
        let back = PseudoSpinConfig { v1: -s.v1, w1: -s.w1, cp: s.cs };
        assert_eq!(p, back);
    }
}
