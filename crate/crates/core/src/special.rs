//! Gamma function via the Lanczos approximation.
//!
//! The asymptotic predictors are a constant times a power, and the constant
//! is a gamma evaluation, so its error budget is far below the Monte Carlo
//! noise it is compared against. The g = 7, n = 9 coefficient set below is
//! accurate to about 1e-14 relative over the range used here.

use crate::real::Real;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for positive arguments.
///
/// Evaluated in double precision regardless of `R`. Panics if `z <= 0`.
pub fn gamma<R: Real>(z: R) -> R {
    let zf = z.to_f64_lossy();
    assert!(zf > 0.0, "gamma requires a positive argument, got {zf}");
    R::from_f64_lossy(gamma_f64(zf))
}

fn gamma_f64(z: f64) -> f64 {
    use std::f64::consts::PI;
    if z < 0.5 {
        // Reflection: gamma(z) gamma(1-z) = pi / sin(pi z).
        PI / ((PI * z).sin() * gamma_f64(1.0 - z))
    } else {
        let z = z - 1.0;
        let mut series = LANCZOS_COEFFS[0];
        for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
            series += c / (z + i as f64);
        }
        let t = z + LANCZOS_G + 0.5;
        (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * series
    }
}
