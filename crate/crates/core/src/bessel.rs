//! Integer-order modified Bessel functions of the second kind `K_nu`, their
//! small-argument expansions, and log-gamma.
//!
//! `K_0`/`K_1` use the ascending series below `x = 2` and the Steed/
//! Thompson-Barnett continued fraction above it; higher orders follow from
//! the upward recurrence `K_{n+1}(x) = K_{n-1}(x) + (2n/x) K_n(x)`, which is
//! forward-stable because `K` grows with the order. Relative accuracy is
//! better than 1e-12 over `x in [1e-8, 700]` for orders up to 64.

use thiserror::Error;

/// Euler-Mascheroni constant.
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Largest order the evaluator is specified for.
pub const MAX_ORDER: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BesselError {
    #[error("argument must be strictly positive")]
    Domain,
    #[error("K_nu(x) exceeds the f64 range (x too small for this order)")]
    Overflow,
    #[error("order {0} exceeds the supported maximum {MAX_ORDER}")]
    Order(u32),
    #[error("no small-argument expansion exists for order 0")]
    NoExpansion,
}

/// `K_nu(x)` for integer order `nu >= 0` and `x > 0`.
///
/// Values whose magnitude falls below the smallest positive f64 are signalled
/// by an exact `0.0` return (the true function is strictly positive), which
/// legitimately happens in deep outage tails. Results above the f64 range are
/// an [`BesselError::Overflow`] error.
pub fn bessel_k(nu: u32, x: f64) -> Result<f64, BesselError> {
    if !(x > 0.0) {
        return Err(BesselError::Domain);
    }
    if nu > MAX_ORDER {
        return Err(BesselError::Order(nu));
    }
    let (k0, k1) = k0_k1(x);
    match nu {
        0 => Ok(k0),
        1 => Ok(k1),
        _ => {
            let mut km = k0;
            let mut k = k1;
            for n in 1..nu {
                let next = km + (2.0 * f64::from(n) / x) * k;
                if !next.is_finite() {
                    return Err(BesselError::Overflow);
                }
                km = k;
                k = next;
            }
            Ok(k)
        }
    }
}

/// Small-argument closed forms of `K_nu`:
/// `1/x + (x/2) ln(x/2)` for `nu = 1` and
/// `[2^nu (nu-1)! / x^nu - 2^(nu-2) (nu-2)! / x^(nu-2)] / 2` for `nu >= 2`.
///
/// Intended for `x << 1`; no expansion is provided for `nu = 0`.
pub fn bessel_k_small_x(nu: u32, x: f64) -> Result<f64, BesselError> {
    if !(x > 0.0) {
        return Err(BesselError::Domain);
    }
    match nu {
        0 => Err(BesselError::NoExpansion),
        1 => Ok(1.0 / x + 0.5 * x * (0.5 * x).ln()),
        _ => {
            let n = f64::from(nu);
            let lead = 0.5 * (2f64.powi(nu as i32) * factorial(nu - 1) / x.powf(n));
            let corr = 0.5 * (2f64.powi(nu as i32 - 2) * factorial(nu - 2) / x.powf(n - 2.0));
            let v = lead - corr;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(BesselError::Overflow)
            }
        }
    }
}

/// `ln Gamma(x)` for `x > 0` (Lanczos, g = 7, 9 coefficients).
pub fn ln_gamma(x: f64) -> f64 {
    const COEF: [f64; 8] = [
        676.5203681218851,
        -1259.1392167224028,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507343278686905,
        -0.13857109526572012,
        9.984_369_578_019_572e-6,
        1.5056327351493116e-7,
    ];
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let xm = x - 1.0;
    let mut acc = 0.999_999_999_999_809_9;
    for (i, c) in COEF.iter().enumerate() {
        acc += c / (xm + i as f64 + 1.0);
    }
    let t = xm + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (xm + 0.5) * t.ln() - t + acc.ln()
}

/// `ln n!`
pub fn ln_factorial(n: u32) -> f64 {
    ln_gamma(f64::from(n) + 1.0)
}

/// `n!` as f64 (exact through 22!, `exp(ln_gamma)` beyond).
pub fn factorial(n: u32) -> f64 {
    if n <= 22 {
        let mut acc = 1.0f64;
        for k in 2..=n {
            acc *= f64::from(k);
        }
        acc
    } else {
        ln_factorial(n).exp()
    }
}

/// Binomial coefficient as f64.
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    if n <= 22 {
        factorial(n) / (factorial(k) * factorial(n - k))
    } else {
        (ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)).exp().round()
    }
}

/// `K_0` and `K_1` together.
fn k0_k1(x: f64) -> (f64, f64) {
    if x < 2.0 {
        k0_k1_series(x)
    } else {
        k0_k1_cf2(x)
    }
}

/// Ascending series, `0 < x < 2`.
fn k0_k1_series(x: f64) -> (f64, f64) {
    let t = 0.25 * x * x;
    let lx = (0.5 * x).ln();
    let mut tk = 1.0; // t^k
    let mut fact = 1.0; // k!
    let mut hk = 0.0; // H_k
    let mut i0 = 0.0;
    let mut s0 = 0.0; // sum H_k t^k / (k!)^2
    let mut i1s = 0.0; // sum t^k / (k! (k+1)!)
    let mut s1 = 0.0; // sum [psi(k+1)+psi(k+2)] t^k / (k! (k+1)!)
    for k in 0u32..64 {
        let kp1 = f64::from(k) + 1.0;
        let d0 = tk / (fact * fact);
        i0 += d0;
        s0 += d0 * hk;
        let d1 = d0 / kp1;
        i1s += d1;
        s1 += d1 * (2.0 * hk + 1.0 / kp1 - 2.0 * EULER_GAMMA);
        if k > 2 && d0 < 1e-18 * i0 {
            break;
        }
        tk *= t;
        fact *= kp1;
        hk += 1.0 / kp1;
    }
    let k0 = -(lx + EULER_GAMMA) * i0 + s0;
    let k1 = 1.0 / x + lx * (0.5 * x * i1s) - 0.25 * x * s1;
    (k0, k1)
}

/// Steed continued fraction (CF2), `x >= 2`. Underflows to exact zero for
/// very large arguments instead of returning subnormal noise.
fn k0_k1_cf2(x: f64) -> (f64, f64) {
    const MAXIT: usize = 10_000;
    const EPS: f64 = f64::EPSILON;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..=MAXIT {
        a -= 2.0 * (i as f64 - 1.0);
        c = -a * c / i as f64;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() <= EPS {
            break;
        }
    }
    h *= a1;
    // ln K_0 guards the e^{-x} underflow region
    let ln_k0 = 0.5 * (std::f64::consts::PI / (2.0 * x)).ln() - x - s.ln();
    if ln_k0 < f64::MIN_POSITIVE.ln() {
        return (0.0, 0.0);
    }
    let k0 = ln_k0.exp();
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}
