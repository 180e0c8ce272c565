//! Adaptive Gauss–Kronrod (7, 15) quadrature.

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Panel budget per call of [`integrate`].
const MAX_PANELS: usize = 4_000;

/// Kronrod value, error estimate and `∫|f|` on `[a, b]`.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    let mut abs = WGK[7] * fc.abs();
    for j in 0..7 {
        let dx = h * XGK[j];
        let (fl, fr) = (f(c - dx), f(c + dx));
        k += WGK[j] * (fl + fr);
        abs += WGK[j] * (fl.abs() + fr.abs());
        if j % 2 == 1 {
            g += WG[j / 2] * (fl + fr);
        }
    }
    (k * h, ((k - g) * h).abs(), abs * h.abs())
}

struct Panel {
    a: f64,
    b: f64,
    val: f64,
    err: f64,
    abs: f64,
}

/// Globally adaptive: repeatedly bisects the panel with the largest error
/// estimate until the summed estimate meets `atol` or the rounding floor.
fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, atol: f64) -> Result<f64> {
    let eval = |a: f64, b: f64| -> Result<Panel> {
        let (val, err, abs) = gk15(f, a, b);
        if !val.is_finite() {
            return Err(Error::NoConvergence(format!("non-finite integrand on [{a}, {b}]")));
        }
        Ok(Panel { a, b, val, err, abs })
    };
    let mut panels = vec![eval(a, b)?];
    loop {
        let err: f64 = panels.iter().map(|p| p.err).sum();
        let abs: f64 = panels.iter().map(|p| p.abs).sum();
        let val: f64 = panels.iter().map(|p| p.val).sum();
        if err <= atol || err <= 1e-15 * val.abs() || err <= 50.0 * f64::EPSILON * abs {
            return Ok(val);
        }
        let (k, worst) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(k, p)| (k, (p.a, p.b)))
            .unwrap();
        let (pa, pb) = worst;
        let m = 0.5 * (pa + pb);
        if panels.len() >= MAX_PANELS || m <= pa || m >= pb {
            return Err(Error::NoConvergence(format!(
                "quadrature error {err:e} above tolerance {atol:e} on [{a}, {b}]"
            )));
        }
        panels[k] = eval(pa, m)?;
        panels.push(eval(m, pb)?);
    }
}

/// `∫_a^b f` to absolute tolerance `atol`, splitting first at `breaks`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, breaks: &[f64], atol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let mut pts = vec![lo];
    let mut inner: Vec<f64> = breaks.iter().copied().filter(|&x| x > lo && x < hi).collect();
    inner.sort_by(f64::total_cmp);
    pts.extend(inner);
    pts.push(hi);
    let panels = (pts.len() - 1) as f64;
    let mut total = 0.0;
    for w in pts.windows(2) {
        if w[1] > w[0] {
            total += adapt(&f, w[0], w[1], atol / panels)?;
        }
    }
    Ok(sign * total)
}
