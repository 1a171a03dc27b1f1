use crate::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Exponential integral `E1(x) = ∫_x^∞ e^{−t}/t dt` for `x > 0`, to about
/// 1e-13 relative accuracy: power series up to `x = 3`, continued fraction
/// (modified Lentz) beyond.
pub fn exp_integral_e1(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::InvalidArgument(format!("E1 needs x > 0, got {x}")));
    }
    Ok(if x <= 3.0 {
        e1_series(x)
    } else {
        e1_continued_fraction(x)
    })
}

fn e1_series(x: f64) -> f64 {
    // E1(x) = −γ − ln x − Σ_{k≥1} (−x)^k / (k·k!)
    let mut sum = 0.0;
    let mut term = 1.0; // (−x)^k / k!
    for k in 1..200 {
        term *= -x / k as f64;
        let contrib = term / k as f64;
        sum += contrib;
        if contrib.abs() < 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    -EULER_GAMMA - x.ln() - sum
}

fn e1_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..1000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h * (-x).exp()
}
