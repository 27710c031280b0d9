//! Small floating-point helpers shared across modules.

/// Neumaier-compensated summation. Keeps a running error term so that long
/// series lose at most one rounding overall instead of one per addition.
pub(crate) fn compensated_sum<I>(terms: I) -> f64
where
    I: IntoIterator<Item = f64>,
{
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for t in terms {
        let next = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - next) + t;
        } else {
            comp += (t - next) + sum;
        }
        sum = next;
    }
    sum + comp
}

/// |lhs - rhs| scaled by max(1, |lhs|, |rhs|): behaves like an absolute
/// residual near zero and like a relative residual for large magnitudes.
pub(crate) fn scaled_residual(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / 1.0_f64.max(lhs.abs()).max(rhs.abs())
}

/// Next representable float above `x` (finite positive direction).
pub(crate) fn nudge_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    let bits = x.to_bits();
    let next = if x == 0.0 {
        1 // smallest positive subnormal
    } else if bits >> 63 == 0 {
        bits + 1
    } else {
        bits - 1
    };
    f64::from_bits(next)
}

/// Next representable float below `x`.
pub(crate) fn nudge_down(x: f64) -> f64 {
    if x.is_nan() || x == f64::NEG_INFINITY {
        return x;
    }
    let bits = x.to_bits();
    let next = if x == 0.0 {
        1 | (1 << 63) // smallest negative subnormal
    } else if bits >> 63 == 0 {
        bits - 1
    } else {
        bits + 1
    };
    f64::from_bits(next)
}
