//! Small numerical helpers shared by several modules.

use crate::rational::binomial_f64;

/// `B_2, B_4, ..., B_16`.
const BERNOULLI_EVEN: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

/// Euler-Maclaurin estimate of `sum_{n >= m} n^{-s}` for `s > 1`, `m >= 1`.
/// Accurate to near machine precision once `m` is a few dozen.
pub fn power_tail(s: f64, m: u64) -> f64 {
    assert!(s > 1.0, "power_tail needs s > 1");
    let m = m as f64;
    let mut total = m.powf(1.0 - s) / (s - 1.0) + 0.5 * m.powf(-s);
    // d^{2j-1}/dx^{2j-1} x^{-s} = -(s)(s+1)...(s+2j-2) x^{-s-2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        let k = 2 * (j + 1);
        total += b / fact * rising * m.powf(-s - (k as f64) + 1.0);
        rising *= (s + k as f64 - 1.0) * (s + k as f64);
        fact *= ((k + 1) * (k + 2)) as f64;
    }
    total
}

/// `sum_{n >= m} (n^b - (n-1)^b)^2 n^a` through the expansion
/// `(n^b - (n-1)^b)^2 = n^{2b} (sum_{i>=1} e_i n^{-i})^2` with
/// `e_i = -C(b,i)(-1)^i`; needs `2b + a < 1` and `m` in the thousands.
pub fn difference_power_tail(beta: f64, alpha: f64, m: u64) -> f64 {
    const J: usize = 24;
    let e: Vec<f64> = (0..J)
        .map(|i| if i == 0 { 0.0 } else { -binomial_f64(beta, i as u32) * if i % 2 == 0 { 1.0 } else { -1.0 } })
        .collect();
    let mut total = 0.0;
    for j in 2..J {
        let c: f64 = (1..j).map(|i| e[i] * e[j - i]).sum();
        total += c * power_tail(j as f64 - 2.0 * beta - alpha, m);
    }
    total
}

/// `zeta(s)` for `s > 1`.
pub fn zeta(s: f64) -> f64 {
    const M: u64 = 64;
    (1..M).map(|n| (n as f64).powf(-s)).sum::<f64>() + power_tail(s, M)
}

/// Compensated (Neumaier) summation.
pub fn kahan_sum(xs: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut c = 0.0f64;
    for x in xs {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            c += (sum - t) + x;
        } else {
            c += (x - t) + sum;
        }
        sum = t;
    }
    sum + c
}

/// Relative difference `|a-b| / max(|a|,|b|)`, zero when both vanish.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
