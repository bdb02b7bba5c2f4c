//! Eigenvalues of general real matrices: Householder reduction to upper
//! Hessenberg form followed by Francis double-shift QR iteration.

use super::Matrix;
use crate::error::{Error, Result};

/// A complex number, used only to report eigenvalues of real matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexScalar {
    pub re: f64,
    pub im: f64,
}

impl ComplexScalar {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexScalar { re, im }
    }

    pub fn real(re: f64) -> Self {
        ComplexScalar { re, im: 0.0 }
    }

    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// Reduces a square matrix to upper Hessenberg form by Householder
/// similarity transforms. Entries below the first subdiagonal are zeroed.
pub fn hessenberg(m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut h = m.clone();
    for k in 0..n.saturating_sub(2) {
        let alpha_norm: f64 = (k + 1..n).map(|i| h[(i, k)] * h[(i, k)]).sum::<f64>().sqrt();
        if alpha_norm == 0.0 {
            continue;
        }
        let alpha = if h[(k + 1, k)] > 0.0 { -alpha_norm } else { alpha_norm };
        let mut v: Vec<f64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        // H <- P H P with P = I - 2 v vᵀ / (vᵀv) acting on rows/cols k+1..n
        for j in 0..n {
            let s: f64 = (0..v.len()).map(|a| v[a] * h[(k + 1 + a, j)]).sum::<f64>() * 2.0 / vnorm2;
            for a in 0..v.len() {
                h[(k + 1 + a, j)] -= s * v[a];
            }
        }
        for i in 0..n {
            let s: f64 = (0..v.len()).map(|a| h[(i, k + 1 + a)] * v[a]).sum::<f64>() * 2.0 / vnorm2;
            for a in 0..v.len() {
                h[(i, k + 1 + a)] -= s * v[a];
            }
        }
        h[(k + 1, k)] = alpha;
        for i in k + 2..n {
            h[(i, k)] = 0.0;
        }
    }
    h
}

/// All eigenvalues of a real square matrix, with multiplicity.
///
/// Complex eigenvalues come in conjugate pairs read off the 2×2 blocks of
/// the real Schur form. Ordering follows deflation order and carries no
/// meaning.
pub fn general_eigenvalues(m: &Matrix) -> Result<Vec<ComplexScalar>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigenvalues need a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![ComplexScalar::real(m[(0, 0)])]),
        _ => {}
    }
    francis_qr(hessenberg(m))
}

/// Double-shift QR on an upper Hessenberg matrix (eigenvalues only).
///
/// Follows the classic EISPACK `hqr` structure: look for a small
/// subdiagonal to split off 1×1 or 2×2 blocks, otherwise perform one
/// implicit double-shift bulge chase on the active window `l..=nn`.
fn francis_qr(mut h: Matrix) -> Result<Vec<ComplexScalar>> {
    let n = h.rows();
    let max_iterations = 30 * n;
    let mut total_iterations = 0;
    let mut out = vec![ComplexScalar::real(0.0); n];

    let mut anorm = 0.0;
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm += h[(i, j)].abs();
        }
    }

    // Accumulated exceptional shift.
    let mut shift = 0.0;
    let mut nn = n as isize - 1;
    while nn >= 0 {
        let mut its = 0;
        loop {
            let top = nn as usize;
            // find l: smallest index such that the block l..=top is unreduced
            let mut l = top;
            while l >= 1 {
                let mut s = h[(l - 1, l - 1)].abs() + h[(l, l)].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if h[(l, l - 1)].abs() + s == s {
                    h[(l, l - 1)] = 0.0;
                    break;
                }
                l -= 1;
            }

            let mut x = h[(top, top)];
            if l == top {
                out[top] = ComplexScalar::real(x + shift);
                nn -= 1;
                break;
            }
            let mut y = h[(top - 1, top - 1)];
            let mut w = h[(top, top - 1)] * h[(top - 1, top)];
            if l + 1 == top {
                let p = 0.5 * (y - x);
                let q = p * p + w;
                let z = q.abs().sqrt();
                x += shift;
                if q >= 0.0 {
                    let z = p + z.copysign(p);
                    let hi = x + z;
                    let lo = if z != 0.0 { x - w / z } else { hi };
                    out[top - 1] = ComplexScalar::real(hi);
                    out[top] = ComplexScalar::real(lo);
                } else {
                    out[top - 1] = ComplexScalar::new(x + p, z);
                    out[top] = ComplexScalar::new(x + p, -z);
                }
                nn -= 2;
                break;
            }

            if its == 30 || total_iterations >= max_iterations {
                return Err(Error::NoConvergence {
                    algorithm: "Francis QR",
                    iterations: total_iterations,
                });
            }
            if its == 10 || its == 20 {
                shift += x;
                for i in 0..=top {
                    h[(i, i)] -= x;
                }
                let s = h[(top, top - 1)].abs() + h[(top - 1, top - 2)].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            total_iterations += 1;

            // look for two consecutive small subdiagonals
            let mut m = top - 2;
            let (mut p, mut q, mut r);
            loop {
                let z = h[(m, m)];
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / h[(m + 1, m)] + h[(m, m + 1)];
                q = h[(m + 1, m + 1)] - z - rr - ss;
                r = h[(m + 2, m + 1)];
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let u = h[(m, m - 1)].abs() * (q.abs() + r.abs());
                let v = p.abs() * (h[(m - 1, m - 1)].abs() + z.abs() + h[(m + 1, m + 1)].abs());
                if u + v == v {
                    break;
                }
                m -= 1;
            }
            for i in m + 2..=top {
                h[(i, i - 2)] = 0.0;
                if i != m + 2 {
                    h[(i, i - 3)] = 0.0;
                }
            }

            // bulge chase
            for k in m..top {
                if k != m {
                    p = h[(k, k - 1)];
                    q = h[(k + 1, k - 1)];
                    r = if k != top - 1 { h[(k + 2, k - 1)] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = (p * p + q * q + r * r).sqrt().copysign(p);
                if s == 0.0 {
                    continue;
                }
                if k == m {
                    if l != m {
                        h[(k, k - 1)] = -h[(k, k - 1)];
                    }
                } else {
                    h[(k, k - 1)] = -s * x;
                }
                p += s;
                x = p / s;
                y = q / s;
                let z = r / s;
                q /= p;
                r /= p;
                for j in k..=top {
                    let mut pp = h[(k, j)] + q * h[(k + 1, j)];
                    if k != top - 1 {
                        pp += r * h[(k + 2, j)];
                        h[(k + 2, j)] -= pp * z;
                    }
                    h[(k + 1, j)] -= pp * y;
                    h[(k, j)] -= pp * x;
                }
                let mmin = top.min(k + 3);
                for i in l..=mmin {
                    let mut pp = x * h[(i, k)] + y * h[(i, k + 1)];
                    if k != top - 1 {
                        pp += z * h[(i, k + 2)];
                        h[(i, k + 2)] -= pp * r;
                    }
                    h[(i, k + 1)] -= pp * q;
                    h[(i, k)] -= pp;
                }
            }
        }
    }
    Ok(out)
}
