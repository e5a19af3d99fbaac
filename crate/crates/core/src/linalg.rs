//! Small dense solvers.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Solves `A x = b` for square row-major `A` by partial pivoting.
pub fn solve_complex(n: usize, a: &[Complex64], b: &[Complex64]) -> Result<Vec<Complex64>> {
    let cols = b.len() / n;
    let mut m = a.to_vec();
    let mut rhs = b.to_vec();
    let scale = a.iter().fold(0.0, |acc: f64, z| acc.max(z.norm()));
    for k in 0..n {
        let (p, best) = (k..n)
            .map(|i| (i, m[i * n + k].norm()))
            .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= 1e-300 || best <= 1e-14 * scale {
            return Err(Error::Singular);
        }
        if p != k {
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            for j in 0..cols {
                rhs.swap(k * cols + j, p * cols + j);
            }
        }
        let inv = m[k * n + k].inv();
        for i in (k + 1)..n {
            let f = m[i * n + k] * inv;
            if f.norm() == 0.0 {
                continue;
            }
            for j in k..n {
                let v = m[k * n + j];
                m[i * n + j] -= f * v;
            }
            for j in 0..cols {
                let v = rhs[k * cols + j];
                rhs[i * cols + j] -= f * v;
            }
        }
    }
    for k in (0..n).rev() {
        let inv = m[k * n + k].inv();
        for j in 0..cols {
            let mut acc = rhs[k * cols + j];
            for i in (k + 1)..n {
                acc -= m[k * n + i] * rhs[i * cols + j];
            }
            rhs[k * cols + j] = acc * inv;
        }
    }
    Ok(rhs)
}

/// Inverse of a square row-major complex matrix.
pub fn invert_complex(n: usize, a: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut id = vec![Complex64::new(0.0, 0.0); n * n];
    for k in 0..n {
        id[k * n + k] = Complex64::new(1.0, 0.0);
    }
    solve_complex(n, a, &id)
}

/// Solves a real square system.
pub fn solve_real(n: usize, a: &[f64], b: &[f64]) -> Result<Vec<f64>> {
    let ac: Vec<Complex64> = a.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let bc: Vec<Complex64> = b.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    Ok(solve_complex(n, &ac, &bc)?.into_iter().map(|z| z.re).collect())
}

/// Inverse of a real 4x4 matrix.
pub fn invert4(m: &[[f64; 4]; 4]) -> Result<[[f64; 4]; 4]> {
    let flat: Vec<f64> = m.iter().flatten().copied().collect();
    let mut id = [0.0; 16];
    for k in 0..4 {
        id[5 * k] = 1.0;
    }
    let ac: Vec<Complex64> = flat.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let bc: Vec<Complex64> = id.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let sol = solve_complex(4, &ac, &bc)?;
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = sol[i * 4 + j].re;
        }
    }
    Ok(out)
}

pub fn mul4(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Basis of the null space of a row-major `rows x cols` matrix, by
/// reduced row echelon form with relative pivot threshold `tol`.
pub fn nullspace(rows: usize, cols: usize, a: &[Complex64], tol: f64) -> Vec<Vec<Complex64>> {
    let mut m = a.to_vec();
    let scale = a.iter().fold(0.0, |acc: f64, z| acc.max(z.norm())).max(1e-300);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let (p, best) = (row..rows)
            .map(|i| (i, m[i * cols + col].norm()))
            .fold((row, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= tol * scale {
            continue;
        }
        for j in 0..cols {
            m.swap(row * cols + j, p * cols + j);
        }
        let inv = m[row * cols + col].inv();
        for j in 0..cols {
            m[row * cols + j] *= inv;
        }
        for i in 0..rows {
            if i != row {
                let f = m[i * cols + col];
                if f.norm() != 0.0 {
                    for j in 0..cols {
                        let v = m[row * cols + j];
                        m[i * cols + j] -= f * v;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Complex64::new(0.0, 0.0); cols];
            v[free] = Complex64::new(1.0, 0.0);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r * cols + free];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_known_matrix() {
        let m = [[2.0, 1.0, 0.0, 0.0], [1.0, 3.0, 0.0, 1.0], [0.0, 0.0, 1.0, 0.0], [0.0, 1.0, 0.0, 4.0]];
        let inv = invert4(&m).unwrap();
        let p = mul4(&m, &inv);
        for i in 0..4 {
            for j in 0..4 {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((p[i][j] - e).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn nullspace_of_rank_one() {
        let one = Complex64::new(1.0, 0.0);
        let a = [one, one * 2.0, one * 2.0, one * 4.0];
        let ns = nullspace(2, 2, &a, 1e-12);
        assert_eq!(ns.len(), 1);
        assert!((ns[0][0] + ns[0][1] * 2.0).norm() < 1e-14);
    }

    #[test]
    fn singular_is_reported() {
        let a = [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(4.0, 0.0)];
        assert_eq!(solve_complex(2, &a, &a[..2]), Err(Error::Singular));
    }
}
