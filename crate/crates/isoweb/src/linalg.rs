//! Small dense linear algebra: 3x3 solves, symmetric 3x3 eigenvalues,
//! and a dense Cholesky for least-squares normal equations.

use crate::geom::Vec3;

/// Solve `A x = b` for a 3x3 system with partial pivoting.
/// Returns `None` when the pivot falls below `1e-14` times the matrix scale.
pub fn solve3(a: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let mut m = [[0.0f64; 4]; 3];
    let mut scale: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = a[i][j];
            scale = scale.max(a[i][j].abs());
        }
        m[i][3] = b[i];
    }
    let tol = 1e-14 * scale.max(1e-300);
    for col in 0..3 {
        let piv = (col..3).max_by(|&r, &s| m[r][col].abs().total_cmp(&m[s][col].abs()))?;
        if m[piv][col].abs() < tol {
            return None;
        }
        m.swap(col, piv);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for k in col..4 {
                m[row][k] -= f * m[col][k];
            }
        }
    }
    let mut x = [0.0f64; 3];
    for row in (0..3).rev() {
        let mut s = m[row][3];
        for k in row + 1..3 {
            s -= m[row][k] * x[k];
        }
        x[row] = s / m[row][row];
    }
    Some(x)
}

/// Eigenvalues and eigenvectors of a symmetric 3x3 matrix by Jacobi rotation,
/// eigenvalues ascending.
pub fn sym3_eigen(a: [[f64; 3]; 3]) -> ([f64; 3], [Vec3; 3]) {
    let mut m = a;
    let mut v = [[0.0f64; 3]; 3];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _ in 0..50 {
        let mut off = 0.0;
        for i in 0..3 {
            for j in i + 1..3 {
                off += m[i][j] * m[i][j];
            }
        }
        if off < 1e-300 {
            break;
        }
        for p in 0..3 {
            for q in p + 1..3 {
                if m[p][q].abs() < 1e-30 * (m[p][p].abs() + m[q][q].abs() + 1e-300) {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..3 {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..3 {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| m[i][i].total_cmp(&m[j][j]));
    let vals = [m[order[0]][order[0]], m[order[1]][order[1]], m[order[2]][order[2]]];
    let vecs = [
        Vec3::new(v[0][order[0]], v[1][order[0]], v[2][order[0]]),
        Vec3::new(v[0][order[1]], v[1][order[1]], v[2][order[1]]),
        Vec3::new(v[0][order[2]], v[1][order[2]], v[2][order[2]]),
    ];
    (vals, vecs)
}

/// Smallest singular value of a 3x3 matrix.
pub fn smallest_singular_value3(a: [[f64; 3]; 3]) -> f64 {
    let mut ata = [[0.0f64; 3]; 3];
    for row in &a {
        for i in 0..3 {
            for j in 0..3 {
                ata[i][j] += row[i] * row[j];
            }
        }
    }
    let (vals, _) = sym3_eigen(ata);
    vals[0].max(0.0).sqrt()
}

/// Dense symmetric positive definite solve via Cholesky, in place on a copy.
/// `a` is row-major `n x n`. Returns `None` if a pivot is not positive.
pub fn solve_spd(a: &[f64], b: &[f64], n: usize) -> Option<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    debug_assert_eq!(b.len(), n);
    let mut l = a.to_vec();
    for j in 0..n {
        let mut d = l[j * n + j];
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if d <= 0.0 {
            return None;
        }
        let d = d.sqrt();
        l[j * n + j] = d;
        for i in j + 1..n {
            let mut s = l[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / d;
        }
    }
    // forward substitution L y = b
    let mut y = b.to_vec();
    for i in 0..n {
        for k in 0..i {
            let t = y[k];
            y[i] -= l[i * n + k] * t;
        }
        y[i] /= l[i * n + i];
    }
    // back substitution L^T x = y
    for i in (0..n).rev() {
        for k in i + 1..n {
            let t = y[k];
            y[i] -= l[k * n + i] * t;
        }
        y[i] /= l[i * n + i];
    }
    Some(y)
}

/// Least-squares solve of an overdetermined dense system `A x = b` through
/// the normal equations with a small relative ridge for safety.
pub fn solve_least_squares(a: &[f64], b: &[f64], rows: usize, cols: usize) -> Option<Vec<f64>> {
    debug_assert_eq!(a.len(), rows * cols);
    debug_assert_eq!(b.len(), rows);
    let mut ata = vec![0.0f64; cols * cols];
    let mut atb = vec![0.0f64; cols];
    for r in 0..rows {
        let row = &a[r * cols..(r + 1) * cols];
        for i in 0..cols {
            if row[i] == 0.0 {
                continue;
            }
            atb[i] += row[i] * b[r];
            for j in i..cols {
                ata[i * cols + j] += row[i] * row[j];
            }
        }
    }
    let mut diag_max: f64 = 0.0;
    for i in 0..cols {
        diag_max = diag_max.max(ata[i * cols + i]);
        for j in 0..i {
            ata[i * cols + j] = ata[j * cols + i];
        }
    }
    let ridge = 1e-14 * diag_max.max(1e-300);
    for i in 0..cols {
        ata[i * cols + i] += ridge;
    }
    solve_spd(&ata, &atb, cols)
}
