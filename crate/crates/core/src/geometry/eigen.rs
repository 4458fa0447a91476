//! Cyclic Jacobi eigendecomposition for small dense symmetric matrices.

/// Off-diagonal Frobenius norm at which rotation stops.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct Eigen {
    /// Descending.
    pub values: Vec<f64>,
    /// `vectors[i][j]` is component `i` of eigenvector `j`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s.sqrt()
}

/// Eigenpairs sorted by descending value; each vector's first component
/// that is not negligibly small is made positive.
pub fn jacobi(matrix: &[Vec<f64>]) -> Eigen {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut sweeps = 0;
    while off_norm(&a) > OFF_DIAGONAL_TOLERANCE && sweeps < MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]).then(i.cmp(&j)));
    let values: Vec<f64> = order.iter().map(|&i| a[i][i]).collect();
    let mut vectors: Vec<Vec<f64>> = (0..n).map(|i| order.iter().map(|&j| v[i][j]).collect()).collect();
    for col in 0..n {
        let lead = (0..n).find(|&i| vectors[i][col].abs() > OFF_DIAGONAL_TOLERANCE);
        if lead.is_some_and(|i| vectors[i][col] < 0.0) {
            for row in vectors.iter_mut() {
                row[col] = -row[col];
            }
        }
    }
    Eigen { values, vectors, sweeps }
}

/// `max |A − V Λ Vᵀ|`.
pub fn reconstruction_error(a: &[Vec<f64>], e: &Eigen) -> f64 {
    let n = a.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let r: f64 = (0..n).map(|k| e.vectors[i][k] * e.values[k] * e.vectors[j][k]).sum();
            worst = worst.max((a[i][j] - r).abs());
        }
    }
    worst
}

/// `max |VᵀV − I|`.
pub fn orthonormality_error(e: &Eigen) -> f64 {
    let n = e.values.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let dot: f64 = (0..n).map(|k| e.vectors[k][i] * e.vectors[k][j]).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((dot - target).abs());
        }
    }
    worst
}
