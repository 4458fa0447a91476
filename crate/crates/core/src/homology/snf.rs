//! Smith normal form over the integers, tracking column operations.

/// `diagonal` and `v` with `U · A · V = D` for some unimodular `U`.
///
/// Rows of `v` give the image of each basis vector in the diagonal
/// coordinates, so `ℤ^cols / rowspace(A) ≅ ⊕ ℤ / dᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<i128>,
    pub v: Vec<Vec<i128>>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|&&d| d != 0).count()
    }
}

fn swap_cols(a: &mut [Vec<i128>], v: &mut [Vec<i128>], i: usize, j: usize) {
    for row in a.iter_mut().chain(v.iter_mut()) {
        row.swap(i, j);
    }
}

/// `col[j] -= q * col[i]`.
fn sub_col(a: &mut [Vec<i128>], v: &mut [Vec<i128>], j: usize, i: usize, q: i128) {
    for row in a.iter_mut().chain(v.iter_mut()) {
        row[j] -= q * row[i];
    }
}

pub fn smith_normal_form(matrix: &[Vec<i128>], cols: usize) -> SmithForm {
    let mut a: Vec<Vec<i128>> = matrix.to_vec();
    let rows = a.len();
    let mut v: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the remaining block goes to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                diagonal.resize(rows.min(cols), 0);
                return SmithForm { diagonal, v };
            };
            a.swap(t, bi);
            swap_cols(&mut a, &mut v, t, bj);
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    let pivot_row = a[t].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                        *x -= q * y;
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    sub_col(&mut a, &mut v, j, t, q);
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match offending {
                Some(i) => {
                    let row = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
    }
    diagonal.resize(rows.min(cols), 0);
    SmithForm { diagonal, v }
}
