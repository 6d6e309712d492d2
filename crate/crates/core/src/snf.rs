//! Smith normal form of an integer matrix, with the unimodular transforms
//! (and their inverses) retained so quotient-group representatives can be
//! lifted deterministically.

use num::{BigInt, Integer, One, Signed, Zero};

/// u * m * v = diag(d_0, ..., d_{n-1}) with d_i >= 0 and d_i | d_{i+1}.
#[derive(Debug, Clone)]
pub struct Snf {
    pub diag: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub u_inv: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    pub v_inv: Vec<Vec<BigInt>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

struct Worker {
    m: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    v_inv: Vec<Vec<BigInt>>,
}

impl Worker {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.m.swap(a, b);
        self.u.swap(a, b);
        for row in self.u_inv.iter_mut() {
            row.swap(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in self.m.iter_mut() {
            row.swap(a, b);
        }
        for row in self.v.iter_mut() {
            row.swap(a, b);
        }
        self.v_inv.swap(a, b);
    }

    /// row_a += c * row_b  (left multiplication by I + c e_ab).
    fn add_row(&mut self, a: usize, b: usize, c: &BigInt) {
        let n = self.m.len();
        for j in 0..n {
            let t = &self.m[b][j] * c;
            self.m[a][j] += t;
            let t = &self.u[b][j] * c;
            self.u[a][j] += t;
        }
        // Inverse transform acts on columns of u_inv: col_b -= c * col_a.
        for i in 0..n {
            let t = &self.u_inv[i][a] * c;
            self.u_inv[i][b] -= t;
        }
    }

    /// col_a += c * col_b  (right multiplication).
    fn add_col(&mut self, a: usize, b: usize, c: &BigInt) {
        let n = self.m.len();
        for i in 0..n {
            let t = &self.m[i][b] * c;
            self.m[i][a] += t;
            let t = &self.v[i][b] * c;
            self.v[i][a] += t;
        }
        for j in 0..n {
            let t = &self.v_inv[a][j] * c;
            self.v_inv[b][j] -= t;
        }
    }

    fn negate_row(&mut self, a: usize) {
        let n = self.m.len();
        for j in 0..n {
            self.m[a][j] = -self.m[a][j].clone();
            self.u[a][j] = -self.u[a][j].clone();
        }
        for i in 0..n {
            self.u_inv[i][a] = -self.u_inv[i][a].clone();
        }
    }

    /// Smallest nonzero entry (by absolute value) of the trailing submatrix.
    fn pivot(&self, k: usize) -> Option<(usize, usize)> {
        let n = self.m.len();
        let mut best: Option<(usize, usize)> = None;
        for i in k..n {
            for j in k..n {
                if self.m[i][j].is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.m[bi][bj].abs() <= self.m[i][j].abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }
}

pub fn smith_normal_form(m: &[Vec<BigInt>]) -> Snf {
    let n = m.len();
    let mut w = Worker {
        m: m.to_vec(),
        u: identity(n),
        u_inv: identity(n),
        v: identity(n),
        v_inv: identity(n),
    };

    for k in 0..n {
        'clear: loop {
            let (pi, pj) = match w.pivot(k) {
                Some(p) => p,
                None => break 'clear,
            };
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);

            let mut dirty = false;
            for i in k + 1..n {
                if !w.m[i][k].is_zero() {
                    let q = -w.m[i][k].div_floor(&w.m[k][k]);
                    w.add_row(i, k, &q);
                    dirty = dirty || !w.m[i][k].is_zero();
                }
            }
            for j in k + 1..n {
                if !w.m[k][j].is_zero() {
                    let q = -w.m[k][j].div_floor(&w.m[k][k]);
                    w.add_col(j, k, &q);
                    dirty = dirty || !w.m[k][j].is_zero();
                }
            }
            if dirty {
                continue 'clear;
            }
            // Row/col k are clear; force divisibility of the remaining block.
            let mut offender = None;
            'scan: for i in k + 1..n {
                for j in k + 1..n {
                    if !w.m[i][j].is_multiple_of(&w.m[k][k]) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    w.add_row(k, i, &BigInt::one());
                    continue 'clear;
                }
                None => break 'clear,
            }
        }
        if w.m[k][k].is_negative() {
            w.negate_row(k);
        }
    }

    Snf {
        diag: (0..n).map(|i| w.m[i][i].clone()).collect(),
        u: w.u,
        u_inv: w.u_inv,
        v: w.v,
        v_inv: w.v_inv,
    }
}
