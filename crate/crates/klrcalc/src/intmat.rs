//! Dense integer matrices, Smith normal form, and field ranks.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
            row_labels: (0..rows).map(|i| format!("{}", i + 1)).collect(),
            col_labels: (0..cols).map(|i| format!("{}", i + 1)).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::from(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, v) in row.iter().enumerate() {
                *m.at_mut(i, j) = BigInt::from(*v);
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut m = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = self.at(i, k) * other.at(k, j);
                    *m.at_mut(i, j) += add;
                }
            }
        }
        m
    }

    /// Smith normal form invariant factors d_1 | d_2 | ... (nonnegative,
    /// zeros last), padded to min(rows, cols).
    pub fn snf_divisors(&self) -> Vec<BigInt> {
        let mut m = self.clone();
        let k = m.rows.min(m.cols);
        let mut divisors = Vec::with_capacity(k);
        let mut top = 0usize;
        while top < k {
            // pick the nonzero entry of minimal absolute value as pivot
            let mut pivot: Option<(usize, usize)> = None;
            for i in top..m.rows {
                for j in top..m.cols {
                    if !m.at(i, j).is_zero()
                        && pivot.map_or(true, |(pi, pj)| m.at(i, j).abs() < m.at(pi, pj).abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            m.swap_rows(top, pi);
            m.swap_cols(top, pj);
            // clear the pivot row and column
            let mut again = true;
            while again {
                again = false;
                for i in top + 1..m.rows {
                    if m.at(i, top).is_zero() {
                        continue;
                    }
                    let q = div_round(m.at(i, top), m.at(top, top));
                    m.row_op(i, top, &q);
                    if !m.at(i, top).is_zero() {
                        m.swap_rows(i, top);
                        again = true;
                    }
                }
                for j in top + 1..m.cols {
                    if m.at(top, j).is_zero() {
                        continue;
                    }
                    let q = div_round(m.at(top, j), m.at(top, top));
                    m.col_op(j, top, &q);
                    if !m.at(top, j).is_zero() {
                        m.swap_cols(j, top);
                        again = true;
                    }
                }
            }
            top += 1;
        }
        for i in 0..top {
            divisors.push(m.at(i, i).abs());
        }
        while divisors.len() < k {
            divisors.push(BigInt::zero());
        }
        // enforce the divisibility chain on the diagonal
        let nz = divisors.iter().filter(|d| !d.is_zero()).count();
        for i in 0..nz {
            for j in i + 1..nz {
                let (a, b) = (divisors[i].clone(), divisors[j].clone());
                let g = gcd(&a, &b);
                if !(&b % &a).is_zero() {
                    divisors[i] = g.clone();
                    divisors[j] = (&a * &b) / &g;
                }
            }
        }
        divisors
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let x = self.at(a, j).clone();
            let y = self.at(b, j).clone();
            *self.at_mut(a, j) = y;
            *self.at_mut(b, j) = x;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let x = self.at(i, a).clone();
            let y = self.at(i, b).clone();
            *self.at_mut(i, a) = y;
            *self.at_mut(i, b) = x;
        }
    }

    /// row a -= q * row b
    fn row_op(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let sub = q * self.at(b, j);
            *self.at_mut(a, j) -= sub;
        }
    }

    /// col a -= q * col b
    fn col_op(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let sub = q * self.at(i, b);
            *self.at_mut(i, a) -= sub;
        }
    }

    pub fn rank_rational(&self) -> usize {
        self.snf_divisors().iter().filter(|d| !d.is_zero()).count()
    }

    /// Rank over the prime field F_p by modular Gaussian elimination.
    pub fn rank_mod_p(&self, p: u64) -> usize {
        let pb = BigInt::from(p);
        let mut a: Vec<Vec<u64>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let mut v = self.at(i, j) % &pb;
                        if v.is_negative() {
                            v += &pb;
                        }
                        u64::try_from(v).unwrap()
                    })
                    .collect()
            })
            .collect();
        let mut rank = 0;
        let mut col = 0;
        while rank < self.rows && col < self.cols {
            let piv = (rank..self.rows).find(|&i| a[i][col] != 0);
            let Some(piv) = piv else {
                col += 1;
                continue;
            };
            a.swap(rank, piv);
            let inv = mod_inv(a[rank][col], p);
            for j in col..self.cols {
                a[rank][j] = a[rank][j] * inv % p;
            }
            for i in 0..self.rows {
                if i != rank && a[i][col] != 0 {
                    let f = a[i][col];
                    for j in col..self.cols {
                        a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
                    }
                }
            }
            rank += 1;
            col += 1;
        }
        rank
    }

    pub fn rank_over(&self, characteristic: u64) -> usize {
        if characteristic == 0 {
            self.rank_rational()
        } else {
            self.rank_mod_p(characteristic)
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rows": self.row_labels,
            "cols": self.col_labels,
            "entries": (0..self.rows).map(|i| {
                (0..self.cols).map(|j| {
                    match i64::try_from(self.at(i, j).clone()) {
                        Ok(n) => serde_json::Value::from(n),
                        Err(_) => serde_json::Value::from(self.at(i, j).to_string()),
                    }
                }).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Round-to-nearest quotient, so remainders have at most half the pivot size.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = num_integer::Integer::div_mod_floor(a, b);
    if &(&r * &two).abs() > &b.abs() {
        q + BigInt::from(1)
    } else {
        q
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime and a != 0 mod p
    let mut exp = p - 2;
    let mut base = a % p;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_divisors() {
        let m = IntMatrix::identity(5);
        let d = m.snf_divisors();
        assert_eq!(d, vec![BigInt::from(1); 5]);
        assert_eq!(m.rank_rational(), 5);
        assert_eq!(m.rank_mod_p(2), 5);
    }

    #[test]
    fn divisor_chain() {
        let m = IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let d = m.snf_divisors();
        for i in 1..d.len() {
            if !d[i].is_zero() {
                assert!((&d[i] % &d[i - 1]).is_zero());
            }
        }
    }

    #[test]
    fn known_snf() {
        // diag(2,6) has divisors 2, 6; ranks: Q -> 2, F_2 -> 0, F_3 -> 1
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 6]]);
        assert_eq!(m.snf_divisors(), vec![BigInt::from(2), BigInt::from(6)]);
        assert_eq!(m.rank_mod_p(2), 0);
        assert_eq!(m.rank_mod_p(3), 1);
    }

    #[test]
    fn rank_from_divisors_matches_modular_rank() {
        let m = IntMatrix::from_rows(vec![
            vec![1, 2, 3, 1],
            vec![2, 4, 6, 2],
            vec![0, 2, 2, 4],
        ]);
        let d = m.snf_divisors();
        for p in [2u64, 3, 5, 7] {
            let pb = BigInt::from(p);
            let from_divisors = d
                .iter()
                .filter(|x| !x.is_zero() && !(*x % &pb).is_zero())
                .count();
            assert_eq!(from_divisors, m.rank_mod_p(p));
        }
    }

    #[test]
    fn rect_padding() {
        let m = IntMatrix::from_rows(vec![vec![0, 0, 0], vec![0, 3, 0]]);
        assert_eq!(m.snf_divisors(), vec![BigInt::from(3), BigInt::zero()]);
    }
}
