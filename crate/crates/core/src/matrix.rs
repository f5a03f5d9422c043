//! Dense square matrices over arbitrary-precision integers.
//!
//! Carrier for adjacency matrices and everything derived from them: powers,
//! walk counts, distance matrices, permutation matrices. Entries are
//! `BigInt` because powers of adjacency matrices outgrow machine words.

use std::fmt;
use std::ops::{Add, Index, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::perm::Permutation;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn ones(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![BigInt::one(); n * n],
        }
    }

    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(entry(i, j));
            }
        }
        IntMatrix { n, data }
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "rows must be square");
        Self::from_fn(n, |i, j| BigInt::from(rows[i][j]))
    }

    /// Permutation matrix `P` with `P[i][p(i)] = 1`.
    pub fn from_permutation(p: &Permutation) -> Self {
        let n = p.n();
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + p.apply(i)] = BigInt::one();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn row_sum(&self, i: usize) -> BigInt {
        self.data[i * self.n..(i + 1) * self.n].iter().sum()
    }

    /// If the matrix is exactly a permutation matrix, return the permutation.
    pub fn as_permutation(&self) -> Option<Permutation> {
        let n = self.n;
        let mut images = vec![usize::MAX; n];
        let mut hit_col = vec![false; n];
        for i in 0..n {
            let mut image = None;
            for j in 0..n {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                if !e.is_one() || image.is_some() {
                    return None;
                }
                image = Some(j);
            }
            let j = image?;
            if hit_col[j] {
                return None;
            }
            hit_col[j] = true;
            images[i] = j;
        }
        Permutation::from_images(images).ok()
    }

    /// Matrix power by repeated multiplication (exponents here are tiny).
    pub fn pow(&self, e: u32) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Whether `self == other` after relabelling rows and columns by `p`,
    /// i.e. `self[i][j] == other[p(i)][p(j)]` for all `i, j`.
    pub fn permuted_eq(&self, other: &IntMatrix, p: &Permutation) -> bool {
        if self.n != other.n || p.n() != self.n {
            return false;
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) != other.get(p.apply(i), p.apply(j)) {
                    return false;
                }
            }
        }
        true
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.get(i, j)
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let a = IntMatrix::from_rows_i64(&[vec![1, 2], vec![3, 4]]);
        let i = IntMatrix::identity(2);
        assert_eq!(&a * &i, a);
        assert_eq!(&i * &a, a);
    }

    #[test]
    fn permutation_round_trip() {
        let p = Permutation::from_cycles(5, &[&[0, 2, 4], &[1, 3]]).unwrap();
        let m = IntMatrix::from_permutation(&p);
        assert_eq!(m.as_permutation(), Some(p));
        assert!(IntMatrix::ones(3).as_permutation().is_none());
        assert!(IntMatrix::zero(3).as_permutation().is_none());
    }

    #[test]
    fn permutation_matrix_commutation_is_conjugation() {
        // P A P^T relabels: (P A P^T)[p(i)][p(j)] == A[i][j]
        let p = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let pm = IntMatrix::from_permutation(&p);
        let a = IntMatrix::from_rows_i64(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);
        let conj = &(&pm.transpose() * &a) * &pm;
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(conj.get(p.apply(i), p.apply(j)), a.get(i, j));
            }
        }
        assert!(a.permuted_eq(&conj, &p));
    }

    #[test]
    fn powers() {
        let c3 = IntMatrix::from_rows_i64(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
        assert_eq!(c3.pow(3), IntMatrix::identity(3));
        assert_eq!(c3.pow(0), IntMatrix::identity(3));
    }
}
