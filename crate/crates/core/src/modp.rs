//! Small prime-field linear algebra for the numeric oracle.
//!
//! Everything here works over `Z/l` for a prime `l` that fits in a `u64`,
//! with matrices a few dozen entries wide at most, so plain trial division
//! and dense Gauss-Jordan elimination are entirely adequate.

use crate::error::{Error, Result};

/// Deterministic primality test by trial division; fine for the small
/// moduli the oracle uses.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `base^exp mod modulus` by square and multiply.
pub fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    assert!(modulus > 0, "modulus must be positive");
    let mut result = 1u128;
    let mut base = u128::from(base % modulus);
    let mut exp = exp;
    let m = u128::from(modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    result as u64
}

/// Inverse of `x` modulo a prime `p`, via Fermat.
pub fn inv_mod(x: u64, p: u64) -> u64 {
    debug_assert!(x % p != 0, "zero has no inverse");
    pow_mod(x, p - 2, p)
}

/// The prime factors of `n`, each listed once.
fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut d = 2u64;
    while u128::from(d) * u128::from(d) <= u128::from(n) {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    factors
}

/// A generator of the multiplicative group modulo a prime `p`.
pub fn primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    let factors = prime_factors(p - 1);
    for g in 2..p {
        if factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1) {
            return Ok(g);
        }
    }
    unreachable!("every prime has a primitive root");
}

/// An element of exact multiplicative order `k` modulo a prime `p`.
/// Requires `k` to divide `p - 1`.
pub fn element_of_order(p: u64, k: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 || (p - 1) % k != 0 {
        return Err(Error::NoRootOfOrder {
            modulus: p,
            order: k,
        });
    }
    if k == 1 {
        return Ok(1);
    }
    let g = primitive_root(p)?;
    Ok(pow_mod(g, (p - 1) / k, p))
}

/// A dense matrix over `Z/modulus`, stored row-major with entries reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(modulus: u64, rows: usize, cols: usize) -> Self {
        assert!(modulus > 1, "modulus must exceed 1");
        ModMatrix {
            modulus,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(modulus: u64, n: usize) -> Self {
        let mut m = Self::zeros(modulus, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        self.data[i * self.cols + j] = value % self.modulus;
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let m = u128::from(self.modulus);
        let mut out = ModMatrix::zeros(self.modulus, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = u128::from(self.get(i, k));
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = u128::from(out.get(i, j));
                    let add = a * u128::from(other.get(k, j)) % m;
                    out.set(i, j, ((cur + add) % m) as u64);
                }
            }
        }
        out
    }

    /// Gauss-Jordan inverse of a square matrix; `None` when singular.
    pub fn invert(&self) -> Option<ModMatrix> {
        assert_eq!(self.rows, self.cols, "only square matrices invert");
        let n = self.rows;
        let p = self.modulus;
        let mut work = self.clone();
        let mut inv = ModMatrix::identity(p, n);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| work.get(r, col) != 0)?;
            if pivot_row != col {
                for j in 0..n {
                    let (a, b) = (work.get(col, j), work.get(pivot_row, j));
                    work.set(col, j, b);
                    work.set(pivot_row, j, a);
                    let (a, b) = (inv.get(col, j), inv.get(pivot_row, j));
                    inv.set(col, j, b);
                    inv.set(pivot_row, j, a);
                }
            }
            let scale = inv_mod(work.get(col, col), p);
            for j in 0..n {
                work.set(col, j, mul_mod(work.get(col, j), scale, p));
                inv.set(col, j, mul_mod(inv.get(col, j), scale, p));
            }
            for row in 0..n {
                if row == col {
                    continue;
                }
                let factor = work.get(row, col);
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let w = sub_mod(work.get(row, j), mul_mod(factor, work.get(col, j), p), p);
                    work.set(row, j, w);
                    let v = sub_mod(inv.get(row, j), mul_mod(factor, inv.get(col, j), p), p);
                    inv.set(row, j, v);
                }
            }
        }
        Some(inv)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(p)) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

/// An incrementally built row-echelon basis for a subspace of
/// `(Z/modulus)^dim`.
pub struct SpanBasis {
    modulus: u64,
    dim: usize,
    /// Rows in echelon form: strictly increasing pivot columns, each pivot
    /// normalized to 1.
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn new(modulus: u64, dim: usize) -> Self {
        assert!(modulus > 1, "modulus must exceed 1");
        SpanBasis {
            modulus,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Reduce `vector` against the basis and absorb any remainder.
    /// Returns `true` when the span grew.
    ///
    /// The rows are kept fully reduced: every row is zero at every other
    /// row's pivot. Both halves of that invariant matter, so the new row is
    /// also eliminated from the existing ones; otherwise a later vector
    /// inside the span could fail to reduce to zero.
    pub fn insert(&mut self, mut vector: Vec<u64>) -> bool {
        assert_eq!(vector.len(), self.dim, "vector length mismatch");
        let p = self.modulus;
        for v in vector.iter_mut() {
            *v %= p;
        }
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            let factor = vector[pivot];
            if factor != 0 {
                for (x, &r) in vector.iter_mut().zip(row) {
                    *x = sub_mod(*x, mul_mod(factor, r, p), p);
                }
            }
        }
        let Some(pivot) = vector.iter().position(|&x| x != 0) else {
            return false;
        };
        let scale = inv_mod(vector[pivot], p);
        for x in vector.iter_mut() {
            *x = mul_mod(*x, scale, p);
        }
        for row in self.rows.iter_mut() {
            let factor = row[pivot];
            if factor != 0 {
                for (x, &n) in row.iter_mut().zip(&vector) {
                    *x = sub_mod(*x, mul_mod(factor, n, p), p);
                }
            }
        }
        let slot = self
            .pivots
            .iter()
            .position(|&q| q > pivot)
            .unwrap_or(self.rows.len());
        self.rows.insert(slot, vector);
        self.pivots.insert(slot, pivot);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes = [2u64, 3, 5, 7, 11, 13, 1009, 1013, 1021, 7919];
        for p in primes {
            assert!(is_prime(p), "{p}");
        }
        let composites = [0u64, 1, 4, 9, 1001, 1011, 1000003 * 2];
        for c in composites {
            assert!(!is_prime(c), "{c}");
        }
        assert!(is_prime(1000003));
    }

    #[test]
    fn powers_and_inverses() {
        assert_eq!(pow_mod(2, 10, 1009), 1024 % 1009);
        assert_eq!(pow_mod(7, 0, 13), 1);
        assert_eq!(pow_mod(0, 5, 13), 0);
        for x in 1u64..13 {
            assert_eq!(x * inv_mod(x, 13) % 13, 1);
        }
    }

    #[test]
    fn primitive_roots_have_full_order() {
        for p in [3u64, 7, 13, 101, 1009] {
            let g = primitive_root(p).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            let mut x = 1u64;
            for _ in 0..p - 1 {
                x = x * g % p;
                seen.insert(x);
            }
            assert_eq!(seen.len() as u64, p - 1, "p = {p}");
        }
        assert!(matches!(primitive_root(10), Err(Error::NotPrime(10))));
    }

    #[test]
    fn elements_of_requested_order() {
        let p = 1009;
        for k in [1u64, 2, 3, 4, 6, 7, 12, 1008] {
            let z = element_of_order(p, k).unwrap();
            assert_eq!(pow_mod(z, k, p), 1, "k = {k}");
            // The order is exactly k: no proper divisor works.
            for d in 1..k {
                if k % d == 0 {
                    assert_ne!(pow_mod(z, d, p), 1, "k = {k}, d = {d}");
                }
            }
        }
        assert!(matches!(
            element_of_order(1009, 5),
            Err(Error::NoRootOfOrder {
                modulus: 1009,
                order: 5
            })
        ));
        assert!(matches!(element_of_order(8, 2), Err(Error::NotPrime(8))));
    }

    #[test]
    fn matrix_multiplication() {
        let p = 13;
        let mut a = ModMatrix::zeros(p, 2, 3);
        let mut b = ModMatrix::zeros(p, 3, 2);
        for (i, j, v) in [(0, 0, 1u64), (0, 1, 2), (0, 2, 3), (1, 0, 4), (1, 1, 5), (1, 2, 6)] {
            a.set(i, j, v);
        }
        for (i, j, v) in [(0, 0, 7u64), (0, 1, 8), (1, 0, 9), (1, 1, 10), (2, 0, 11), (2, 1, 12)] {
            b.set(i, j, v);
        }
        let c = a.mul(&b);
        // Integer product [[58, 64], [139, 154]] reduced mod 13.
        assert_eq!(c.get(0, 0), 58 % 13);
        assert_eq!(c.get(0, 1), 64 % 13);
        assert_eq!(c.get(1, 0), 139 % 13);
        assert_eq!(c.get(1, 1), 154 % 13);
    }

    #[test]
    fn inversion_round_trip() {
        let p = 1009;
        let mut m = ModMatrix::zeros(p, 3, 3);
        let entries = [[2u64, 7, 1], [0, 3, 5], [4, 0, 9]];
        for i in 0..3 {
            for j in 0..3 {
                m.set(i, j, entries[i][j]);
            }
        }
        let inv = m.invert().expect("matrix is invertible");
        assert_eq!(m.mul(&inv), ModMatrix::identity(p, 3));
        assert_eq!(inv.mul(&m), ModMatrix::identity(p, 3));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let p = 13;
        let mut m = ModMatrix::zeros(p, 2, 2);
        m.set(0, 0, 3);
        m.set(0, 1, 6);
        m.set(1, 0, 5);
        m.set(1, 1, 10);
        assert!(m.invert().is_none());
        assert!(ModMatrix::zeros(p, 2, 2).invert().is_none());
    }

    #[test]
    fn span_basis_growth() {
        let mut basis = SpanBasis::new(13, 3);
        assert!(basis.insert(vec![0, 2, 4]));
        assert!(!basis.insert(vec![0, 1, 2]));
        assert!(basis.insert(vec![1, 1, 1]));
        assert!(!basis.insert(vec![1, 3, 5]));
        assert!(!basis.is_full());
        assert!(basis.insert(vec![0, 0, 7]));
        assert!(basis.is_full());
        assert!(!basis.insert(vec![5, 6, 7]));
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn span_basis_rejects_zero() {
        let mut basis = SpanBasis::new(13, 2);
        assert!(!basis.insert(vec![0, 0]));
        assert!(!basis.insert(vec![13, 26]));
        assert!(basis.is_empty());
    }
}
