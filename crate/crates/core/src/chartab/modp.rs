//! Arithmetic and dense linear algebra over a prime field `GF(p)`, `p < 2^31`.

#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p < 1 << 31, "prime must be below 2^31");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    #[inline]
    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let p = self.p;
        let mut factors = Vec::new();
        let mut m = p - 1;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                factors.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        (2..p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (p - 1) / q) != 1))
            .unwrap_or(1)
    }

    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Reduces `rows` to reduced row echelon form in place, dropping zero
    /// rows; returns the pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, sel);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c] == 0 {
                    continue;
                }
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x = self.sub(*x, self.mul(f, y));
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{v : A v = 0}` for a square matrix `A` given by rows.
    pub fn nullspace(&self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = a.first().map_or(0, Vec::len);
        let mut rows = a.to_vec();
        let pivots = self.rref(&mut rows);
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; n];
            v[free] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = self.sub(0, row[free]);
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial `det(xI - A)`, lowest degree first, via
    /// reduction to upper Hessenberg form.
    pub fn charpoly(&self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h = a.to_vec();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let inv = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let u = self.mul(h[i][m - 1], inv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = self.mul(u, h[m][j]);
                    h[i][j] = self.sub(h[i][j], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[i]);
                    row[m] = self.add(row[m], t);
                }
            }
        }
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            // (x - h[m-1][m-1]) * p_{m-1}
            let prev = &polys[m - 1];
            let mut pm = vec![0; m + 1];
            for (d, &c) in prev.iter().enumerate() {
                pm[d + 1] = self.add(pm[d + 1], c);
                pm[d] = self.sub(pm[d], self.mul(h[m - 1][m - 1], c));
            }
            let mut t = 1;
            for i in 1..m {
                t = self.mul(t, h[m - i][m - i - 1]);
                let coef = self.mul(t, h[m - i - 1][m - 1]);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[m - i - 1].iter().enumerate() {
                    pm[d] = self.sub(pm[d], self.mul(coef, c));
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }
}

pub fn is_prime(n: u64) -> bool {
    crate::structure::is_prime(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn det(f: &PrimeField, m: &[Vec<u64>]) -> u64 {
        let n = m.len();
        let mut a = m.to_vec();
        let mut d = 1;
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| a[r][c] != 0) else {
                return 0;
            };
            if r != c {
                a.swap(r, c);
                d = f.sub(0, d);
            }
            d = f.mul(d, a[c][c]);
            let inv = f.inv(a[c][c]);
            for r in c + 1..n {
                let u = f.mul(a[r][c], inv);
                for j in c..n {
                    let t = f.mul(u, a[c][j]);
                    a[r][j] = f.sub(a[r][j], t);
                }
            }
        }
        d
    }

    #[test]
    fn charpoly_matches_determinant() {
        let f = PrimeField::new(101);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for n in 1..8 {
            for _ in 0..20 {
                let a: Vec<Vec<u64>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                if rng.gen_bool(0.4) {
                                    0
                                } else {
                                    rng.gen_range(0..101)
                                }
                            })
                            .collect()
                    })
                    .collect();
                let poly = f.charpoly(&a);
                assert_eq!(poly.len(), n + 1);
                for x in [0u64, 1, 5, 77] {
                    let m: Vec<Vec<u64>> = (0..n)
                        .map(|i| {
                            (0..n)
                                .map(|j| f.sub(if i == j { x } else { 0 }, a[i][j]))
                                .collect()
                        })
                        .collect();
                    assert_eq!(f.eval(&poly, x), det(&f, &m));
                }
            }
        }
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let f = PrimeField::new(13);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        let ns = f.nullspace(&a);
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn primitive_roots() {
        for p in [3u64, 7, 13, 163, 1009] {
            let f = PrimeField::new(p);
            let g = f.primitive_root();
            let order = (1..p).find(|&k| f.pow(g, k) == 1).unwrap();
            assert_eq!(order, p - 1);
        }
    }
}
