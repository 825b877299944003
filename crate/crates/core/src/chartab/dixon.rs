//! Dixon–Schneider: common eigenvectors of the class matrices over `GF(p)`,
//! lifted to cyclotomic integers by discrete Fourier inversion on power maps.

use crate::chartab::cyclotomic::Cyclotomic;
use crate::chartab::modp::{is_prime, PrimeField};
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::structure::ClassPartition;

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2⌈√n⌉`.
pub fn dixon_prime(order: u64, exponent: u64) -> Result<u64> {
    let bound = 2 * ceil_sqrt(order);
    let limit = 1u64 << 31;
    let mut p = exponent + 1;
    while p <= bound {
        p += exponent;
    }
    while p < limit {
        if is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(Error::PrimeSearch {
        conductor: exponent as u32,
        bound: limit,
    })
}

fn ceil_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

fn isqrt(n: u64) -> u64 {
    let r = ceil_sqrt(n);
    if r * r > n {
        r - 1
    } else {
        r
    }
}

/// A subspace of `GF(p)^k` with basis rows in reduced echelon form.
struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn from_rows(f: &PrimeField, mut rows: Vec<Vec<u64>>) -> Space {
        let pivots = f.rref(&mut rows);
        Space { rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// `M_j[i][l] = #{x ∈ C_j : x^{-1} g_l ∈ C_i}`, the structure constants of
/// the class sums with `C_j` fixed.
fn class_matrix(g: &GroupTable, classes: &ClassPartition, j: usize) -> Vec<Vec<u32>> {
    let k = classes.len();
    let mut m = vec![vec![0u32; k]; k];
    for l in 0..k {
        let gl = classes.representative(l);
        for &x in classes.class(j) {
            let i = classes.class_of(g.mul(g.inv(x), gl));
            m[i][l] += 1;
        }
    }
    m
}

fn split(f: &PrimeField, space: Space, m: &[Vec<u32>]) -> Result<Vec<Space>> {
    let d = space.dim();
    let p = f.modulus();
    // b[s][r]: coefficient of basis row s in M * row r, read off at pivot s.
    let mut b = vec![vec![0u64; d]; d];
    for (r, row) in space.rows.iter().enumerate() {
        for (s, &ps) in space.pivots.iter().enumerate() {
            let acc = m[ps]
                .iter()
                .zip(row)
                .filter(|(&c, _)| c != 0)
                .fold(0u64, |acc, (&c, &v)| (acc + c as u64 * v) % p);
            b[s][r] = acc;
        }
    }
    let scalar = b[0][0];
    let is_scalar = (0..d).all(|s| (0..d).all(|r| b[s][r] == if s == r { scalar } else { 0 }));
    if is_scalar {
        return Ok(vec![space]);
    }
    let poly = f.charpoly(&b);
    let roots: Vec<u64> = (0..p).filter(|&x| f.eval(&poly, x) == 0).collect();
    let mut pieces = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = b
            .iter()
            .enumerate()
            .map(|(s, row)| {
                row.iter()
                    .enumerate()
                    .map(|(r, &x)| if r == s { f.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let kernel = f.nullspace(&shifted);
        total += kernel.len();
        let vectors = kernel
            .iter()
            .map(|c| {
                let mut v = vec![0u64; space.rows[0].len()];
                for (coef, row) in c.iter().zip(&space.rows) {
                    if *coef == 0 {
                        continue;
                    }
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = f.add(*x, f.mul(*coef, y));
                    }
                }
                v
            })
            .collect();
        pieces.push(Space::from_rows(f, vectors));
    }
    if total != d {
        return Err(Error::Splitting(format!(
            "eigenspaces of dimension {total} inside a space of dimension {d}"
        )));
    }
    Ok(pieces)
}

/// Computes the exact irreducible character table.
pub fn dixon_character_table(g: &GroupTable, classes: &ClassPartition) -> Result<CharacterTable> {
    let n = g.order() as u64;
    let k = classes.len();
    let e = g.exponent();
    let p = dixon_prime(n, e)?;
    let f = PrimeField::new(p);

    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut v = vec![0; k];
            v[i] = 1;
            v
        })
        .collect();
    let mut spaces = vec![Space::from_rows(&f, identity)];
    let mut matrices_used = 0;
    for j in 1..k {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let m = class_matrix(g, classes, j);
        matrices_used += 1;
        let mut next = Vec::with_capacity(spaces.len());
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
            } else {
                next.extend(split(&f, s, &m)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::Splitting(format!(
            "{} common eigenspaces for {k} classes",
            spaces.len()
        )));
    }

    let sizes: Vec<u64> = classes.sizes().iter().map(|&s| s as u64).collect();
    let inverse: Vec<usize> = (0..k).map(|j| classes.inverse_class(g, j)).collect();
    let orders: Vec<u64> = (0..k)
        .map(|j| g.element_order(classes.representative(j)))
        .collect();
    // power_classes[j][t] = class of g_j^t for t < ord(g_j)
    let power_classes: Vec<Vec<usize>> = (0..k)
        .map(|j| {
            let x = classes.representative(j);
            let mut y = 0;
            (0..orders[j])
                .map(|_| {
                    let c = classes.class_of(y);
                    y = g.mul(y, x);
                    c
                })
                .collect()
        })
        .collect();

    let zeta = f.pow(f.primitive_root(), (p - 1) / e);
    let root_bound = isqrt(n);
    let mut rows = Vec::with_capacity(k);
    let mut degrees = Vec::with_capacity(k);
    for s in spaces {
        let w = &s.rows[0];
        if w[0] == 0 {
            return Err(Error::Splitting(
                "eigenvector vanishes at the identity class".into(),
            ));
        }
        let scale = f.inv(w[0]);
        let omega: Vec<u64> = w.iter().map(|&x| f.mul(x, scale)).collect();
        // χ(1)^2 = |G| / Σ_j ω_j ω_{j*} / |C_j|
        let norm = (0..k).fold(0, |acc, j| {
            f.add(
                acc,
                f.mul(
                    f.mul(omega[j], omega[inverse[j]]),
                    f.inv(f.reduce(sizes[j])),
                ),
            )
        });
        if norm == 0 {
            return Err(Error::Splitting("degenerate central character".into()));
        }
        let target = f.mul(f.reduce(n), f.inv(norm));
        let degree = (1..=root_bound)
            .find(|&d| f.mul(d, d) == target)
            .ok_or_else(|| Error::Splitting("no integral degree matches".into()))?;
        let chi: Vec<u64> = (0..k)
            .map(|j| f.mul(f.mul(omega[j], degree), f.inv(f.reduce(sizes[j]))))
            .collect();

        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let o = orders[j];
            let step = e / o;
            let z_o = f.pow(zeta, step);
            let inv_o = f.inv(o);
            let mut coeffs = vec![0i64; e as usize];
            for l in 0..o {
                // m_l = (1/o) Σ_t χ(g^t) ζ_o^{-l t}
                let z_neg = f.pow(z_o, (o - l) % o);
                let mut acc = 0;
                let mut zt = 1;
                for t in 0..o as usize {
                    acc = f.add(acc, f.mul(chi[power_classes[j][t]], zt));
                    zt = f.mul(zt, z_neg);
                }
                let mult = f.mul(acc, inv_o);
                if mult > degree {
                    return Err(Error::Splitting(format!(
                        "eigenvalue multiplicity {mult} exceeds degree {degree}"
                    )));
                }
                coeffs[(l * step) as usize] = mult as i64;
            }
            row.push(Cyclotomic::new(e as u32, coeffs));
        }
        rows.push(row);
        degrees.push(degree);
    }

    if degrees.iter().map(|d| d * d).sum::<u64>() != n {
        return Err(Error::Splitting(
            "squared degrees do not sum to the group order".into(),
        ));
    }

    let mut order: Vec<usize> = (0..k).collect();
    let keys: Vec<Vec<Vec<i64>>> = rows
        .iter()
        .map(|r| r.iter().map(Cyclotomic::reduced).collect())
        .collect();
    order.sort_by(|&a, &b| {
        degrees[a]
            .cmp(&degrees[b])
            .then_with(|| keys[a].cmp(&keys[b]))
    });
    let rows = order.iter().map(|&i| rows[i].clone()).collect();
    let degrees = order.iter().map(|&i| degrees[i]).collect();

    Ok(CharacterTable::new(
        classes.clone(),
        e as u32,
        p,
        matrices_used,
        rows,
        degrees,
        inverse,
    ))
}
