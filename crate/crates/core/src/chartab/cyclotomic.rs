//! Cyclotomic integers `Σ c_l ζ_e^l` with an exact zero test.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

/// A cyclotomic integer stored in the (non-unique) power basis of `ζ_e`.
///
/// Arithmetic works modulo `x^e - 1`; equality of values is decided by
/// [`is_zero`](Cyclotomic::is_zero) on the difference.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<i64>,
}

static PHI_CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();

/// Coefficients of the `e`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(e: u32) -> Arc<Vec<i64>> {
    assert!(e >= 1);
    let cache = PHI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&e) {
        return p.clone();
    }
    // x^e - 1 divided by every Φ_d for proper divisors d of e.
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in (1..e).filter(|d| e.is_multiple_of(*d)) {
        let phi = cyclotomic_polynomial(d);
        num = exact_divide(&num, &phi);
    }
    let phi = Arc::new(num);
    cache.lock().unwrap().insert(e, phi.clone());
    phi
}

fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let (q, r) = divide_monic(num, den);
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// Quotient and remainder by a monic polynomial.
fn divide_monic(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        rem.resize(dd, 0);
        return (vec![0], rem);
    }
    let mut quo = vec![0i64; rem.len() - dd];
    for top in (dd..rem.len()).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        quo[top - dd] = c;
        for (i, &dc) in den.iter().enumerate() {
            rem[top - dd + i] -= c * dc;
        }
    }
    rem.truncate(dd);
    (quo, rem)
}

pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

impl Cyclotomic {
    pub fn new(conductor: u32, coeffs: Vec<i64>) -> Self {
        assert!(conductor >= 1 && coeffs.len() == conductor as usize);
        Cyclotomic { conductor, coeffs }
    }

    pub fn zero(conductor: u32) -> Self {
        Cyclotomic::new(conductor, vec![0; conductor as usize])
    }

    pub fn integer(conductor: u32, k: i64) -> Self {
        let mut c = Cyclotomic::zero(conductor);
        c.coeffs[0] = k;
        c
    }

    /// `ζ_e^l`
    pub fn root_of_unity(conductor: u32, l: u32) -> Self {
        let mut c = Cyclotomic::zero(conductor);
        c.coeffs[(l % conductor) as usize] = 1;
        c
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Nonzero `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(l, &c)| (l, c))
    }

    /// Remainder modulo `Φ_e`; the canonical coordinates of the value.
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.conductor);
        divide_monic(&self.coeffs, &phi).1
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&c| c == 0)
    }

    pub fn same_value(&self, other: &Cyclotomic) -> bool {
        self.sub(other).is_zero()
    }

    /// The rational integer this value equals, if any.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.reduced();
        r[1..].iter().all(|&c| c == 0).then_some(r[0])
    }

    /// Complex conjugate: `ζ^l -> ζ^{-l}`.
    pub fn conj(&self) -> Self {
        let e = self.conductor as usize;
        let mut out = vec![0; e];
        for (l, c) in self.terms() {
            out[(e - l) % e] += c;
        }
        Cyclotomic::new(self.conductor, out)
    }

    pub fn add(&self, other: &Cyclotomic) -> Self {
        assert_eq!(self.conductor, other.conductor);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic::new(self.conductor, coeffs)
    }

    pub fn sub(&self, other: &Cyclotomic) -> Self {
        assert_eq!(self.conductor, other.conductor);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Cyclotomic::new(self.conductor, coeffs)
    }

    pub fn mul(&self, other: &Cyclotomic) -> Self {
        assert_eq!(self.conductor, other.conductor);
        let e = self.conductor as usize;
        let mut out = vec![0; e];
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out[(a + b) % e] += x * y;
            }
        }
        Cyclotomic::new(self.conductor, out)
    }

    pub fn scale(&self, k: i64) -> Self {
        Cyclotomic::new(self.conductor, self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Floating-point value `(re, im)`; only for sanity checks.
    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        self.terms().fold((0.0, 0.0), |(re, im), (l, c)| {
            let t = std::f64::consts::TAU * l as f64 / e;
            (re + c as f64 * t.cos(), im + c as f64 * t.sin())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn degree_is_euler_phi() {
        for e in 1..200 {
            assert_eq!(
                cyclotomic_polynomial(e).len() as u32 - 1,
                euler_phi(e),
                "e = {e}"
            );
        }
    }

    #[test]
    fn zero_tests() {
        assert!(Cyclotomic::zero(12).is_zero());
        assert!(Cyclotomic::new(3, vec![1, 1, 1]).is_zero());
        assert!(!Cyclotomic::new(4, vec![1, 1, 0, 0]).is_zero());
        // ζ_4 + ζ_4^3 = 0
        assert!(Cyclotomic::new(4, vec![0, 1, 0, 1]).is_zero());
        // Full sums of primitive roots of unity vanish for non-squarefree orders.
        assert!(Cyclotomic::new(9, vec![0, 0, 0, 1, 0, 0, 1, 0, 0])
            .add(&Cyclotomic::integer(9, 1))
            .is_zero());
    }

    #[test]
    fn conj_and_mul() {
        let z = Cyclotomic::root_of_unity(5, 2);
        assert_eq!(z.mul(&z.conj()).as_integer(), Some(1));
        let s = Cyclotomic::new(5, vec![0, 1, 0, 0, 1]); // 2cos(2π/5)
        assert!(s.same_value(&s.conj()));
        let (re, im) = s.to_complex();
        assert!((re - 2.0 * (std::f64::consts::TAU / 5.0).cos()).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn float_oracle_agrees_on_random_values() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let e = rng.gen_range(1..30u32);
            let coeffs: Vec<i64> = (0..e).map(|_| rng.gen_range(-1..=1)).collect();
            let c = Cyclotomic::new(e, coeffs);
            let (re, im) = c.to_complex();
            assert_eq!(c.is_zero(), re.abs() < 1e-6 && im.abs() < 1e-6, "{c:?}");
        }
    }
}
