//! Integer and rational primitives: gcd/lcm, totient, multiplicative order,
//! and 4×4 determinant, adjugate and inverse.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(a: i128, b: i128) -> u128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    gcd(a as i128, b as i128) as u64
}

/// `(gcd, lcm)` of two integers; both are nonnegative and `lcm(0, x) = 0`.
pub fn gcd_lcm(a: i64, b: i64) -> (u64, u64) {
    let g = gcd(a as i128, b as i128);
    if g == 0 {
        return (0, 0);
    }
    let l = (a as i128).unsigned_abs() / g * (b as i128).unsigned_abs();
    (g as u64, l as u64)
}

pub fn lcm_u64(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd_u64(a, b)).checked_mul(b).ok_or(Error::Overflow)
}

/// Prime factors of `n` (without multiplicity), in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f.saturating_mul(f) <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

/// All primes `p <= n`, by sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = alloc::vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Euler's totient, from the prime factorisation of `n`.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1)))
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn residue(p: i64, m: u64) -> u64 {
    (p as i128).rem_euclid(m as i128) as u64
}

fn check_unit(p: i64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroArgument);
    }
    if gcd(p as i128, m as i128) != 1 {
        return Err(Error::NotCoprime { a: p, m });
    }
    Ok(residue(p, m))
}

/// Least `f >= 1` with `p^f ≡ 1 (mod m)`.
///
/// Starts from `φ(m)` and strips prime factors while the power stays 1.
pub fn multiplicative_order(p: i64, m: u64) -> Result<u64> {
    let r = check_unit(p, m)?;
    if m == 1 {
        return Ok(1);
    }
    let mut order = euler_phi(m)?;
    for q in prime_factors(order) {
        while order % q == 0 && pow_mod(r, order / q, m) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// Whether `p^ℓ ≡ −1 (mod m)` for some `ℓ >= 1`.
///
/// Only exponents up to the multiplicative order are scanned, after which the
/// powers repeat. For `m <= 2` this is true because `−1 ≡ 1`.
pub fn minus_one_power_exists(p: i64, m: u64) -> Result<bool> {
    let r = check_unit(p, m)?;
    if m <= 2 {
        return Ok(true);
    }
    let order = multiplicative_order(p, m)?;
    let mut power = 1u64;
    for _ in 0..order {
        power = mul_mod(power, r, m);
        if power == m - 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A 4×4 integer matrix, row-major.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntMatrix4(pub [[i64; 4]; 4]);

impl IntMatrix4 {
    pub const IDENTITY: IntMatrix4 =
        IntMatrix4([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);

    pub const fn new(rows: [[i64; 4]; 4]) -> Self {
        IntMatrix4(rows)
    }

    pub fn diagonal(d: [i64; 4]) -> Self {
        let mut m = IntMatrix4::default();
        for (i, v) in d.into_iter().enumerate() {
            m.0[i][i] = v;
        }
        m
    }

    pub fn rows(&self) -> &[[i64; 4]; 4] {
        &self.0
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix4::default();
        for i in 0..4 {
            for j in 0..4 {
                t.0[j][i] = self.0[i][j];
            }
        }
        t
    }

    pub fn scaled(&self, k: i64) -> Result<Self> {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for v in row.iter_mut() {
                *v = v.checked_mul(k).ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &IntMatrix4) -> Result<IntMatrix4> {
        let mut out = IntMatrix4::default();
        for i in 0..4 {
            for j in 0..4 {
                let s: i128 = (0..4)
                    .map(|k| self.0[i][k] as i128 * rhs.0[k][j] as i128)
                    .sum();
                out.0[i][j] = i64::try_from(s).map_err(|_| Error::Overflow)?;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: [i64; 4]) -> Result<[i64; 4]> {
        let mut out = [0i64; 4];
        for (i, row) in self.0.iter().enumerate() {
            let s: i128 = row.iter().zip(v).map(|(&a, b)| a as i128 * b as i128).sum();
            out[i] = i64::try_from(s).map_err(|_| Error::Overflow)?;
        }
        Ok(out)
    }
}

impl Index<(usize, usize)> for IntMatrix4 {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.0[i][j]
    }
}

impl fmt::Debug for IntMatrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

fn minor3(m: &[[i128; 4]; 4], skip_row: usize, skip_col: usize) -> i128 {
    let mut sub = [[0i128; 3]; 3];
    let rows = (0..4).filter(|&r| r != skip_row);
    for (si, r) in rows.enumerate() {
        let cols = (0..4).filter(|&c| c != skip_col);
        for (sj, c) in cols.enumerate() {
            sub[si][sj] = m[r][c];
        }
    }
    sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
        - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
        + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0])
}

/// Determinant and adjugate, with `A · adj(A) = det(A) · I` checked exactly.
pub fn det_adjugate(a: &IntMatrix4) -> Result<(i64, IntMatrix4)> {
    let wide = a.0.map(|row| row.map(|v| v as i128));
    let mut adj = IntMatrix4::default();
    for i in 0..4 {
        for j in 0..4 {
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            // adj is the transposed cofactor matrix
            let c = sign * minor3(&wide, j, i);
            adj.0[i][j] = i64::try_from(c).map_err(|_| Error::Overflow)?;
        }
    }
    let det: i128 = (0..4).map(|j| wide[0][j] * adj.0[j][0] as i128).sum();
    let det = i64::try_from(det).map_err(|_| Error::Overflow)?;

    let check = a.checked_mul(&adj)?;
    if check != IntMatrix4::IDENTITY.scaled(det)? {
        return Err(Error::Internal("A * adj(A) != det(A) * I"));
    }
    Ok((det, adj))
}

/// An exact rational number, always stored reduced with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Panics on a zero denominator.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den) as i128;
        let sign = if den < 0 { -1 } else { 1 };
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Rational {
            num: n as i128,
            den: 1,
        }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        let num = self
            .num
            .checked_mul(rhs.den)
            .and_then(|l| rhs.num.checked_mul(self.den).and_then(|r| l.checked_add(r)))
            .expect("rational overflow");
        Rational::new(
            num,
            self.den.checked_mul(rhs.den).expect("rational overflow"),
        )
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        let num = self.num.checked_mul(rhs.num).expect("rational overflow");
        let den = self.den.checked_mul(rhs.den).expect("rational overflow");
        Rational::new(num, den)
    }
}

pub type RationalMatrix4 = [[Rational; 4]; 4];

/// Exact inverse `adj(A) / det(A)`.
pub fn inverse_rational(a: &IntMatrix4) -> Result<RationalMatrix4> {
    let (det, adj) = det_adjugate(a)?;
    if det == 0 {
        return Err(Error::SingularMatrix);
    }
    Ok(adj
        .0
        .map(|row| row.map(|v| Rational::new(v as i128, det as i128))))
}

/// Product of a rational matrix with an integer matrix, `R · A`.
pub fn rational_times_int(r: &RationalMatrix4, a: &IntMatrix4) -> RationalMatrix4 {
    let mut out = [[Rational::ZERO; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = (0..4).fold(Rational::ZERO, |acc, k| {
                acc + r[i][k] * Rational::from_int(a.0[k][j])
            });
        }
    }
    out
}
