//! Weighted Delsarte matrices and their numerical data.
//!
//! A matrix `A` is accepted when its entries are nonnegative, every row has a
//! zero, `det(A)` is nonzero and prime to the characteristic, and
//! `A⁻¹(1,1,1,1)ᵀ` is a positive vector. That vector is written `q / h` with
//! `gcd(q) = 1`, giving the weight system `q` and degree `h`. The exponent `d`
//! is the least positive integer with `d·A⁻¹` integral, and `B = d·A⁻¹`.

use crate::error::{Error, Result};
use crate::exact_math::{
    det_adjugate, gcd, inverse_rational, is_prime, lcm_u64, IntMatrix4, Rational,
};

/// Characteristic of the ground field: 0 or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u64) -> Result<Self> {
        if p == 0 || is_prime(p) {
            Ok(Characteristic(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `true` when the characteristic is a prime dividing `n`.
    pub fn divides(self, n: u64) -> bool {
        self.0 != 0 && n.is_multiple_of(self.0)
    }
}

impl core::fmt::Display for Characteristic {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DelsarteMatrix {
    matrix: IntMatrix4,
    det: i64,
    adjugate: IntMatrix4,
    weights: [u64; 4],
    degree: u64,
    exponent: u64,
    b: IntMatrix4,
}

impl DelsarteMatrix {
    /// Validates `raw` and computes its weights, degree, exponent and `B`.
    pub fn new(raw: IntMatrix4, char: Characteristic) -> Result<Self> {
        for (i, row) in raw.0.iter().enumerate() {
            if let Some(j) = row.iter().position(|&v| v < 0) {
                return Err(Error::NegativeEntry { row: i, col: j });
            }
        }
        for (i, row) in raw.0.iter().enumerate() {
            if !row.contains(&0) {
                return Err(Error::RowWithoutZero { row: i });
            }
        }
        let (det, adjugate) = det_adjugate(&raw)?;
        if det == 0 {
            return Err(Error::SingularMatrix);
        }
        let abs_det = det.unsigned_abs();
        if char.divides(abs_det) {
            return Err(Error::CharDividesDet { p: char.get(), det });
        }

        // A⁻¹(1,1,1,1)ᵀ = s / det where s holds the row sums of adj(A).
        let sign = det.signum() as i128;
        let mut sums = [0i128; 4];
        for (i, s) in sums.iter_mut().enumerate() {
            *s = sign * adjugate.0[i].iter().map(|&v| v as i128).sum::<i128>();
            if *s <= 0 {
                return Err(Error::NonpositiveWeight { index: i });
            }
        }
        let g = sums
            .iter()
            .fold(abs_det as i128, |acc, &s| gcd(acc, s) as i128);
        let weights = sums.map(|s| (s / g) as u64);
        let degree = (abs_det as i128 / g) as u64;

        let mut exponent = 1u64;
        for row in adjugate.0.iter() {
            for &v in row {
                let denom = abs_det / gcd(abs_det as i128, v as i128) as u64;
                exponent = lcm_u64(exponent, denom)?;
            }
        }

        let mut b = IntMatrix4::default();
        let scale = exponent as i128;
        for i in 0..4 {
            for j in 0..4 {
                let num = adjugate.0[i][j] as i128 * scale;
                if num % det as i128 != 0 {
                    return Err(Error::Internal("d * A^-1 is not integral"));
                }
                b.0[i][j] = i64::try_from(num / det as i128).map_err(|_| Error::Overflow)?;
            }
        }

        let m = DelsarteMatrix {
            matrix: raw,
            det,
            adjugate,
            weights,
            degree,
            exponent,
            b,
        };
        m.check_invariants()?;
        Ok(m)
    }

    fn check_invariants(&self) -> Result<()> {
        let q = self.weights.map(|v| v as i64);
        let h = self.degree as i64;
        if self.matrix.mul_vec(q)? != [h; 4] {
            return Err(Error::Internal("A q != (h, h, h, h)"));
        }
        if self
            .weights
            .iter()
            .fold(0u128, |acc, &v| gcd(acc as i128, v as i128))
            != 1
        {
            return Err(Error::Internal("weights are not coprime"));
        }
        let d = self.exponent;
        let abs_det = self.det.unsigned_abs();
        let d4 = (d as u128).pow(4);
        if !d.is_multiple_of(self.degree) || !abs_det.is_multiple_of(d) || !d4.is_multiple_of(abs_det as u128) {
            return Err(Error::Internal("h | d | det | d^4 fails"));
        }
        let scaled = IntMatrix4::IDENTITY.scaled(d as i64)?;
        if self.matrix.checked_mul(&self.b)? != scaled
            || self.b.checked_mul(&self.matrix)? != scaled
        {
            return Err(Error::Internal("A B != d I"));
        }
        // No proper divisor of d makes A⁻¹ integral.
        for r in crate::exact_math::prime_factors(d) {
            if self.b.0.iter().flatten().all(|&v| v % r as i64 == 0) {
                return Err(Error::Internal("d is not minimal"));
            }
        }
        Ok(())
    }

    pub fn matrix(&self) -> &IntMatrix4 {
        &self.matrix
    }

    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn adjugate(&self) -> &IntMatrix4 {
        &self.adjugate
    }

    /// The weight system `q`.
    pub fn weights(&self) -> [u64; 4] {
        self.weights
    }

    /// The degree `h` of `F_A`.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// The exponent `d`, modulus of every symmetry group of `F_A`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// `B = d·A⁻¹`.
    pub fn b(&self) -> &IntMatrix4 {
        &self.b
    }

    pub fn inverse(&self) -> [[Rational; 4]; 4] {
        self.adjugate
            .0
            .map(|row| row.map(|v| Rational::new(v as i128, self.det as i128)))
    }

    /// Calabi–Yau condition `h = q0 + q1 + q2 + q3`.
    ///
    /// Also checks the equivalent statement that the entries of `A⁻¹` sum to
    /// one; a disagreement between the two is a bug and panics.
    pub fn is_calabi_yau(&self) -> bool {
        let by_weights = self.weights.iter().sum::<u64>() == self.degree;
        let entry_sum = inverse_rational(&self.matrix)
            .expect("validated matrix is invertible")
            .iter()
            .flatten()
            .fold(Rational::ZERO, |acc, &r| acc + r);
        let by_inverse = entry_sum == Rational::ONE;
        assert_eq!(
            by_weights, by_inverse,
            "Calabi-Yau tests disagree for {:?}",
            self.matrix
        );
        by_weights
    }

    /// The weighted Delsarte matrix of `Aᵀ`.
    pub fn transpose(&self, char: Characteristic) -> Result<DelsarteMatrix> {
        let t = DelsarteMatrix::new(self.matrix.transpose(), char)?;
        if t.exponent != self.exponent {
            return Err(Error::Internal("transpose changed the exponent d"));
        }
        Ok(t)
    }
}
