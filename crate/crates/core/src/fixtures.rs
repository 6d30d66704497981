//! Named matrices used in tests, examples and documentation.

use crate::exact_math::IntMatrix4;

/// `x0²x1 + x1²x2 + x2⁶x3 + x3⁷`: a single chain, weights (2,3,1,1), degree 7.
pub const KELLY_CHAIN: IntMatrix4 =
    IntMatrix4::new([[2, 1, 0, 0], [0, 2, 1, 0], [0, 0, 6, 1], [0, 0, 0, 7]]);

/// The Fermat quartic `x0⁴ + x1⁴ + x2⁴ + x3⁴`.
pub const FERMAT_QUARTIC: IntMatrix4 =
    IntMatrix4::new([[4, 0, 0, 0], [0, 4, 0, 0], [0, 0, 4, 0], [0, 0, 0, 4]]);

/// `x0³x1 + x1³x2 + x2³x3 + x3³x0`: a loop of length 4 of degree 4.
pub const QUARTIC_LOOP: IntMatrix4 =
    IntMatrix4::new([[3, 1, 0, 0], [0, 3, 1, 0], [0, 0, 3, 1], [1, 0, 0, 3]]);

/// `x0²x1 + x1²x2 + x2²x3 + x3²x0`: a loop of length 4 that is not Calabi–Yau.
pub const CUBIC_LOOP: IntMatrix4 =
    IntMatrix4::new([[2, 1, 0, 0], [0, 2, 1, 0], [0, 0, 2, 1], [1, 0, 0, 2]]);

/// `x0³x1 + x1⁴ + x2⁴ + x3⁴`: a chain of length 2 plus two Fermat atoms.
pub const CHAIN_PLUS_FERMAT: IntMatrix4 =
    IntMatrix4::new([[3, 1, 0, 0], [0, 4, 0, 0], [0, 0, 4, 0], [0, 0, 0, 4]]);

/// `x0³x2 + x1³x2 + x2⁴ + x3⁴`: Calabi–Yau but two rows point at `x2`, so it
/// is not a sum of atomic types.
pub const SHARED_TARGET: IntMatrix4 =
    IntMatrix4::new([[3, 0, 1, 0], [0, 3, 1, 0], [0, 0, 4, 0], [0, 0, 0, 4]]);
