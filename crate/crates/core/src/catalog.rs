//! Enumeration of invertible potentials in four variables.
//!
//! Every sum of atomic types is, up to relabelling the variables, one of ten
//! shapes. [`invertible_matrices`] walks those shapes with all exponents in
//! `2..=max_exponent`; [`calabi_yau_catalog`] keeps the valid weighted
//! Delsarte matrices that satisfy the Calabi–Yau condition.

use alloc::vec::Vec;

use crate::delsarte::{Characteristic, DelsarteMatrix};
use crate::exact_math::IntMatrix4;

/// Shape of a sum of atomic types, as the pointer `target[v]` of each variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub name: &'static str,
    pub target: [Option<usize>; 4],
}

pub const SHAPES: [Shape; 10] = [
    Shape {
        name: "fermat^4",
        target: [None, None, None, None],
    },
    Shape {
        name: "chain2+fermat^2",
        target: [Some(1), None, None, None],
    },
    Shape {
        name: "chain2+chain2",
        target: [Some(1), None, Some(3), None],
    },
    Shape {
        name: "chain3+fermat",
        target: [Some(1), Some(2), None, None],
    },
    Shape {
        name: "chain4",
        target: [Some(1), Some(2), Some(3), None],
    },
    Shape {
        name: "loop2+fermat^2",
        target: [Some(1), Some(0), None, None],
    },
    Shape {
        name: "loop2+chain2",
        target: [Some(1), Some(0), Some(3), None],
    },
    Shape {
        name: "loop2+loop2",
        target: [Some(1), Some(0), Some(3), Some(2)],
    },
    Shape {
        name: "loop3+fermat",
        target: [Some(1), Some(2), Some(0), None],
    },
    Shape {
        name: "loop4",
        target: [Some(1), Some(2), Some(3), Some(0)],
    },
];

impl Shape {
    pub fn matrix(&self, exponents: [u64; 4]) -> IntMatrix4 {
        let mut m = IntMatrix4::default();
        for v in 0..4 {
            m.0[v][v] = exponents[v] as i64;
            if let Some(t) = self.target[v] {
                m.0[v][t] = 1;
            }
        }
        m
    }
}

/// All matrices of every shape with exponents in `2..=max_exponent`.
pub fn invertible_matrices(max_exponent: u64) -> impl Iterator<Item = (Shape, IntMatrix4)> {
    SHAPES.into_iter().flat_map(move |shape| {
        let range = 2..=max_exponent;
        range.clone().flat_map(move |a| {
            let range = range.clone();
            range.clone().flat_map(move |b| {
                let range = range.clone();
                range.clone().flat_map(move |c| {
                    range
                        .clone()
                        .map(move |e| (shape, shape.matrix([a, b, c, e])))
                })
            })
        })
    })
}

/// Calabi–Yau weighted Delsarte matrices among [`invertible_matrices`].
pub fn calabi_yau_catalog(max_exponent: u64) -> Vec<(Shape, DelsarteMatrix)> {
    invertible_matrices(max_exponent)
        .filter_map(|(shape, a)| {
            let m = DelsarteMatrix::new(a, Characteristic::ZERO).ok()?;
            m.is_calabi_yau().then_some((shape, m))
        })
        .collect()
}
