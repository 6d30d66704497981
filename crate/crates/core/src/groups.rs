//! Diagonal symmetry groups of `F_A`, written additively inside `(ℤ/d)^4`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::delsarte::DelsarteMatrix;
use crate::error::{Error, Result};
use crate::exact_math::{gcd, mul_mod};

/// Largest subgroup the crate will materialise as an element list.
pub const MAX_GROUP_ORDER: usize = 1 << 22;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    modulus: u64,
    coords: [u64; 4],
}

impl GroupElement {
    /// Reduces arbitrary integer coordinates into `[0, d)`.
    pub fn new(modulus: u64, coords: [i64; 4]) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        GroupElement {
            modulus,
            coords: coords.map(|c| (c as i128).rem_euclid(modulus as i128) as u64),
        }
    }

    pub fn zero(modulus: u64) -> Self {
        GroupElement::new(modulus, [0; 4])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Canonical representatives in `[0, d)`.
    pub fn coords(&self) -> [u64; 4] {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0; 4]
    }

    pub fn coordinate_sum(&self) -> u64 {
        self.coords.iter().sum()
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        debug_assert_eq!(self.modulus, other.modulus);
        let d = self.modulus;
        let mut coords = [0; 4];
        for (i, c) in coords.iter_mut().enumerate() {
            *c = (self.coords[i] + other.coords[i]) % d;
        }
        GroupElement { modulus: d, coords }
    }

    pub fn neg(&self) -> GroupElement {
        let d = self.modulus;
        GroupElement {
            modulus: d,
            coords: self.coords.map(|c| (d - c) % d),
        }
    }

    /// `t·g`, with `t` reduced mod `d`.
    pub fn scale(&self, t: u64) -> GroupElement {
        let d = self.modulus;
        GroupElement {
            modulus: d,
            coords: self.coords.map(|c| mul_mod(c, t % d, d)),
        }
    }

    /// Least `n >= 1` with `n·g = 0`, i.e. `d / gcd(d, a0, a1, a2, a3)`.
    pub fn order(&self) -> u64 {
        let g = self
            .coords
            .iter()
            .fold(self.modulus as u128, |acc, &c| gcd(acc as i128, c as i128));
        self.modulus / g as u64
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.coords, self.modulus)
    }
}

/// A subgroup of `(ℤ/d)^4` stored as its sorted element list.
///
/// Two subgroups are equal exactly when their element lists are.
#[derive(Clone)]
pub struct SymmetrySubgroup {
    modulus: u64,
    elements: Vec<GroupElement>,
    generators: Vec<GroupElement>,
}

impl PartialEq for SymmetrySubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.elements == other.elements
    }
}

impl Eq for SymmetrySubgroup {}

impl core::hash::Hash for SymmetrySubgroup {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.modulus.hash(state);
        self.elements.hash(state);
    }
}

impl fmt::Debug for SymmetrySubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymmetrySubgroup")
            .field("modulus", &self.modulus)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl SymmetrySubgroup {
    pub fn trivial(modulus: u64) -> Self {
        SymmetrySubgroup {
            modulus,
            elements: alloc::vec![GroupElement::zero(modulus)],
            generators: Vec::new(),
        }
    }

    /// The subgroup generated by `gens`.
    ///
    /// Built one generator at a time: adding `g` to a subgroup `H` gives the
    /// union of the cosets `H + k·g` for `k` below the order of `g` modulo `H`.
    pub fn generated(modulus: u64, gens: &[GroupElement]) -> Result<Self> {
        let mut group = SymmetrySubgroup::trivial(modulus);
        for g in gens {
            group = group.extended(g)?;
        }
        Ok(group)
    }

    /// Smallest subgroup containing `self` and `g`.
    pub fn extended(&self, g: &GroupElement) -> Result<Self> {
        if g.modulus != self.modulus {
            return Err(Error::ModulusMismatch {
                expected: self.modulus,
                found: g.modulus,
            });
        }
        if self.contains(g) {
            return Ok(self.clone());
        }
        let mut elements = self.elements.clone();
        let mut shift = *g;
        while !self.contains(&shift) {
            elements.extend(self.elements.iter().map(|h| h.add(&shift)));
            if elements.len() > MAX_GROUP_ORDER {
                return Err(Error::GroupTooLarge {
                    limit: MAX_GROUP_ORDER,
                });
            }
            shift = shift.add(g);
        }
        elements.sort_unstable();
        debug_assert!(elements.windows(2).all(|w| w[0] != w[1]));
        let mut generators = self.generators.clone();
        generators.push(*g);
        Ok(SymmetrySubgroup {
            modulus: self.modulus,
            elements,
            generators,
        })
    }

    /// Wraps an element list already known to be a subgroup, choosing a
    /// generating set greedily.
    pub fn from_elements(modulus: u64, mut elements: Vec<GroupElement>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let mut group = SymmetrySubgroup::trivial(modulus);
        for g in elements.iter() {
            if !group.contains(g) {
                group = group.extended(g)?;
            }
        }
        if group.elements != elements {
            return Err(Error::Internal("element list is not a subgroup"));
        }
        Ok(group)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &SymmetrySubgroup) -> bool {
        self.modulus == other.modulus && self.elements.iter().all(|g| other.contains(g))
    }

    /// Elements with coordinate sum `≡ 0 (mod d)`.
    pub fn sum_zero_part(&self) -> Result<SymmetrySubgroup> {
        let d = self.modulus;
        let elements = self
            .elements
            .iter()
            .filter(|g| g.coordinate_sum() % d == 0)
            .copied()
            .collect();
        SymmetrySubgroup::from_elements(d, elements)
    }
}

/// `Aut(F_A) = {a : A·aᵀ ≡ 0 (mod d)}`, generated by the columns of `B`.
pub fn aut_group(m: &DelsarteMatrix) -> Result<SymmetrySubgroup> {
    let d = m.exponent();
    let b = m.b().transpose();
    let gens: Vec<GroupElement> = b.0.iter().map(|col| GroupElement::new(d, *col)).collect();
    let group = SymmetrySubgroup::generated(d, &gens)?;
    if group.order() as u64 != m.det().unsigned_abs() {
        return Err(Error::Internal("|Aut(F_A)| != |det(A)|"));
    }
    Ok(group)
}

/// `SL(F_A)`: the part of `aut` with coordinate sum zero.
pub fn sl_subgroup(aut: &SymmetrySubgroup) -> Result<SymmetrySubgroup> {
    aut.sum_zero_part()
}

/// `j_A = (d/h)·q`.
pub fn j_element(m: &DelsarteMatrix) -> GroupElement {
    let d = m.exponent();
    let scale = d / m.degree();
    GroupElement::new(d, m.weights().map(|q| (q * scale) as i64))
}

pub fn j_group(m: &DelsarteMatrix) -> Result<SymmetrySubgroup> {
    SymmetrySubgroup::generated(m.exponent(), &[j_element(m)])
}

/// All subgroups `G` with `J ⊆ G ⊆ SL`, sorted by order and then by element list.
///
/// Starting from `J`, every known group is extended by each element of `SL`
/// it does not contain, until no new group appears.
pub fn enumerate_intermediate(
    j: &SymmetrySubgroup,
    sl: &SymmetrySubgroup,
) -> Result<Vec<SymmetrySubgroup>> {
    if !j.is_subgroup_of(sl) {
        return Err(Error::NotInSl);
    }
    let mut seen: BTreeSet<Vec<GroupElement>> = BTreeSet::new();
    let mut found = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(j.elements.clone());
    queue.push_back(j.clone());
    while let Some(h) = queue.pop_front() {
        // g and x + t·g (x ∈ H, t a unit modulo the order of g in SL/H)
        // generate the same extension of H.
        let mut done: BTreeSet<GroupElement> = h.elements.iter().copied().collect();
        for g in sl.elements() {
            if done.contains(g) {
                continue;
            }
            let mut multiples = alloc::vec![*g];
            while !h.contains(multiples.last().expect("nonempty")) {
                let next = multiples.last().expect("nonempty").add(g);
                multiples.push(next);
            }
            let n = multiples.len() as u64;
            for (i, tg) in multiples.iter().enumerate() {
                if gcd((i + 1) as i128, n as i128) == 1 {
                    done.extend(h.elements.iter().map(|x| x.add(tg)));
                }
            }
            let k = h.extended(g)?;
            if seen.insert(k.elements.clone()) {
                queue.push_back(k);
            }
        }
        found.push(h);
    }
    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(found)
}
