//! Ages, the Shioda–Kelly sets, their orbit structure, and Picard numbers.
//!
//! For `a ∈ (ℤ/d)^4` with nonzero coordinates summing to zero, the age
//! `S(a)` is the sum of the canonical representatives divided by `d`; it is 1,
//! 2 or 3. An element belongs to the Kelly set in characteristic 0 unless
//! every unit multiple `t·a` has age 2. In characteristic `p ∤ d`, with `f` the
//! order of `p` mod `d`, it belongs unless `Σ_{j<f} S(t·p^j·a) = 2f` for every
//! unit `t`. The Picard number of `Z_{A,G}` is 22 minus the size of the Kelly
//! set inside `G^T`, and symmetrically for the mirror.
//!
//! Three independent routes compute the same numbers:
//!
//! 1. [`kelly_set_direct`] evaluates the definition literally.
//! 2. [`orbit_decomposition`] groups elements into `(ℤ/d)^×`-orbits and
//!    `⟨p⟩`-suborbits, and [`kelly_set_from_orbits`] keeps the orbits with an
//!    age-1 element (`p = 0`) or with a suborbit whose age-1 and age-3 counts
//!    differ (`p > 0`).
//! 3. [`picard_closed_form`] uses only the degrees `h`, `h_T`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::delsarte::Characteristic;
use crate::duality::MirrorPair;
use crate::error::{Error, Result};
use crate::exact_math::{euler_phi, gcd, minus_one_power_exists, multiplicative_order, pow_mod};
use crate::groups::{GroupElement, SymmetrySubgroup};
use crate::K3_B2;

/// An element of `𝔄_d` together with its age.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AgedElement {
    pub element: GroupElement,
    pub age: u8,
}

/// Age of an element with nonzero coordinates and coordinate sum `≡ 0 (mod d)`.
pub fn age(g: &GroupElement) -> Result<u8> {
    if g.coords().contains(&0) {
        return Err(Error::ZeroCoordinate);
    }
    let sum = g.coordinate_sum();
    let d = g.modulus();
    if !sum.is_multiple_of(d) {
        return Err(Error::NonintegralAge);
    }
    let s = sum / d;
    if !(1..=3).contains(&s) {
        return Err(Error::Internal("age outside {1, 2, 3}"));
    }
    Ok(s as u8)
}

/// The units `t ∈ [1, d)` of `ℤ/d`, in increasing order.
pub fn units(d: u64) -> Vec<u64> {
    if d == 1 {
        return alloc::vec![0];
    }
    (1..d).filter(|&t| gcd(t as i128, d as i128) == 1).collect()
}

fn check_in_md(h: &SymmetrySubgroup) -> Result<()> {
    let d = h.modulus();
    if h.elements().iter().all(|g| g.coordinate_sum() % d == 0) {
        Ok(())
    } else {
        Err(Error::HNotInMd)
    }
}

fn check_char(d: u64, char: Characteristic) -> Result<()> {
    if char.divides(d) {
        Err(Error::CharDividesD { p: char.get(), d })
    } else {
        Ok(())
    }
}

/// `𝔄_d ∩ H` with ages, in element order.
pub fn aged_elements(h: &SymmetrySubgroup) -> Result<Vec<AgedElement>> {
    check_in_md(h)?;
    h.elements()
        .iter()
        .filter(|g| !g.coords().contains(&0))
        .map(|g| {
            Ok(AgedElement {
                element: *g,
                age: age(g)?,
            })
        })
        .collect()
}

/// The age-1 elements of `𝔄_d ∩ H`.
pub fn age_one_census(h: &SymmetrySubgroup) -> Result<Vec<AgedElement>> {
    Ok(aged_elements(h)?
        .into_iter()
        .filter(|a| a.age == 1)
        .collect())
}

/// `𝔗_d(p) ∩ H` evaluated straight from the definition.
pub fn kelly_set_direct(h: &SymmetrySubgroup, char: Characteristic) -> Result<Vec<AgedElement>> {
    let d = h.modulus();
    check_char(d, char)?;
    let ambient = aged_elements(h)?;
    let us = units(d);
    let mut out = Vec::new();
    if char.is_zero() {
        for a in ambient {
            let mut all_two = true;
            for &t in us.iter() {
                if age(&a.element.scale(t))? != 2 {
                    all_two = false;
                    break;
                }
            }
            if !all_two {
                out.push(a);
            }
        }
        return Ok(out);
    }

    let p = char.get();
    let f = multiplicative_order(p as i64, d)?;
    let powers: Vec<u64> = (0..f).map(|j| pow_mod(p, j, d)).collect();
    for a in ambient {
        let mut balanced = true;
        for &t in us.iter() {
            let ta = a.element.scale(t);
            let mut total = 0u64;
            for &pj in powers.iter() {
                total += age(&ta.scale(pj))? as u64;
            }
            if total != 2 * f {
                balanced = false;
                break;
            }
        }
        if !balanced {
            out.push(a);
        }
    }
    Ok(out)
}

/// `𝔄_d ∩ H` split into `U_d`-orbits and, in positive characteristic,
/// each orbit split further into `⟨p⟩`-orbits.
///
/// Orbits and suborbits are sorted internally and listed by their least
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub modulus: u64,
    pub char: Characteristic,
    pub ambient: Vec<AgedElement>,
    pub u_orbits: Vec<Vec<AgedElement>>,
    pub p_suborbits: Option<Vec<Vec<Vec<AgedElement>>>>,
}

pub fn orbit_decomposition(
    h: &SymmetrySubgroup,
    char: Characteristic,
) -> Result<OrbitDecomposition> {
    orbit_decomposition_with(h, char, age)
}

/// [`orbit_decomposition`] with a caller-supplied age function.
pub fn orbit_decomposition_with<F>(
    h: &SymmetrySubgroup,
    char: Characteristic,
    age_of: F,
) -> Result<OrbitDecomposition>
where
    F: Fn(&GroupElement) -> Result<u8>,
{
    let d = h.modulus();
    check_char(d, char)?;
    check_in_md(h)?;
    let ambient: Vec<AgedElement> = h
        .elements()
        .iter()
        .filter(|g| !g.coords().contains(&0))
        .map(|g| {
            Ok(AgedElement {
                element: *g,
                age: age_of(g)?,
            })
        })
        .collect::<Result<_>>()?;

    let tag = |g: GroupElement| -> Result<AgedElement> {
        let i = ambient
            .binary_search_by(|a| a.element.cmp(&g))
            .map_err(|_| Error::Internal("unit multiple left 𝔄_d ∩ H"))?;
        Ok(ambient[i])
    };

    let us = units(d);
    let mut visited: BTreeSet<GroupElement> = BTreeSet::new();
    let mut u_orbits = Vec::new();
    for a in ambient.iter() {
        if visited.contains(&a.element) {
            continue;
        }
        let mut orbit: Vec<GroupElement> = us.iter().map(|&t| a.element.scale(t)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        visited.extend(orbit.iter().copied());
        u_orbits.push(orbit.into_iter().map(tag).collect::<Result<Vec<_>>>()?);
    }

    let p_suborbits = if char.is_zero() {
        None
    } else {
        let p = char.get();
        let f = multiplicative_order(p as i64, d)?;
        let mut all = Vec::with_capacity(u_orbits.len());
        for orbit in u_orbits.iter() {
            let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
            let mut parts = Vec::new();
            for b in orbit.iter() {
                if seen.contains(&b.element) {
                    continue;
                }
                let mut part: Vec<GroupElement> =
                    (0..f).map(|j| b.element.scale(pow_mod(p, j, d))).collect();
                part.sort_unstable();
                part.dedup();
                seen.extend(part.iter().copied());
                parts.push(part.into_iter().map(tag).collect::<Result<Vec<_>>>()?);
            }
            all.push(parts);
        }
        Some(all)
    };

    Ok(OrbitDecomposition {
        modulus: d,
        char,
        ambient,
        u_orbits,
        p_suborbits,
    })
}

/// The Kelly set read off an orbit decomposition, using only its stored ages.
pub fn kelly_set_from_orbits(dec: &OrbitDecomposition) -> Vec<AgedElement> {
    let mut out: Vec<AgedElement> = Vec::new();
    match &dec.p_suborbits {
        None => {
            for orbit in dec.u_orbits.iter() {
                if orbit.iter().any(|a| a.age == 1) {
                    out.extend(orbit.iter().copied());
                }
            }
        }
        Some(suborbits) => {
            for (orbit, parts) in dec.u_orbits.iter().zip(suborbits) {
                let unbalanced = parts.iter().any(|part| {
                    let ones = part.iter().filter(|a| a.age == 1).count();
                    let threes = part.iter().filter(|a| a.age == 3).count();
                    ones != threes
                });
                if unbalanced {
                    out.extend(orbit.iter().copied());
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Compares two computations of the same Kelly set.
pub fn cross_check(direct: &[AgedElement], by_orbits: &[AgedElement]) -> Result<()> {
    if direct == by_orbits {
        Ok(())
    } else {
        Err(Error::MethodMismatch("direct and orbit Kelly sets differ"))
    }
}

/// `𝔗_d(p) ∩ H` via orbits, verified against [`kelly_set_direct`].
pub fn kelly_set_by_orbits(h: &SymmetrySubgroup, char: Characteristic) -> Result<Vec<AgedElement>> {
    let by_orbits = kelly_set_from_orbits(&orbit_decomposition(h, char)?);
    cross_check(&kelly_set_direct(h, char)?, &by_orbits)?;
    Ok(by_orbits)
}

fn rho_from_count(count: usize) -> Result<u64> {
    (K3_B2)
        .checked_sub(count as u64)
        .ok_or(Error::Internal("Picard number below zero"))
}

fn closed_form_rho(degree: u64, char: Characteristic) -> Result<u64> {
    if !char.is_zero() && minus_one_power_exists(char.get() as i64, degree)? {
        return Ok(K3_B2);
    }
    rho_from_count(euler_phi(degree)? as usize)
}

/// `(ρ(Z_{A,G}), ρ(Z_{Aᵀ,G^T}))` from the degrees alone: `22 − φ(h_T)` and
/// `22 − φ(h)`, replaced by 22 when some power of `p` is `−1` modulo the degree.
pub fn picard_closed_form(mp: &MirrorPair) -> Result<(u64, u64)> {
    let char = mp.primal.characteristic();
    check_char(mp.primal.matrix().exponent(), char)?;
    let h = mp.primal.matrix().degree();
    let h_t = mp.mirror.matrix().degree();
    Ok((closed_form_rho(h_t, char)?, closed_form_rho(h, char)?))
}

/// Picard numbers by counting the Kelly sets in `G^T` and `G` directly.
pub fn picard_kelly(mp: &MirrorPair) -> Result<(u64, u64)> {
    let char = mp.primal.characteristic();
    Ok((
        rho_from_count(kelly_set_direct(mp.mirror.group(), char)?.len())?,
        rho_from_count(kelly_set_direct(mp.primal.group(), char)?.len())?,
    ))
}

/// Picard numbers from the orbit characterisation alone.
pub fn picard_orbit(mp: &MirrorPair) -> Result<(u64, u64)> {
    let char = mp.primal.characteristic();
    let primal = kelly_set_from_orbits(&orbit_decomposition(mp.mirror.group(), char)?);
    let mirror = kelly_set_from_orbits(&orbit_decomposition(mp.primal.group(), char)?);
    Ok((rho_from_count(primal.len())?, rho_from_count(mirror.len())?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MethodValues {
    pub closed_form: (u64, u64),
    pub kelly: (u64, u64),
    pub orbit: (u64, u64),
}

/// Picard numbers of a mirror pair, computed by all three methods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicardReport {
    pub char: Characteristic,
    /// `ρ(Z_{A,G})`
    pub rho_primal: u64,
    /// `ρ(Z_{Aᵀ,G^T})`
    pub rho_mirror: u64,
    pub methods: MethodValues,
    /// `𝔗_d(p) ∩ G^T`, which determines `rho_primal`.
    pub kelly_set_dual_group: Vec<AgedElement>,
    /// `𝔗_d(p) ∩ G`, which determines `rho_mirror`.
    pub kelly_set_group: Vec<AgedElement>,
}

impl PicardReport {
    /// Runs every method and fails with [`Error::MethodMismatch`] unless they agree.
    pub fn compute(mp: &MirrorPair) -> Result<Self> {
        let char = mp.primal.characteristic();
        let dual_direct = kelly_set_direct(mp.mirror.group(), char)?;
        let group_direct = kelly_set_direct(mp.primal.group(), char)?;
        let dual_orbits = kelly_set_from_orbits(&orbit_decomposition(mp.mirror.group(), char)?);
        let group_orbits = kelly_set_from_orbits(&orbit_decomposition(mp.primal.group(), char)?);

        let methods = MethodValues {
            closed_form: picard_closed_form(mp)?,
            kelly: (
                rho_from_count(dual_direct.len())?,
                rho_from_count(group_direct.len())?,
            ),
            orbit: (
                rho_from_count(dual_orbits.len())?,
                rho_from_count(group_orbits.len())?,
            ),
        };
        cross_check(&dual_direct, &dual_orbits)?;
        cross_check(&group_direct, &group_orbits)?;
        if methods.kelly != methods.closed_form {
            return Err(Error::MethodMismatch(
                "closed form disagrees with Kelly count",
            ));
        }
        let (rho_primal, rho_mirror) = methods.kelly;
        if rho_primal > K3_B2 || rho_mirror > K3_B2 {
            return Err(Error::Internal("Picard number above 22"));
        }
        Ok(PicardReport {
            char,
            rho_primal,
            rho_mirror,
            methods,
            kelly_set_dual_group: dual_direct,
            kelly_set_group: group_direct,
        })
    }

    /// `(#(𝔗_d(p) ∩ G^T), #(𝔗_d(p) ∩ G))`
    pub fn set_sizes(&self) -> (usize, usize) {
        (self.kelly_set_dual_group.len(), self.kelly_set_group.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub prime: u64,
    pub residue_mod_h_t: u64,
    pub residue_mod_h: u64,
    pub rho_primal: u64,
    pub rho_mirror: u64,
}

/// Closed-form Picard numbers over a list of primes, with the residue classes
/// that force supersingularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueTable {
    pub degree: u64,
    pub degree_t: u64,
    pub rows: Vec<ScanRow>,
    pub skipped: Vec<(u64, Error)>,
    /// Residues `b` mod `h_T`, prime to `h_T`, with `b^ℓ ≡ −1` for some `ℓ`.
    pub supersingular_residues_primal: Vec<u64>,
    /// Residues mod `h` with the same property.
    pub supersingular_residues_mirror: Vec<u64>,
    /// `22 − φ(h_T)`, the value of `rho_primal` away from those residues.
    pub generic_rho_primal: u64,
    pub generic_rho_mirror: u64,
}

fn supersingular_residues(m: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for b in 1..=m {
        if gcd(b as i128, m as i128) == 1 && minus_one_power_exists(b as i64, m)? {
            out.push(b % m);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Evaluates [`picard_closed_form`] at each prime. Primes dividing `d`, or at
/// which either pair stops being adequate, are skipped with the reason.
pub fn prime_scan(mp: &MirrorPair, primes: &[u64]) -> Result<ResidueTable> {
    let h = mp.primal.matrix().degree();
    let h_t = mp.mirror.matrix().degree();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for &p in primes {
        let at_p = Characteristic::new(p).and_then(|c| mp.at_characteristic(c));
        match at_p.and_then(|m| picard_closed_form(&m)) {
            Ok((rho_primal, rho_mirror)) => rows.push(ScanRow {
                prime: p,
                residue_mod_h_t: p % h_t,
                residue_mod_h: p % h,
                rho_primal,
                rho_mirror,
            }),
            Err(e) if e.is_internal() => return Err(e),
            Err(e) => skipped.push((p, e)),
        }
    }
    Ok(ResidueTable {
        degree: h,
        degree_t: h_t,
        rows,
        skipped,
        supersingular_residues_primal: supersingular_residues(h_t)?,
        supersingular_residues_mirror: supersingular_residues(h)?,
        generic_rho_primal: closed_form_rho(h_t, Characteristic::ZERO)?,
        generic_rho_mirror: closed_form_rho(h, Characteristic::ZERO)?,
    })
}
