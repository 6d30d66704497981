//! BHK pairs, the mod-`d²` pairing and the dual group `G^T`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::delsarte::{Characteristic, DelsarteMatrix};
use crate::error::{Error, Result};
use crate::groups::{aut_group, j_element, sl_subgroup, GroupElement, SymmetrySubgroup};
use crate::smoothness::{adequacy, AdequacyReport};

/// How the user names the group `G` of a pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupChoice {
    J,
    Sl,
    /// Integer generators, reduced mod `d` once `d` is known.
    Generators(Vec<[i64; 4]>),
}

/// A Calabi–Yau weighted Delsarte matrix with a group `J ⊆ G ⊆ SL`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BhkPair {
    matrix: DelsarteMatrix,
    group: SymmetrySubgroup,
    char: Characteristic,
    adequacy: AdequacyReport,
    aut: SymmetrySubgroup,
    sl: SymmetrySubgroup,
    j: SymmetrySubgroup,
}

impl BhkPair {
    pub fn new(
        matrix: DelsarteMatrix,
        group: SymmetrySubgroup,
        char: Characteristic,
    ) -> Result<Self> {
        let d = matrix.exponent();
        if !matrix.is_calabi_yau() {
            return Err(Error::NotCalabiYau);
        }
        if group.modulus() != d {
            return Err(Error::ModulusMismatch {
                expected: d,
                found: group.modulus(),
            });
        }
        let aut = aut_group(&matrix)?;
        let sl = sl_subgroup(&aut)?;
        let j = SymmetrySubgroup::generated(d, &[j_element(&matrix)])?;
        if !j.is_subgroup_of(&sl) {
            return Err(Error::Internal(
                "J is not contained in SL for a Calabi-Yau matrix",
            ));
        }
        if !j.is_subgroup_of(&group) {
            return Err(Error::MissingJ);
        }
        if !group.is_subgroup_of(&sl) {
            return Err(Error::NotInSl);
        }
        let adequacy = adequacy(&matrix, char);
        Ok(BhkPair {
            matrix,
            group,
            char,
            adequacy,
            aut,
            sl,
            j,
        })
    }

    pub fn with_choice(
        matrix: DelsarteMatrix,
        choice: GroupChoice,
        char: Characteristic,
    ) -> Result<Self> {
        let d = matrix.exponent();
        let group = match choice {
            GroupChoice::J => SymmetrySubgroup::generated(d, &[j_element(&matrix)])?,
            GroupChoice::Sl => sl_subgroup(&aut_group(&matrix)?)?,
            GroupChoice::Generators(gens) => {
                let gens: Vec<_> = gens.into_iter().map(|g| GroupElement::new(d, g)).collect();
                SymmetrySubgroup::generated(d, &gens)?
            }
        };
        BhkPair::new(matrix, group, char)
    }

    pub fn matrix(&self) -> &DelsarteMatrix {
        &self.matrix
    }

    pub fn group(&self) -> &SymmetrySubgroup {
        &self.group
    }

    pub fn characteristic(&self) -> Characteristic {
        self.char
    }

    pub fn adequacy(&self) -> &AdequacyReport {
        &self.adequacy
    }

    pub fn aut(&self) -> &SymmetrySubgroup {
        &self.aut
    }

    pub fn sl(&self) -> &SymmetrySubgroup {
        &self.sl
    }

    pub fn j(&self) -> &SymmetrySubgroup {
        &self.j
    }

    /// The same pair over a field of another characteristic.
    pub fn at_characteristic(&self, char: Characteristic) -> Result<BhkPair> {
        let det = self.matrix.det();
        if char.divides(det.unsigned_abs()) {
            return Err(Error::CharDividesDet { p: char.get(), det });
        }
        let mut out = self.clone();
        out.char = char;
        out.adequacy = adequacy(&self.matrix, char);
        Ok(out)
    }

    /// Builds `(Aᵀ, G^T)` and checks that it is adequate too.
    pub fn mirror_pair(&self) -> Result<MirrorPair> {
        if !self.adequacy.verdict {
            return Err(Error::PairNotAdequate(Box::new(self.adequacy.clone())));
        }
        let transposed = self.matrix.transpose(self.char)?;
        let aut_t = aut_group(&transposed)?;
        let dual = dual_group_in(&self.matrix, &aut_t, &self.group)?;
        let mirror = BhkPair::new(transposed, dual, self.char)?;
        if !mirror.adequacy.verdict {
            return Err(Error::MirrorNotAdequate(Box::new(mirror.adequacy.clone())));
        }
        Ok(MirrorPair {
            primal: self.clone(),
            mirror,
        })
    }
}

/// An adequate pair together with its adequate BHK mirror `(Aᵀ, G^T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorPair {
    pub primal: BhkPair,
    pub mirror: BhkPair,
}

impl MirrorPair {
    /// Re-evaluates adequacy of both pairs in characteristic `char`.
    pub fn at_characteristic(&self, char: Characteristic) -> Result<MirrorPair> {
        let primal = self.primal.at_characteristic(char)?;
        if !primal.adequacy.verdict {
            return Err(Error::PairNotAdequate(Box::new(primal.adequacy)));
        }
        let mirror = self.mirror.at_characteristic(char)?;
        if !mirror.adequacy.verdict {
            return Err(Error::MirrorNotAdequate(Box::new(mirror.adequacy)));
        }
        Ok(MirrorPair { primal, mirror })
    }
}

/// `ã·A·b̃ᵀ mod d²` for arbitrary integer lifts.
pub fn pairing_of_lifts(m: &DelsarteMatrix, a: [i128; 4], b: [i128; 4]) -> Result<u128> {
    let d = m.exponent() as i128;
    let d2 = d.checked_mul(d).ok_or(Error::Overflow)?;
    let mut acc: i128 = 0;
    for i in 0..4 {
        for j in 0..4 {
            let term = a[i]
                .checked_mul(m.matrix().0[i][j] as i128)
                .and_then(|t| t.checked_mul(b[j]))
                .ok_or(Error::Overflow)?;
            acc = (acc + term.rem_euclid(d2)).rem_euclid(d2);
        }
    }
    Ok(acc as u128)
}

fn in_left_kernel(m: &DelsarteMatrix, a: &GroupElement) -> bool {
    let d = m.exponent() as i128;
    let rows = &m.matrix().0;
    (0..4).all(|j| {
        (0..4)
            .map(|i| a.coords()[i] as i128 * rows[i][j] as i128)
            .sum::<i128>()
            % d
            == 0
    })
}

fn in_right_kernel(m: &DelsarteMatrix, b: &GroupElement) -> bool {
    let d = m.exponent() as i128;
    m.matrix().0.iter().all(|row| {
        (0..4)
            .map(|j| row[j] as i128 * b.coords()[j] as i128)
            .sum::<i128>()
            % d
            == 0
    })
}

/// `⟨a, b⟩` for `a ∈ Aut(F_{Aᵀ})` and `b ∈ Aut(F_A)`, as a residue mod `d²`.
///
/// Uses the canonical lifts in `[0, d)`. Debug builds re-evaluate with every
/// coordinate of both lifts shifted by `d` and check that nothing changes.
pub fn pairing(m: &DelsarteMatrix, a: &GroupElement, b: &GroupElement) -> Result<u128> {
    let d = m.exponent();
    if a.modulus() != d || b.modulus() != d {
        return Err(Error::ModulusMismatch {
            expected: d,
            found: if a.modulus() != d {
                a.modulus()
            } else {
                b.modulus()
            },
        });
    }
    if !in_left_kernel(m, a) || !in_right_kernel(m, b) {
        return Err(Error::NotInGroup);
    }
    let la = a.coords().map(|c| c as i128);
    let lb = b.coords().map(|c| c as i128);
    let value = pairing_of_lifts(m, la, lb)?;
    #[cfg(debug_assertions)]
    {
        let shift = |v: [i128; 4]| v.map(|c| c + d as i128);
        let shifted = pairing_of_lifts(m, shift(la), shift(lb))?;
        if shifted != value {
            return Err(Error::Internal("pairing depends on the choice of lifts"));
        }
    }
    Ok(value)
}

fn dual_group_in(
    m: &DelsarteMatrix,
    aut_t: &SymmetrySubgroup,
    g: &SymmetrySubgroup,
) -> Result<SymmetrySubgroup> {
    let mut kept = Vec::new();
    for a in aut_t.elements() {
        let mut annihilates = true;
        for b in g.generators() {
            if pairing(m, a, b)? != 0 {
                annihilates = false;
                break;
            }
        }
        if annihilates {
            kept.push(*a);
        }
    }
    SymmetrySubgroup::from_elements(m.exponent(), kept)
}

/// `G^T = {a ∈ Aut(F_{Aᵀ}) : ⟨a, b⟩ = 0 for all b ∈ G}`.
///
/// Only the generators of `G` are tested; the pairing is bilinear.
pub fn dual_group(pair: &BhkPair) -> Result<SymmetrySubgroup> {
    let transposed = pair.matrix.transpose(Characteristic::ZERO)?;
    let aut_t = aut_group(&transposed)?;
    dual_group_in(&pair.matrix, &aut_t, &pair.group)
}

/// `dual_group` for an arbitrary subgroup `G ⊆ Aut(F_A)`, not necessarily
/// between `J` and `SL`.
pub fn annihilator(m: &DelsarteMatrix, g: &SymmetrySubgroup) -> Result<SymmetrySubgroup> {
    let transposed = m.transpose(Characteristic::ZERO)?;
    let aut_t = aut_group(&transposed)?;
    dual_group_in(m, &aut_t, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::groups::j_group;

    fn pair(a: crate::IntMatrix4, choice: GroupChoice, p: u64) -> BhkPair {
        let c = Characteristic::new(p).unwrap();
        BhkPair::with_choice(DelsarteMatrix::new(a, c).unwrap(), choice, c).unwrap()
    }

    #[test]
    fn kelly_duals() {
        let pj = pair(KELLY_CHAIN, GroupChoice::J, 0);
        let dual_j = dual_group(&pj).unwrap();
        assert_eq!(dual_j.order(), 24);
        let ps = pair(KELLY_CHAIN, GroupChoice::Sl, 0);
        let dual_sl = dual_group(&ps).unwrap();
        assert_eq!(dual_sl.order(), 8);

        let t = DelsarteMatrix::new(KELLY_CHAIN.transpose(), Characteristic::ZERO).unwrap();
        assert_eq!(dual_sl, j_group(&t).unwrap());
        assert_eq!(dual_j, sl_subgroup(&aut_group(&t).unwrap()).unwrap());

        let trivial = annihilator(pj.matrix(), pj.aut()).unwrap();
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn pairing_examples() {
        let pj = pair(KELLY_CHAIN, GroupChoice::J, 0);
        let m = pj.matrix();
        let t = m.transpose(Characteristic::ZERO).unwrap();
        let j_a = j_element(m);
        let j_t = j_element(&t);
        assert_eq!(pairing(m, &GroupElement::zero(168), &j_a), Ok(0));
        assert_eq!(pairing(m, &j_t, &j_a), Ok(0));
        // j_A itself is not in Aut(F_{Aᵀ})
        assert_eq!(pairing(m, &j_a, &j_a), Err(Error::NotInGroup));
    }

    #[test]
    fn mirror_of_kelly() {
        let mp = pair(KELLY_CHAIN, GroupChoice::J, 0).mirror_pair().unwrap();
        assert_eq!(mp.mirror.group().order(), 24);
        assert_eq!(mp.mirror.matrix().matrix(), &KELLY_CHAIN.transpose());
        assert_eq!(mp.mirror.group(), mp.mirror.sl());

        let mp5 = pair(KELLY_CHAIN, GroupChoice::J, 5).mirror_pair().unwrap();
        assert!(mp5.mirror.adequacy().verdict);
    }

    #[test]
    fn mirror_of_fermat() {
        let mp = pair(FERMAT_QUARTIC, GroupChoice::J, 0)
            .mirror_pair()
            .unwrap();
        assert_eq!(mp.mirror.matrix().matrix(), &FERMAT_QUARTIC);
        assert_eq!(mp.mirror.group().order(), 64);
    }

    #[test]
    fn group_must_sit_between_j_and_sl() {
        let m = DelsarteMatrix::new(KELLY_CHAIN, Characteristic::ZERO).unwrap();
        let trivial = SymmetrySubgroup::trivial(168);
        assert_eq!(
            BhkPair::new(m.clone(), trivial, Characteristic::ZERO),
            Err(Error::MissingJ)
        );
        let aut = aut_group(&m).unwrap();
        assert_eq!(
            BhkPair::new(m.clone(), aut, Characteristic::ZERO),
            Err(Error::NotInSl)
        );
        let by_gens = BhkPair::with_choice(
            m.clone(),
            GroupChoice::Generators(alloc::vec![[48, 72, 24, 24]]),
            Characteristic::ZERO,
        )
        .unwrap();
        assert_eq!(by_gens.group(), by_gens.j());
    }

    #[test]
    fn inadequate_pair_has_no_mirror() {
        let p = pair(SHARED_TARGET, GroupChoice::J, 0);
        assert!(!p.adequacy().quasi_smooth);
        assert!(matches!(p.mirror_pair(), Err(Error::PairNotAdequate(_))));
    }
}
