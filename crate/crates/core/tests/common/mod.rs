#![allow(dead_code)]

use bhk_core::catalog::calabi_yau_catalog;
use bhk_core::groups::{enumerate_intermediate, SymmetrySubgroup};
use bhk_core::{BhkPair, Characteristic, DelsarteMatrix, GroupChoice, MirrorPair};

/// Catalog entries with `|det| <= max_det`, each as a characteristic-0 pair with `G = J`.
pub fn small_pairs(max_exponent: u64, max_det: u64) -> Vec<BhkPair> {
    calabi_yau_catalog(max_exponent)
        .into_iter()
        .filter(|(_, m)| m.det().unsigned_abs() <= max_det)
        .map(|(_, m)| BhkPair::with_choice(m, GroupChoice::J, Characteristic::ZERO).unwrap())
        .collect()
}

/// Every intermediate group of `pair`, as a mirror pair when adequate.
pub fn all_mirror_pairs(pair: &BhkPair) -> Vec<MirrorPair> {
    enumerate_intermediate(pair.j(), pair.sl())
        .unwrap()
        .into_iter()
        .filter_map(|g| {
            BhkPair::new(pair.matrix().clone(), g, pair.characteristic())
                .ok()?
                .mirror_pair()
                .ok()
        })
        .collect()
}

pub fn mirror(a: bhk_core::IntMatrix4, choice: GroupChoice, p: u64) -> MirrorPair {
    let c = Characteristic::new(p).unwrap();
    BhkPair::with_choice(DelsarteMatrix::new(a, c).unwrap(), choice, c)
        .unwrap()
        .mirror_pair()
        .unwrap()
}

/// Every subgroup between `j` and `sl`, by closing `j` with every subset of a
/// transversal of `sl / j`. Exponential in the index.
pub fn intermediate_by_subsets(
    j: &SymmetrySubgroup,
    sl: &SymmetrySubgroup,
) -> Vec<SymmetrySubgroup> {
    let mut reps = Vec::new();
    let mut covered: std::collections::BTreeSet<_> = j.elements().iter().copied().collect();
    for g in sl.elements() {
        if covered.insert(*g) {
            for x in j.elements() {
                covered.insert(x.add(g));
            }
            reps.push(*g);
        }
    }
    assert!(reps.len() <= 20, "index too large for subset enumeration");
    let mut out: Vec<SymmetrySubgroup> = Vec::new();
    for mask in 0u32..(1 << reps.len()) {
        let mut gens: Vec<_> = j.generators().to_vec();
        gens.extend(
            (0..reps.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| reps[i]),
        );
        let g = SymmetrySubgroup::generated(j.modulus(), &gens).unwrap();
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    out
}
