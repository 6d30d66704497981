//! Quasi-smoothness via atomic types, well-formedness, and the full
//! adequacy verdict for a BHK pair.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::delsarte::{Characteristic, DelsarteMatrix};
use crate::error::{Error, PotentialDefect, Result};
use crate::exact_math::gcd;

/// One summand of an invertible potential.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `y^e`
    Fermat { variable: usize, exponent: u64 },
    /// `y0^e0 y1 + y1^e1 y2 + … + yk^ek`, listed from head to terminal.
    Chain {
        variables: Vec<usize>,
        exponents: Vec<u64>,
    },
    /// `y0^e0 y1 + … + yk^ek y0`, rotated to start at its least variable.
    Loop {
        variables: Vec<usize>,
        exponents: Vec<u64>,
    },
}

impl Atom {
    pub fn variables(&self) -> &[usize] {
        match self {
            Atom::Fermat { variable, .. } => core::slice::from_ref(variable),
            Atom::Chain { variables, .. } | Atom::Loop { variables, .. } => variables,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Atom::Fermat { .. } => "fermat",
            Atom::Chain { .. } => "chain",
            Atom::Loop { .. } => "loop",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AtomicDecomposition {
    pub atoms: Vec<Atom>,
}

/// How a single row can be read as a monomial owning `variable`.
#[derive(Clone, Copy)]
struct RowShape {
    exponent: u64,
    target: Option<usize>,
}

fn row_shape(row: &[i64; 4], owner: usize) -> Option<RowShape> {
    let e = row[owner];
    if e < 1 {
        return None;
    }
    let others: Vec<usize> = (0..4).filter(|&j| j != owner && row[j] != 0).collect();
    match others.as_slice() {
        [] => Some(RowShape {
            exponent: e as u64,
            target: None,
        }),
        [j] if row[*j] == 1 && e >= 2 => Some(RowShape {
            exponent: e as u64,
            target: Some(*j),
        }),
        _ => None,
    }
}

const PERMUTATIONS: [[usize; 4]; 24] = {
    let mut out = [[0usize; 4]; 24];
    let mut n = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                if a != b && a != c && b != c && a + b + c >= 3 && a + b + c <= 6 {
                    let dd = 6 - a - b - c;
                    if dd != a && dd != b && dd != c {
                        out[n] = [a, b, c, dd];
                        n += 1;
                    }
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

/// Splits `F_A` into Fermat, chain and loop atoms.
///
/// Every assignment of rows to variables is tried; a row owning `y_i` must be
/// `y_i^e` or `y_i^e y_j` with `e >= 2`. Failure means `X_A` is not quasi-smooth.
pub fn atomic_decomposition(m: &DelsarteMatrix) -> Result<AtomicDecomposition> {
    let rows = &m.matrix().0;
    for (r, row) in rows.iter().enumerate() {
        let nonzero = row.iter().filter(|&&v| v != 0).count();
        if nonzero > 2 {
            return Err(Error::NotInvertiblePotential(
                PotentialDefect::TooManyMonomialFactors { row: r },
            ));
        }
        if nonzero == 2 && !row.contains(&1)
            || row.iter().filter(|&&v| v == 1).count() == 2
        {
            return Err(Error::NotInvertiblePotential(
                PotentialDefect::NoPointerSlot { row: r },
            ));
        }
    }

    let mut last_defect = PotentialDefect::NoMatching;
    'perm: for owner in PERMUTATIONS.iter() {
        // next[v] = (exponent on v, variable v points to)
        let mut next: [Option<RowShape>; 4] = [None; 4];
        for (r, &v) in owner.iter().enumerate() {
            match row_shape(&rows[r], v) {
                Some(shape) => next[v] = Some(shape),
                None => continue 'perm,
            }
        }
        let next = next.map(|s| s.expect("every variable owned"));
        let mut indegree = [0usize; 4];
        for s in next.iter() {
            if let Some(t) = s.target {
                indegree[t] += 1;
                if indegree[t] > 1 {
                    last_defect = PotentialDefect::SharedTarget { variable: t };
                    continue 'perm;
                }
            }
        }
        return Ok(AtomicDecomposition {
            atoms: build_atoms(&next, &indegree),
        });
    }
    Err(Error::NotInvertiblePotential(last_defect))
}

fn build_atoms(next: &[RowShape; 4], indegree: &[usize; 4]) -> Vec<Atom> {
    let mut seen = [false; 4];
    let mut atoms = Vec::new();
    // Paths start at variables nobody points to.
    for start in 0..4 {
        if indegree[start] != 0 {
            continue;
        }
        let mut variables = Vec::new();
        let mut exponents = Vec::new();
        let mut v = start;
        loop {
            seen[v] = true;
            variables.push(v);
            exponents.push(next[v].exponent);
            match next[v].target {
                Some(t) => v = t,
                None => break,
            }
        }
        if variables.len() == 1 {
            atoms.push(Atom::Fermat {
                variable: start,
                exponent: exponents[0],
            });
        } else {
            atoms.push(Atom::Chain {
                variables,
                exponents,
            });
        }
    }
    // Whatever remains lies on cycles.
    for start in 0..4 {
        if seen[start] {
            continue;
        }
        let mut variables = Vec::new();
        let mut exponents = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            variables.push(v);
            exponents.push(next[v].exponent);
            v = next[v].target.expect("cycle members point somewhere");
        }
        atoms.push(Atom::Loop {
            variables,
            exponents,
        });
    }
    atoms
}

/// Triple-gcd condition on the weights: `gcd(q_i, q_j, q_l) = 1` for all triples.
pub fn weight_triples_coprime(weights: [u64; 4]) -> bool {
    (0..4).all(|skip| {
        (0..4)
            .filter(|&i| i != skip)
            .fold(0u128, |acc, i| gcd(acc as i128, weights[i] as i128))
            == 1
    })
}

/// Pairs `i < j` whose weights share a factor but no monomial is supported
/// on `{i, j}`: `X_A` would then contain the singular line `x_k = 0, k ∉ {i, j}`.
fn uncovered_singular_lines(m: &DelsarteMatrix) -> Vec<(usize, usize)> {
    let q = m.weights();
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            if gcd(q[i] as i128, q[j] as i128) <= 1 {
                continue;
            }
            let covered = m
                .matrix()
                .0
                .iter()
                .any(|row| (0..4).all(|k| k == i || k == j || row[k] == 0));
            if !covered {
                out.push((i, j));
            }
        }
    }
    out
}

/// Well-formedness: coprime weight triples, and `X_A` contains none of the
/// singular coordinate lines of the weighted projective space.
pub fn well_formed(m: &DelsarteMatrix) -> bool {
    weight_triples_coprime(m.weights()) && uncovered_singular_lines(m).is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdequacyReport {
    pub quasi_smooth: bool,
    pub well_formed: bool,
    pub weight_triple_gcd_ok: bool,
    pub char_ok: bool,
    pub verdict: bool,
    pub diagnostics: Vec<String>,
}

pub const WELL_FORMED_CRITERION: &str = "well-formedness tested combinatorially: for each pair \
     of weights with a common factor, some monomial must be supported on those two variables";

/// Adequacy of `(A, G)` in characteristic `p`. Does not depend on `G` beyond
/// the standing requirement `J ⊆ G ⊆ SL`, which callers check.
pub fn adequacy(m: &DelsarteMatrix, char: Characteristic) -> AdequacyReport {
    let mut diagnostics = Vec::new();

    let quasi_smooth = match atomic_decomposition(m) {
        Ok(_) => true,
        Err(e) => {
            diagnostics.push(format!("not quasi-smooth: {e}"));
            false
        }
    };

    let weight_triple_gcd_ok = weight_triples_coprime(m.weights());
    if !weight_triple_gcd_ok {
        diagnostics.push(format!(
            "weights {:?} have a triple with common factor",
            m.weights()
        ));
    }
    let lines = uncovered_singular_lines(m);
    for (i, j) in lines.iter() {
        diagnostics.push(format!(
            "not well-formed: gcd(q{i}, q{j}) > 1 and no monomial is supported on {{x{i}, x{j}}}"
        ));
    }
    let well_formed = weight_triple_gcd_ok && lines.is_empty();
    diagnostics.push(String::from(WELL_FORMED_CRITERION));

    let p = char.get();
    let mut char_ok = true;
    if p != 0 {
        if let Some(i) = m.weights().iter().position(|&q| q % p == 0) {
            diagnostics.push(format!("characteristic {p} divides weight q{i}"));
            char_ok = false;
        }
        if m.exponent().is_multiple_of(p) {
            diagnostics.push(format!("characteristic {p} divides d = {}", m.exponent()));
            char_ok = false;
        }
    }

    AdequacyReport {
        quasi_smooth,
        well_formed,
        weight_triple_gcd_ok,
        char_ok,
        verdict: quasi_smooth && well_formed && weight_triple_gcd_ok && char_ok,
        diagnostics,
    }
}
