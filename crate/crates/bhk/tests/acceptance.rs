//! Acceptance checks. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use bhk::ReportDocument;
use bhk_core::catalog::{calabi_yau_catalog, SHAPES};
use bhk_core::duality::{annihilator, pairing_of_lifts};
use bhk_core::exact_math::{euler_phi, gcd, primes_up_to};
use bhk_core::fixtures::{CHAIN_PLUS_FERMAT, FERMAT_QUARTIC, KELLY_CHAIN, QUARTIC_LOOP};
use bhk_core::groups::{aut_group, enumerate_intermediate, j_element, j_group, sl_subgroup};
use bhk_core::picard::{
    age, age_one_census, kelly_set_direct, picard_closed_form, picard_kelly, picard_orbit,
};
use bhk_core::{
    BhkPair, Characteristic, DelsarteMatrix, GroupChoice, GroupElement, IntMatrix4, MirrorPair,
    PicardReport, SymmetrySubgroup,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRng, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn bhk(args: &[&str]) -> Result<ReportDocument, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bhk"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("bhk {args:?} exited with {}", out.status));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn mirror(a: IntMatrix4, choice: GroupChoice) -> Result<MirrorPair, String> {
    let m = DelsarteMatrix::new(a, Characteristic::ZERO).map_err(|e| e.to_string())?;
    BhkPair::with_choice(m, choice, Characteristic::ZERO)
        .and_then(|p| p.mirror_pair())
        .map_err(|e| e.to_string())
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let file = data("kelly_j.json");
    let analyze = bhk(&["analyze", &file])?;
    let mirror = bhk(&["mirror", &file])?;
    let subgroups = bhk(&["subgroups", &file])?;
    let picard = bhk(&["picard", &file])?;

    let d = analyze.delsarte.ok_or("no delsarte section")?;
    let g = analyze.groups.ok_or("no groups section")?;
    ensure(
        d.weights == [2, 3, 1, 1] && d.degree == 7 && d.exponent == 168,
        || format!("q = {:?}, h = {}, d = {}", d.weights, d.degree, d.exponent),
    )?;
    ensure((g.aut_order, g.sl_order, g.j_order) == (168, 21, 7), || {
        format!(
            "|Aut|, |SL|, |J| = {}, {}, {}",
            g.aut_order, g.sl_order, g.j_order
        )
    })?;
    let t = mirror.mirror.ok_or("no mirror section")?;
    ensure(t.weights == [4, 2, 1, 1] && t.degree == 8, || {
        format!("q_T = {:?}, h_T = {}", t.weights, t.degree)
    })?;
    ensure((t.j_order, t.sl_order) == (8, 24), || {
        format!("|J_T|, |SL_T| = {}, {}", t.j_order, t.sl_order)
    })?;
    let subs = subgroups.subgroups.ok_or("no subgroups section")?;
    ensure(subs.len() == 2, || {
        format!("{} intermediate groups", subs.len())
    })?;
    ensure(
        subs[0].is_j && subs[0].dual_is_sl && subs[0].dual_order == 24,
        || "dual of J is not SL_T".into(),
    )?;
    ensure(
        subs[1].is_sl && subs[1].dual_is_j && subs[1].dual_order == 8,
        || "dual of SL is not J_T".into(),
    )?;
    let p = picard.picard.ok_or("no picard section")?;
    ensure((p.rho_primal, p.rho_mirror) == (18, 16), || {
        format!("rho = ({}, {})", p.rho_primal, p.rho_mirror)
    })?;
    let took = within(Duration::from_secs(5), start)?;
    Ok(format!(
        "q, h, d, group orders, duals and rho = (18, 16) exact in {took:.2?}"
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let doc = bhk(&["scan", &data("kelly_j.json"), "--primes-up-to", "199"])?;
    let scan = doc.scan.ok_or("no scan section")?;
    let expected: Vec<u64> = primes_up_to(199)
        .into_iter()
        .filter(|p| 168 % p != 0)
        .collect();
    let got: Vec<u64> = scan.rows.iter().map(|r| r.prime).collect();
    ensure(got == expected, || format!("scanned primes {got:?}"))?;
    for r in &scan.rows {
        let primal = if r.prime % 8 == 7 { 22 } else { 18 };
        let mirror = if [3, 5, 6].contains(&(r.prime % 7)) {
            22
        } else {
            16
        };
        ensure((r.rho_primal, r.rho_mirror) == (primal, mirror), || {
            format!(
                "p = {}: rho = ({}, {})",
                r.prime, r.rho_primal, r.rho_mirror
            )
        })?;
    }
    let took = within(Duration::from_secs(30), start)?;
    Ok(format!(
        "{} primes match both residue rules in {took:.2?}",
        got.len()
    ))
}

/// All three methods at `p ∈ {0} ∪ {primes < 100, p ∤ d}`.
fn three_methods(mp: &MirrorPair) -> Result<usize, String> {
    let d = mp.primal.matrix().exponent();
    let mut checked = 0;
    for p in std::iter::once(0).chain(primes_up_to(99).into_iter().filter(|p| !d.is_multiple_of(*p))) {
        let c = Characteristic::new(p).unwrap();
        let at_p = mp
            .at_characteristic(c)
            .map_err(|e| format!("p = {p}: {e}"))?;
        let closed = picard_closed_form(&at_p).map_err(|e| e.to_string())?;
        let kelly = picard_kelly(&at_p).map_err(|e| e.to_string())?;
        let orbit = picard_orbit(&at_p).map_err(|e| e.to_string())?;
        ensure(closed == kelly && kelly == orbit, || {
            format!(
                "{:?} at p = {p}: closed {closed:?}, kelly {kelly:?}, orbit {orbit:?}",
                mp.primal.matrix().matrix()
            )
        })?;
        PicardReport::compute(&at_p).map_err(|e| format!("p = {p}: {e}"))?;
        checked += 1;
    }
    Ok(checked)
}

fn criterion_3() -> Outcome {
    let mut fixtures = vec![
        mirror(KELLY_CHAIN, GroupChoice::J)?,
        mirror(KELLY_CHAIN, GroupChoice::Sl)?,
        mirror(QUARTIC_LOOP, GroupChoice::J)?,
        mirror(CHAIN_PLUS_FERMAT, GroupChoice::J)?,
    ];
    let fermat = mirror(FERMAT_QUARTIC, GroupChoice::J)?.primal;
    let groups = enumerate_intermediate(fermat.j(), fermat.sl()).map_err(|e| e.to_string())?;
    let mut fermat_groups = 0;
    for g in groups {
        let pair = BhkPair::new(fermat.matrix().clone(), g, Characteristic::ZERO)
            .map_err(|e| e.to_string())?;
        if let Ok(mp) = pair.mirror_pair() {
            fixtures.push(mp);
            fermat_groups += 1;
        }
    }
    let mut checked = 0;
    for mp in &fixtures {
        checked += three_methods(mp)?;
    }
    Ok(format!(
        "{} pairs ({fermat_groups} Fermat groups), {checked} (pair, p) cases agree",
        fixtures.len()
    ))
}

struct Pools {
    pairs: Vec<BhkPair>,
    groups: Vec<(DelsarteMatrix, SymmetrySubgroup)>,
    mirrors: Vec<MirrorPair>,
}

fn pools() -> Pools {
    let pairs: Vec<BhkPair> = calabi_yau_catalog(8)
        .into_iter()
        .filter(|(_, m)| m.det().unsigned_abs() <= 800)
        .map(|(_, m)| BhkPair::with_choice(m, GroupChoice::J, Characteristic::ZERO).unwrap())
        .collect();
    let mut groups = Vec::new();
    let mut mirrors = Vec::new();
    for pair in &pairs {
        for g in enumerate_intermediate(pair.j(), pair.sl()).unwrap() {
            groups.push((pair.matrix().clone(), g.clone()));
            let p = BhkPair::new(pair.matrix().clone(), g, Characteristic::ZERO).unwrap();
            if let Ok(mp) = p.mirror_pair() {
                mirrors.push(mp);
            }
        }
    }
    Pools {
        pairs,
        groups,
        mirrors,
    }
}

fn shape_matrix() -> impl Strategy<Value = DelsarteMatrix> {
    (0..SHAPES.len(), prop::array::uniform4(2u64..=7))
        .prop_filter_map("not a valid Delsarte matrix", |(s, e)| {
            DelsarteMatrix::new(SHAPES[s].matrix(e), Characteristic::ZERO).ok()
        })
}

const CASES: u32 = 500;

fn runner() -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    TestRunner::new_with_rng(config, rng)
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

fn property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner()
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn criterion_4() -> Outcome {
    let pools = pools();
    let pairs = &pools.pairs;
    let mirrors = &pools.mirrors;
    let zero = Characteristic::ZERO;

    property(
        "age range and negation",
        (2u64..400, 1u64..400, 1u64..400, 1u64..400).prop_filter_map(
            "coordinate is zero",
            |(d, a, b, c)| {
                let (a, b, c) = (a % d, b % d, c % d);
                let last = (3 * d - a - b - c) % d;
                (a * b * c * last != 0)
                    .then(|| GroupElement::new(d, [a, b, c, last].map(|x| x as i64)))
            },
        ),
        |g| {
            let s = age(&g).map_err(|e| fail(e.to_string()))?;
            prop_assert!((1..=3).contains(&s));
            prop_assert_eq!(age(&g.neg()).unwrap(), 4 - s);
            Ok(())
        },
    )?;

    property("|Aut| = |det|", shape_matrix(), |m| {
        prop_assert_eq!(
            aut_group(&m).unwrap().order() as u64,
            m.det().unsigned_abs()
        );
        Ok(())
    })?;

    property("h | d | det | d^4", shape_matrix(), |m| {
        let (h, d, det) = (m.degree(), m.exponent(), m.det().unsigned_abs());
        prop_assert!(d % h == 0 && det % d == 0 && (d as u128).pow(4).is_multiple_of(det as u128));
        Ok(())
    })?;

    property("(G^T)^T = G", any::<prop::sample::Index>(), |i| {
        let (m, g) = i.get(&pools.groups);
        let t = m.transpose(zero).unwrap();
        let dual = annihilator(m, g).unwrap();
        prop_assert_eq!(&annihilator(&t, &dual).unwrap(), g);
        Ok(())
    })?;

    property("J^T = SL_T", any::<prop::sample::Index>(), |i| {
        let m = i.get(pairs).matrix();
        let t = m.transpose(zero).unwrap();
        let sl_t = sl_subgroup(&aut_group(&t).unwrap()).unwrap();
        prop_assert_eq!(annihilator(m, &j_group(m).unwrap()).unwrap(), sl_t);
        Ok(())
    })?;

    property(
        "pairing lift independence",
        (
            any::<prop::sample::Index>(),
            any::<prop::sample::Index>(),
            any::<prop::sample::Index>(),
            prop::array::uniform4(-5i128..=5),
            prop::array::uniform4(-5i128..=5),
        ),
        |(ip, ia, ib, ka, kb)| {
            let pair = ip.get(pairs);
            let m = pair.matrix();
            let aut_t = aut_group(&m.transpose(zero).unwrap()).unwrap();
            let a = *ia.get(aut_t.elements());
            let b = *ib.get(pair.aut().elements());
            let d = m.exponent() as i128;
            let mut la = a.coords().map(|c| c as i128);
            let mut lb = b.coords().map(|c| c as i128);
            for k in 0..4 {
                la[k] += ka[k] * d;
                lb[k] += kb[k] * d;
            }
            prop_assert_eq!(
                pairing_of_lifts(m, la, lb).unwrap(),
                bhk_core::pairing(m, &a, &b).unwrap()
            );
            Ok(())
        },
    )?;

    property(
        "Kelly set at p = 0",
        (any::<prop::sample::Index>(), any::<bool>()),
        |(i, flip)| {
            let mp = i.get(mirrors);
            let side = if flip { &mp.mirror } else { &mp.primal };
            let m = side.matrix();
            let h = m.degree();
            let j = j_element(m);
            let mut expected: Vec<_> = (1..=h)
                .filter(|&n| gcd(n as i128, h as i128) == 1)
                .map(|n| j.scale(n))
                .collect();
            expected.sort();
            let got: Vec<_> = kelly_set_direct(side.group(), zero)
                .unwrap()
                .into_iter()
                .map(|a| a.element)
                .collect();
            prop_assert_eq!(got.len() as u64, euler_phi(h).unwrap());
            prop_assert_eq!(got, expected);
            Ok(())
        },
    )?;

    let primes = primes_up_to(199);
    property(
        "Kelly set at p is empty or the p = 0 set",
        (
            any::<prop::sample::Index>(),
            any::<bool>(),
            any::<prop::sample::Index>(),
        )
            .prop_filter("p divides d", |(i, _, ip)| {
                i.get(mirrors).primal.matrix().exponent() % ip.get(&primes) != 0
            }),
        |(i, flip, ip)| {
            let mp = i.get(mirrors);
            let g = if flip {
                mp.mirror.group()
            } else {
                mp.primal.group()
            };
            let c = Characteristic::new(*ip.get(&primes)).unwrap();
            let base = kelly_set_direct(g, zero).unwrap();
            let at_p = kelly_set_direct(g, c).unwrap();
            prop_assert!(at_p.is_empty() || at_p == base);
            Ok(())
        },
    )?;

    property(
        "one age-1 element in G and in G^T",
        any::<prop::sample::Index>(),
        |i| {
            let mp = i.get(mirrors);
            for side in [&mp.primal, &mp.mirror] {
                let ones = age_one_census(side.group()).unwrap();
                prop_assert_eq!(ones.len(), 1);
                prop_assert_eq!(ones[0].element, j_element(side.matrix()));
            }
            Ok(())
        },
    )?;

    Ok(format!(
        "9 properties x {CASES} cases over {} pairs, {} groups, {} mirror pairs",
        pairs.len(),
        pools.groups.len(),
        mirrors.len()
    ))
}

fn criterion_5() -> Outcome {
    let mp = mirror(FERMAT_QUARTIC, GroupChoice::J)?;
    let mut checked = 0;
    for p in std::iter::once(0).chain(primes_up_to(199).into_iter().filter(|&p| p != 2)) {
        let at_p = mp
            .at_characteristic(Characteristic::new(p).unwrap())
            .map_err(|e| format!("p = {p}: {e}"))?;
        // brute force is the ground truth
        let (rho, _) = picard_kelly(&at_p).map_err(|e| e.to_string())?;
        let classical = if p % 4 == 3 { 22 } else { 20 };
        ensure(rho == classical, || format!("p = {p}: kelly rho = {rho}"))?;
        for (name, value) in [
            ("closed form", picard_closed_form(&at_p)),
            ("orbit", picard_orbit(&at_p)),
        ] {
            let value = value.map_err(|e| e.to_string())?.0;
            ensure(value == rho, || {
                format!("p = {p}: {name} gives {value}, kelly {rho}")
            })?;
        }
        checked += 1;
    }
    Ok(format!(
        "rho_primal 20 at p = 0 and 22 iff p = 3 mod 4, {checked} characteristics"
    ))
}

fn criterion_6() -> Outcome {
    let j = mirror(KELLY_CHAIN, GroupChoice::J)?;
    let sl = mirror(KELLY_CHAIN, GroupChoice::Sl)?;
    let mut checked = 0;
    for p in std::iter::once(0).chain(primes_up_to(199).into_iter().filter(|p| 168 % p != 0)) {
        let c = Characteristic::new(p).unwrap();
        let a = PicardReport::compute(&j.at_characteristic(c).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let b = PicardReport::compute(&sl.at_characteristic(c).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(
            (a.rho_primal, a.rho_mirror) == (b.rho_primal, b.rho_mirror),
            || {
                format!(
                    "p = {p}: J gives ({}, {}), SL gives ({}, {})",
                    a.rho_primal, a.rho_mirror, b.rho_primal, b.rho_mirror
                )
            },
        )?;
        checked += 1;
    }
    Ok(format!(
        "G = J and G = SL agree at {checked} characteristics"
    ))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("golden values in characteristic 0", criterion_1),
        ("golden residue rules in characteristic p", criterion_2),
        ("three-method agreement on fixtures", criterion_3),
        ("property suites", criterion_4),
        ("Fermat quartic", criterion_5),
        ("independence of G", criterion_6),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", n + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
