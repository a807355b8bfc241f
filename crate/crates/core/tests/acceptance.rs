//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! fails. Runs without the libtest harness so the lines are always shown.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use partgenus::enumerate::ClassFilter;
use partgenus::gf::{
    build_w, build_w_numeric, dressing, genus3_doublet_series, genus_series, ones_genus0, ones_genus1, ones_genus2,
    sf_ones_genus0, sf_ones_genus1, sf_ones_genus2, singleton_transform, CumulantSpec, SingletonDirection,
};
use partgenus::reduce::{census_genus2, confluence_check, count_class, reduce, CensusColumn, DiagramClass};
use partgenus::verify::{fixture_check, oracle_check, spot_check, spot_check_types};
use partgenus::{Enumerator, NumericSeries, Partition, PartitionType, Poly, Rational};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {:.1} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs()))
    }
}

fn oracle_with_spots(genus: u32, limit: Duration) -> Outcome {
    let e = Enumerator::new();
    let start = Instant::now();
    let full = oracle_check(&e, 12, genus).expect("within budget");
    if let Some(m) = &full.mismatch {
        return fail(format!("n <= 12: {m}"));
    }
    let mut spots = 0;
    for n in 13..=15 {
        let types = spot_check_types(n);
        if types.len() < 5 {
            return fail(format!("only {} spot types at n = {n}", types.len()));
        }
        for ty in types {
            let r = spot_check(&e, &ty, genus).expect("within budget");
            if let Some(m) = r.mismatch {
                return fail(format!("spot check: {m}"));
            }
            spots += 1;
        }
    }
    if let Err(e) = within(start.elapsed(), limit, "oracle run") {
        return fail(e);
    }
    pass(format!("{} coefficients for n <= 12, {spots} spot types at n = 13..15", full.coefficients))
}

fn criterion_1() -> Outcome {
    let e = Enumerator::new();
    let r = oracle_check(&e, 12, 0).expect("within budget");
    if let Some(m) = &r.mismatch {
        return fail(m.to_string());
    }
    if r.kreweras != r.coefficients {
        return fail("not every coefficient was compared with Kreweras' formula");
    }
    if let Err(e) = within(r.elapsed, Duration::from_secs(60), "genus 0 oracle") {
        return fail(e);
    }
    pass(format!("{} coefficients against enumeration and Kreweras", r.coefficients))
}

fn criterion_2() -> Outcome {
    oracle_with_spots(1, Duration::from_secs(300))
}

fn criterion_3() -> Outcome {
    oracle_with_spots(2, Duration::from_secs(300))
}

fn criterion_4() -> Outcome {
    use CensusColumn::*;
    let expected: BTreeMap<(usize, CensusColumn), u64> = [
        ((6, Two3VerticesPrim), 1),
        ((7, One3Vertex), 14),
        ((8, TwoVerticesOnly), 21),
        ((8, Two3VerticesPrim), 20),
        ((8, One4Vertex), 6),
        ((9, One3Vertex), 141),
        ((10, TwoVerticesOnly), 168),
        ((10, Two3VerticesPrim), 65),
        ((10, Two3VerticesSemiprim), 15),
        ((10, One4Vertex), 15),
        ((11, One3Vertex), 407),
        ((12, TwoVerticesOnly), 483),
        ((12, Two3VerticesPrim), 52),
        ((12, Two3VerticesSemiprim), 36),
        ((12, One4Vertex), 9),
        ((13, One3Vertex), 455),
        ((14, TwoVerticesOnly), 651),
        ((14, Two3VerticesSemiprim), 21),
        ((15, One3Vertex), 175),
        ((16, TwoVerticesOnly), 420),
        ((18, TwoVerticesOnly), 105),
    ]
    .into_iter()
    .collect();
    let table = census_genus2();
    if table.sizes() != (6..=18).collect::<Vec<_>>() {
        return fail(format!("rows {:?}", table.sizes()));
    }
    for n in 6..=18 {
        for col in CensusColumn::ALL {
            let want = expected.get(&(n, col)).copied().unwrap_or(0);
            let got = table.get(n, col);
            if got != want {
                return fail(format!("n = {n}, {}: {got}, expected {want}", col.title()));
            }
        }
    }
    let start = Instant::now();
    let heaviest = count_class(&PartitionType::uniform(2, 9), 2, ClassFilter::Primitive);
    let t = start.elapsed();
    if heaviest != 105 {
        return fail(format!("[2^9] alone gives {heaviest}"));
    }
    if let Err(e) = within(t, Duration::from_secs(120), "[2^9] cell") {
        return fail(e);
    }
    pass(format!("13 rows x 5 columns exact, [2^9] cell in {:.2} s", t.as_secs_f64()))
}

fn criterion_5() -> Outcome {
    let results = fixture_check(30, 12).expect("fixtures compute");
    for r in &results {
        if !r.passed() {
            return fail(r.to_string());
        }
        if let Err(e) = within(r.elapsed, Duration::from_secs(10), &r.name) {
            return fail(e);
        }
    }
    let slowest = results.iter().map(|r| r.elapsed).max().unwrap_or_default();
    pass(format!("{} expansions exact, slowest {:.2} s", results.len(), slowest.as_secs_f64()))
}

fn criterion_6() -> Outcome {
    let d = dressing(&build_w(&CumulantSpec::Symbolic, 12)).expect("dressing");
    let a = d.z1_product_form().expect("invertible");
    let b = d.z1_tilde_form().expect("invertible");
    if a != b {
        let k = (0..=12).find(|&k| a.coeff(k) != b.coeff(k)).unwrap();
        return fail(format!("the two forms differ at x^{k}"));
    }
    let terms: usize = (0..=12).map(|k| a.coeff(k).len()).sum();
    pass(format!("identical through x^12 ({terms} monomials)"))
}

fn criterion_7() -> Outcome {
    use SingletonDirection::{Insert, Remove};
    let one = Rational::from_integer(1.into());
    let n = 20;
    // Round trips, numeric and symbolic.
    for g in 0..=2 {
        let z = genus_series(&build_w_numeric(&CumulantSpec::AllOnes, n).unwrap(), g).unwrap();
        let back = singleton_transform(&singleton_transform(&z, &one, Remove).unwrap(), &one, Insert).unwrap();
        if back != z {
            return fail(format!("numeric round trip, genus {g}"));
        }
    }
    let k1 = Poly::kappa(1);
    for g in 0..=2 {
        let z = genus_series(&build_w(&CumulantSpec::Symbolic, 9), g).unwrap();
        let hat = singleton_transform(&z, &k1, Remove).unwrap();
        let free = genus_series(&build_w(&CumulantSpec::SymbolicSubset((2..=9).collect()), 9), g).unwrap();
        if hat != free {
            return fail(format!("removing κ1 from the symbolic genus {g} series"));
        }
        if singleton_transform(&hat, &k1, Insert).unwrap() != z {
            return fail(format!("symbolic round trip, genus {g}"));
        }
    }
    // Closed-form pairs with and without singletons.
    type Expansion = fn(usize) -> NumericSeries;
    let pairs: [(Expansion, Expansion); 3] =
        [(sf_ones_genus0, ones_genus0), (sf_ones_genus1, ones_genus1), (sf_ones_genus2, ones_genus2)];
    for (g, (hat, full)) in pairs.iter().enumerate() {
        if singleton_transform(&hat(n), &one, Insert).unwrap() != full(n) {
            return fail(format!("insert on the singleton-free genus {g} form"));
        }
        if singleton_transform(&full(n), &one, Remove).unwrap() != hat(n) {
            return fail(format!("remove on the genus {g} form"));
        }
    }
    pass("round trips to order 20, symbolic κ1 removal and the three closed-form pairs")
}

/// Block labels that mostly continue the current block or revisit a recent
/// one, which keeps the genus low enough to hit small genera at large n.
fn sticky_partition(n: usize, rng: &mut ChaCha8Rng) -> Partition {
    let mut labels = Vec::with_capacity(n);
    let mut blocks = 0u32;
    for _ in 0..n {
        let roll: f64 = rng.gen();
        let label = if blocks == 0 || roll < 0.25 {
            blocks += 1;
            blocks - 1
        } else if roll < 0.7 {
            *labels.last().unwrap()
        } else {
            rng.gen_range(blocks.saturating_sub(3)..blocks)
        };
        labels.push(label);
    }
    Partition::from_block_labels(&labels)
}

fn uniformish_partition(n: usize, rng: &mut ChaCha8Rng) -> Partition {
    let k = rng.gen_range(1..=n as u32);
    let labels: Vec<u32> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    Partition::from_block_labels(&labels)
}

/// Genus of every stage of the trace, the final class, and the result.
fn check_reduction(p: &Partition, genus1_targets: &[Partition]) -> Result<(u32, Partition, DiagramClass), String> {
    let g = p.genus().map_err(|e| e.to_string())?;
    let t = reduce(p);
    for stage in t.replay() {
        if stage.genus().map_err(|e| e.to_string())? != g {
            return Err(format!("{p}: genus changes at {stage}"));
        }
    }
    if g == 0 && t.classification != DiagramClass::Empty {
        return Err(format!("{p}: genus 0 but reduces to {}", t.result));
    }
    if g == 1 && !genus1_targets.contains(&t.result) {
        return Err(format!("{p}: genus 1 but reduces to {}", t.result));
    }
    if g == 2 && t.result.n() > 18 {
        return Err(format!("{p}: genus 2 core {} has more than 18 points", t.result));
    }
    if !t.classification.is_fixed_point() {
        return Err(format!("{p}: stops at a reducible diagram"));
    }
    Ok((g, t.result, t.classification))
}

fn criterion_8() -> Outcome {
    let targets: Vec<Partition> = ["1,3|2,4", "1,4|2,5|3,6"].iter().map(|s| s.parse().unwrap()).collect();
    let e = Enumerator::new();
    let mut exhaustive = 0;
    let mut genus1_cores = std::collections::BTreeSet::new();
    for n in 1..=9 {
        for p in e.enumerate(n, None, false).unwrap() {
            if let Err(msg) = check_reduction(&p, &targets).map(|(g, r, _)| {
                if g == 1 {
                    genus1_cores.insert(r);
                }
            }) {
                return fail(msg);
            }
            if !confluence_check(&p, 4, exhaustive as u64) {
                return fail(format!("{p}: random move orders disagree"));
            }
            exhaustive += 1;
        }
    }
    if genus1_cores.len() != 2 {
        return fail(format!("genus 1 cores seen: {genus1_cores:?}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..10_000 {
        let n = rng.gen_range(1..=14);
        let p = if i % 2 == 0 { uniformish_partition(n, &mut rng) } else { sticky_partition(n, &mut rng) };
        if let Err(msg) = check_reduction(&p, &targets) {
            return fail(msg);
        }
        if !confluence_check(&p, 2, i) {
            return fail(format!("{p}: random move orders disagree"));
        }
    }
    // Genus 2 at sizes well past 18.
    let mut genus2 = 0;
    let mut largest_core = 0;
    let mut tries = 0;
    while genus2 < 2000 && tries < 2_000_000 {
        tries += 1;
        let n = rng.gen_range(19..=40);
        let p = sticky_partition(n, &mut rng);
        if p.genus() != Ok(2) {
            continue;
        }
        match check_reduction(&p, &targets) {
            Ok((_, r, _)) => largest_core = largest_core.max(r.n()),
            Err(msg) => return fail(msg),
        }
        genus2 += 1;
    }
    if genus2 < 2000 {
        return fail(format!("only {genus2} genus 2 samples at n = 19..40"));
    }
    pass(format!(
        "{exhaustive} partitions exhaustively (n <= 9), 10^4 random (n <= 14), {genus2} genus 2 samples at n = 19..40 with cores of at most {largest_core} points"
    ))
}

fn criterion_9() -> Outcome {
    // Coefficients of 1, ε, ε², … per type, as printed.
    let printed: [&[(&[u32], &[i64])]; 5] = [
        &[(&[1], &[1])],
        &[(&[2], &[1]), (&[1, 1], &[1])],
        &[(&[3], &[1]), (&[2, 1], &[3]), (&[1, 1, 1], &[1])],
        &[(&[4], &[1]), (&[2, 2], &[2, 1]), (&[3, 1], &[4]), (&[2, 1, 1], &[6]), (&[1, 1, 1, 1], &[1])],
        &[
            (&[5], &[1]),
            (&[4, 1], &[5]),
            (&[3, 2], &[5, 5]),
            (&[3, 1, 1], &[10]),
            (&[2, 2, 1], &[10, 5]),
            (&[2, 1, 1, 1], &[10]),
            (&[1, 1, 1, 1, 1], &[1]),
        ],
    ];
    let strings = [
        "κ₁",
        "κ₂ + κ₁²",
        "κ₃ + 3κ₂κ₁ + κ₁³",
        "κ₄ + 4κ₃κ₁ + (2+ε)κ₂² + 6κ₂κ₁² + κ₁⁴",
        "κ₅ + 5κ₄κ₁ + 5(1+ε)κ₃κ₂ + 10κ₃κ₁² + 5(2+ε)κ₂²κ₁ + 10κ₂κ₁³ + κ₁⁵",
    ];
    let e = Enumerator::new();
    for (i, terms) in printed.iter().enumerate() {
        let n = i + 1;
        let m = e.moment_polynomial(n).unwrap();
        let listed: Vec<PartitionType> = terms.iter().map(|(s, _)| PartitionType::from_sizes(s.iter().copied())).collect();
        for ty in PartitionType::all_of(n) {
            let want = terms
                .iter()
                .zip(&listed)
                .find(|(_, t)| **t == ty)
                .map(|((_, c), _)| c.to_vec())
                .unwrap_or_default();
            let got = m.epsilon_coefficients(&ty);
            if got != want {
                return fail(format!("m{n}, {ty}: {got:?}, printed {want:?}"));
            }
        }
        if m.to_unicode() != strings[i] {
            return fail(format!("m{n} prints as {}", m.to_unicode()));
        }
    }
    pass("m1..m5 equal the printed lists term by term")
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let e = Enumerator::new();
    let series = genus3_doublet_series(16);
    let mut found = Vec::new();
    for p in 6..=8 {
        let ty = PartitionType::uniform(2, p);
        let count = e.count_types_by_genus(2 * p as usize, std::slice::from_ref(&ty)).unwrap().get(&ty, 3);
        let want = series.coeff(2 * p as usize);
        if Rational::from_integer(count.into()) != *want {
            return fail(format!("[2^{p}]: enumerated {count}, series gives {want}"));
        }
        found.push(count);
    }
    if let Err(e) = within(start.elapsed(), Duration::from_secs(30), "genus 3 counts") {
        return fail(e);
    }
    pass(format!("[2^6], [2^7], [2^8] genus 3 counts {found:?} match"))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("genus 0 generating function equals enumeration and Kreweras, n <= 12", criterion_1),
        ("genus 1 generating function equals enumeration, n <= 12 plus spot checks", criterion_2),
        ("genus 2 generating function equals enumeration, n <= 12 plus spot checks", criterion_3),
        ("genus 2 primitive and semi-primitive census", criterion_4),
        ("published and closed-form expansions", criterion_5),
        ("two forms of the genus 1 series agree", criterion_6),
        ("singleton insertion and removal", criterion_7),
        ("reduction preserves genus and is confluent", criterion_8),
        ("moment polynomials m1..m5", criterion_9),
        ("genus 3 perfect matchings", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        println!(
            "[{status}] {:>2}. {name} ({:.1} s): {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            outcome.detail
        );
        failed += usize::from(!outcome.ok);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
