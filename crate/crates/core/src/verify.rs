//! Cross-checks of the generating functions against direct enumeration.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;

use crate::enumerate::Enumerator;
use crate::error::Result;
use crate::gf::{build_w, closed_forms, genus_series, published_series, CumulantSpec, GfSeries};
use crate::partition::PartitionType;
use crate::{Rational, SymbolicSeries};

/// First coefficient where the series and the enumeration disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub n: usize,
    #[serde(rename = "type")]
    pub ty: String,
    pub genus: u32,
    /// What the enumerator (or Kreweras' formula) gives.
    pub expected: String,
    /// What the generating function gives.
    pub found: String,
}

impl fmt::Display for OracleMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n = {}, type {}, genus {}: expected {}, generating function gives {}",
            self.n, self.ty, self.genus, self.expected, self.found
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub genus: u32,
    pub n_max: usize,
    /// Coefficients compared with the enumerator.
    pub coefficients: usize,
    /// Coefficients compared with Kreweras' formula (genus 0 only).
    pub kreweras: usize,
    pub mismatch: Option<OracleMismatch>,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
}

fn as_seconds<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(
                f,
                "genus {} up to n = {}: pass ({} coefficients",
                self.genus, self.n_max, self.coefficients
            )?,
            Some(m) => write!(f, "genus {} up to n = {}: FAIL at {m} (", self.genus, self.n_max)?,
        }
        if self.kreweras > 0 {
            write!(f, ", {} against Kreweras", self.kreweras)?;
        }
        write!(f, ", {:.2} s)", self.elapsed.as_secs_f64())
    }
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Compares the coefficient of x^n κ_[α] in `z` with the enumerated count for
/// each of `types`, returning the number compared or the first mismatch.
fn compare_types(
    enumerator: &Enumerator,
    z: &SymbolicSeries,
    n: usize,
    genus: u32,
    types: &[PartitionType],
    kreweras: bool,
) -> Result<std::result::Result<(usize, usize), OracleMismatch>> {
    let table = enumerator.count_types_by_genus(n, types)?;
    let (mut compared, mut against_kreweras) = (0, 0);
    for ty in types {
        let found = z.coeff(n).coefficient(&ty.kappa_monomial());
        let mismatch = |expected: String| OracleMismatch {
            n,
            ty: ty.to_string(),
            genus,
            expected,
            found: found.to_string(),
        };
        let count = table.get(ty, genus);
        if found != int(count) {
            return Ok(Err(mismatch(count.to_string())));
        }
        compared += 1;
        if kreweras {
            let k = ty.kreweras_count();
            if found != int(k.clone()) {
                return Ok(Err(mismatch(format!("{k} (Kreweras)"))));
            }
            against_kreweras += 1;
        }
    }
    Ok(Ok((compared, against_kreweras)))
}

/// Every type of every n ≤ `n_max`: the fully symbolic Z^{(genus)} against the
/// enumerator, and for genus 0 also against Kreweras' formula.
pub fn oracle_check(enumerator: &Enumerator, n_max: usize, genus: u32) -> Result<OracleReport> {
    let start = Instant::now();
    let z = genus_series(&build_w(&CumulantSpec::Symbolic, n_max.max(1)), genus)?;
    let mut report = OracleReport {
        genus,
        n_max,
        coefficients: 0,
        kreweras: 0,
        mismatch: None,
        elapsed: Duration::ZERO,
    };
    for n in 1..=n_max {
        let types = PartitionType::all_of(n);
        // A monomial the enumerator never produces would also be a mismatch.
        for (m, c) in z.coeff(n).terms() {
            let ty = PartitionType::from_kappa_monomial(m);
            if ty.n() != n || !m.powers().iter().all(|(s, _)| matches!(s, crate::Symbol::Kappa(_))) {
                report.mismatch = Some(OracleMismatch {
                    n,
                    ty: m.to_string(),
                    genus,
                    expected: "0".into(),
                    found: c.to_string(),
                });
                break;
            }
        }
        if report.mismatch.is_some() {
            break;
        }
        match compare_types(enumerator, &z, n, genus, &types, genus == 0)? {
            Ok((c, k)) => {
                report.coefficients += c;
                report.kreweras += k;
            }
            Err(m) => {
                report.mismatch = Some(m);
                break;
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Types checked beyond the full range, chosen to keep enumeration to a few
/// million partitions each.
pub fn spot_check_types(n: usize) -> Vec<PartitionType> {
    let lists: &[&[u32]] = match n {
        13 => &[&[13], &[1, 12], &[6, 7], &[4, 4, 5], &[3, 3, 3, 4], &[2, 2, 2, 2, 2, 3]],
        14 => &[&[14], &[7, 7], &[4, 4, 6], &[3, 3, 4, 4], &[2, 2, 2, 2, 2, 2, 2], &[1, 1, 4, 4, 4]],
        15 => &[&[15], &[7, 8], &[5, 5, 5], &[3, 3, 3, 3, 3], &[1, 2, 2, 2, 2, 2, 2, 2], &[3, 3, 3, 6]],
        _ => &[],
    };
    lists.iter().map(|sizes| PartitionType::from_sizes(sizes.iter().copied())).collect()
}

/// One type at size n, compared through a series that keeps only the
/// cumulants the type uses.
pub fn spot_check(enumerator: &Enumerator, ty: &PartitionType, genus: u32) -> Result<OracleReport> {
    let start = Instant::now();
    let n = ty.n();
    let used: BTreeSet<u16> = ty.multiplicities().map(|(l, _)| l as u16).collect();
    let z = genus_series(&build_w(&CumulantSpec::SymbolicSubset(used), n), genus)?;
    let (coefficients, mismatch) = match compare_types(enumerator, &z, n, genus, std::slice::from_ref(ty), false)? {
        Ok((c, _)) => (c, None),
        Err(m) => (0, Some(m)),
    };
    Ok(OracleReport {
        genus,
        n_max: n,
        coefficients,
        kreweras: 0,
        mismatch,
        elapsed: start.elapsed(),
    })
}

/// Result of comparing one committed or closed-form expansion.
#[derive(Debug, Clone, Serialize)]
pub struct FixtureResult {
    pub name: String,
    pub kappa: String,
    pub genus: u32,
    pub order: usize,
    /// First power where the expansion differs.
    pub first_difference: Option<usize>,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        self.first_difference.is_none()
    }
}

impl fmt::Display for FixtureResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (κ = {}, genus {}, order {}): ", self.name, self.kappa, self.genus, self.order)?;
        match self.first_difference {
            None => f.write_str("pass"),
            Some(k) => write!(f, "FAIL at x^{k}"),
        }
    }
}

fn first_difference(a: &SymbolicSeries, b: &SymbolicSeries) -> Option<usize> {
    let n = a.order().min(b.order());
    (0..=n).find(|&k| a.coeff(k) != b.coeff(k))
}

/// Published coefficient lists, and every closed form expanded to `order`
/// (numeric specifications) or `symbolic_order` (two-variable ones).
pub fn fixture_check(order: usize, symbolic_order: usize) -> Result<Vec<FixtureResult>> {
    let mut out = Vec::new();
    for fixture in published_series() {
        let start = Instant::now();
        let n = fixture.max_power();
        let expected = crate::gf::to_symbolic(&fixture.as_series());
        let got = match fixture.genus {
            3 => crate::gf::to_symbolic(&crate::gf::genus3_doublet_series(n)),
            g => GfSeries::compute(&fixture.spec(), g, n)?.to_symbolic(),
        };
        out.push(FixtureResult {
            name: fixture.name.clone(),
            kappa: fixture.kappa.clone(),
            genus: fixture.genus,
            order: n,
            first_difference: first_difference(&got, &expected),
            elapsed: start.elapsed(),
        });
    }
    for form in closed_forms() {
        let start = Instant::now();
        let n = if form.kappa.is_numeric() { order } else { symbolic_order };
        let got = GfSeries::compute(&form.kappa, form.genus, n)?.to_symbolic();
        out.push(FixtureResult {
            name: form.name.to_string(),
            kappa: form.kappa.to_string(),
            genus: form.genus,
            order: n,
            first_difference: first_difference(&got, &(form.expand)(n)),
            elapsed: start.elapsed(),
        });
    }
    Ok(out)
}
