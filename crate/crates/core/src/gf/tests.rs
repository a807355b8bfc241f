use super::*;
use crate::enumerate::Enumerator;
use crate::partition::PartitionType;
use crate::poly::Monomial;
use crate::scalar::Scalar;

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn numeric(spec: CumulantSpec, genus: u32, order: usize) -> NumericSeries {
    match GfSeries::compute(&spec, genus, order).unwrap() {
        GfSeries::Numeric(s) => s,
        GfSeries::Symbolic(_) => panic!("numeric spec gave a symbolic series"),
    }
}

#[test]
fn spec_round_trip() {
    for text in ["symbolic", "symbolic=2,3", "ones", "y", "doublets", "triplets", "sf-ones", "sf-y", "custom=1,0,1/2"] {
        let spec: CumulantSpec = text.parse().unwrap();
        assert_eq!(spec.to_string(), text);
    }
    assert!("custom=1,,2".parse::<CumulantSpec>().is_err());
    assert!("symbolic=0".parse::<CumulantSpec>().is_err());
    assert!("bogus".parse::<CumulantSpec>().is_err());
    assert!(matches!(build_w_numeric(&CumulantSpec::AllY, 4), Err(Error::NotNumeric(_))));
}

#[test]
fn catalan_and_fuss() {
    let z = numeric(CumulantSpec::AllOnes, 0, 10);
    let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    for (k, c) in catalan.iter().enumerate() {
        assert_eq!(z.coeff(k), &int(*c));
    }
    assert_eq!(z, ones_genus0(10));
}

#[test]
fn closed_forms_match() {
    for form in closed_forms() {
        let order = if form.kappa.is_numeric() { 24 } else { 12 };
        let got = GfSeries::compute(&form.kappa, form.genus, order).unwrap().to_symbolic();
        assert_eq!(got, (form.expand)(order), "{}", form.name);
    }
}

#[test]
fn published_triplets() {
    for fixture in published_series() {
        if fixture.genus > 2 {
            continue;
        }
        let n = fixture.max_power();
        let z = numeric(fixture.spec(), fixture.genus, n);
        assert_eq!(z, fixture.as_series(), "{}", fixture.name);
    }
}

#[test]
fn genus3_doublets_leading_terms() {
    let s = genus3_doublet_series(16);
    assert_eq!(s.coeff(12), &int(1485));
    assert_eq!(s.valuation(), Some(12));
}

#[test]
fn z1_forms_agree_symbolically() {
    let w = build_w(&CumulantSpec::Symbolic, 10);
    let d = dressing(&w).unwrap();
    assert_eq!(d.z1_product_form().unwrap(), d.z1_tilde_form().unwrap());
}

#[test]
fn symbolic_coefficients_are_partition_counts() {
    let order = 8;
    let e = Enumerator::new();
    for genus in 0..=2 {
        let z = genus_series(&build_w(&CumulantSpec::Symbolic, order), genus).unwrap();
        for n in 1..=order {
            let table = e.count_by_genus(n, None).unwrap();
            for ty in PartitionType::all_of(n) {
                let want = table.get(&ty, genus);
                let got = z.coeff(n).coefficient(&ty.kappa_monomial());
                assert_eq!(got, int(want as i64), "n={n} {ty} g={genus}");
            }
        }
    }
}

#[test]
fn parts_series_checks() {
    let z = genus2_parts_gf(14).unwrap();
    assert_eq!(z, parts_genus2(14));
    assert_eq!(y_slice(&z, 2).coeff(8), &int(28));
}

#[test]
fn singleton_round_trip() {
    let spec = CumulantSpec::Custom(vec![int(3), int(1), int(2), Rational::from_ratio(1, 2)]);
    let free = CumulantSpec::Custom(vec![int(0), int(1), int(2), Rational::from_ratio(1, 2)]);
    let k1 = int(3);
    for genus in 0..=2 {
        let full = numeric(spec.clone(), genus, 14);
        let hat = numeric(free.clone(), genus, 14);
        assert_eq!(singleton_transform(&hat, &k1, SingletonDirection::Insert).unwrap(), full);
        assert_eq!(singleton_transform(&full, &k1, SingletonDirection::Remove).unwrap(), hat);
    }
    assert_eq!(
        singleton_transform(&sf_ones_genus1(16), &int(1), SingletonDirection::Insert).unwrap(),
        ones_genus1(16)
    );
}

#[test]
fn symbolic_subset_drops_other_cumulants() {
    let spec: CumulantSpec = "symbolic=2".parse().unwrap();
    let z = GfSeries::compute(&spec, 1, 6).unwrap().to_symbolic();
    let m = Monomial::kappa_type([(2, 2)]);
    assert_eq!(z.coeff(4).coefficient(&m), int(1));
    assert_eq!(z.coeff(4).len(), 1);
}

#[test]
fn higher_genus_is_rejected() {
    assert!(matches!(GfSeries::compute(&CumulantSpec::AllOnes, 3, 5), Err(Error::UnsupportedGenus(3))));
}
