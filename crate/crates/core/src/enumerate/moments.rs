use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::GenusCountTable;
use crate::partition::PartitionType;
use crate::poly::{Monomial, Symbol};
use crate::{Poly, Rational};

/// m_n(ε) as a polynomial in ε and κ₁, …, κ_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentPolynomial {
    pub n: usize,
    pub value: Poly,
}

impl MomentPolynomial {
    pub fn from_table(table: &GenusCountTable) -> Self {
        let mut value = Poly::zero();
        for ((ty, g), &count) in &table.entries {
            let m = ty.kappa_monomial().mul(&Monomial::from_powers([(Symbol::Epsilon, *g)]));
            value.add_term(m, Rational::from_integer(count.into()));
        }
        MomentPolynomial { n: table.n, value }
    }

    /// Integer coefficients of 1, ε, ε², … in front of κ_{[α]}.
    pub fn epsilon_coefficients(&self, ty: &PartitionType) -> Vec<i64> {
        let key = ty.kappa_monomial();
        let mut out = Vec::new();
        for (m, c) in self.value.terms() {
            if m.without(Symbol::Epsilon) == key {
                let g = m.exponent(Symbol::Epsilon) as usize;
                if out.len() <= g {
                    out.resize(g + 1, 0);
                }
                out[g] = c.to_integer().to_i64().expect("count fits");
            }
        }
        out
    }

    /// `κ₄ + 4κ₃κ₁ + (2+ε)κ₂² + 6κ₂κ₁² + κ₁⁴`, with the common factor of each
    /// ε-polynomial pulled out.
    pub fn to_unicode(&self) -> String {
        let mut by_type: BTreeMap<std::cmp::Reverse<Vec<u32>>, Vec<(u32, i64)>> = BTreeMap::new();
        for (m, c) in self.value.terms() {
            let parts = m.kappa_parts();
            let coeff = c.to_integer().to_i64().expect("moment coefficients are integers");
            by_type
                .entry(std::cmp::Reverse(parts))
                .or_default()
                .push((m.exponent(Symbol::Epsilon), coeff));
        }
        let mut out = String::new();
        for (std::cmp::Reverse(parts), mut eps) in by_type {
            eps.sort();
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&epsilon_factor(&eps));
            out.push_str(&kappa_unicode(&PartitionType::from_sizes(parts)));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn epsilon_factor(eps: &[(u32, i64)]) -> String {
    let g = eps.iter().fold(0i64, |acc, &(_, c)| acc.gcd(&c));
    let body: Vec<String> = eps
        .iter()
        .map(|&(e, c)| {
            let c = c / g;
            let power = match e {
                0 => String::new(),
                1 => "ε".into(),
                _ => format!("ε{}", superscript(e)),
            };
            match (c, e) {
                (_, 0) => c.to_string(),
                (1, _) => power,
                _ => format!("{c}{power}"),
            }
        })
        .collect();
    let scale = if g.is_one() { String::new() } else { g.abs().to_string() };
    if body.len() == 1 {
        if body[0] == "1" {
            scale
        } else {
            format!("{scale}{}", body[0])
        }
    } else {
        format!("{scale}({})", body.join("+"))
    }
}

fn kappa_unicode(ty: &PartitionType) -> String {
    let mut s = String::new();
    for (l, a) in ty.multiplicities().collect::<Vec<_>>().into_iter().rev() {
        s.push('κ');
        s.push_str(&subscript(l));
        if a > 1 {
            s.push_str(&superscript(a));
        }
    }
    s
}

fn subscript(k: u32) -> String {
    k.to_string().chars().map(|d| char::from_u32(0x2080 + d.to_digit(10).unwrap()).unwrap()).collect()
}

fn superscript(k: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string().chars().map(|d| DIGITS[d.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for MomentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_unicode())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Enumerator;
    use num_traits::Signed;

    #[test]
    fn first_moments() {
        let e = Enumerator::new();
        let m = |n| e.moment_polynomial(n).unwrap().to_unicode();
        assert_eq!(m(1), "κ₁");
        assert_eq!(m(2), "κ₂ + κ₁²");
        assert_eq!(m(3), "κ₃ + 3κ₂κ₁ + κ₁³");
        assert_eq!(m(4), "κ₄ + 4κ₃κ₁ + (2+ε)κ₂² + 6κ₂κ₁² + κ₁⁴");
        assert_eq!(
            m(5),
            "κ₅ + 5κ₄κ₁ + 5(1+ε)κ₃κ₂ + 10κ₃κ₁² + 5(2+ε)κ₂²κ₁ + 10κ₂κ₁³ + κ₁⁵"
        );
    }

    #[test]
    fn epsilon_one_gives_bell_coefficients() {
        let m6 = Enumerator::new().moment_polynomial(6).unwrap();
        for ty in PartitionType::all_of(6) {
            let total: i64 = m6.epsilon_coefficients(&ty).iter().sum();
            assert_eq!(total.to_string(), ty.set_partition_count().to_string());
        }
        assert!(m6.value.terms().all(|(_, c)| c.is_positive()));
    }
}
