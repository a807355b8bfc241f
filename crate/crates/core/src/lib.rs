//! Set partitions counted by genus.
//!
//! ```
//! use partgenus::gf::{CumulantSpec, GfSeries};
//! use partgenus::{parse_partition, reduce, Enumerator, PartitionType};
//!
//! # fn main() -> partgenus::Result<()> {
//! let p = parse_partition("1,3,4,6,7|2,5,9|8|10")?;
//! assert_eq!(p.genus()?, 2);
//! assert_eq!(reduce(&p).result.to_string(), "1,3,5|2,4,6");
//!
//! let ty: PartitionType = "2^4".parse()?;
//! let table = Enumerator::new().count_by_genus(8, Some(&ty))?;
//! assert_eq!(table.get(&ty, 2), 21);
//!
//! let z1 = GfSeries::compute(&CumulantSpec::Doublets, 1, 10)?;
//! assert_eq!(z1.to_string(), "x^4 + 10*x^6 + 70*x^8 + 420*x^10 + O(x^11)");
//! # Ok(())
//! # }
//! ```

pub mod enumerate;
pub mod error;
pub mod gf;
pub mod partition;
pub mod poly;
pub mod reduce;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use gf::{CumulantSpec, GfSeries, SingletonDirection};
pub use enumerate::{kreweras_count, ClassFilter, Enumerator, GenusCountTable, MomentPolynomial};
pub use partition::{genus_max, parse_partition, OrbitRecord, Partition, PartitionType, Permutation};
pub use reduce::{census_genus2, classify, confluence_check, is_primitive, is_semiprimitive, reduce, CensusTable, DiagramClass, ReductionTrace};
pub use poly::{KappaPolynomial, Monomial, Symbol};
pub use scalar::{Coeff, Scalar};
pub use series::TruncatedSeries;

/// Exact rational numbers backing every numeric computation.
pub type Rational = num_rational::BigRational;
/// Polynomials in κ₁, κ₂, …, ε and y with rational coefficients.
pub type Poly = KappaPolynomial<Rational>;
/// Series with rational coefficients (numeric mode).
pub type NumericSeries = TruncatedSeries<Rational>;
/// Series with polynomial coefficients (symbolic mode).
pub type SymbolicSeries = TruncatedSeries<Poly>;
