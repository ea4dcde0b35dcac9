//! Exact lattice-polygon "polynomial diagrams".
//!
//! The family `P(x) = Σ_{i=0}^{k} q^{n+i} x^{k-i}` is mapped monomial by
//! monomial onto lattice points `(q^{n+i}, k-i)`. Closing that chain with
//! `(q^n, 0)` gives a lattice polygon whose area is computed here by a
//! closed form (degree 2), a trapezoid-sum formula (any degree), the
//! shoelace formula and Pick's theorem. All arithmetic is exact.
//!
//! ```
//! use polydiagram::{area, SpecialPolynomial};
//!
//! let p = SpecialPolynomial::new(2, 0, 2).unwrap();
//! assert_eq!(area::area_general(&p).to_string(), "5/2");
//! ```

pub mod area;
pub mod diagram;
mod error;
pub mod polynomial;
pub mod sequence;

pub use area::{AreaCrossCheck, ExactArea, PickCount, DEFAULT_PICK_BUDGET};
pub use diagram::{validate_diagram, DiagramDiagnostics, PolynomialDiagram};
pub use error::{Error, Result};
pub use polynomial::{LatticePoint, SpecialPolynomial};
pub use sequence::{AreaSequence, SequenceReport};
