//! Exact computer algebra for the knot-surgery distinguisher.
//!
//! The crate works in the group ring Z[Z^k] of a free abelian group (a
//! Laurent polynomial ring): exact arithmetic and units ([`laurent`]),
//! unique factorization for univariate and line-supported elements
//! ([`factor`]), the orbit-counting invariant Gamma ([`gamma`]),
//! Alexander polynomials from standard knot presentations ([`knots`]), and
//! the surgery formula with a certificate-producing distinguisher
//! ([`surgery`]). Stable JSON schemas and text parsers live in [`codec`].
//!
//! Every value is immutable and every operation is a pure function;
//! everything can be shared freely across threads.

pub mod codec;
pub mod error;
pub mod factor;
pub mod gamma;
pub mod knots;
pub mod laurent;
pub mod props;
pub mod surgery;

mod unipoly;

pub use error::{Error, ParseError, Result};
pub use factor::{
    content_primitive, factor_element, factor_line, factor_univariate, is_irreducible,
    FactorConfig, FactorEntry, Factorization,
};
pub use gamma::{
    gamma, gamma_id, multiplicity, Automorphism, GammaResult, GammaWitness, WitnessSide,
};
pub use knots::{
    alexander, alexander_from_braid, alexander_from_seifert, alexander_torus,
    bar_closed_factorization, catalog, connected_sum, symmetrize, AlexanderPolynomial, BarPair,
    BarPairedFactorization, KnotInput,
};
pub use laurent::{ExponentVector, LaurentPoly, Unit};
pub use props::{run_properties, PropsConfig, PropsReport, SuiteResult};
pub use surgery::{
    automorphism_consistency, distinguish, knot_surgery_sw, torsion_quotient, verify_certificate,
    ChainStep, GammaCertificate, SWElement, TorsionTerm, Verdict, VerdictKind,
};
