//! Exact-arithmetic models of the 4-dimensional Sklyanin algebra S and its
//! quaternionic twist A: graded components, the space quartic E with its
//! chord-law group structure, point and line schemes over small finite
//! fields, graded modules, and the incidence audits tying them together.
//!
//! Scalars come in two interchangeable flavors behind one field contract:
//! the generic parameter tower Q(i)(a,b)[c] and F_{p^2} specializations.

pub mod cpoly;
pub mod egeom;
pub mod gmod;
pub mod incidence;
pub mod linalg;
pub mod qalg;
pub mod report;
pub mod scalar;
pub mod schemes;
