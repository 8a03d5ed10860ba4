//! Arbitrary-precision Padé and self-similar approximants for extrapolating
//! small-variable power series to their large-variable amplitude.

pub mod complex;
pub mod corpus;
pub mod error;
mod linalg;
pub mod num;
pub mod pade;
pub mod report;
pub mod scheme;
pub mod series;
pub mod verify;
pub mod selfsim;

pub use error::{CorpusError, PadeError, SchemeError, SelfSimError, SeriesError};
pub use pade::{pade_fit, ExtReal, FitStatus, PadeApproximant};
pub use series::PowerSeries;
