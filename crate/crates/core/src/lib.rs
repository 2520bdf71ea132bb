//! Numerical semigroup rings `k[[H]]`, their monomial ideals, and the
//! invariants of stretched filtrations.

pub mod classify;
pub mod error;
pub mod family;
pub mod filter;
pub mod filtration;
pub mod fixtures;
pub mod formula;
pub mod hilbert;
pub mod ideal;
pub mod report;
pub mod search;
pub mod semigroup;

pub use error::{Error, Result};
pub use filtration::{Filtration, FiltrationReport};
pub use hilbert::HilbertData;
pub use ideal::HIdeal;
pub use semigroup::NumericalSemigroup;
