//! Identities obtained by expanding one Beta density in terms of another.

pub mod expansion;
pub mod gamma;
pub mod interval;
pub mod tail;
pub mod verify;

pub use expansion::{catalan_ext, d, expansion_c, ratio_expansion, symmetric_expansion, SeriesValue};
pub use gamma::PiMultiple;
pub use interval::Interval;
pub use tail::{TailCertificate, TailMethod};
pub use verify::{
    describe, verify_finite, verify_infinite, IdentityResult, InfiniteOptions, Rhs, Status, FINITE_IDS, INFINITE_IDS,
};
