pub mod error;
pub mod exact;
pub mod hankel;
pub mod identities;
pub mod integrality;
pub mod moments;
pub mod oeis;
pub mod series;
pub mod transforms;
