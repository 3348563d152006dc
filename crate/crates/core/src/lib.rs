//! Parking functions: exact enumeration, exact uniform sampling, statistics,
//! and the limit laws that describe them for large `n`.

pub mod ensemble;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod limits;
pub mod parking;
pub mod poly;
pub mod sample;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use parking::{ParkingFunction, PrefSequence};
pub use poly::Polynomial;
pub use sample::{split_stream, Ensemble, RngStream, SampleConfig};
