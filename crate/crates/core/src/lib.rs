pub mod chartable;
pub mod connectedness;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod fusion;
pub mod group;
pub mod io;
pub mod irreducibility;

pub use error::{Error, Result};
