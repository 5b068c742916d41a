pub mod component;
pub mod error;
pub mod exactalg;
pub mod monodromy;
pub mod picard;
pub mod spectral;
pub mod suite;

pub use component::Component;
pub use error::{Error, Result};
