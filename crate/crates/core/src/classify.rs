//! Region catalog, cubic classification, ribbon structures.

pub mod cubics;

pub use cubics::{cubic_schemes, CubicClass, Scheme};
