//! Orbit complexes of curve systems on non-orientable surfaces and the group
//! presentations assembled from them.

pub mod catalog;
pub mod complex;
pub mod diagram;
pub mod pres;
pub mod surface;
