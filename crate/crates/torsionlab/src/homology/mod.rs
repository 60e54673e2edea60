//! Koszul and Čech machinery: complex slices per multidegree, transition
//! maps between powers, the Čech colimit with stabilization bookkeeping,
//! the weak-proregularity tester, and the instance checks built on them.

pub mod cech;
pub mod checks;
pub mod koszul;
pub mod wpr;

pub use koszul::{HomologyError, KoszulComplexSpec};
