//! Curves, mapping classes and fiber twists on the n-punctured torus.

pub mod freegroup;
pub mod perm;
pub mod surface;
pub mod mcg;
pub mod dcat;
pub mod bgroup;
pub mod parallel;
pub mod report;
pub mod sample;
pub mod suites;
