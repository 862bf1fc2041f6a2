//! Closed formulas for the correlation functions, q-dimensions and
//! q-difference equations, and the Weyl-group reduction of the duality traces
//! to base-level blocks.

pub mod identities;
pub mod level_minus1;
pub mod level1;
pub mod cinf;
pub mod qdim;
pub mod duality;
pub mod qdiff;
