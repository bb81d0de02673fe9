//! Certified bound computations for Euler characteristics of positively
//! curved manifolds with isometric torus actions.

pub mod bounds;
pub mod certify;
pub mod cli;
pub mod codes;
pub mod exactnum;
pub mod lie;
pub mod obstruct;
