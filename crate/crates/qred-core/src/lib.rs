//! Exact computations in simple Lie algebras: Chevalley bases, Kostant
//! cascades, seaweed subalgebras, stabilizers of linear forms and the
//! quasi-reductivity classification of parabolic subalgebras.

pub mod cascade;
pub mod classify;
pub mod error;
pub mod exact;
pub mod rootsys;
pub mod seaweed;
pub mod stabilizer;
pub mod subset;
pub mod tables;

pub use error::{Error, Result};
pub use rootsys::{AlgebraElement, Family, Root, RootSystem, SimpleType};
pub use subset::RootSubset;
