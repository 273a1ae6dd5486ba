//! Exact intersection-theory workbench.
//!
//! Models degree-truncated, finitely presented graded commutative algebras
//! over exact rationals, together with the pullback/pushforward calculus,
//! projective-bundle and blowup constructions, characteristic-class
//! conversions and curve-fibration Grothendieck-Riemann-Roch, and a small
//! declarative scene language for writing verification suites against the
//! built-in case corpus.

pub mod rational;
pub mod linalg;
pub mod ring;
pub mod morphism;
pub mod bundle;
pub mod blowup;
pub mod product;
pub mod chern;
pub mod scene;
pub mod corpus;
pub mod error;

pub use error::EngineError;
pub use rational::Rat;
pub use ring::{GeneratorSpec, Monomial, PresentedRing, RingElement};
