//! Colourings of Cartesian products built from colourings of the factors and
//! `k`-multiplicative Sidon sets.

pub mod budget;
pub mod coloring;
pub mod construct;
pub mod graphs;
pub mod rational;
pub mod sidon;
pub mod tables;

pub use budget::Budget;
pub use rational::Rational;
