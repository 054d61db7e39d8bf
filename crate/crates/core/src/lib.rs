//! Invariant Einstein metrics on generalized flag manifolds with five
//! isotropy summands.
//!
//! The pipeline runs bottom-up: [`rootsystem`] builds exact root data,
//! [`flag`] turns a painted Dynkin diagram into its isotropy decomposition,
//! [`kahler`] produces the Kähler–Einstein metrics, [`curvature`] supplies
//! structure constants and Ricci components, and [`einstein`] solves the
//! resulting polynomial systems with [`polyalg`].

pub mod cli;
pub mod curvature;
pub mod einstein;
mod error;
pub mod flag;
pub mod kahler;
pub mod polyalg;
pub mod rootsystem;

pub use error::Error;
