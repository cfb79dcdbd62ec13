//! Exact integer computations for linearly normal curves of fixed index of
//! speciality: divisor arithmetic on rational surfaces, Castelnuovo bounds,
//! class enumeration, dimension counts and existence/irreducibility tables.

pub mod ampleness;
pub mod atlas;
pub mod bounds;
pub mod classifier;
pub mod dimcount;
pub mod picard;
pub mod solvers;
pub mod verify;
