//! Seven-valent symmetric graphs: constructions, automorphism groups,
//! transitivity degree, normal quotients, and the supporting simple-group
//! order arithmetic.

pub mod arith;
pub mod autsearch;
pub mod graphs;
pub mod group;
pub mod orders;
pub mod perm;
pub mod quotient;
pub mod report;
pub mod scan;
pub mod symmetry;
