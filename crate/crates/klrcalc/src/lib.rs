//! Exact computations with graded row-permutation modules over cyclotomic
//! quiver Hecke algebras of type A: standard homogeneous bases, integral
//! Gram matrices and their elementary divisors, graded simple characters,
//! graded decomposition and adjustment matrices, and crystal combinatorics.

pub mod crystal;
pub mod decomp;
pub mod fock;
pub mod garnir;
pub mod intmat;
pub mod laurent;
pub mod nilhecke;
pub mod perm;
pub mod semisimple;
pub mod setting;
pub mod shape;
pub mod specht;
pub mod tableau;
