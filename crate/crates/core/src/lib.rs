//! Finite semigroups, Green's relations and their starred analogues, orders
//! in semigroups, and *-pairs.
#![no_std]

extern crate alloc;

pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod green;
pub mod orders;
pub mod relation;
pub mod semigroup;
pub mod starpair;
pub mod starred;
pub mod symbolic;
pub mod theorems;
pub mod verdict;

pub use error::{Counterexample, Error, Result};
pub use green::GreenData;
pub use orders::{OrderContext, Side};
pub use relation::{Partition, RelationMatrix};
pub use semigroup::{FiniteSemigroup, SubSemigroup};
pub use starred::StarredData;
pub use verdict::Verdict;
