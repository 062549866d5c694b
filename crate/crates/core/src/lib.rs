#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod catalog;
pub mod cohomology;
pub mod lie;
pub mod linalg;
pub mod rational;
pub mod sl2;
pub mod subsets;
