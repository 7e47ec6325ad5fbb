//! Littlewood-Richardson and level-`k` fusion coefficients of `sl(n)` as
//! counts of paths in Young's lattice.
//!
//! The classical coefficient `c^ν_{λμ}` counts paths from `λ` to `ν` whose
//! blocks fit `μ`. For `μ` with at most two columns the fusion coefficient
//! `N^{(k)ν}_{λμ}` counts the fitting paths through restricted partitions
//! that are fixed by a modified sign-reversing involution.

pub mod coefficient;
pub mod error;
pub mod exec;
pub mod involution;
pub mod partition;
pub mod path;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use partition::{FusionContext, Partition, Permutation};
pub use path::{Cell, LatticePath, PathTableau, Region};
pub use word::{BracketWord, Paren};
