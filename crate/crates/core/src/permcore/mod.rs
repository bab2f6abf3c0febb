//! Permutations and the general-purpose permutation group algorithms the
//! rest of the crate builds on.

mod group;
mod perm;
mod quotient;
mod regular;
mod subgroups;

pub use group::{element_cap, set_element_cap, PermGroup, DEFAULT_ELEMENT_CAP};
pub use perm::{is_prime, p_part, prime_factors, Permutation};
pub use quotient::BlockQuotient;
pub use regular::RegularRep;
pub use subgroups::Simplicity;
