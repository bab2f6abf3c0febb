//! Words, finite presentations and coset enumeration.

mod todd_coxeter;
mod word;

pub use todd_coxeter::{perm_rep_from_table, todd_coxeter, CosetTable};
pub use word::{GroupElement, Letter, Presentation, Word};
