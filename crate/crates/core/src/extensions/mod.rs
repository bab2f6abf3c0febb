//! Constructions of the groups under study: affine groups over GF(2),
//! wreath products, extensions of a module by a presented group, and
//! automorphisms built from 1-cocycles.

mod affine;
mod automorphism;
mod brute;
mod cocycles;
mod extension;
mod module;

pub use affine::{
    affine_perm_group, block_swap, dual_module_groups, example1_star_group, translation,
    wreath_base, wreath_embed, wreath_regular, DualModuleGroups,
};
pub use automorphism::{
    alpha_automorphism, automorphism_table, extend_by_automorphism, inner_witness, AutExtension,
    AutomorphismSpec,
};
pub use brute::{count_automorphisms_bruteforce, find_outer_involution};
pub use cocycles::{solve_1cocycles, Cocycle, CocycleSpace};
pub use extension::{
    enumerate_extensions, extension_by_tails, lifted_presentation, presented_order,
    standard_extensions, EnumeratedExtension, Extension, ExtensionOutcome, DEFAULT_MAX_COSETS,
};
pub use module::{module_word, ModuleAction, TailVector};
