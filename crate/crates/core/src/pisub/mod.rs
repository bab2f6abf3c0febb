//! π-subgroups: the exhaustive π-maximality test, ascent to all maximal
//! π-overgroups, Wielandt–Hartley indices, π-submaximality certificates and
//! the non-submaximality pipeline for extensions of `F₂³` by `GL₃(2)`.

mod corollary;
mod maximal;
mod primes;
mod witness;

pub use corollary::{
    build_alpha_extension, corollary_check, AuditEntry, CandidateAscent, CorollaryOptions,
    SubmaximalityVerdict, VerdictStatus, FACT_AUT, FACT_EMBEDDING,
};
pub use maximal::{
    element_key, is_pi_maximal, maximal_pi_overgroups, normalizer_index, pi_extensions,
    wielandt_hartley_check, PiMaximality,
};
pub use primes::{is_pi_element, is_pi_group, PrimeSet};
pub use witness::{verify_submaximality_witness, SubmaximalCertificate};
