//! Exact verification of signed Mahonian identities over the symmetric,
//! hyperoctahedral, even-signed and colored permutation groups.

pub mod characters;
pub mod cyclotomic;
pub mod element;
pub mod error;
pub mod poly;
pub mod registry;
pub mod stats;
pub mod verify;

pub use characters::{char_value, wreath_compose, CharName, CharSpec, Unit};
pub use cyclotomic::{cyclotomic_poly, CycInt};
pub use element::{
    abs_perm, compare_letters, decompose, enumerate, partitions, recompose, reduce_tilde, uset,
    ColoredPerm, Family, Letter, LetterOrder,
};
pub use error::{Error, Result};
pub use poly::{q_bracket, Monomial, Poly2};
pub use registry::{
    find, list_identities, registry, rhs_closed_form, Filter, IdentityRecord, Params, Tag,
};
pub use stats::StatName;
pub use verify::{verify, Source, Term, TermWeight, Verdict, Verifier, VerifyReport};
