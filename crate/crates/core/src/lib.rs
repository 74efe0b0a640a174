//! Legendrian knot front codes, generalized Legendrian racks, and the
//! coloring invariants that connect them.

pub mod audit;
pub mod coloring;
pub mod corpus;
pub mod frontcode;
pub mod glrack;
pub mod presentation;
pub mod text;

pub use audit::{corollary_gate, theorem1_gate, witness_search, AuditReport, CorollaryReport, Verdict, Witness};
pub use coloring::{
    closed_form_permutation, coloring_profile, count_bruteforce, count_colorings, ColoringOptions, ColoringResult,
};
pub use frontcode::{FrontCode, FrontError};
pub use glrack::{enumerate_glracks, is_isomorphic, validate_glrack, FiniteGlRack, FiniteRack};
pub use presentation::{
    extract_full, extract_reduced, reduce, summarize, FullPresentation, Presentation, PresentationSummary,
    ReducedPresentation,
};
