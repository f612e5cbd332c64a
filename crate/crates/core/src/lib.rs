//! Exact multisegment calculus for Weyl modules over quantum affine
//! `sl(n+1)`.
//!
//! Simple and Weyl modules are indexed by tuples of integer intervals
//! (segments). The crate computes closures of such tuples under the
//! endpoint-crossing operators `tau_{m,l}`, and from them the dominant
//! l-weights of Weyl modules, Hom dimensions between Weyl modules, socles,
//! normal forms for mixed tensor products and Ext-vanishing certificates.
//! An independent q-character oracle built from snake paths is provided for
//! checking every weight-level claim.
//!
//! The rank `n` is never stored; every operation that depends on it takes it
//! as an argument.

pub mod closure;
pub mod error;
pub mod lweight;
pub mod multisegment;
pub mod qchar;
pub mod roots;
pub mod segment;
pub mod text;
pub mod theory;

pub use closure::{
    canonical_closed, closed_elements, closure, dominant_ancestor, is_closed, ClosureSet,
};
pub use error::{Error, Result};
pub use lweight::LWeight;
pub use multisegment::{connected, iota, Multisegment, Sign};
pub use qchar::{
    enumerate_paths, fundamental_qchar, pair_simple_qchar, soclehom_weight, weyl_qchar, CornerData,
    Path, QChar,
};
pub use roots::{alpha, decompose_into_roots, dominance_leq, RootVector};
pub use segment::Segment;
pub use text::{parse_lweight, parse_multisegment};
pub use theory::{
    ext_vanishing, hom_dim, is_irreducible_weyl, mixed_weyl_maps, socle, subcategory_membership,
    weyl_dominant_weights, weylpermute_check, ExtVerdict, MixedWeylMaps, SocleSummand,
};
