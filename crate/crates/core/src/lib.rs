//! Finite generalized ordered sets.
//!
//! A strict relation `<` over a setoid is a *generalized order* when it is
//! asymmetric, transitive and positively antisymmetric, where positive
//! antisymmetry is stated through the weak order `≤_P` (see [`derived`]).
//! Ordered sets (asymmetric, cotransitive, negatively antisymmetric) are the
//! classical special case.
//!
//! The crate decides all of these axioms on finite carriers, builds products
//! and the poset bridge, compares eventually-constant sequences
//! lexicographically, and checks the accompanying theorems exhaustively on
//! small carriers ([`lab`]).

pub mod axioms;
pub mod derived;
pub mod error;
pub mod io;
pub mod lab;
pub mod matrix;
pub mod product;
pub mod seq;
pub mod setoid;
pub mod verdict;

pub use axioms::{classify, Axiom, AxiomProfile};
pub use derived::{compare_weak_orders, derive_leq_n, derive_leq_p, gord_to_poset, DerivedOrder, WeakOrderComparison};
pub use error::{OrdError, Result};
pub use matrix::BoolMatrix;
pub use product::{
    check_embedding, check_isomorphism, check_star_condition, coarse_product, lex_product, lex_product_n,
    poset_to_strict, weak_lex_product, EmbeddingMap, ProductElement, Side,
};
pub use seq::{seq_compare, seq_compare_bounded, seq_normalize, seq_universe, EvConstSeq, SeqVerdict};
pub use setoid::{check_well_defined, dual, PosetRel, Setoid, StrictRel};
pub use verdict::Verdict;
