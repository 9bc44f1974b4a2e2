//! Star anagrams: anagram pairs whose unicursal polygon, drawn over the first
//! word's letters arranged on a circle, never joins two former neighbours.
//!
//! The crate covers the whole pipeline: path arithmetic ([`path`]), path
//! enumeration for words with repeated letters ([`enumerate`]),
//! classification ([`classify`]), perfect-star number theory
//! ([`numtheory`]), a brute-force shape census ([`shapes`]), word-list
//! scanning ([`corpus`]) and SVG output ([`render`]).

pub mod classify;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod numtheory;
pub mod path;
pub mod render;
pub mod shapes;
pub mod word;

pub use classify::{
    classify_anagram, classify_path, is_perfect_path, is_star_path, reflective_order,
    rotational_order, Classification, StarClass, Symmetry,
};
pub use enumerate::{
    autostar_paths, count_paths, enumerate_paths, reverse_path, AnagramPair, PathSet,
};
pub use error::{Error, Result};
pub use path::{
    apply_steps, canonical_shape_key, edge_matrix, path_differences, steps_from_diffs, DiffVector,
    EdgeMatrix, Path, StepVector,
};
pub use word::normalize_word;
