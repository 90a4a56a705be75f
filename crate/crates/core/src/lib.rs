//! Exact chamber geometry for stability spaces attached to simply-laced
//! Dynkin and affine Dynkin diagrams.
//!
//! The crate models points of the distinguished component of the space of
//! stability conditions by a central charge together with the classes of
//! the simple objects of the heart and a per-vertex shift ledger. Every
//! computation is exact: charges are Gaussian rationals and wall-crossing
//! times are rational numbers.
//!
//! Modules, bottom-up:
//!
//! - [`diagrams`]: the A/D/E catalog, Euler forms, marks, automorphisms.
//! - [`rootsys`]: class vectors, reflections, roots, regularity.
//! - [`weylbraid`]: braid words, Weyl matrices, relation checks.
//! - [`charges`]: central charges and their group actions.
//! - [`cover`]: states, wall crossing, path lifting, monodromy,
//!   normalization, exchange graphs.
//! - [`constellations`]: King θ-stability on affine type A cycles.
//! - [`io`] and [`cli`]: JSON formats and the command-line surface.

// Matrix code reads best with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod charges;
pub mod cli;
pub mod constellations;
pub mod cover;
pub mod diagrams;
pub mod error;
pub mod gauss;
pub mod io;
pub mod linalg;
pub mod rootsys;
pub mod weylbraid;

pub use charges::{act_weyl, evaluate, in_fundamental, CentralCharge, ScalarAction};
pub use cover::{
    act_automorphism, cross, exchange_bfs, initial_state, lift_path, loop_from_word, monodromy,
    normalize, rotate_loop, ChargePath, CoverState, DeckTransform, Direction, Event,
};
pub use diagrams::{Diagram, Family, GraphAutomorphism, Marks};
pub use error::{Error, Result};
pub use gauss::{Gauss, Rational};
pub use rootsys::{enumerate_roots, euler_form, is_regular, reflect, AffineRootView, ClassVector};
pub use weylbraid::{verify_relations, word_to_matrix, BraidWord, Letter, Sign, WeylMatrix};
