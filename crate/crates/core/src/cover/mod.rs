//! States of the modelled component and everything that moves them:
//! wall crossing, path lifting, loops and monodromy, normalization to the
//! fundamental chamber, exchange graphs, and graph automorphisms.
//!
//! A state is a point `(Z, heart)` recorded as the charge together with
//! the classes of the heart's simple objects. Equality of states only
//! compares this data plus the shift ledgers, so the model is the quotient
//! of the true covering space by whatever the K-theoretic shadow cannot
//! see. All checks built on it are necessary conditions.

mod exchange;
mod lift;
mod loops;
mod normalize;
mod state;

pub use exchange::{exchange_bfs, ExchangeEdge, ExchangeGraph, HeartKey};
pub use lift::{lift_path, lift_path_observed, ChargePath, Crossed, Event};
pub use loops::{
    coxeter_monodromy, loop_from_word, monodromy, rotate_loop, same_monodromy, DeckTransform,
};
pub use normalize::{normalization_target, normalize, replay, Normalization};
pub use state::{act_automorphism, cross, initial_state, CoverState, Direction, Slot};
