//! Finite group-groupoids (internal categories in groups), crossed
//! modules, and the constructions relating them: derivations and the
//! Whitehead group, actor structures, semidirect products, holomorphs,
//! and the equivalence between the two settings.
//!
//! Everything is exhaustively verified at desk scale: structures are
//! validated element-by-element on construction, and the derived laws
//! (interchange, naturality, equivariance, ...) are rechecked rather
//! than assumed.

pub mod error;
pub mod group;
pub mod hom;
pub mod xmod;
pub mod gpgd;
pub mod nat;
pub mod bridge;
pub mod actions;

pub mod textfmt;
pub mod dot;
pub mod cli;

pub use error::{Error, Result};
pub use group::{Elt, FiniteGroup, Subgroup};
pub use hom::GroupHom;
