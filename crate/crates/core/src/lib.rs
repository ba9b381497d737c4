//! Dependence and independence atoms: derivability, team and pregeometry
//! semantics, and verified countermodels.

pub mod atom;
pub mod cli;
pub mod countermodel;
pub mod derive;
pub mod error;
pub mod parser;
pub mod pregeometry;
pub mod team;
pub mod vars;

pub use atom::{atom_universe, Atom, AtomKind, Problem};
pub use derive::{derives, Judgment, Limits, Proof};
pub use error::{Error, Result};
pub use team::Team;
pub use vars::{VarId, VarSet, Vocab};
