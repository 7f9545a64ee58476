//! Colored permutation groups `G(r, n) = Z_r ≀ S_n` and their flag weak order.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`]: one-line permutations and the right weak order on `S_n`;
//! * [`group`]: colored permutations, generators `a_i`, `b_i`, statistics, notation;
//! * [`order`]: covers, the comparison criterion, Hasse diagrams and intervals;
//! * [`lattice`]: closed-form meets and joins, Möbius function, homotopy classes;
//! * [`oracle`]: brute-force versions of the order, meet, join and Möbius function;
//! * [`chains`]: maximal chains, pseudo-Coxeter moves and chain graphs;
//! * [`genfun`]: exact polynomials and the `finv`/`wdes` distribution identities;
//! * [`presentation`]: relation checks and generated subgroup orders;
//! * [`export`]: DOT/JSON output and the golden Hasse diagrams;
//! * [`checks`]: oracle-agreement suites with pass/fail reports.

pub mod chains;
pub mod checks;
pub mod error;
pub mod export;
pub mod genfun;
pub mod group;
pub mod lattice;
pub mod oracle;
pub mod order;
pub mod perm;
pub mod presentation;

pub use error::{Error, Result};
pub use group::{ColoredPermutation, GenKind, GeneratorLabel, GroupContext, PermStats};
pub use order::{build_hasse, build_interval, leq, HasseDiagram, Interval};
pub use perm::Perm;
