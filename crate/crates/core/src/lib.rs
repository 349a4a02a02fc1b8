//! Eulerian graphs under edge switches.
//!
//! * [`graph`], [`codec`], [`canon`]: labeled simple graphs, their text
//!   encodings and canonical codes.
//! * [`switch`]: 1- and 2-switch moves and the Eulerian 2-switch neighborhood.
//! * [`generator`]: which `(n, m)` admit an Eulerian graph, with witnesses.
//! * [`transform`]: 2-switch sequences between Eulerian graphs with every
//!   intermediate graph Eulerian, and exact switch distance at small scale.
//! * [`hardness`]: the 1-switch gadget built from a cubic graph, with exact
//!   solvers used to check it.
//! * [`explorer`]: exhaustive enumeration of the 2-switch meta-graph.

pub mod canon;
pub mod codec;
pub mod error;
pub mod explorer;
pub mod generator;
pub mod graph;
mod hamilton;
pub mod hardness;
pub mod named;
pub mod switch;
pub mod transform;

pub use error::{Error, Result};
pub use generator::{generate, in_p, Feasibility, ParamPair};
pub use graph::{DegreeProfile, Edge, Graph};
pub use switch::{SwitchMove, SwitchSequence};
