//! Colouring algorithms for graphs with bounded local connectivity:
//! constructive Brooks-type colouring for k-connected graphs of maximal
//! local edge-connectivity k, optimal colouring when that bound is 3 (with
//! wheel-morass certificates for the uncolourable blocks), degree-list and
//! FPT machinery, hardness-reduction instance generators, and brute-force
//! oracles for cross-validation.

pub mod brooks;
pub mod colouring;
pub mod connectivity;
pub mod fixtures;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod listfpt;
pub mod mlec;
pub mod morass;
pub mod oracle;
pub mod rng;
pub mod sampler;

pub use colouring::{ColourOutcome, Colouring, Obstruction};
pub use graph::{Graph, Vertex};
