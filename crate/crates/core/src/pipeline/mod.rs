//! Constructive route from a fractional solution to a small hitting set, and
//! the random-deletion experiment on Delaunay edges.

mod experiment;
mod lp;
mod net;

pub use experiment::{clarkson_shor_experiment, edge_cap, ExperimentStats};
pub use lp::{fractional_piercing, set_weights, FractionalPiercing, EXACT_LIMIT};
pub use net::{epsilon_net, pq_hitting_set, EpsilonNet, NetMethod};
