//! Exact solvers for the NP-hard invariants used by the decomposition
//! theorems, plus general and bipartite matching primitives.

mod domination;
mod hall;
mod independence;
mod matching;

pub use domination::{domination_number, DominatingWitness};
pub use hall::{hall_violator, BipartiteGraph, HALL_EXHAUSTIVE_MAX};
pub use independence::{
    enumerate_independent_sets, independence_number, IndependenceWitness, IndependentSets,
};
pub use matching::max_matching_general;
