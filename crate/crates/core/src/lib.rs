//! Exact edge decomposition of cubic graphs into the double-star `S_{1,2}`
//! (a claw with one edge extended), and of `r`-regular graphs into
//! `S_{1,r-1}`.
//!
//! The decision procedure searches center sets: the degree-`r` vertices of
//! any decomposition form an independent set of forced size, and a fixed
//! center set decomposes exactly when an auxiliary bipartite graph between
//! centers and the remaining edges has a perfect matching. Every positive
//! answer comes with a [`Certificate`] that [`verify_certificate`] checks
//! independently.
//!
//! ```
//! use stardecomp::{decide_s12, graph6::parse_graph6, verify_certificate};
//!
//! let q3 = parse_graph6("GsXP_[").unwrap();
//! let cert = decide_s12(&q3).unwrap().expect("the 3-cube decomposes");
//! assert_eq!(cert.stars.len(), 3);
//! assert!(verify_certificate(&q3, &cert, 3).is_ok());
//! ```

pub mod decomp;
pub mod error;
pub mod graph;
pub mod invariants;

pub use decomp::*;
pub use error::{Error, Result};
pub use graph::{
    edge, graph6, random_cubic, random_regular, ComponentInfo, ComponentKind, Edge, Graph,
    BITSET_MAX_ORDER,
};
pub use invariants::*;
