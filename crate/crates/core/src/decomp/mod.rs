//! Double-star decompositions: auxiliary matching graph, certificates,
//! necessary conditions, the exact decision procedure and its backtracking
//! oracle, hypothesis checkers for the sufficient conditions, and the
//! `S_{1,1}` baseline.

mod aux;
mod bipartite;
pub(crate) mod brute;
mod kotzig;
mod necessary;
mod search;
mod star;
mod theorems;

pub use aux::{build_aux, hopcroft_karp, AuxBipartite, CenterSet};
pub use bipartite::{
    bipartite_domination_check, bipartite_matching_condition, DominationCheck, MatchingCondition,
};
pub use brute::{brute_force_decompose, BRUTE_FORCE_MAX_EDGES};
pub use kotzig::s11_decompose;
pub use necessary::{necessary_conditions, NecessaryReport};
pub use search::{
    center_count, decide_s12, decide_s12_traced, decide_s1r, decide_s1r_traced,
    decompose_with_centers, Decision, Refusal, SearchLimits, DEFAULT_SCALE_MAX,
};
pub use star::{
    verify_certificate, Certificate, CertificateDefect, DoubleStar, CERTIFICATE_VERSION,
};
pub use theorems::{
    is_independent_cycling_set, r_divisibility, theorem_cycling_applies, theorem_main_applies,
    theorem_r_cycling_applies, CubicHypotheses,
};
