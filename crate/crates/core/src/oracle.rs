//! Definition-level sparing number for tiny graphs.
//!
//! Enumerates every choice of which vertices get non-singleton labels, builds
//! an actual labeling for it, and keeps the choices whose sumsets pass the weak
//! check. Nothing here assumes that non-singleton vertices must be independent;
//! that fact is what the comparison against [`crate::solvers`] tests.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{mask_to_vec, Graph};
use crate::solvers::{sparing_number_exact, SparingCertificate};
use crate::sumset::{mono_indexed_edges, pattern_labeling, verify_iasi};

pub const ORACLE_LIMIT: usize = 7;

/// Whether giving the vertices of `wide` two-element labels (and every other
/// vertex a singleton) yields a weak IASI, decided from the actual sumsets.
pub fn pattern_feasible(g: &Graph, wide: u64) -> Result<bool> {
    let labeling = pattern_labeling(g, wide);
    Ok(verify_iasi(g, &labeling)?.is_weak_iasi())
}

/// Sparing number by exhaustive enumeration of singleton/non-singleton patterns.
///
/// The returned certificate lists the lexicographically smallest optimal
/// non-singleton vertex set under `independent_set`.
pub fn sparing_oracle(g: &Graph) -> Result<SparingCertificate> {
    if g.n() > ORACLE_LIMIT {
        return Err(Error::TooLarge { n: g.n(), limit: ORACLE_LIMIT });
    }
    let mut best: Option<SparingCertificate> = None;
    for wide in 0..1u64 << g.n() {
        let labeling = pattern_labeling(g, wide);
        if !verify_iasi(g, &labeling)?.is_weak_iasi() {
            continue;
        }
        let mono_edges = mono_indexed_edges(g, &labeling)?;
        let candidate =
            SparingCertificate { phi: mono_edges.len(), independent_set: mask_to_vec(wide), mono_edges, labeling };
        let better = match &best {
            None => true,
            Some(b) => (candidate.phi, &candidate.independent_set) < (b.phi, &b.independent_set),
        };
        if better {
            best = Some(candidate);
        }
    }
    Ok(best.expect("the all-singleton pattern is always feasible"))
}

/// Oracle and solver certificates for one graph.
#[derive(Clone, Debug, Serialize)]
pub struct CrossValidation {
    pub agree: bool,
    pub oracle: SparingCertificate,
    pub solver: SparingCertificate,
}

pub fn cross_validate(g: &Graph) -> Result<CrossValidation> {
    let oracle = sparing_oracle(g)?;
    let solver = sparing_number_exact(g)?;
    Ok(CrossValidation { agree: oracle.phi == solver.phi, oracle, solver })
}
