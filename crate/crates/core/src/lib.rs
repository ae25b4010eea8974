//! Weak integer additive set-indexers (weak IASIs) on finite simple graphs.
//!
//! A set-indexer assigns every vertex a finite set of non-negative integers so
//! that vertex labels are pairwise distinct and the induced edge labels (the
//! sumsets of the endpoint labels) are pairwise distinct too. It is *weak* when
//! every edge label is exactly as large as the larger of its two endpoint
//! labels. The sparing number of a graph is the fewest singleton-labelled
//! ("mono-indexed") edges any weak IASI of it can have.
//!
//! The crate computes the sparing number exactly, together with the related
//! quantities it is compared against: the maximum bipartite subgraph (max cut),
//! matching number, chromatic number, and independence / vertex-cover numbers.
//! Every answer comes with a certificate that can be checked independently.
//!
//! ```
//! use weak_iasi::{graph::NamedGraph, solvers, sumset};
//!
//! let petersen = NamedGraph::Petersen.build();
//! let cert = solvers::sparing_number_exact(&petersen).unwrap();
//! assert_eq!(cert.phi, 3);
//! let report = sumset::verify_iasi(&petersen, &cert.labeling).unwrap();
//! assert!(report.is_weak_iasi());
//! ```

pub mod error;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod solvers;
pub mod sumset;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, NamedGraph};
pub use solvers::{BipartizationCertificate, SparingCertificate};
pub use sumset::{IasiLabeling, SetLabel};
pub use theorems::{TheoremReport, Verdict};
