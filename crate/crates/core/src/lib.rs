//! Uniform hypergraphs, their adjacency-tensor spectral radius, Berge
//! containment, and the spectral and edge-count bounds for Berge-free linear
//! hypergraphs.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line tool and parallel search live in the `hyperturan` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod berge;
pub mod bounds;
pub mod canon;
pub mod error;
pub mod extremal;
pub mod hypergraph;
pub mod shadow;
pub mod spectral;
pub mod walks;

pub use berge::{
    contains_berge, enumerate_berge_family, expansion, is_family_free, BergeEmbedding,
    Enlargement, PatternGraph,
};
pub use bounds::{BoundReport, Verdict};
pub use error::{Error, Result};
pub use extremal::{
    enumerate_extremal, random_linear, verify_corpus, BoundCheck, Objective, SearchResult,
    SearchSpec,
};
pub use hypergraph::{HmBipartition, Neighborhoods, SubHypergraph, UniformHypergraph};
pub use shadow::{two_shadow, Multigraph};
pub use spectral::{spectral_radius, spectral_radius_with, SpectralOptions, SpectralResult};
pub use walks::{count_walks, count_walks_with, walk_totals, OverflowPolicy, WalkTable};
