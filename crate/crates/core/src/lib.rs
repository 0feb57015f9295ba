//! Total cut complexes and bounded independence complexes of graphs, exact
//! integral simplicial homology, and a verification harness for their known
//! homotopy types.

pub mod chain;
pub mod complex;
pub mod family;
pub mod graph;
pub mod graph_complexes;
pub mod homology;
pub mod integer;
pub mod poset;
pub mod snf;
pub mod verify;
pub mod vertex_set;

pub use complex::{order_complex, ComplexError, Cover, SimplicialComplex};
pub use family::Family;
pub use graph::{Girth, Graph, GraphError};
pub use graph_complexes::{bounded_independence_complex, lift_to_parent, total_cut_complex, total_cut_complex_any, ComplexKind};
pub use integer::Integer;
pub use vertex_set::VertexSet;
pub use chain::{ChainComplex, Limits};
pub use homology::{
    cohomology_from_homology, matches_wedge, reduced_homology, relative_homology, verify_alexander_duality, HomologyError,
    HomologyProfile, WedgeClaim,
};
pub use poset::{compositions, verify_composition_wedge, CompositionPoset, PosetError};
