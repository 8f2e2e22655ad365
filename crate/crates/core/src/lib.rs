//! Construction, measurement, enumeration and verification of linear bicyclic
//! uniform hypergraphs, aimed at the extremal values of their Zagreb index
//! (the sum of squared vertex degrees).

pub mod canon;
pub mod constructors;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod formulas;
pub mod girth;
pub mod hypergraph;
pub mod io;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use family::{Family, FamilySpec};
pub use hypergraph::{DegreeStats, Hypergraph, StructureClass, Vertex};
pub use canon::{are_isomorphic, canonical_code, CanonicalCode};
pub use enumerate::{enumerate_linear, extremal_scan, EnumerationReport, EnumerationRequest};
pub use formulas::{Domain, ExactValue};
pub use transforms::{classify_bicyclic, move_edges, strip_pendant_edges, ClassifyResult, MoveSpec};
pub use verify::{Verdict, VerifyOptions, VerifyReport};
