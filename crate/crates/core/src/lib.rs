pub mod canonical;
pub mod connectivity;
pub mod error;
pub mod families;
pub mod graph;
pub mod growth;
pub mod io;
pub mod minor;
pub mod verify;

pub use canonical::{are_isomorphic, canonical_form, CanonicalForm};
pub use connectivity::{is_internally_4_connected, is_quasi_4_connected, Separation};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Graph, VertexSet};
pub use growth::{grow, Bounds, Filter, GrowthReport, Op, Seed};
pub use minor::{find_minor, has_minor, is_planar, verify_embedding, MinorEmbedding};
pub use verify::{ClaimResult, Status, VerifyReport};
