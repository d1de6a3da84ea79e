//! CPS graphs of monomial algebras and the Yoneda algebra they describe.

pub mod automaton;
pub mod decide;
pub mod error;
pub mod ext;
pub mod fixtures;
pub mod graph;
pub mod ideal;
pub mod leading;
pub mod oracle;
pub mod poly;
pub mod presentation;
pub mod walks;
pub mod word;

pub use error::{Error, Result};
pub use graph::{CpsGraph, Edge, EdgeId, Vertex, VertexId};
pub use ideal::MonomialIdeal;
pub use presentation::{parse_presentation, Alphabet, Presentation};
pub use word::{Letter, Word};
