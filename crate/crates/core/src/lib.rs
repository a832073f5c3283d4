//! Graph embeddings, their wirelength, and exact checks of wirelength via
//! edge cuts and isoperimetric optima.

pub mod cli;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod isoperimetric;
pub mod layouts;
pub mod oracle;
pub mod report;

pub use embedding::{CutPartition, EdgeCut, Embedding, MclVerdict};
pub use error::{Error, Result};
pub use graph::{Family, Graph};
