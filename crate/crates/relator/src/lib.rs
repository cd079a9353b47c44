//! Exact combinatorial group theory tools: free-group words, Thue systems,
//! finitely presented groups, small cancellation certificates, van Kampen
//! diagrams, integer Smith normal form and presentation-complex homology,
//! and unimodular symmetric bilinear forms.
//!
//! Everything is exact arithmetic (arbitrary-precision integers and
//! rationals); there is no floating point anywhere. All values are immutable
//! after construction and safe to share across threads.
//!
//! The crate ships runnable walkthroughs under `examples/` and one thin
//! command-line binary (`relator`) wiring the same library calls.

pub mod words;

pub mod rewriting;

pub mod presentations;

pub mod homology;

pub mod smallcancel;

pub mod constructions;

pub mod diagrams;

pub mod forms;

pub mod pipeline;

pub use words::{Generator, Word, WordError};

pub use rewriting::{PositiveWord, ReachVerdict, RewriteError, ThueSystem};

pub use presentations::{Presentation, PresentationError, ReplayVerdict, TrivializationScript};

pub use homology::{IntegerMatrix, PresentationHomology, SnfResult};

pub use smallcancel::{CVerdict, DehnReducer, MetricVerdict, PieceReport};

pub use diagrams::VanKampenDiagram;

pub use forms::{BoundaryVerdict, FormClass, FormMatrix};
