//! Library surface of the `skewcat` CLI: the document model, the parser, and
//! the directive runner. The binary in `main.rs` is a thin wrapper.

pub mod document;
pub mod parse;
pub mod run;

pub use document::SpecDocument;
pub use parse::{parse, Env, ParseError};
pub use run::{demo_document, run, Report};
