//! Library half of the `coxeter-ehrhart` command-line tool: the result
//! document and the command implementations behind each verb.

pub mod commands;
pub mod document;

pub use document::ResultDocument;
