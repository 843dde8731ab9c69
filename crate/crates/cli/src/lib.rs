//! Presentation files, the example corpus, reports, the acceptance
//! criteria and the `pgroup` command line.

pub mod acceptance;
pub mod commands;
pub mod corpus;
pub mod fuzz;
pub mod grammar;
pub mod oracle;
pub mod report;

pub use corpus::Corpus;
pub use grammar::{format_presentation, parse_presentation, ParseError, PresentationFile};
pub use report::Report;
