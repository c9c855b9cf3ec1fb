//! The declarative surface language: parsing, printing, elaboration and
//! export of derivations.

use thiserror::Error;

pub mod ast;
pub mod elaborate;
pub mod export;
pub mod lexer;
pub mod parser;
pub mod print;

pub use ast::Decl;
pub use elaborate::{
    check_source, elaborate, parse_term_over, parse_tree_table, CheckReport, DOCUMENTED_OPERATIONS,
};
pub use export::{export_derivation, ExportFormat};
pub use lexer::SourcePos;
pub use parser::parse;
pub use print::print_file;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("{pos}: syntax error: {msg}")]
    Syntax { pos: SourcePos, msg: String },
    #[error("{pos}: {msg}")]
    Semantic { pos: SourcePos, msg: String },
}

impl SurfaceError {
    pub fn syntax(pos: SourcePos, msg: String) -> Self {
        SurfaceError::Syntax { pos, msg }
    }

    pub fn semantic(pos: SourcePos, msg: String) -> Self {
        SurfaceError::Semantic { pos, msg }
    }

    pub fn pos(&self) -> &SourcePos {
        match self {
            SurfaceError::Syntax { pos, .. } | SurfaceError::Semantic { pos, .. } => pos,
        }
    }
}
