//! A kernel for coherence terms of weak higher transformations: the globe
//! category of arities, pasting trees and their realizations, terms of the
//! free magma, the theory of operations, coherence lifts stage by stage, a
//! strict oracle on a small fragment, and a declarative surface language.

pub mod coherator;
pub mod corpus;
pub mod exec;
pub mod globe;
pub mod pasting;
pub mod strictify;
pub mod surface;
pub mod term;
pub mod theory;
