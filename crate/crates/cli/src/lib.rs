//! Expression front end for exact reduced power algebra computations:
//! lexer, parser, session evaluation, and text/JSON rendering. The `rpa`
//! binary wires these to flags, scripts, and a REPL.

pub mod ast;
pub mod errors;
pub mod lexer;
pub mod parser;
pub mod render;
pub mod session;
