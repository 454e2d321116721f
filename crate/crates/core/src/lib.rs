pub mod algebra;
pub mod cli;
pub mod coproduct;
pub mod error;
pub mod io;
pub mod report;
pub mod tmodule;
pub mod traits;
pub mod truss;
pub mod words;
