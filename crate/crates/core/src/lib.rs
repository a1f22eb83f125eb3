//! Exact d-distance p-packing domination numbers, constructions and
//! recognisers for the extremal graph families, and an exhaustive
//! verification harness over small trees and connected bipartite graphs.

pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod harness;
pub mod recognizers;
pub mod solver;

pub use error::{Error, ParseError, Result};
pub use graph::Graph;
