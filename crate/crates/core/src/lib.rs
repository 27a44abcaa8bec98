//! Orientations, tensions and flows of graphs embedded on orientable surfaces.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod generator;
pub mod limits;
pub mod orientation;
pub mod ribbon;
pub mod verify;

pub use enumeration::{IntegerPolynomial, Kind, QuasiPolynomial};
pub use error::{Error, Result};
pub use generator::{corpus_stats, generate, CorpusSpec};
pub use limits::Limits;
pub use orientation::{Orientation, OrientationClass};
pub use ribbon::{AbstractGraph, EulerData, RibbonGraph};
pub use verify::{verify_graph, BatchReport, VerificationReport};
