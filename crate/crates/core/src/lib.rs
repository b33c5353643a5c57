//! Laplacian eigenvalue distribution of graphs versus girth.
//!
//! The crate builds the named graph families, computes Laplacian spectra
//! exactly (integer characteristic polynomial plus Sturm root counting) and
//! numerically (Jacobi rotations), and checks the girth bounds on
//! `m_G[n - g - k + 4, n]` over isomorphism-free enumerations of small
//! connected graphs.

pub mod canon;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod interval;
pub mod jacobi;
pub mod poly;
pub mod spectra;
pub mod verify;

pub use canon::{canonical_form, canonical_graph, is_isomorphic, CanonError};
pub use enumerate::{enumerate_connected, enumerate_connected_filtered, EnumConfig, EnumError};
pub use families::{make, FamilyError, FamilySpec};
pub use graph::{Graph, GraphError, GraphStats};
pub use graph6::{emit_graph6, parse_graph6};
pub use interval::{IntervalSpec, IntervalTemplate};
pub use poly::IntegerPolynomial;
pub use spectra::{
    charpoly, eigenvalues_numeric, laplacian, m_interval, mu_k, mu_k_compare, ExactSpectrum,
    SpectraError, Spectrum,
};
pub use verify::{TheoremReport, VerifyError};
