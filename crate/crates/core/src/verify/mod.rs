//! Exhaustive checks of the girth bounds, the girth-3 classification, the
//! `Y_{n,1}` factorization and the supporting spectral lemmas.

mod girth3;
mod girth_bound;
mod lemmas;
mod report;
mod y1;

use thiserror::Error;

pub use girth3::{
    classify_girth3, exhaustive_thr, exhaustive_thr_over, ClassificationLabel, Girth3Catalog,
    Girth3Statistic, Label,
};
pub use girth_bound::{
    check_girth_bound, exhaustive_equality_search, exhaustive_equality_search_over,
    expected_equality_catalog, y1_remark_search, GirthBoundCheck, Y1RemarkReport,
};
pub use lemmas::{lemma_suite, LemmaOutcome, LemmaSuiteReport};
pub use report::{CatalogCheck, ReportParams, TheoremId, TheoremReport};
pub use y1::{verify_y1_factorization, Y1Report};

use crate::canon::CanonError;
use crate::enumerate::EnumError;
use crate::families::FamilyError;
use crate::graph::GraphError;
use crate::spectra::SpectraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is a forest, girth undefined")]
    Forest,
    #[error("girth {girth} below 4")]
    GirthBelowFour { girth: usize },
    #[error("girth {girth} is not 3")]
    GirthNotThree { girth: usize },
    #[error("k = {k} outside the valid range 1..={max} (min(g-1, n-g))")]
    KOutOfRange { k: usize, max: usize },
    #[error("order {n} below the minimum {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("order {n} above the maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("reports for different sweeps cannot be merged")]
    MergeMismatch,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Canon(#[from] CanonError),
}
