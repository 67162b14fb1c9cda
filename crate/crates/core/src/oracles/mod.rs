//! Solvers used alongside the main procedure.
//!
//! * [`ParabolicOracle`]: list conjugacy inside a single factor, needed to
//!   compress parabolic syllables.
//! * [`bfs_conjugator_search`] and [`free_product_conjugacy_single`]:
//!   independent global oracles for cross-checking.
//! * [`calibrate_chi`]: sampled lower estimates for `chi`.

mod bfs;
mod calibrate;
mod free_product;
mod parabolic;

use thiserror::Error;

use crate::groups::{GroupError, GroupKind};
use crate::relative::RelativeError;

pub use bfs::bfs_conjugator_search;
pub use calibrate::{
    calibrate_chi, calibrate_chi_with, replay_witness, CalibrationReport, CalibrationWitness,
};
pub use free_product::free_product_conjugacy_single;
pub use parabolic::{abelian_gcp, finite_gcp, OracleKind, ParabolicOracle, ParabolicOracles};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Relative(#[from] RelativeError),
    #[error("lists have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("operation is not supported on a {0} group")]
    UnsupportedBackend(GroupKind),
    #[error("no conjugacy oracle for factor {0}")]
    MissingOracle(usize),
}
