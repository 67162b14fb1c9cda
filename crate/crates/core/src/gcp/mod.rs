//! The list conjugacy procedure for free products of parabolic factors.
//!
//! * [`relative_length_bound`] and [`theorem4_bound`] evaluate the bounds on
//!   the relative length and the `X`-length of a shortest conjugator.
//! * [`tuple_trace`], [`pigeonhole_shorten`] and [`shorten_to_fixpoint`]
//!   shorten a conjugator whenever two prefixes conjugate the `a`-list to
//!   the same tuple.
//! * [`compress_parabolic_components`] replaces parabolic syllables whose
//!   connectors lie in the syllable's factor by short witnesses returned by
//!   the factor's list-conjugacy oracle.
//! * [`solve_bounded`] and [`solve`] search the ball `B_R(1)` in a
//!   deterministic order.

mod bounds;
mod compress;
mod instance;
mod profile;
mod search;
mod trace;

use thiserror::Error;

use crate::groups::GroupError;
use crate::oracles::OracleError;
use crate::relative::RelativeError;

pub use bounds::{relative_length_bound, relative_length_bound_for, theorem4_bound, Bounds};
pub use compress::{compress_parabolic_components, Compression, SyllableCase, SyllableReport};
pub use instance::{ConjugacyInstance, InstanceFile};
pub use profile::ConstantsProfile;
pub use search::{
    search, solve, solve_bounded, verify_conjugator, Decision, Mode, SearchConfig, SearchStats,
    Verdict,
};
pub use trace::{
    connectors, pigeonhole_shorten, shorten_to_fixpoint, tuple_trace, Fixpoint, Shortening,
    TupleTrace,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GcpError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Relative(#[from] RelativeError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("lists have different lengths ({a} and {b})")]
    LengthMismatch { a: usize, b: usize },
    #[error("instance lists must be nonempty")]
    EmptyLists,
    #[error("a[{first}] = a[{second}] but b[{first}] != b[{second}]: the lists are not conjugate")]
    InconsistentDuplicates { first: usize, second: usize },
    #[error("constant {0} is not defined by the profile")]
    MissingConstant(String),
    #[error("invalid constants profile: {0}")]
    InvalidProfile(String),
    #[error("bound is too large to represent")]
    BoundOverflow,
    #[error("the given element does not conjugate the instance")]
    NotAConjugator,
    #[error("oracle for factor {factor} rejected the connectors at syllable {position}")]
    OracleFailure { position: usize, factor: usize },
    #[error("oracle witness at syllable {position} has length {length} above its bound {bound}")]
    WitnessTooLong {
        position: usize,
        length: usize,
        bound: usize,
    },
}
