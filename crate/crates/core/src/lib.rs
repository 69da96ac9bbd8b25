//! Colored permutation groups `G(r,p,n)`: descent statistics, the descent
//! basis of the coinvariant algebra, colored tableaux and characters.

pub mod chars;
pub mod cli;
pub mod coinv;
pub mod exactnum;
pub mod group;
pub mod partition;
pub mod poly;
pub mod tabx;
pub mod verify;

pub use exactnum::{Cyclotomic, Rational};
pub use group::{ColoredPerm, GroupParams, Which};
pub use partition::{Partition, RPartition};

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] exactnum::ExactError),
    #[error(transparent)]
    Poly(#[from] poly::PolyError),
    #[error(transparent)]
    Group(#[from] group::GroupError),
    #[error(transparent)]
    Coinv(#[from] coinv::CoinvError),
    #[error(transparent)]
    Tabx(#[from] tabx::TabxError),
    #[error(transparent)]
    Chars(#[from] chars::CharsError),
}
