pub mod coeff;
pub mod error;
pub mod grammar;
pub mod hecke;
pub mod partition;
pub mod perm;
pub mod psi;
pub mod repn;
pub mod series;
pub mod symfun;
pub mod trace;
pub mod verify;

pub use coeff::{IntLaurent, Scalar};
pub use error::{Error, Result};
pub use hecke::HeckeElt;
pub use partition::Partition;
pub use perm::Perm;
pub use series::{Algebra, TruncSeries};
pub use symfun::SymFunc;
