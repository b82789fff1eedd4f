//! Exact combinatorics of modified Macdonald polynomials: statistics on
//! fillings, flip bijections, canonical tableaux with their compact sums, and
//! the monomial expansion formulas.

pub mod canonical;
pub mod diagrams;
pub mod error;
pub mod flips;
pub mod golden;
pub mod monomial;
pub mod qt;
pub mod statistics;
pub mod verify;

pub use diagrams::{Filling, Partition, INF};
pub use error::{Error, Result};
pub use qt::{t_binomial, t_multinomial, MonomialSym, QtPoly};
pub use statistics::{EtaStatistic, Mode, QuadrupleSet, Stat};
