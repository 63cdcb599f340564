//! A library for finite bands and antilattices.
//!
//! The layers, bottom up:
//!
//! - [`magma`]: Cayley tables, band predicates, Green's relations.
//! - [`rectband`]: generating matrices of rectangular bands, the linear-time
//!   rectangularity scan, normal form, Kronecker products, cartesian
//!   partitions.
//! - [`antilattice`]: compatible matrix pairs, types, normalization,
//!   products, regularity.
//! - [`congruence`]: congruences as compatible cartesian partition pairs,
//!   principal-congruence closure, full lattice enumeration, quotients, and
//!   the simple / irreducible / elementary / odd predicates.
//! - [`latinmagic`]: Latin squares, orthogonal pairs, semimagic squares, the
//!   construction of odd antilattices from orthogonal pairs, even graphs.
//! - [`io`], [`report`], [`dot`], [`fixtures`]: file formats, classification
//!   reports, DOT emission and the bundled fixture corpus backing the
//!   `antilat` command-line tool.

pub mod antilattice;
pub mod congruence;
pub mod latinmagic;
pub mod magma;
pub mod partition;
pub mod rectband;

pub use antilattice::{Antilattice, AntilatticeType};
pub use congruence::{Congruence, CongruenceLattice};
pub use magma::CayleyTable;
pub use partition::Partition;
pub use rectband::GeneratingMatrix;
