//! An inverse system of nonempty sets with onto bonding maps whose inverse
//! limit is empty, made concrete.
//!
//! * [`ordinal`]: Cantor normal form ordinals below ε₀, generic over the
//!   coefficient type, with a text grammar.
//! * [`point`]: the sets `X_α` of points, their validation and enumeration.
//! * [`bonding`]: the bonding maps `f^β_α` and their sections.
//! * [`thread`]: finite compatible families and the properties that block a
//!   full thread.
//! * [`oracle`]: exhaustive and sampled verification of every law.
//! * [`demo`]: the worked examples.
//!
//! Points, maps and families are generic over any totally ordered element
//! type, so the laws can be exercised over plain integers as well as over
//! ordinals.

pub mod bonding;
pub mod demo;
pub mod ordinal;
pub mod oracle;
pub mod point;
pub mod thread;

use num_bigint::BigUint;

pub use bonding::{check_composition, check_identity, project, section, section_with_witness, BondingError, MapSpec};
pub use ordinal::{Cnf, Coefficient, Comparison, ParseError, Successor};
pub use point::{enumerate_schemas, sample_point, Point, PointError, Schema};
pub use thread::{project_family, Family, FamilyError, ProfileRow};

/// Ordinal with arbitrary-precision coefficients.
pub type Ordinal = Cnf<BigUint>;

/// Ordinal with `u64` coefficients.
pub type SmallOrdinal = Cnf<u64>;

/// Point over [`Ordinal`].
pub type OrdPoint = Point<Ordinal>;

/// Family over [`Ordinal`].
pub type OrdFamily = Family<Ordinal>;
