//! Lower ramification numbers of power series tangent to the identity over
//! prime fields, with a closed-form test for 2-ramified series.
//!
//! ```
//! use ramify::criterion::classify_two_ramified;
//! use ramify::literal::parse_series;
//! use ramify::ramification::lower_ramification;
//!
//! let (_, g) = parse_series("p=5; z + z^3", None)?;
//! assert!(classify_two_ramified(&g)?.is_two_ramified());
//! assert_eq!(lower_ramification(&g, 1, None)?.exact(), Some(12));
//! # Ok::<(), ramify::error::Error>(())
//! ```

pub mod census;
pub mod criterion;
pub mod error;
pub mod field;
pub mod identities;
pub mod literal;
pub mod poly;
pub mod ramification;
pub mod rational;
pub mod recurrence;
pub mod ring;
pub mod series;
