//! Partial orders on standard Young tableaux.
//!
//! The crate builds the weak order, the chain order and the
//! chain-strip order on `SYT_n`, along with the tableau machinery they rest
//! on: Robinson-Schensted insertion, jeu de taquin restriction, sequences of
//! horizontal strips, descent sets, transposition and evacuation. A claim
//! harness ([`verification`]) checks the structural properties of these
//! orders exhaustively for small `n`.
//!
//! ```
//! use chainstrip::{StandardTableau, orders};
//!
//! let s: StandardTableau = "1,3,4/2,5,6".parse().unwrap();
//! let t: StandardTableau = "1,3,4/2,6/5".parse().unwrap();
//! assert_eq!(s.shs(), t.shs());
//! assert!(orders::chain_leq(&s, &t).unwrap());
//! ```

pub mod cli;
pub mod descent;
pub mod enumerate;
pub mod error;
pub mod jdt;
pub mod ops;
pub mod orders;
pub mod partition;
pub mod permutation;
pub mod poset;
pub mod rsk;
pub mod strip;
pub mod tableau;
mod text;
pub mod verification;

pub use descent::DescentSet;
pub use enumerate::{enumerate_syt, enumerate_syt_shape};
pub use error::{Error, Result};
pub use jdt::{restrict, SkewTableau};
pub use ops::{backslash_concat, slash_concat};
pub use partition::Partition;
pub use orders::{OrderKind, SytCatalog, SytOrder};
pub use permutation::{InversionSet, Permutation};
pub use poset::{poset_from_edges, FinitePoset, MapMode, MapVerdict, PosetFile};
pub use rsk::{insertion_tableau, inverse_rsk, knuth_class, rsk};
pub use strip::StripSequence;
pub use tableau::{PartialTableau, StandardTableau};
