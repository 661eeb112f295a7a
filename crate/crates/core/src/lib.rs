//! Exhaustive decision procedures for finite rings and finite modules.
//!
//! Every ring is stored as dense addition and multiplication tables over the
//! carrier `{0, .., n-1}`. On top of that the crate decides, by exhaustive
//! scans, whether a ring or module has the summand sum property (SSP), the
//! summand intersection property (SIP), the C2 and C3 conditions, von
//! Neumann regularity and semisimplicity, and runs the known equivalences
//! between these notions as executable cross-checks.
//!
//! ```
//! use summand::ring::{construct, RingDescriptor};
//! use summand::props::{check_ssp, SspMethod};
//! use summand::Side;
//!
//! let z6 = construct(&RingDescriptor::Zmod { n: 6 }).unwrap();
//! assert!(check_ssp(&z6, Side::Right, SspMethod::Definitional).holds);
//! ```

pub mod caps;
mod error;
mod group;
pub mod ideal;
pub mod module;
pub mod props;
pub mod ring;
pub mod set;

pub use caps::Caps;
pub use error::{Error, Result};
pub use ideal::Side;
pub use ring::{Elem, FiniteRing};
pub use set::ElemSet;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/summands.md")]
    mod summands {}
    #[doc = include_str!("../../../book/src/properties.md")]
    mod properties {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
}
