//! Gradual certification at runtime.
//!
//! Values are promoted into refinement-carrying [`Refined`] wrappers by
//! running decidable predicates ([`Pred`]); functions are wrapped by
//! higher-order casts that check at each call. A refuted cast either
//! becomes a failed-cast value that faults when projected
//! ([`FailureMode::Lazy`]) or faults on the spot ([`FailureMode::Eager`]).
//!
//! Two demonstrations live alongside the core: a gradually checked
//! expression compiler ([`compiler`]) and rationals whose construction is
//! guarded by interchangeable irreducibility deciders ([`rationals`]).
//!
//! ```
//! use gradual::{cast, instances::pred_lt_const, n, FailureMode};
//!
//! let lt10 = pred_lt_const(n(10));
//! let good = cast(&lt10, n(5), FailureMode::Lazy).unwrap();
//! assert_eq!(good.proj1().unwrap(), n(5));
//!
//! let bad = cast(&lt10, n(15), FailureMode::Lazy).unwrap();
//! assert_eq!(bad.to_string(), "failed_cast 15 (16 <= 10)");
//! assert!(bad.proj1().is_err());
//! ```

pub mod cast;
pub mod cli;
pub mod compiler;
pub mod hocast;
pub mod instances;
mod nat;
pub mod notation;
pub mod prop;
pub mod rationals;

pub use cast::{cast, cast_lazy, map_cast, try_cast, CastFault, FailureMode, Refined, CAST_FAILED};
pub use nat::{n, Nat};
pub use notation::Notation;
pub use prop::{Decision, Evidence, Pred, PredFamily};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/decidable.md")]
    mod decidable {}
    #[doc = include_str!("../../../book/src/casts.md")]
    mod casts {}
    #[doc = include_str!("../../../book/src/higher_order.md")]
    mod higher_order {}
    #[doc = include_str!("../../../book/src/compiler.md")]
    mod compiler {}
    #[doc = include_str!("../../../book/src/rationals.md")]
    mod rationals {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
