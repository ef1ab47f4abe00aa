//! Casts on functions.
//!
//! A higher-order cast wraps a function and defers checking to each call:
//!
//! * [`cast_fun_range`] strengthens the range, casting every result;
//! * [`cast_fun_dom`] weakens the domain, casting every argument before
//!   passing it on as a (possibly failed) [`Refined`];
//! * [`cast_forall_range`] and [`cast_forall_dom`] are the dependent
//!   variants, where the checked property or the shape of the result
//!   depends on the argument.
//!
//! Building a wrapper never runs a decision procedure, and wrappers carry no
//! state between calls.
//!
//! The dependent domain cast needs, in a dependently typed setting, a bridge
//! that rewrites the result type along the (possibly failed) cast. That
//! bridge is erased at runtime, so here [`cast_forall_dom`] behaves exactly
//! like [`cast_fun_dom`]. Dependent result shapes are represented by runtime
//! indexed data such as [`IList`], which carries its length.

use crate::cast::{cast, CastFault, FailureMode, Refined};
use crate::notation::{Level, Notation};
use crate::prop::{Pred, PredFamily};
use crate::Nat;

/// Casts the result of every call to `f` against `pred`.
pub fn cast_fun_range<A, B, F>(
    pred: Pred<B>,
    f: F,
    mode: FailureMode,
) -> impl Fn(&A) -> Result<Refined<B>, CastFault> + Send + Sync
where
    A: ?Sized,
    B: Notation + 'static,
    F: Fn(&A) -> B + Send + Sync,
{
    move |a: &A| cast(&pred, f(a), mode)
}

/// Casts the argument of every call against `pred` and hands the result to
/// `f`. In lazy mode `f` may receive a failed cast; it only faults if it
/// projects it.
pub fn cast_fun_dom<A, B, F>(
    pred: Pred<A>,
    f: F,
    mode: FailureMode,
) -> impl Fn(&A) -> Result<B, CastFault> + Send + Sync
where
    A: Notation + Clone + 'static,
    F: Fn(Refined<A>) -> Result<B, CastFault> + Send + Sync,
{
    move |a: &A| f(cast(&pred, a.clone(), mode)?)
}

/// Like [`cast_fun_range`], with the property chosen per argument.
pub fn cast_forall_range<A, B, F>(
    family: PredFamily<A, B>,
    f: F,
    mode: FailureMode,
) -> impl Fn(&A) -> Result<Refined<B>, CastFault> + Send + Sync
where
    A: ?Sized + 'static,
    B: Notation + 'static,
    F: Fn(&A) -> B + Send + Sync,
{
    move |a: &A| cast(&family.at(a), f(a), mode)
}

/// Domain cast for functions whose result shape depends on the argument.
/// Identical at runtime to [`cast_fun_dom`].
pub fn cast_forall_dom<A, B, F>(
    pred: Pred<A>,
    f: F,
    mode: FailureMode,
) -> impl Fn(&A) -> Result<B, CastFault> + Send + Sync
where
    A: Notation + Clone + 'static,
    F: Fn(Refined<A>) -> Result<B, CastFault> + Send + Sync,
{
    cast_fun_dom(pred, f, mode)
}

/// A list of naturals indexed by its length.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IList {
    length: Nat,
    items: Vec<Nat>,
}

impl IList {
    pub fn new(items: Vec<Nat>) -> Self {
        IList {
            length: Nat::new(items.len() as u64),
            items,
        }
    }

    pub fn length(&self) -> Nat {
        self.length
    }

    pub fn items(&self) -> &[Nat] {
        &self.items
    }

    /// Whether the length index agrees with the items.
    pub fn is_well_indexed(&self) -> bool {
        self.length.get() == self.items.len() as u64
    }
}

impl Notation for IList {
    fn level(&self) -> Level {
        if self.items.is_empty() {
            Level::Atom
        } else {
            Level::App
        }
    }

    /// `Cons <tail length> <item> (<tail>)`, ending in `Nil`.
    fn write_term(&self, out: &mut String) {
        let len = self.items.len();
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                out.push('(');
            }
            out.push_str(&format!("Cons {} {} ", len - i - 1, item));
        }
        out.push_str("Nil");
        for _ in 1..len {
            out.push(')');
        }
    }
}

/// The list of `n` zeros.
pub fn build_list(n: Nat) -> IList {
    IList::new(vec![Nat::ZERO; n.get() as usize])
}
