//! Concrete decision procedures: order on naturals and structural equality
//! for naturals, booleans, lists and options.

use std::sync::Arc;

use crate::notation::Notation;
use crate::prop::{Decision, Pred};
use crate::Nat;

/// Decides `x <= y`.
pub fn dec_le(x: Nat, y: Nat) -> Decision {
    if x <= y {
        Decision::holds(format!("{x} <= {y}"))
    } else {
        Decision::refutes(format!("~ {x} <= {y}"))
    }
}

/// `n < k`, rendered in successor form `(n+1) <= k`.
pub fn pred_lt_const(k: Nat) -> Pred<Nat> {
    Pred::from_fns(
        move |m: &Nat| match m.checked_add(Nat::ONE) {
            Some(s) => dec_le(s, k),
            None => Decision::refutes(format!("~ {} <= {k}", u128::from(m.get()) + 1)),
        },
        move |m: &Nat| format!("{} <= {k}", u128::from(m.get()) + 1),
    )
}

/// `n > k`, rendered as `(k+1) <= n`.
pub fn pred_gt_const(k: Nat) -> Pred<Nat> {
    Pred::from_fns(
        move |m: &Nat| match k.checked_add(Nat::ONE) {
            Some(s) => dec_le(s, *m),
            None => Decision::refutes(format!("~ {} <= {m}", u128::from(k.get()) + 1)),
        },
        move |m: &Nat| format!("{} <= {m}", u128::from(k.get()) + 1),
    )
}

/// `n <= k`.
pub fn pred_le_const(k: Nat) -> Pred<Nat> {
    Pred::from_fns(move |m: &Nat| dec_le(*m, k), move |m: &Nat| format!("{m} <= {k}"))
}

/// `lower <= m`.
pub fn pred_ge_const(lower: Nat) -> Pred<Nat> {
    Pred::from_fns(
        move |m: &Nat| dec_le(lower, *m),
        move |m: &Nat| format!("{lower} <= {m}"),
    )
}

type EqFn<A> = dyn Fn(&A, &A) -> Decision + Send + Sync;
type EqRenderFn<A> = dyn Fn(&A, &A) -> String + Send + Sync;

/// Decidable equality on `A`.
pub struct EqDec<A> {
    decide: Arc<EqFn<A>>,
    render: Arc<EqRenderFn<A>>,
}

impl<A> Clone for EqDec<A> {
    fn clone(&self) -> Self {
        EqDec {
            decide: Arc::clone(&self.decide),
            render: Arc::clone(&self.render),
        }
    }
}

impl<A: Notation + 'static> EqDec<A> {
    fn with_notation<D>(decide: D) -> Self
    where
        D: Fn(&A, &A) -> Decision + Send + Sync + 'static,
    {
        EqDec {
            decide: Arc::new(decide),
            render: Arc::new(|x: &A, y: &A| format!("{} = {}", x.notation(), y.notation())),
        }
    }
}

impl<A: 'static> EqDec<A> {
    pub fn eq_decide(&self, x: &A, y: &A) -> Decision {
        (self.decide)(x, y)
    }

    pub fn render_eq(&self, x: &A, y: &A) -> String {
        (self.render)(x, y)
    }

    /// The predicate `a = target`.
    pub fn against(&self, target: A) -> Pred<A>
    where
        A: Send + Sync,
    {
        let target = Arc::new(target);
        let rendered_target = Arc::clone(&target);
        let (decide, render) = (Arc::clone(&self.decide), Arc::clone(&self.render));
        Pred::from_fns(
            move |a: &A| decide(a, &target),
            move |a: &A| render(a, &rendered_target),
        )
    }
}

pub fn eq_nat() -> EqDec<Nat> {
    EqDec::with_notation(|x: &Nat, y: &Nat| {
        if x == y {
            Decision::holds(format!("{x} = {y}"))
        } else {
            Decision::refutes(format!("{x} <> {y}"))
        }
    })
}

pub fn eq_bool() -> EqDec<bool> {
    EqDec::with_notation(|x: &bool, y: &bool| {
        if x == y {
            Decision::holds(format!("{x} = {y}"))
        } else {
            Decision::refutes(format!("{x} <> {y}"))
        }
    })
}

/// Equality on lists derived from equality on elements, by recursion on
/// the first list.
pub fn eq_list<A: Notation + 'static>(elem: EqDec<A>) -> EqDec<Vec<A>> {
    EqDec::with_notation(move |xs: &Vec<A>, ys: &Vec<A>| list_eq(&elem, xs, ys))
}

fn list_eq<A: 'static>(elem: &EqDec<A>, xs: &[A], ys: &[A]) -> Decision {
    match (xs.split_first(), ys.split_first()) {
        (None, None) => Decision::holds("nil = nil"),
        (None, Some(_)) | (Some(_), None) => Decision::refutes("nil <> cons"),
        (Some((x, xs)), Some((y, ys))) => match elem.eq_decide(x, y) {
            Decision::Refutes { refutation } => Decision::refutes(format!("heads differ: {refutation}")),
            Decision::Holds { .. } => list_eq(elem, xs, ys),
        },
    }
}

pub fn eq_option<A: Notation + 'static>(elem: EqDec<A>) -> EqDec<Option<A>> {
    EqDec::with_notation(move |x: &Option<A>, y: &Option<A>| match (x, y) {
        (None, None) => Decision::holds("None = None"),
        (Some(_), None) | (None, Some(_)) => Decision::refutes("Some <> None"),
        (Some(a), Some(b)) => match elem.eq_decide(a, b) {
            Decision::Holds { evidence } => Decision::holds(format!("Some: {evidence}")),
            Decision::Refutes { refutation } => Decision::refutes(format!("Some: {refutation}")),
        },
    })
}
