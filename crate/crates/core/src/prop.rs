//! Decidable propositions as values.
//!
//! A [`Pred<A>`] pairs a terminating decision procedure with a renderer that
//! prints the proposition instantiated at a given input. Complex procedures
//! are assembled from simple ones with the combinators in this module
//! ([`p_and`], [`p_forall_bounded`], [`p_equivalent`], ...).
//!
//! [`Evidence`] and the arms of [`Decision`] cannot be built outside this
//! crate. The only ways to obtain a `Holds` are to run a decision procedure
//! or to go through the explicit trust boundaries [`p_proven`] and
//! [`p_equivalent`], both of which carry a justification string.

use std::fmt;
use std::sync::Arc;

use crate::Nat;

/// Human-readable justification attached to a [`Decision`].
///
/// Only decision procedures in this crate create evidence:
///
/// ```compile_fail
/// let forged = gradual::Evidence { summary: "16 <= 10".into() };
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    summary: String,
}

impl Evidence {
    pub(crate) fn new(summary: impl Into<String>) -> Self {
        Evidence {
            summary: summary.into(),
        }
    }

    pub fn summary(&self) -> &str {
        &self.summary
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary)
    }
}

/// Outcome of running a decision procedure.
///
/// Both arms are `#[non_exhaustive]`: they can be matched with
/// `Decision::Holds { evidence, .. }` but only constructed by this crate.
///
/// ```compile_fail
/// # use gradual::{Decision, Evidence};
/// fn forge(e: Evidence) -> Decision {
///     Decision::Holds { evidence: e }
/// }
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    #[non_exhaustive]
    Holds { evidence: Evidence },
    #[non_exhaustive]
    Refutes { refutation: Evidence },
}

impl Decision {
    pub(crate) fn holds(summary: impl Into<String>) -> Self {
        Decision::Holds {
            evidence: Evidence::new(summary),
        }
    }

    pub(crate) fn refutes(summary: impl Into<String>) -> Self {
        Decision::Refutes {
            refutation: Evidence::new(summary),
        }
    }

    pub fn is_holds(&self) -> bool {
        matches!(self, Decision::Holds { .. })
    }

    pub fn is_refutes(&self) -> bool {
        !self.is_holds()
    }

    /// The evidence or refutation, whichever arm is populated.
    pub fn justification(&self) -> &Evidence {
        match self {
            Decision::Holds { evidence } => evidence,
            Decision::Refutes { refutation } => refutation,
        }
    }
}

type DecideFn<A> = dyn Fn(&A) -> Decision + Send + Sync;
type RenderFn<A> = dyn Fn(&A) -> String + Send + Sync;
type FamilyFn<A, B> = dyn Fn(&A) -> Pred<B> + Send + Sync;

/// A decidable unary property over `A`.
///
/// `decide` must be a pure, terminating function of its input. Every
/// predicate handed out by this crate satisfies that; predicates built from
/// a user-supplied witness ([`p_relate`]) inherit whatever the witness does.
pub struct Pred<A: ?Sized> {
    decide: Arc<DecideFn<A>>,
    render: Arc<RenderFn<A>>,
    level: u8,
}

// Notation levels of the rendered connectives, loosest binding highest.
const ATOM: u8 = 70;
const NOT: u8 = 75;
const AND: u8 = 80;
const OR: u8 = 85;
const IMPLIES: u8 = 99;

impl<A: ?Sized> Clone for Pred<A> {
    fn clone(&self) -> Self {
        Pred {
            decide: Arc::clone(&self.decide),
            render: Arc::clone(&self.render),
            level: self.level,
        }
    }
}

impl<A: ?Sized> fmt::Debug for Pred<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Pred").finish_non_exhaustive()
    }
}

impl<A: ?Sized + 'static> Pred<A> {
    pub(crate) fn from_fns<D, R>(decide: D, render: R) -> Self
    where
        D: Fn(&A) -> Decision + Send + Sync + 'static,
        R: Fn(&A) -> String + Send + Sync + 'static,
    {
        Pred {
            decide: Arc::new(decide),
            render: Arc::new(render),
            level: ATOM,
        }
    }

    fn at_level(mut self, level: u8) -> Self {
        self.level = level;
        self
    }

    /// The rendering, parenthesized unless it binds at least as tightly as
    /// `max`.
    fn render_operand(&self, a: &A, max: u8) -> String {
        let text = self.render(a);
        if self.level > max {
            format!("({text})")
        } else {
            text
        }
    }

    pub fn decide(&self, a: &A) -> Decision {
        (self.decide)(a)
    }

    /// The proposition instantiated at `a`.
    pub fn render(&self, a: &A) -> String {
        (self.render)(a)
    }

    /// Views this predicate through a projection: the result decides `self`
    /// on `project(b)`.
    pub fn on<B, F>(&self, project: F) -> Pred<B>
    where
        B: ?Sized + 'static,
        F: Fn(&B) -> A + Send + Sync + 'static,
        A: Sized,
    {
        let project = Arc::new(project);
        let for_render = Arc::clone(&project);
        let decide = Arc::clone(&self.decide);
        let render = Arc::clone(&self.render);
        Pred::from_fns(move |b: &B| decide(&project(b)), move |b: &B| render(&for_render(b))).at_level(self.level)
    }
}

/// A family of predicates indexed by a value, e.g. the binary property
/// `P a b` viewed as `a ↦ (b ↦ P a b)`.
pub struct PredFamily<A: ?Sized, B: ?Sized> {
    at: Arc<FamilyFn<A, B>>,
}

impl<A: ?Sized, B: ?Sized> Clone for PredFamily<A, B> {
    fn clone(&self) -> Self {
        PredFamily {
            at: Arc::clone(&self.at),
        }
    }
}

impl<A: ?Sized + 'static, B: ?Sized + 'static> PredFamily<A, B> {
    pub fn new<F>(at: F) -> Self
    where
        F: Fn(&A) -> Pred<B> + Send + Sync + 'static,
    {
        PredFamily { at: Arc::new(at) }
    }

    /// The family that ignores its index.
    pub fn constant(pred: Pred<B>) -> Self {
        PredFamily::new(move |_: &A| pred.clone())
    }

    pub fn at(&self, a: &A) -> Pred<B> {
        (self.at)(a)
    }
}

pub fn p_true<A: ?Sized + 'static>() -> Pred<A> {
    Pred::from_fns(|_: &A| Decision::holds("True"), |_: &A| "True".to_string())
}

pub fn p_false<A: ?Sized + 'static>() -> Pred<A> {
    Pred::from_fns(|_: &A| Decision::refutes("~ False"), |_: &A| "False".to_string())
}

/// Conjunction. The left conjunct is decided first and a refutation of it
/// short-circuits the right one.
pub fn p_and<A: ?Sized + 'static>(p: Pred<A>, q: Pred<A>) -> Pred<A> {
    let (pr, qr) = (p.clone(), q.clone());
    Pred::from_fns(
        move |a: &A| match p.decide(a) {
            Decision::Refutes { refutation } => Decision::refutes(format!("left conjunct fails: {refutation}")),
            Decision::Holds { evidence: left } => match q.decide(a) {
                Decision::Holds { evidence: right } => Decision::holds(format!("{left} /\\ {right}")),
                Decision::Refutes { refutation } => Decision::refutes(format!("right conjunct fails: {refutation}")),
            },
        },
        move |a: &A| format!("{} /\\ {}", pr.render_operand(a, AND - 1), qr.render_operand(a, AND)),
    )
    .at_level(AND)
}

pub fn p_or<A: ?Sized + 'static>(p: Pred<A>, q: Pred<A>) -> Pred<A> {
    let (pr, qr) = (p.clone(), q.clone());
    Pred::from_fns(
        move |a: &A| match p.decide(a) {
            Decision::Holds { evidence } => Decision::holds(format!("left disjunct holds: {evidence}")),
            Decision::Refutes { refutation: left } => match q.decide(a) {
                Decision::Holds { evidence } => Decision::holds(format!("right disjunct holds: {evidence}")),
                Decision::Refutes { refutation: right } => Decision::refutes(format!("{left} /\\ {right}")),
            },
        },
        move |a: &A| format!("{} \\/ {}", pr.render_operand(a, OR - 1), qr.render_operand(a, OR)),
    )
    .at_level(OR)
}

pub fn p_not<A: ?Sized + 'static>(p: Pred<A>) -> Pred<A> {
    let pr = p.clone();
    Pred::from_fns(
        move |a: &A| match p.decide(a) {
            Decision::Holds { evidence } => Decision::refutes(format!("{evidence} holds")),
            Decision::Refutes { refutation } => Decision::holds(refutation.summary),
        },
        move |a: &A| format!("~ {}", pr.render_operand(a, NOT)),
    )
    .at_level(NOT)
}

/// Implication: holds when the antecedent is refuted or the consequent
/// holds. The consequent is only decided when the antecedent holds.
pub fn p_implies<A: ?Sized + 'static>(p: Pred<A>, q: Pred<A>) -> Pred<A> {
    let (pr, qr) = (p.clone(), q.clone());
    Pred::from_fns(
        move |a: &A| match p.decide(a) {
            Decision::Refutes { refutation } => Decision::holds(format!("antecedent fails: {refutation}")),
            Decision::Holds { evidence: ante } => match q.decide(a) {
                Decision::Holds { evidence } => Decision::holds(format!("consequent holds: {evidence}")),
                Decision::Refutes { refutation } => Decision::refutes(format!("{ante} but {refutation}")),
            },
        },
        move |a: &A| {
            format!(
                "{} -> {}",
                pr.render_operand(a, IMPLIES - 1),
                qr.render_operand(a, IMPLIES)
            )
        },
    )
    .at_level(IMPLIES)
}

/// A proposition established outside the program.
///
/// Trust boundary: nothing is checked. `description` names where the
/// proof lives and becomes both the evidence and the rendering.
pub fn p_proven<A: ?Sized + 'static>(description: impl Into<String>) -> Pred<A> {
    let description: Arc<str> = description.into().into();
    let rendered = Arc::clone(&description);
    Pred::from_fns(
        move |_: &A| Decision::holds(description.to_string()),
        move |_: &A| rendered.to_string(),
    )
}

/// Decides a proposition through an equivalent one.
///
/// Trust boundary: the caller asserts that `render_override(a)` holds iff
/// `substitute` holds at `a`. Failures report the original proposition,
/// never the substitute.
pub fn p_equivalent<A, R>(substitute: Pred<A>, render_override: R, justification: impl Into<String>) -> Pred<A>
where
    A: ?Sized + 'static,
    R: Fn(&A) -> String + Send + Sync + 'static,
{
    let justification: Arc<str> = justification.into().into();
    Pred::from_fns(
        move |a: &A| match substitute.decide(a) {
            Decision::Holds { evidence } => Decision::holds(format!("{evidence} (equivalence: {justification})")),
            Decision::Refutes { refutation } => {
                Decision::refutes(format!("{refutation} (equivalence: {justification})"))
            }
        },
        render_override,
    )
}

/// `forall n, n <= k -> family(n) n`, decided by enumerating `0..=k` in
/// increasing order. A refutation names the least counterexample.
///
/// Renders as the explicit conjunction of the `k + 1` instances.
pub fn p_forall_bounded(k: Nat, family: PredFamily<Nat, Nat>) -> Pred<()> {
    let for_render = family.clone();
    let level = if k == Nat::ZERO {
        family.at(&Nat::ZERO).level
    } else {
        AND
    };
    Pred::from_fns(
        move |_: &()| {
            for i in 0..=k.get() {
                let n = Nat::new(i);
                if let Decision::Refutes { refutation } = family.at(&n).decide(&n) {
                    return Decision::refutes(format!("counterexample n = {n}: {refutation}"));
                }
            }
            Decision::holds(format!("checked every n <= {k}"))
        },
        move |_: &()| {
            (0..=k.get())
                .map(|i| {
                    let n = Nat::new(i);
                    let max = if n == k { AND } else { AND - 1 };
                    for_render.at(&n).render_operand(&n, max)
                })
                .collect::<Vec<_>>()
                .join(" /\\ ")
        },
    )
    .at_level(level)
}

/// The proposition `Is_true b`.
pub fn p_is_true(b: bool) -> Pred<()> {
    Pred::from_fns(
        move |_: &()| {
            if b {
                Decision::holds("Is_true true")
            } else {
                Decision::refutes("~ Is_true false")
            }
        },
        move |_: &()| format!("Is_true {b}"),
    )
}

/// Boolean reflection: a proposition decided by a boolean witness.
///
/// The link between `witness` and the rendered proposition is not checked
/// here; [`check_relate_spec`] tests it against a reference decider.
pub fn p_relate<A, W, R>(witness: W, render: R) -> Pred<A>
where
    A: ?Sized + 'static,
    W: Fn(&A) -> bool + Send + Sync + 'static,
    R: Fn(&A) -> String + Send + Sync + 'static,
{
    Pred::from_fns(
        move |a: &A| {
            if witness(a) {
                Decision::holds("witness = true")
            } else {
                Decision::refutes("witness = false")
            }
        },
        render,
    )
}

/// A sample on which a witness and its reference decider disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement<A> {
    pub sample: A,
    pub witness: bool,
    pub reference_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelateReport<A> {
    pub checked: usize,
    pub disagreements: Vec<Disagreement<A>>,
}

impl<A> RelateReport<A> {
    /// No disagreement on any sample.
    pub fn is_respected(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Samples the specification `witness(a) = true <-> reference holds at a`.
///
/// # Panics
///
/// If `samples` is empty: an empty run says nothing about the witness.
pub fn check_relate_spec<A, W, I>(witness: W, reference: &Pred<A>, samples: I) -> RelateReport<A>
where
    A: Clone + 'static,
    W: Fn(&A) -> bool,
    I: IntoIterator<Item = A>,
{
    let mut checked = 0;
    let mut disagreements = Vec::new();
    for sample in samples {
        checked += 1;
        let w = witness(&sample);
        let r = reference.decide(&sample).is_holds();
        if w != r {
            disagreements.push(Disagreement {
                sample,
                witness: w,
                reference_holds: r,
            });
        }
    }
    assert!(checked > 0, "check_relate_spec needs at least one sample");
    RelateReport { checked, disagreements }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::dec_le;
    use crate::n;

    fn le_pred(x: u64, y: u64) -> Pred<()> {
        Pred::from_fns(move |_: &()| dec_le(n(x), n(y)), move |_: &()| format!("{x} <= {y}"))
    }

    fn le9() -> Pred<Nat> {
        Pred::from_fns(|m: &Nat| dec_le(*m, n(9)), |m: &Nat| format!("{m} <= 9"))
    }

    #[test]
    fn constants() {
        assert!(p_true::<u64>().decide(&0).is_holds());
        assert!(p_true::<u64>().decide(&12345).is_holds());
        assert_eq!(p_true::<u64>().render(&42), "True");
        assert!(p_false::<u64>().decide(&0).is_refutes());
        assert!(p_false::<u64>().decide(&99).is_refutes());
        assert_eq!(p_false::<u64>().render(&7), "False");
    }

    #[test]
    fn conjunction_reports_first_failing_conjunct() {
        assert!(p_and(le_pred(3, 5), p_true()).decide(&()).is_holds());

        let right = p_and(p_true::<()>(), p_false()).decide(&());
        assert!(right.justification().summary().starts_with("right conjunct"));

        let left = p_and(p_false::<()>(), p_false()).decide(&());
        assert!(left.justification().summary().starts_with("left conjunct"));

        assert_eq!(p_and(le_pred(3, 5), p_true()).render(&()), "3 <= 5 /\\ True");
    }

    #[test]
    fn conjunction_short_circuits() {
        use std::sync::atomic::{AtomicUsize, Ordering};
        static CALLS: AtomicUsize = AtomicUsize::new(0);
        let counting = p_relate(
            |_: &()| {
                CALLS.fetch_add(1, Ordering::SeqCst);
                true
            },
            |_: &()| "counted".into(),
        );
        assert!(p_and(p_false(), counting).decide(&()).is_refutes());
        assert_eq!(CALLS.load(Ordering::SeqCst), 0);
    }

    #[test]
    fn other_connectives() {
        assert!(p_or(p_false::<()>(), p_true()).decide(&()).is_holds());
        assert!(p_not(p_false::<()>()).decide(&()).is_holds());
        assert!(p_implies(p_false::<()>(), p_false()).decide(&()).is_holds());
        assert!(p_implies(p_true::<()>(), p_false()).decide(&()).is_refutes());
        assert_eq!(p_not(p_true::<()>()).render(&()), "~ True");
        let (t, f) = (p_true::<()>, p_false::<()>);
        assert_eq!(p_not(p_and(t(), f())).render(&()), "~ (True /\\ False)");
        assert_eq!(p_not(p_not(t())).render(&()), "~ ~ True");
        assert_eq!(p_and(p_and(t(), f()), t()).render(&()), "(True /\\ False) /\\ True");
        assert_eq!(p_and(t(), p_and(f(), t())).render(&()), "True /\\ False /\\ True");
        assert_eq!(
            p_or(p_and(t(), f()), p_not(t())).render(&()),
            "True /\\ False \\/ ~ True"
        );
        assert_eq!(p_and(p_or(t(), f()), t()).render(&()), "(True \\/ False) /\\ True");
        assert_eq!(
            p_implies(p_implies(t(), f()), t()).render(&()),
            "(True -> False) -> True"
        );
        assert_eq!(p_implies(t(), p_implies(f(), t())).render(&()), "True -> False -> True");
        let nested = p_forall_bounded(crate::n(1), PredFamily::constant(p_or(p_true::<Nat>(), p_false())));
        assert_eq!(nested.render(&()), "(True \\/ False) /\\ (True \\/ False)");
        assert_eq!(p_not(nested).render(&()), "~ ((True \\/ False) /\\ (True \\/ False))");
        assert_eq!(p_or(p_true::<()>(), p_false()).render(&()), "True \\/ False");
        assert_eq!(p_implies(p_true::<()>(), p_false()).render(&()), "True -> False");
    }

    #[test]
    fn proven_is_trusted_verbatim() {
        let p = p_proven::<u64>("lemma 3 of design doc");
        let d = p.decide(&17);
        assert!(d.is_holds());
        assert_eq!(d.justification().summary(), "lemma 3 of design doc");
    }

    #[test]
    fn proven_is_neutral_under_conjunction() {
        let both = p_and(p_proven("x"), le9());
        for i in 0..20 {
            let m = n(i);
            assert_eq!(both.decide(&m).is_holds(), le9().decide(&m).is_holds());
        }
    }

    #[test]
    fn equivalent_reports_original_proposition() {
        let p = p_equivalent(le9(), |m: &Nat| format!("{m} < 10"), "same order");
        assert!(p.decide(&n(4)).is_holds());
        assert!(p.decide(&n(10)).is_refutes());
        assert_eq!(p.render(&n(10)), "10 < 10");

        let id = p_equivalent(le9(), |m: &Nat| format!("{m} <= 9"), "id");
        for i in 0..20 {
            assert_eq!(id.decide(&n(i)).is_holds(), le9().decide(&n(i)).is_holds());
            assert_eq!(id.render(&n(i)), le9().render(&n(i)));
        }
    }

    #[test]
    fn forall_bounded_cases() {
        let all_true = p_forall_bounded(n(10), PredFamily::constant(p_true()));
        assert!(all_true.decide(&()).is_holds());

        let up_to_9 = p_forall_bounded(n(10), PredFamily::constant(le9()));
        let d = up_to_9.decide(&());
        assert!(d.is_refutes());
        assert!(d.justification().summary().starts_with("counterexample n = 10:"));

        let zero = p_forall_bounded(
            n(0),
            PredFamily::new(|_: &Nat| p_relate(|m: &Nat| m.get() == 0, |m: &Nat| format!("{m} = 0"))),
        );
        assert!(zero.decide(&()).is_holds());
        assert_eq!(zero.render(&()), "0 = 0");
    }

    #[test]
    fn forall_bounded_reports_least_counterexample() {
        let odd = p_forall_bounded(
            n(20),
            PredFamily::constant(p_relate(
                |m: &Nat| m.get() < 7 || m.get() % 2 == 1,
                |m: &Nat| format!("ok {m}"),
            )),
        );
        let d = odd.decide(&());
        assert!(d.justification().summary().starts_with("counterexample n = 8:"));
    }

    #[test]
    fn is_true_reflects_boolean() {
        assert!(p_is_true(true).decide(&()).is_holds());
        assert!(p_is_true(false).decide(&()).is_refutes());
        assert_eq!(p_is_true(false).render(&()), "Is_true false");
        assert_eq!(p_is_true(true).render(&()), "Is_true true");
    }

    #[test]
    fn relate_follows_witness() {
        let even = p_relate(|a: &u64| a.is_multiple_of(2), |a: &u64| format!("even {a}"));
        let d = even.decide(&4);
        assert!(d.is_holds());
        assert_eq!(d.justification().summary(), "witness = true");
        assert!(even.decide(&3).is_refutes());
        let always = p_relate(|_: &u64| true, |_: &u64| "T".into());
        assert!((0..50).all(|a| always.decide(&a).is_holds()));
    }

    #[test]
    fn relate_spec_harness() {
        // Reference built from arithmetic, independent of the witness.
        let parity = Pred::from_fns(
            |a: &u64| {
                if a - 2 * (a / 2) == 0 {
                    Decision::holds("a mod 2 = 0")
                } else {
                    Decision::refutes("a mod 2 <> 0")
                }
            },
            |a: &u64| format!("{a} mod 2 = 0"),
        );
        let report = check_relate_spec(|a: &u64| a.is_multiple_of(2), &parity, 0..100);
        assert!(report.is_respected());
        assert_eq!(report.checked, 100);

        let bad = check_relate_spec(|_: &u64| true, &p_false(), [1u64]);
        assert_eq!(bad.disagreements.len(), 1);
        assert_eq!(bad.disagreements[0].sample, 1);

        let le9_witness = check_relate_spec(|m: &Nat| m.get() <= 9, &le9(), (0..=20).map(n));
        assert!(le9_witness.is_respected());
    }

    #[test]
    #[should_panic(expected = "at least one sample")]
    fn relate_spec_rejects_empty_samples() {
        let _ = check_relate_spec(|_: &u64| true, &p_true(), Vec::<u64>::new());
    }

    #[test]
    fn projection_reuses_decider() {
        let on_len = le9().on(|s: &String| n(s.len() as u64));
        assert!(on_len.decide(&"short".to_string()).is_holds());
        assert_eq!(on_len.render(&"0123456789".to_string()), "10 <= 9");
    }

    #[test]
    fn predicates_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Pred<Nat>>();
        assert_send_sync::<PredFamily<Nat, Nat>>();
        let p = le9();
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let p = p.clone();
                std::thread::spawn(move || p.decide(&n(i * 4)).is_holds())
            })
            .collect();
        let got: Vec<bool> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(got, vec![true, true, true, false]);
    }
}
