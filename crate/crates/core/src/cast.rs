//! The cast operator.
//!
//! [`cast`] runs a decision procedure on a plain value. On success the value
//! is wrapped together with the evidence; on failure the result depends on
//! the [`FailureMode`]:
//!
//! * [`FailureMode::Lazy`] produces a *failed cast*: a [`Refined`] that
//!   records what was cast and which proposition was violated, but holds no
//!   value. Nothing goes wrong until someone projects out of it.
//! * [`FailureMode::Eager`] reports the [`CastFault`] immediately.
//!
//! A failed cast never yields its value or evidence: [`Refined::proj1`] and
//! [`Refined::proj2`] both fault on it.

use std::fmt;

use crate::notation::Notation;
use crate::prop::{Decision, Evidence, Pred};

/// Fixed prefix of every cast fault message.
pub const CAST_FAILED: &str = "Cast has failed";

/// When a refuted cast is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum FailureMode {
    /// Produce a failed cast and fault only on projection.
    #[default]
    Lazy,
    /// Fault at the cast itself.
    Eager,
}

/// A cast that was refuted and then observed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{CAST_FAILED}: failed_cast {value_arg} ({prop_text})")]
pub struct CastFault {
    value_text: String,
    value_arg: String,
    prop_text: String,
}

impl CastFault {
    pub(crate) fn new(value: &impl Notation, prop_text: String) -> Self {
        CastFault {
            value_text: value.notation(),
            value_arg: value.notation_arg(),
            prop_text,
        }
    }

    pub(crate) fn from_texts(value_text: String, value_arg: String, prop_text: String) -> Self {
        CastFault {
            value_text,
            value_arg,
            prop_text,
        }
    }

    /// Always exactly [`CAST_FAILED`].
    pub fn message(&self) -> &'static str {
        CAST_FAILED
    }

    /// Rendering of the value that was cast.
    pub fn value_text(&self) -> &str {
        &self.value_text
    }

    /// The violated proposition.
    pub fn prop_text(&self) -> &str {
        &self.prop_text
    }
}

/// The result of a cast: a value paired with evidence, or a failed cast.
///
/// There is no public constructor; values come from [`cast`] and friends.
///
/// ```compile_fail
/// let forged: gradual::Refined<gradual::Nat> = gradual::Refined { state: todo!() };
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refined<A> {
    state: State<A>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum State<A> {
    Attested {
        value: A,
        prop_text: String,
        evidence: Evidence,
    },
    Failed(CastFault),
}

impl<A> Refined<A> {
    pub fn is_attested(&self) -> bool {
        matches!(self.state, State::Attested { .. })
    }

    pub fn is_failed(&self) -> bool {
        !self.is_attested()
    }

    /// The proposition that was claimed, instantiated at the cast value.
    pub fn prop_text(&self) -> &str {
        match &self.state {
            State::Attested { prop_text, .. } => prop_text,
            State::Failed(fault) => fault.prop_text(),
        }
    }

    /// The fault this failed cast would raise on projection.
    pub fn failure(&self) -> Option<&CastFault> {
        match &self.state {
            State::Attested { .. } => None,
            State::Failed(fault) => Some(fault),
        }
    }

    /// First projection.
    pub fn proj1(self) -> Result<A, CastFault> {
        match self.state {
            State::Attested { value, .. } => Ok(value),
            State::Failed(fault) => Err(fault),
        }
    }

    /// Borrowing first projection.
    pub fn value(&self) -> Result<&A, CastFault> {
        match &self.state {
            State::Attested { value, .. } => Ok(value),
            State::Failed(fault) => Err(fault.clone()),
        }
    }

    /// Second projection: the evidence that the proposition holds.
    pub fn proj2(&self) -> Result<&Evidence, CastFault> {
        match &self.state {
            State::Attested { evidence, .. } => Ok(evidence),
            State::Failed(fault) => Err(fault.clone()),
        }
    }
}

impl<A: Notation> fmt::Display for Refined<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.state {
            State::Attested { value, evidence, .. } => write!(f, "({}; {})", value.notation(), evidence),
            State::Failed(fault) => {
                write!(f, "failed_cast {} ({})", fault.value_arg, fault.prop_text)
            }
        }
    }
}

/// Casts `a` into the refinement described by `pred`.
///
/// In [`FailureMode::Lazy`] this never returns `Err`.
pub fn cast<A: Notation + 'static>(pred: &Pred<A>, a: A, mode: FailureMode) -> Result<Refined<A>, CastFault> {
    let prop_text = pred.render(&a);
    match pred.decide(&a) {
        Decision::Holds { evidence } => Ok(Refined {
            state: State::Attested {
                value: a,
                prop_text,
                evidence,
            },
        }),
        Decision::Refutes { .. } => {
            let fault = CastFault::new(&a, prop_text);
            match mode {
                FailureMode::Lazy => Ok(Refined {
                    state: State::Failed(fault),
                }),
                FailureMode::Eager => Err(fault),
            }
        }
    }
}

/// [`cast`] in the default lazy mode.
pub fn cast_lazy<A: Notation + 'static>(pred: &Pred<A>, a: A) -> Refined<A> {
    match cast(pred, a, FailureMode::Lazy) {
        Ok(r) => r,
        Err(_) => unreachable!("lazy casts do not fault"),
    }
}

/// The monadic cast: failure is an ordinary value, and `Ok` is always
/// attested.
pub fn try_cast<A: Notation + 'static>(pred: &Pred<A>, a: A) -> Result<Refined<A>, CastFault> {
    let r = cast_lazy(pred, a);
    match r.state {
        State::Failed(fault) => Err(fault),
        attested => Ok(Refined { state: attested }),
    }
}

/// Casts every element. In eager mode the first refuted element faults.
pub fn map_cast<A, I>(pred: &Pred<A>, xs: I, mode: FailureMode) -> Result<Vec<Refined<A>>, CastFault>
where
    A: Notation + 'static,
    I: IntoIterator<Item = A>,
{
    xs.into_iter().map(|x| cast(pred, x, mode)).collect()
}
