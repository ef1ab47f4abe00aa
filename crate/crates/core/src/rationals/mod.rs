//! Rationals whose construction is guarded by two casts.
//!
//! A [`Rat`] is `sign * top / bottom` with `bottom <> 0` and the fraction
//! irreducible:
//!
//! ```text
//! forall x y z, y * x = top /\ z * x = bottom -> 1 = x
//! ```
//!
//! The quantifier ranges over all naturals, so it is not directly
//! decidable. Three strategies decide it instead, each valid only once
//! `0 <> bottom` is known:
//!
//! * [`IrredStrategy::Bounded`] enumerates `x, y, z <= max top bottom` using
//!   [`Peano`] arithmetic;
//! * [`IrredStrategy::BinaryBounded`] runs the same enumeration on machine
//!   integers;
//! * [`IrredStrategy::Gcd`] checks `gcd top bottom = 1`.
//!
//! All three render failures as the irreducibility proposition above.

mod peano;

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::{Duration, Instant};

pub use peano::Peano;

use crate::cast::{CastFault, FailureMode};
use crate::prop::{p_equivalent, Decision, Pred};
use crate::Nat;

/// Euclid's algorithm. `gcd(0, b) = b` and `gcd(a, 0) = a`.
pub fn gcd(a: Nat, b: Nat) -> Nat {
    let (mut a, mut b) = (a.get(), b.get());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    Nat::new(a)
}

/// A bounded irreducibility decider was asked about a zero bottom, where
/// the bounded and gcd forms are no longer equivalent to irreducibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("irreducibility deciders require a nonzero bottom")]
pub struct ZeroBottom;

/// Number representation used by [`irreducible_bounded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Representation {
    /// Unary successor chains: every comparison walks the numbers.
    Peano,
    /// Machine words.
    Machine,
}

/// One of the three irreducibility deciders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum IrredStrategy {
    Bounded,
    BinaryBounded,
    #[default]
    Gcd,
}

impl IrredStrategy {
    pub const ALL: [IrredStrategy; 3] = [IrredStrategy::Bounded, IrredStrategy::BinaryBounded, IrredStrategy::Gcd];

    pub fn name(self) -> &'static str {
        match self {
            IrredStrategy::Bounded => "bounded",
            IrredStrategy::BinaryBounded => "binary",
            IrredStrategy::Gcd => "gcd",
        }
    }
}

impl fmt::Display for IrredStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IrredStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        IrredStrategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| format!("unknown strategy '{s}' (expected bounded, binary or gcd)"))
    }
}

trait BoundedArith {
    fn mul_eq(&self, y: u64, x: u64, target: u64) -> bool;
    fn is_one(&self, x: u64) -> bool;
}

struct PeanoTable(Vec<Peano>);

impl BoundedArith for PeanoTable {
    fn mul_eq(&self, y: u64, x: u64, target: u64) -> bool {
        let t = &self.0;
        Peano::mul_eq(&t[y as usize], &t[x as usize], &t[target as usize])
    }

    fn is_one(&self, x: u64) -> bool {
        self.0[x as usize].is_one()
    }
}

struct Machine;

impl BoundedArith for Machine {
    fn mul_eq(&self, y: u64, x: u64, target: u64) -> bool {
        y as u128 * x as u128 == target as u128
    }

    fn is_one(&self, x: u64) -> bool {
        x == 1
    }
}

/// Least `(x, y, z)` in lexicographic order with `y * x = top`,
/// `z * x = bottom` and `x <> 1`.
fn least_counterexample(arith: &impl BoundedArith, top: u64, bottom: u64) -> Option<(u64, u64, u64)> {
    let bound = top.max(bottom);
    for x in 0..=bound {
        for y in 0..=bound {
            for z in 0..=bound {
                if arith.mul_eq(y, x, top) && arith.mul_eq(z, x, bottom) && !arith.is_one(x) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Decides `forall x y z : bnat (max top bottom), y * x = top /\ z * x =
/// bottom -> 1 = x` by enumeration, refuting with the least counterexample.
///
/// Cost is cubic in `max top bottom`; with [`Representation::Peano`] every
/// step also walks unary numbers and the numeral table takes linear memory.
pub fn irreducible_bounded(top: Nat, bottom: Nat, arith: Representation) -> Result<Decision, ZeroBottom> {
    if bottom == Nat::ZERO {
        return Err(ZeroBottom);
    }
    let (t, b) = (top.get(), bottom.get());
    let found = match arith {
        Representation::Peano => least_counterexample(&PeanoTable(Peano::numerals(top.max(bottom))), t, b),
        Representation::Machine => least_counterexample(&Machine, t, b),
    };
    Ok(match found {
        None => Decision::holds(format!("checked every x, y, z <= {}", t.max(b))),
        Some((x, y, z)) => Decision::refutes(format!(
            "counterexample x = {x}, y = {y}, z = {z}: {y} * {x} = {t} /\\ {z} * {x} = {b} but 1 <> {x}"
        )),
    })
}

/// Decides `gcd top bottom = 1`.
pub fn irreducible_gcd(top: Nat, bottom: Nat) -> Result<Decision, ZeroBottom> {
    if bottom == Nat::ZERO {
        return Err(ZeroBottom);
    }
    let g = gcd(top, bottom);
    Ok(if g == Nat::ONE {
        Decision::holds(format!("gcd {top} {bottom} = 1"))
    } else {
        Decision::refutes(format!("gcd {top} {bottom} = {g}"))
    })
}

/// Runs the raw decider of `strategy`.
pub fn decide_irreducible(strategy: IrredStrategy, top: Nat, bottom: Nat) -> Result<Decision, ZeroBottom> {
    match strategy {
        IrredStrategy::Bounded => irreducible_bounded(top, bottom, Representation::Peano),
        IrredStrategy::BinaryBounded => irreducible_bounded(top, bottom, Representation::Machine),
        IrredStrategy::Gcd => irreducible_gcd(top, bottom),
    }
}

/// `forall x y z, y * x = top /\ z * x = bottom -> 1 = x`
pub fn render_irreducible(top: Nat, bottom: Nat) -> String {
    format!("forall x y z, y * x = {top} /\\ z * x = {bottom} -> 1 = x")
}

/// `0 <> bottom`
pub fn render_bottom_cond(bottom: Nat) -> String {
    format!("0 <> {bottom}")
}

/// The bottom condition as a predicate.
pub fn bottom_pred() -> Pred<Nat> {
    Pred::from_fns(
        |b: &Nat| {
            if *b == Nat::ZERO {
                Decision::refutes("0 = 0")
            } else {
                Decision::holds(format!("0 < {b}"))
            }
        },
        |b: &Nat| render_bottom_cond(*b),
    )
}

/// Irreducibility of `(top, bottom)`, decided by `strategy` and rendered as
/// the unbounded proposition.
///
/// # Panics
///
/// When decided at a zero bottom. [`cast_rat`] never does that.
pub fn irreducibility_pred(strategy: IrredStrategy) -> Pred<(Nat, Nat)> {
    let substitute = Pred::from_fns(
        move |&(t, b): &(Nat, Nat)| decide_irreducible(strategy, t, b).expect("nonzero bottom"),
        move |&(t, b): &(Nat, Nat)| match strategy {
            IrredStrategy::Gcd => format!("gcd {t} {b} = 1"),
            _ => format!("forall x y z : bnat {}, y * x = {t} /\\ z * x = {b} -> 1 = x", t.max(b)),
        },
    );
    let justification = match strategy {
        IrredStrategy::Gcd => "gcd top bottom = 1 characterizes irreducibility when 0 <> bottom",
        _ => "every common divisor of top and bottom is at most max top bottom when 0 <> bottom",
    };
    p_equivalent(
        substitute,
        |&(t, b): &(Nat, Nat)| render_irreducible(t, b),
        justification,
    )
}

/// A rational that passed both construction checks.
///
/// ```compile_fail
/// use gradual::{n, rationals::Rat};
/// let half_of_ten = Rat { sign: true, top: n(5), bottom: n(10) };
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    sign: bool,
    top: Nat,
    bottom: Nat,
}

impl Rat {
    fn new(sign: bool, top: Nat, bottom: Nat) -> Self {
        debug_assert!(bottom != Nat::ZERO, "attested rational with zero bottom");
        debug_assert!(gcd(top, bottom) == Nat::ONE, "attested rational is reducible");
        Rat { sign, top, bottom }
    }

    pub fn sign(&self) -> bool {
        self.sign
    }

    pub fn top(&self) -> Nat {
        self.top
    }

    pub fn bottom(&self) -> Nat {
        self.bottom
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mkRat {} {} {}", self.sign, self.top, self.bottom)
    }
}

/// Result of [`cast_rat`]: an attested [`Rat`] or a failed cast that
/// remembers the raw fields and the violated condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedRat {
    state: RatState,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum RatState {
    Attested(Rat),
    Failed {
        sign: bool,
        top: Nat,
        bottom: Nat,
        fault: CastFault,
    },
}

impl RefinedRat {
    pub fn is_attested(&self) -> bool {
        matches!(self.state, RatState::Attested(_))
    }

    pub fn is_failed(&self) -> bool {
        !self.is_attested()
    }

    pub fn rat(&self) -> Result<&Rat, CastFault> {
        match &self.state {
            RatState::Attested(r) => Ok(r),
            RatState::Failed { fault, .. } => Err(fault.clone()),
        }
    }

    pub fn sign(&self) -> Result<bool, CastFault> {
        self.rat().map(Rat::sign)
    }

    pub fn top(&self) -> Result<Nat, CastFault> {
        self.rat().map(Rat::top)
    }

    pub fn bottom(&self) -> Result<Nat, CastFault> {
        self.rat().map(Rat::bottom)
    }

    /// The violated condition of a failed cast.
    pub fn violated(&self) -> Option<&str> {
        self.failure().map(CastFault::prop_text)
    }

    pub fn failure(&self) -> Option<&CastFault> {
        match &self.state {
            RatState::Attested(_) => None,
            RatState::Failed { fault, .. } => Some(fault),
        }
    }
}

impl fmt::Display for RefinedRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.state {
            RatState::Attested(r) => r.fmt(f),
            RatState::Failed { sign, top, bottom, .. } => write!(f, "failed_cast_Rat {sign} {top} {bottom}"),
        }
    }
}

/// Builds `sign * top / bottom`, first checking `0 <> bottom` and only then
/// irreducibility with `strategy`.
pub fn cast_rat(
    sign: bool,
    top: Nat,
    bottom: Nat,
    strategy: IrredStrategy,
    mode: FailureMode,
) -> Result<RefinedRat, CastFault> {
    cast_rat_with(sign, top, bottom, &irreducibility_pred(strategy), mode)
}

/// [`cast_rat`] with an arbitrary irreducibility decider over
/// `(top, bottom)`.
pub fn cast_rat_with(
    sign: bool,
    top: Nat,
    bottom: Nat,
    irreducible: &Pred<(Nat, Nat)>,
    mode: FailureMode,
) -> Result<RefinedRat, CastFault> {
    let violated = if bottom_pred().decide(&bottom).is_refutes() {
        Some(render_bottom_cond(bottom))
    } else if irreducible.decide(&(top, bottom)).is_refutes() {
        Some(irreducible.render(&(top, bottom)))
    } else {
        None
    };
    let Some(prop_text) = violated else {
        return Ok(RefinedRat {
            state: RatState::Attested(Rat::new(sign, top, bottom)),
        });
    };
    let text = format!("mkRat {sign} {top} {bottom}");
    let fault = CastFault::from_texts(text.clone(), format!("({text})"), prop_text);
    match mode {
        FailureMode::Lazy => Ok(RefinedRat {
            state: RatState::Failed {
                sign,
                top,
                bottom,
                fault,
            },
        }),
        FailureMode::Eager => Err(fault),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyTiming {
    pub strategy: IrredStrategy,
    pub median: Duration,
    pub holds: bool,
}

/// Median decision times, one row per strategy in [`IrredStrategy::ALL`]
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub top: Nat,
    pub bottom: Nat,
    pub timings: Vec<StrategyTiming>,
}

impl BenchReport {
    pub fn median(&self, strategy: IrredStrategy) -> Duration {
        self.timings
            .iter()
            .find(|t| t.strategy == strategy)
            .map(|t| t.median)
            .expect("every strategy is timed")
    }

    /// All strategies reached the same verdict.
    pub fn agree(&self) -> bool {
        self.timings.windows(2).all(|w| w[0].holds == w[1].holds)
    }
}

/// Times each decider `repetitions` times (at least once) and reports the
/// medians. Single-threaded, no assertions.
pub fn bench_strategies(top: Nat, bottom: Nat, repetitions: usize) -> Result<BenchReport, ZeroBottom> {
    let reps = repetitions.max(1);
    let mut timings = Vec::with_capacity(IrredStrategy::ALL.len());
    for strategy in IrredStrategy::ALL {
        let mut samples = Vec::with_capacity(reps);
        let mut holds = false;
        for _ in 0..reps {
            let start = Instant::now();
            let d = decide_irreducible(strategy, black_box(top), black_box(bottom))?;
            samples.push(start.elapsed());
            holds = black_box(d).is_holds();
        }
        samples.sort_unstable();
        timings.push(StrategyTiming {
            strategy,
            median: samples[(samples.len() - 1) / 2],
            holds,
        });
    }
    Ok(BenchReport { top, bottom, timings })
}
