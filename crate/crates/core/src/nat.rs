use std::fmt;
use std::ops::{Add, Mul};

use crate::notation::{Level, Notation};

/// A natural number backed by a machine word.
///
/// `+` and `*` fault (panic) on overflow instead of wrapping. Subtraction is
/// only offered as [`Nat::monus`], the truncated difference of the naturals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Nat(u64);

impl Nat {
    pub const ZERO: Nat = Nat(0);
    pub const ONE: Nat = Nat(1);

    pub const fn new(value: u64) -> Self {
        Nat(value)
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    pub fn checked_add(self, rhs: Nat) -> Option<Nat> {
        self.0.checked_add(rhs.0).map(Nat)
    }

    pub fn checked_mul(self, rhs: Nat) -> Option<Nat> {
        self.0.checked_mul(rhs.0).map(Nat)
    }

    /// `max(self - rhs, 0)`.
    pub fn monus(self, rhs: Nat) -> Nat {
        Nat(self.0.saturating_sub(rhs.0))
    }

    /// Truncated division; dividing by zero yields zero like the total
    /// division of the naturals.
    pub fn div_total(self, rhs: Nat) -> Nat {
        Nat(self.0.checked_div(rhs.0).unwrap_or(0))
    }

    pub fn succ(self) -> Nat {
        self + Nat::ONE
    }
}

impl Add for Nat {
    type Output = Nat;

    fn add(self, rhs: Nat) -> Nat {
        self.checked_add(rhs)
            .unwrap_or_else(|| panic!("natural overflow: {self} + {rhs}"))
    }
}

impl Mul for Nat {
    type Output = Nat;

    fn mul(self, rhs: Nat) -> Nat {
        self.checked_mul(rhs)
            .unwrap_or_else(|| panic!("natural overflow: {self} * {rhs}"))
    }
}

impl From<u64> for Nat {
    fn from(value: u64) -> Self {
        Nat(value)
    }
}

impl From<Nat> for u64 {
    fn from(n: Nat) -> Self {
        n.0
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl std::str::FromStr for Nat {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(Nat)
    }
}

impl Notation for Nat {
    fn level(&self) -> Level {
        Level::Atom
    }

    fn write_term(&self, out: &mut String) {
        use std::fmt::Write;
        let _ = write!(out, "{}", self.0);
    }
}

/// Shorthand constructor.
pub const fn n(value: u64) -> Nat {
    Nat(value)
}
