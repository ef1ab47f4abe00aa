use std::fmt;
use std::sync::Arc;

use crate::Nat;

/// A natural number as a chain of successors.
///
/// Every operation walks the chain one constructor at a time, so costs grow
/// with the *value* of the numbers involved. Numerals built from one another
/// share their tails, which makes a table of `0..=k` take `k + 1` nodes.
#[derive(Clone, Default)]
pub struct Peano(Option<Arc<Peano>>);

impl Peano {
    pub fn zero() -> Peano {
        Peano(None)
    }

    pub fn succ(&self) -> Peano {
        Peano(Some(Arc::new(self.clone())))
    }

    pub fn pred(&self) -> Option<&Peano> {
        self.0.as_deref()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_none()
    }

    pub fn is_one(&self) -> bool {
        self.pred().is_some_and(Peano::is_zero)
    }

    /// Shared numerals `0, 1, ..., k`.
    pub fn numerals(k: Nat) -> Vec<Peano> {
        let mut out = Vec::with_capacity(k.get() as usize + 1);
        let mut current = Peano::zero();
        for _ in 0..k.get() {
            let next = current.succ();
            out.push(current);
            current = next;
        }
        out.push(current);
        out
    }

    pub fn to_nat(&self) -> Nat {
        let mut count = 0u64;
        let mut cur = self;
        while let Some(p) = cur.pred() {
            count += 1;
            cur = p;
        }
        Nat::new(count)
    }

    /// Decides `y * x = target` by peeling `x` successors off `target`,
    /// `y` times, stopping as soon as `target` runs out.
    pub fn mul_eq(y: &Peano, x: &Peano, target: &Peano) -> bool {
        let mut rest = target;
        let mut count = y;
        while let Some(c) = count.pred() {
            let mut step = x;
            while let Some(s) = step.pred() {
                match rest.pred() {
                    Some(r) => rest = r,
                    None => return false,
                }
                step = s;
            }
            count = c;
        }
        rest.is_zero()
    }
}

impl From<Nat> for Peano {
    fn from(n: Nat) -> Peano {
        let mut p = Peano::zero();
        for _ in 0..n.get() {
            p = p.succ();
        }
        p
    }
}

impl PartialEq for Peano {
    fn eq(&self, other: &Peano) -> bool {
        let (mut a, mut b) = (self, other);
        loop {
            match (a.pred(), b.pred()) {
                (None, None) => return true,
                (Some(x), Some(y)) => {
                    a = x;
                    b = y;
                }
                _ => return false,
            }
        }
    }
}

impl Eq for Peano {}

impl fmt::Debug for Peano {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Peano({})", self.to_nat())
    }
}

// Long chains would otherwise be dropped recursively.
impl Drop for Peano {
    fn drop(&mut self) {
        let mut next = self.0.take();
        while let Some(node) = next {
            match Arc::try_unwrap(node) {
                Ok(mut p) => next = p.0.take(),
                Err(_) => break,
            }
        }
    }
}
