//! Term rendering in the notation used for every proposition and value
//! printed by this crate: decimal naturals, `x :: y :: nil` lists,
//! `Some (..)`/`None` options and prefix constructor application.
//!
//! Parenthesization follows the usual levels: application binds tighter
//! than `::`, which is right-associative.

/// Syntactic level of a rendered term, from tightest to loosest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    /// Numerals and nullary constructors (`5`, `nil`, `None`).
    Atom,
    /// Constructor application (`Some 1`, `iConst 2`).
    App,
    /// A non-empty list (`1 :: nil`).
    Cons,
}

/// Values that know how to print themselves as terms.
pub trait Notation {
    /// The loosest operator at the root of this term.
    fn level(&self) -> Level;

    /// Renders the term without surrounding parentheses.
    fn write_term(&self, out: &mut String);

    /// Renders the term so that it can appear where at most `max` is allowed.
    fn write_at(&self, max: Level, out: &mut String) {
        if self.level() > max {
            out.push('(');
            self.write_term(out);
            out.push(')');
        } else {
            self.write_term(out);
        }
    }

    fn notation(&self) -> String {
        let mut out = String::new();
        self.write_term(&mut out);
        out
    }

    /// Rendering suitable for an argument position (`Some (1 :: nil)`).
    fn notation_arg(&self) -> String {
        let mut out = String::new();
        self.write_at(Level::Atom, &mut out);
        out
    }
}

impl Notation for bool {
    fn level(&self) -> Level {
        Level::Atom
    }

    fn write_term(&self, out: &mut String) {
        out.push_str(if *self { "true" } else { "false" });
    }
}

impl Notation for () {
    fn level(&self) -> Level {
        Level::Atom
    }

    fn write_term(&self, out: &mut String) {
        out.push_str("tt");
    }
}

impl<T: Notation> Notation for Vec<T> {
    fn level(&self) -> Level {
        if self.is_empty() {
            Level::Atom
        } else {
            Level::Cons
        }
    }

    fn write_term(&self, out: &mut String) {
        for item in self {
            item.write_at(Level::App, out);
            out.push_str(" :: ");
        }
        out.push_str("nil");
    }
}

impl<T: Notation> Notation for Option<T> {
    fn level(&self) -> Level {
        match self {
            None => Level::Atom,
            Some(_) => Level::App,
        }
    }

    fn write_term(&self, out: &mut String) {
        match self {
            None => out.push_str("None"),
            Some(inner) => {
                out.push_str("Some ");
                inner.write_at(Level::Atom, out);
            }
        }
    }
}

impl<T: Notation> Notation for &T {
    fn level(&self) -> Level {
        (**self).level()
    }

    fn write_term(&self, out: &mut String) {
        (**self).write_term(out)
    }
}
