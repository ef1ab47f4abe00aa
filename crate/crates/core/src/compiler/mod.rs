//! A gradually checked compiler from arithmetic expressions to a stack
//! machine.
//!
//! Instead of proving the compiler correct, [`checked_compile`] wraps it in
//! a dependent range cast: every program it emits is checked against
//! [`correct_prog`], which runs the program and compares the result with the
//! interpreter. [`compile_buggy`] emits operands in the wrong order and is
//! caught on the first non-commutative operator it compiles;
//! [`compile_fixed`] is the corrected compiler.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::cast::{CastFault, FailureMode, Refined};
use crate::hocast::cast_forall_range;
use crate::instances::{eq_list, eq_nat, eq_option, EqDec};
use crate::notation::{Level, Notation};
use crate::prop::{Pred, PredFamily};
use crate::Nat;

mod parse;

pub use parse::{parse_exp, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Binop {
    Plus,
    Minus,
    Times,
}

impl Binop {
    pub const ALL: [Binop; 3] = [Binop::Plus, Binop::Minus, Binop::Times];

    pub fn name(self) -> &'static str {
        match self {
            Binop::Plus => "Plus",
            Binop::Minus => "Minus",
            Binop::Times => "Times",
        }
    }

    fn symbol(self) -> char {
        match self {
            Binop::Plus => '+',
            Binop::Minus => '-',
            Binop::Times => '*',
        }
    }

    fn precedence(self) -> u8 {
        match self {
            Binop::Plus | Binop::Minus => 1,
            Binop::Times => 2,
        }
    }
}

impl Notation for Binop {
    fn level(&self) -> Level {
        Level::Atom
    }

    fn write_term(&self, out: &mut String) {
        out.push_str(self.name());
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Exp {
    Const(Nat),
    Binop(Binop, Arc<Exp>, Arc<Exp>),
}

impl Exp {
    pub fn constant(n: u64) -> Exp {
        Exp::Const(Nat::new(n))
    }

    pub fn binop(op: Binop, left: Exp, right: Exp) -> Exp {
        Exp::Binop(op, Arc::new(left), Arc::new(right))
    }

    pub fn depth(&self) -> usize {
        match self {
            Exp::Const(_) => 1,
            Exp::Binop(_, l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Number of nodes, which is also the length of its compiled program.
    pub fn size(&self) -> usize {
        match self {
            Exp::Const(_) => 1,
            Exp::Binop(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Whether the expression uses only `Plus` and `Times`.
    pub fn is_commutative(&self) -> bool {
        match self {
            Exp::Const(_) => true,
            Exp::Binop(Binop::Minus, _, _) => false,
            Exp::Binop(_, l, r) => l.is_commutative() && r.is_commutative(),
        }
    }

    fn infix_precedence(&self) -> u8 {
        match self {
            Exp::Const(_) => 3,
            Exp::Binop(op, _, _) => op.precedence(),
        }
    }
}

/// Infix source syntax, parenthesized so that [`parse_exp`] reads it back
/// as the same tree.
impl fmt::Display for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exp::Const(n) => write!(f, "{n}"),
            Exp::Binop(op, l, r) => {
                let prec = op.precedence();
                if l.infix_precedence() < prec {
                    write!(f, "({l})")?;
                } else {
                    write!(f, "{l}")?;
                }
                write!(f, " {} ", op.symbol())?;
                if r.infix_precedence() <= prec {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

impl Notation for Exp {
    fn level(&self) -> Level {
        Level::App
    }

    fn write_term(&self, out: &mut String) {
        match self {
            Exp::Const(n) => out.push_str(&format!("Const {n}")),
            Exp::Binop(op, l, r) => {
                out.push_str("Binop ");
                out.push_str(op.name());
                out.push(' ');
                l.write_at(Level::Atom, out);
                out.push(' ');
                r.write_at(Level::Atom, out);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Instr {
    IConst(Nat),
    IBinop(Binop),
}

impl Notation for Instr {
    fn level(&self) -> Level {
        Level::App
    }

    fn write_term(&self, out: &mut String) {
        match self {
            Instr::IConst(n) => out.push_str(&format!("iConst {n}")),
            Instr::IBinop(op) => {
                out.push_str("iBinop ");
                out.push_str(op.name());
            }
        }
    }
}

pub type Prog = Vec<Instr>;

/// Machine stack; index 0 is the top.
pub type Stack = Vec<Nat>;

/// Natural-number semantics of the operators. Subtraction truncates at 0;
/// addition and multiplication fault on overflow.
pub fn eval_binop(op: Binop, x: Nat, y: Nat) -> Nat {
    match op {
        Binop::Plus => x + y,
        Binop::Minus => x.monus(y),
        Binop::Times => x * y,
    }
}

pub fn eval_exp(e: &Exp) -> Nat {
    match e {
        Exp::Const(n) => *n,
        Exp::Binop(op, l, r) => eval_binop(*op, eval_exp(l), eval_exp(r)),
    }
}

/// Executes one instruction. A binary operator pops `arg1` (the top) and
/// then `arg2`, and pushes `eval_binop(op, arg1, arg2)`; `None` on stack
/// underflow.
pub fn run_instr(instr: &Instr, mut stack: Stack) -> Option<Stack> {
    match instr {
        Instr::IConst(n) => {
            stack.insert(0, *n);
            Some(stack)
        }
        Instr::IBinop(op) => {
            if stack.len() < 2 {
                return None;
            }
            let arg1 = stack[0];
            let arg2 = stack[1];
            stack[1] = eval_binop(*op, arg1, arg2);
            stack.remove(0);
            Some(stack)
        }
    }
}

pub fn run_prog(prog: &[Instr], stack: Stack) -> Option<Stack> {
    prog.iter().try_fold(stack, |stack, instr| run_instr(instr, stack))
}

/// Left operand first, then right, then the operator. Wrong for
/// non-commutative operators: the right operand ends up on top.
pub fn compile_buggy(e: &Exp) -> Prog {
    let mut prog = Vec::with_capacity(e.size());
    emit(e, Order::LeftFirst, &mut prog);
    prog
}

/// Right operand first, so that the left operand is on top when the
/// operator runs.
pub fn compile_fixed(e: &Exp) -> Prog {
    let mut prog = Vec::with_capacity(e.size());
    emit(e, Order::RightFirst, &mut prog);
    prog
}

#[derive(Clone, Copy)]
enum Order {
    LeftFirst,
    RightFirst,
}

fn emit(e: &Exp, order: Order, prog: &mut Prog) {
    match e {
        Exp::Const(n) => prog.push(Instr::IConst(*n)),
        Exp::Binop(op, l, r) => {
            let (first, second) = match order {
                Order::LeftFirst => (l, r),
                Order::RightFirst => (r, l),
            };
            emit(first, order, prog);
            emit(second, order, prog);
            prog.push(Instr::IBinop(*op));
        }
    }
}

fn result_eq() -> &'static EqDec<Option<Stack>> {
    static EQ: OnceLock<EqDec<Option<Stack>>> = OnceLock::new();
    EQ.get_or_init(|| eq_option(eq_list(eq_nat())))
}

/// `run_prog p nil = Some (eval_exp e :: nil)`, decided by the derived
/// equality on `Option<Stack>`. The expected value is computed once, here.
pub fn correct_prog(e: &Exp) -> Pred<Prog> {
    let expected: Option<Stack> = Some(vec![eval_exp(e)]);
    result_eq().against(expected).on(|p: &Prog| run_prog(p, Vec::new()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum CompilerVariant {
    #[default]
    Buggy,
    Fixed,
}

impl CompilerVariant {
    pub fn compile(self, e: &Exp) -> Prog {
        match self {
            CompilerVariant::Buggy => compile_buggy(e),
            CompilerVariant::Fixed => compile_fixed(e),
        }
    }
}

/// The compiler cast to a correct compiler: each call checks the emitted
/// program against [`correct_prog`] for its source expression.
pub fn checked_compile(
    variant: CompilerVariant,
    mode: FailureMode,
) -> impl Fn(&Exp) -> Result<Refined<Prog>, CastFault> + Send + Sync {
    cast_forall_range(PredFamily::new(correct_prog), move |e: &Exp| variant.compile(e), mode)
}

/// Compiles `e` with a correct compiler and runs the program on an empty
/// stack. Faults if the compiler's output was a failed cast.
pub fn runc<C>(compiler: C, e: &Exp) -> Result<Option<Stack>, CastFault>
where
    C: Fn(&Exp) -> Result<Refined<Prog>, CastFault>,
{
    let prog = compiler(e)?.proj1()?;
    Ok(run_prog(&prog, Vec::new()))
}
