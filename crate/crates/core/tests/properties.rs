use gradual::compiler::{
    checked_compile, compile_buggy, compile_fixed, eval_exp, parse_exp, run_prog, runc, Binop, CompilerVariant, Exp,
};
use gradual::instances::{
    dec_le, eq_list, eq_nat, eq_option, pred_ge_const, pred_gt_const, pred_le_const, pred_lt_const,
};
use gradual::prop::{check_relate_spec, p_and, p_forall_bounded, p_relate};
use gradual::rationals::{cast_rat, gcd, IrredStrategy, Peano};
use gradual::{cast, try_cast, FailureMode, Nat, PredFamily};
use proptest::prelude::*;

fn exp(max_const: u64, ops: Vec<Binop>) -> impl Strategy<Value = Exp> {
    let leaf = (0..=max_const).prop_map(Exp::constant);
    leaf.prop_recursive(4, 32, 2, move |inner| {
        (proptest::sample::select(ops.clone()), inner.clone(), inner).prop_map(|(op, l, r)| Exp::binop(op, l, r))
    })
}

fn nat(max: u64) -> impl Strategy<Value = Nat> {
    (0..=max).prop_map(Nat::new)
}

fn nats(max_len: usize) -> impl Strategy<Value = Vec<Nat>> {
    proptest::collection::vec(nat(3), 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn printing_then_parsing_is_the_identity(e in exp(1000, Binop::ALL.to_vec())) {
        prop_assert_eq!(parse_exp(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn fixed_compiler_is_correct(e in exp(9, Binop::ALL.to_vec())) {
        prop_assert_eq!(run_prog(&compile_fixed(&e), Vec::new()), Some(vec![eval_exp(&e)]));
        let r = runc(checked_compile(CompilerVariant::Fixed, FailureMode::Eager), &e).unwrap();
        prop_assert_eq!(r, Some(vec![eval_exp(&e)]));
    }

    #[test]
    fn compilers_agree_without_subtraction(e in exp(9, vec![Binop::Plus, Binop::Times])) {
        let buggy = runc(checked_compile(CompilerVariant::Buggy, FailureMode::Lazy), &e).unwrap();
        let fixed = runc(checked_compile(CompilerVariant::Fixed, FailureMode::Lazy), &e).unwrap();
        prop_assert_eq!(buggy, fixed);
        prop_assert_eq!(compile_buggy(&e).len(), e.size());
    }

    #[test]
    fn checked_compile_attests_exactly_the_correct_programs(e in exp(5, Binop::ALL.to_vec())) {
        let refined = checked_compile(CompilerVariant::Buggy, FailureMode::Lazy)(&e).unwrap();
        let correct = run_prog(&compile_buggy(&e), Vec::new()) == Some(vec![eval_exp(&e)]);
        prop_assert_eq!(refined.is_attested(), correct);
    }

    #[test]
    fn forall_bounded_is_the_conjunction(k in 0u64..=64, c in 0u64..=70, m in 2u64..=9) {
        let lt = p_forall_bounded(Nat::new(k), PredFamily::constant(pred_lt_const(Nat::new(c))));
        prop_assert_eq!(lt.decide(&()).is_holds(), (0..=k).all(|i| i < c));

        let modular = PredFamily::constant(p_relate(move |x: &Nat| !x.get().is_multiple_of(m), |x: &Nat| format!("{x} mod")));
        prop_assert_eq!(
            p_forall_bounded(Nat::new(k), modular).decide(&()).is_holds(),
            (0..=k).all(|i| i % m != 0)
        );

        let dependent = PredFamily::new(move |i: &Nat| p_and(pred_ge_const(*i), pred_le_const(Nat::new(c))));
        prop_assert_eq!(p_forall_bounded(Nat::new(k), dependent).decide(&()).is_holds(), k <= c);
    }

    #[test]
    fn cast_agrees_with_decide(k in nat(50), v in nat(50), which in 0usize..4) {
        let p = [pred_lt_const(k), pred_gt_const(k), pred_le_const(k), pred_ge_const(k)][which].clone();
        let holds = p.decide(&v).is_holds();
        let lazy = cast(&p, v, FailureMode::Lazy).unwrap();
        prop_assert_eq!(lazy.is_attested(), holds);
        prop_assert_eq!(try_cast(&p, v).is_ok(), holds);
        prop_assert_eq!(cast(&p, v, FailureMode::Eager).is_ok(), holds);
        prop_assert_eq!(lazy.proj2().is_ok(), holds);
        prop_assert_eq!(lazy.proj1().ok(), holds.then_some(v));
    }

    #[test]
    fn list_equality_is_an_equivalence(xs in nats(4), ys in nats(4), zs in nats(4)) {
        let eq = eq_list(eq_nat());
        let holds = |a: &Vec<Nat>, b: &Vec<Nat>| eq.eq_decide(a, b).is_holds();
        prop_assert!(holds(&xs, &xs));
        prop_assert_eq!(holds(&xs, &ys), holds(&ys, &xs));
        prop_assert_eq!(holds(&xs, &ys), xs == ys);
        if holds(&xs, &ys) && holds(&ys, &zs) {
            prop_assert!(holds(&xs, &zs));
        }
        let opt = eq_option(eq_list(eq_nat()));
        prop_assert_eq!(
            opt.eq_decide(&Some(xs.clone()), &Some(ys.clone())).is_holds(),
            xs == ys
        );
        prop_assert!(opt.eq_decide(&None, &Some(xs)).is_refutes());
    }

    #[test]
    fn peano_round_trip(v in 0u64..=10_000) {
        prop_assert_eq!(Peano::from(Nat::new(v)).to_nat(), Nat::new(v));
    }

    #[test]
    fn attested_rationals_are_irreducible(top in 0u64..=60, bottom in 0u64..=60) {
        let r = cast_rat(true, Nat::new(top), Nat::new(bottom), IrredStrategy::Gcd, FailureMode::Lazy).unwrap();
        let expected = bottom != 0 && gcd(Nat::new(top), Nat::new(bottom)) == Nat::ONE;
        prop_assert_eq!(r.is_attested(), expected);
        if let Ok(rat) = r.rat() {
            prop_assert!(rat.bottom() != Nat::ZERO);
            prop_assert_eq!(gcd(rat.top(), rat.bottom()), Nat::ONE);
        }
    }
}

#[test]
fn le_witness_respects_its_specification() {
    let reference = pred_le_const(Nat::new(30));
    let samples = (0..=60).map(Nat::new);
    let report = check_relate_spec(|m: &Nat| m.get() <= 30, &reference, samples.clone());
    assert!(report.is_respected());
    assert_eq!(report.checked, 61);

    let off_by_one = check_relate_spec(|m: &Nat| m.get() < 30, &reference, samples);
    assert_eq!(off_by_one.disagreements.len(), 1);
    assert_eq!(off_by_one.disagreements[0].sample, Nat::new(30));
    assert!(dec_le(Nat::new(30), Nat::new(30)).is_holds());
}
