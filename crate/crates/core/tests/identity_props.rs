use flexion_core::canonical::{Canon, FlexionUnit};
use flexion_core::check::{check_identity, Check, SamplePlan};
use flexion_core::symmetry::{Profile, ProfileKind};
use flexion_core::{DigestSpec, EvalContext, Rat, RatGraph, RatWord};
use proptest::prelude::*;

fn plan(seed: u64, max_length: usize) -> SamplePlan {
    SamplePlan { max_length, samples: 2, seed, ..SamplePlan::default() }
}

fn holds(g: &RatGraph, check: Check, p: &SamplePlan) -> bool {
    let ctx = EvalContext::new(g);
    let r = check_identity(&ctx, &check, p);
    if !r.passed() {
        eprintln!("{:?}", r.counterexample());
    }
    r.passed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn push_has_order_r_plus_1(seed in any::<u64>(), r in 1usize..=4) {
        let mut g = RatGraph::new(4);
        let a = g.digest(DigestSpec::new(seed));
        let a = g.leng(r, a);
        let mut p = a;
        for _ in 0..=r {
            p = g.push(p);
        }
        prop_assert!(holds(&g, Check::equal("push^(r+1) = id", p, a), &plan(seed, 4)));
    }

    #[test]
    fn gari_inverse_and_ari_antisymmetry(seed in any::<u64>()) {
        let mut g = RatGraph::new(3);
        let a = g.digest(DigestSpec::new(seed));
        let b = g.digest(DigestSpec::new(seed ^ 0x5555));
        let la = g.leng(0, a);
        let a = g.sub(a, la);
        let lb = g.leng(0, b);
        let b = g.sub(b, lb);
        let ab = g.ari(a, b);
        let ba = g.ari(b, a);
        let nba = g.minus(ba);
        prop_assert!(holds(&g, Check::equal("ari(a,b) = -ari(b,a)", ab, nba), &plan(seed, 3)));
        let m = g.one_plus(a);
        let im = g.invgari(m);
        let id = g.gari(m, im);
        let one = g.one();
        prop_assert!(holds(&g, Check::equal("gari(M, invgari M) = 1", id, one), &plan(seed, 3)));
    }

    #[test]
    fn transport_of_al_al_seed_is_alternal(seed in 0u64..1000) {
        let mut g = RatGraph::new(4);
        let c = Canon::build(&mut g, &FlexionUnit::polar());
        let a = g.gen_bimould(Profile::new(ProfileKind::AlOl, seed), &c);
        prop_assert!(holds(&g, Check::alternal("adari(ess)(seed) alternal", a), &plan(seed, 4)));
        let sa = g.swap(a);
        let [ganit_route, gamit_route] = g.o_alternal_checks(&c, "swap O-alternal", sa);
        prop_assert!(holds(&g, ganit_route, &plan(seed, 4)));
        prop_assert!(holds(&g, gamit_route, &plan(seed, 4)));
    }

    #[test]
    fn difference_relation_and_senary_defect(seed in any::<u64>()) {
        let mut g = RatGraph::new(3);
        let c = Canon::build(&mut g, &FlexionUnit::polar());
        let b = g.digest(DigestSpec::new(seed));
        let s = g.e_sena(&c, b);
        let lhs = g.sub(b, s);
        let p = g.e_push(&c, b);
        let d = g.sub(b, p);
        let rhs = g.swamu(c.es, d);
        prop_assert!(holds(&g, Check::equal("(id - E-sena) = swamu(es, id - E-push)", lhs, rhs), &plan(seed, 3)));
        let a = g.gen_bimould(Profile::new(ProfileKind::AlOl, seed % 1000), &c);
        let defect = g.senary_defect(&c, a);
        let zero = g.zero();
        prop_assert!(holds(&g, Check::equal("senary defect", defect, zero), &plan(seed, 3)));
    }

    #[test]
    fn symmetral_profile_is_symmetral_and_gantar_invariant(seed in 0u64..1000) {
        let mut g = RatGraph::new(4);
        let c = Canon::build(&mut g, &FlexionUnit::polar());
        let s = g.gen_bimould(Profile::new(ProfileKind::Symmetral, seed), &c);
        prop_assert!(holds(&g, Check::symmetral("S symmetral", s), &plan(seed, 4)));
        let gs = g.gantar(s);
        prop_assert!(holds(&g, Check::equal("gantar(S) = S", gs, s), &plan(seed, 4)));
    }
}

#[test]
fn e_ter_is_identity_at_length_one_and_o_rush_kills_zero() {
    let mut g = RatGraph::new(3);
    let c = Canon::build(&mut g, &FlexionUnit::polar());
    let b = g.digest(DigestSpec::new(7));
    let et = g.e_ter(&c, b);
    let zero = g.zero();
    let r0 = g.o_rush(&c, zero);
    let p = plan(3, 3);
    assert!(holds(&g, Check::equal("E-ter at length 1", et, b).up_to(1), &p));
    assert!(holds(&g, Check::equal("O-Rush(0) = 0", r0, zero), &p));
}

#[test]
fn pushsym_at_length_one_averages_with_neg() {
    let mut g = RatGraph::new(2);
    let a = g.digest(DigestSpec::new(11));
    let ps = g.pushsym(a);
    let ctx = EvalContext::new(&g);
    let w = RatWord::from_ints(&[(3, -5)]);
    let expected = (ctx.eval(a, &w).unwrap() + ctx.eval(a, &w.negate()).unwrap()) / Rat::from_integer(2.into());
    assert_eq!(ctx.eval(ps, &w).unwrap(), expected);
}

#[test]
fn generic_mould_is_not_push_invariant() {
    let mut g = RatGraph::new(3);
    let a = g.digest(DigestSpec::new(5));
    let p = g.push(a);
    assert!(holds(&g, Check::equal("push A = A", p, a).negative(), &plan(0, 3)));
}
