use proptest::prelude::*;

use siegel_bgg::bgg_hodge::{hodge_jump, j_b};
use siegel_bgg::hecke_params::{
    ao_predicate, satake_restrict, solve_slope_system, spin_slopes, valuations_from_slopes, SlopeConvention, Subset,
    TorusDoubleCoset,
};
use siegel_bgg::root_datum::{dual_root_datum, dual_weight, minuscule_pairing, motivic_weight, rho_tilde};
use siegel_bgg::weyl::{dot_action, iterated_dot_levels};
use siegel_bgg::{Rational, RootDatum, Weight, WeylElement};

fn element(g: usize) -> impl Strategy<Value = WeylElement> {
    (Just((0..g).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], g))
        .prop_map(|(perm, signs)| WeylElement::new(perm, signs).unwrap())
}

fn dominant(g: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0i64..8, g).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight::with_standard_central(v)
    })
}

fn genus_and_two_elements() -> impl Strategy<Value = (WeylElement, WeylElement, WeylElement)> {
    (1usize..=5).prop_flat_map(|g| (element(g), element(g), element(g)))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-500i64..500, 1i64..40).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #[test]
    fn group_axioms((a, b, c) in genus_and_two_elements()) {
        let g = a.genus();
        let id = WeylElement::identity(g);
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&id), a.clone());
        prop_assert_eq!(id.compose(&a), a.clone());
        prop_assert_eq!(a.compose(&a.inverse()), id);
        let x: Vec<i64> = (1..=g as i64).map(|k| 3 * k - 7).collect();
        prop_assert_eq!(a.compose(&b).act(&x), a.act(&b.act(&x)));
        prop_assert!(a.length() <= g * g);
        prop_assert_eq!(a.length(), a.inverse().length());
    }

    #[test]
    fn central_coordinate_is_fixed((w, lambda) in (1usize..=4).prop_flat_map(|g| (element(g), dominant(g)))) {
        prop_assert_eq!(w.act_weight(&lambda).unwrap().central(), lambda.central());
        prop_assert_eq!(dot_action(&w, &lambda).unwrap().central(), lambda.central());
    }

    #[test]
    fn iterated_dot_matches_composite(
        (lambda, chain) in (2usize..=4).prop_flat_map(|g| {
            let steps = prop::collection::vec((0..g).prop_flat_map(move |level| {
                element(g - level).prop_map(move |w| (level, w.embed(g).unwrap()))
            }), 1..4);
            (dominant(g), steps)
        })
    ) {
        let mut chain = chain;
        chain.sort_by_key(|(level, _)| *level);
        let g = lambda.genus();
        let composite = chain.iter().fold(WeylElement::identity(g), |acc, (_, w)| w.compose(&acc));
        prop_assert_eq!(iterated_dot_levels(&lambda, &chain).unwrap(), dot_action(&composite, &lambda).unwrap());
    }

    #[test]
    fn slope_round_trip(t in prop::collection::vec(rational(), 1..=4), z in rational()) {
        let sys = spin_slopes(&t, &z).unwrap();
        let out = solve_slope_system(&sys, SlopeConvention::Spin);
        let sol = out.solution().unwrap();
        prop_assert_eq!(&sol.coords, &t);
        prop_assert_eq!(&sol.central, &z);
        let full = (1u32 << t.len()) - 1;
        for (j, v) in sys.iter() {
            prop_assert_eq!(v.clone() + sys.get(Subset(full ^ j.0)).clone(), z.clone() + z.clone());
        }
    }

    #[test]
    fn hodge_slopes_give_ordinary_valuations(lambda in (1usize..=4).prop_flat_map(dominant)) {
        let g = lambda.genus();
        let slopes = (0..1u32 << g).map(|m| Rational::from_integer(j_b(&lambda, m).into())).collect();
        let sys = siegel_bgg::SlopeSystem::new(g, slopes).unwrap();
        let out = solve_slope_system(&sys, SlopeConvention::Spin);
        let sol = out.solution().unwrap();
        for i in 1..=g {
            prop_assert_eq!(sol.at(i), &Rational::from_integer((-(lambda.a(i) + i as i64)).into()));
        }
        prop_assert!(ao_predicate(&valuations_from_slopes(sol), &lambda).unwrap());
    }

    #[test]
    fn minuscule_pairing_is_motivic_weight(lambda in (1usize..=5).prop_flat_map(dominant)) {
        let shifted = lambda.checked_add(&rho_tilde(lambda.genus())).unwrap();
        prop_assert_eq!(minuscule_pairing(&shifted), motivic_weight(&lambda).unwrap());
    }

    #[test]
    fn jump_is_constant_on_levi_cosets(
        (perm, w, lambda) in (1usize..=4).prop_flat_map(|g| {
            (Just((0..g).collect::<Vec<usize>>()).prop_shuffle(), element(g), dominant(g))
        })
    ) {
        let g = lambda.genus();
        let u = WeylElement::new(perm, vec![1; g]).unwrap();
        prop_assert_eq!(hodge_jump(&u.compose(&w), &lambda).unwrap(), hodge_jump(&w, &lambda).unwrap());
    }

    #[test]
    fn complementary_hodge_symmetry(lambda in (1usize..=5).prop_flat_map(dominant)) {
        let g = lambda.genus();
        let full = (1u32 << g) - 1;
        let w = motivic_weight(&lambda).unwrap();
        for b in 0..=full {
            prop_assert_eq!(j_b(&lambda, b) + j_b(&lambda, full ^ b), w);
        }
    }

    #[test]
    fn double_duality(lambda in (1usize..=5).prop_flat_map(dominant)) {
        prop_assert_eq!(dual_weight(&dual_weight(&lambda)), lambda.clone());
        let rd = RootDatum::symplectic(lambda.genus()).unwrap();
        prop_assert_eq!(dual_root_datum(&dual_root_datum(&rd)), rd);
    }

    #[test]
    fn satake_restriction_composes(
        (head, exps, r1, r2) in (2usize..=4).prop_flat_map(|g| {
            (0usize..=g, prop::collection::vec(0i64..3, g), 1..g, Just(1usize))
                .prop_map(move |(zeros, steps, r1, r2)| (zeros.min(g), steps, r1, r2.min(g - r1)))
        })
    ) {
        let g = exps.len();
        let mut first: Vec<i64> = Vec::with_capacity(g);
        let mut acc = 0;
        for (k, s) in exps.iter().enumerate() {
            if k >= head {
                acc += s;
            }
            first.push(acc);
        }
        let c = first[g - 1] * 2;
        let mut all = first.clone();
        all.extend(first.iter().rev().map(|e| c - e));
        let coset = TorusDoubleCoset::new(all).unwrap();
        let two_step = satake_restrict(&coset, r1).unwrap().and_then(|x| satake_restrict(&x, r2).unwrap());
        prop_assert_eq!(two_step, satake_restrict(&coset, r1 + r2).unwrap());
    }
}

#[test]
fn unit_class_restricts_to_unit() {
    for g in 1..=4 {
        for r in 1..=g {
            assert_eq!(satake_restrict(&TorusDoubleCoset::unit(g), r).unwrap(), Some(TorusDoubleCoset::unit(g - r)));
        }
    }
}
