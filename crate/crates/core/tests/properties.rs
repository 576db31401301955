//! Property tests for the algebraic laws the crate relies on. Exact
//! arithmetic means every law is asserted with equality, never with a
//! tolerance.

use proptest::prelude::*;

use padic_factor::permutability::{build_commuting_pair, commute_residual};
use padic_factor::polygon::Growth;
use padic_factor::series::{classify_poly_wronskian, wronskian, WronskianPairDecision};
use padic_factor::{
    val_p, CoefficientModel, ExtValuation, LogRadius, Poly, Prime, Rat, TruncatedSeries,
};

fn p5() -> Prime {
    Prime::new(5).unwrap()
}

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-2000i64..2000, 1i64..60).prop_map(|(n, d)| Rat::new(n, d))
}

fn nonzero_rat_strategy() -> impl Strategy<Value = Rat> {
    rat_strategy().prop_filter("nonzero", |r| !r.is_zero())
}

fn series_strategy(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(rat_strategy(), order + 1)
        .prop_map(|coeffs| TruncatedSeries::new(p5(), coeffs))
}

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(rat_strategy(), 1..=max_deg + 1).prop_map(Poly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rat_display_parse_round_trip(r in rat_strategy()) {
        let printed = r.to_string();
        let parsed: Rat = printed.parse().unwrap();
        prop_assert_eq!(parsed, r);
    }

    #[test]
    fn valuation_is_ultrametric(a in rat_strategy(), b in rat_strategy()) {
        let va = val_p(&a, p5());
        let vb = val_p(&b, p5());
        let vsum = val_p(&(a.clone() + b.clone()), p5());
        prop_assert!(vsum >= va.clone().min(vb.clone()));
        if va != vb {
            prop_assert_eq!(vsum, va.clone().min(vb.clone()));
        }
        // multiplicativity
        let vprod = val_p(&(a * b), p5());
        prop_assert_eq!(vprod, va + vb);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn floor_is_exact(x in rat_strategy()) {
        let e = Rat::from_int(x.floor_int());
        prop_assert!(e <= x.clone());
        prop_assert!(x < e + Rat::one());
    }

    #[test]
    fn floor_difference_bound(x in rat_strategy(), y in rat_strategy()) {
        let lhs = (x.clone() - y.clone()).floor_int();
        let mid = x.floor_int() - y.floor_int();
        prop_assert!(lhs.clone() <= mid.clone());
        prop_assert!(mid <= lhs + num_bigint::BigInt::from(1));
    }

    #[test]
    fn series_mul_commutes_and_associates(
        f in series_strategy(6),
        g in series_strategy(6),
        h in series_strategy(6),
    ) {
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        let lhs = f.mul(&g).unwrap().mul(&h).unwrap();
        let rhs = f.mul(&g.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_is_linear_and_leibniz(
        f in series_strategy(6),
        g in series_strategy(6),
        s in rat_strategy(),
    ) {
        let sum = f.add(&g).unwrap();
        prop_assert_eq!(
            sum.derivative(),
            f.derivative().add(&g.derivative()).unwrap()
        );
        prop_assert_eq!(
            f.scalar_mul(&s).derivative(),
            f.derivative().scalar_mul(&s)
        );
        let product_rule = f
            .derivative()
            .mul(&g)
            .unwrap()
            .add(&f.mul(&g.derivative()).unwrap())
            .unwrap();
        prop_assert!(f.mul(&g).unwrap().derivative().agrees_with(&product_rule));
    }

    #[test]
    fn wronskian_antisymmetry(f in series_strategy(5), g in series_strategy(5)) {
        let wfg = wronskian(&f, &g).unwrap();
        let wgf = wronskian(&g, &f).unwrap();
        prop_assert_eq!(wfg.neg(), wgf);
    }

    #[test]
    fn compose_associates_with_zero_constant_inner(
        f in series_strategy(6),
        g in poly_strategy(3),
        h in poly_strategy(3),
    ) {
        // restrict the innermost map to fix the origin; the middle map is
        // arbitrary
        let mut h_coeffs = h.coeffs().to_vec();
        if !h_coeffs.is_empty() {
            h_coeffs[0] = Rat::zero();
        }
        let h = Poly::new(h_coeffs);
        let lhs = f.compose_poly(&g).series.compose_poly(&h).series;
        let rhs = f.compose_poly(&g.compose(&h)).series;
        prop_assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn constant_nonzero_wronskian_forces_affine_pair(
        f1 in poly_strategy(4),
        f2 in poly_strategy(4),
    ) {
        if let WronskianPairDecision::ConstantNonzero { both_affine, .. } =
            classify_poly_wronskian(&f1, &f2)
        {
            prop_assert!(both_affine);
            prop_assert!(f1.is_affine() && f2.is_affine());
        }
    }

    #[test]
    fn promoted_series_classify_polynomial(f in series_strategy(8)) {
        let model = CoefficientModel::from_series(&f);
        let is_polynomial = matches!(model.growth_classify(), Growth::Polynomial { .. });
        prop_assert!(is_polynomial);
    }
}

proptest! {
    // heavier cases, fewer repetitions
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gauss_norm_is_additive(
        f in poly_strategy(5),
        g in poly_strategy(5),
        t_num in -20i64..20,
        t_den in 1i64..5,
    ) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let t = LogRadius(Rat::new(t_num, t_den));
        let mf = CoefficientModel::poly(p5(), f.clone()).max_modulus_log(&t).unwrap();
        let mg = CoefficientModel::poly(p5(), g.clone()).max_modulus_log(&t).unwrap();
        let mfg = CoefficientModel::poly(p5(), f.mul(&g)).max_modulus_log(&t).unwrap();
        prop_assert_eq!(mfg.value, mf.value + mg.value);
    }

    #[test]
    fn hull_duality_matches_argmax(f in poly_strategy(7), t_num in -20i64..20, t_den in 1i64..5) {
        prop_assume!(!f.is_zero());
        let model = CoefficientModel::poly(p5(), f);
        let degree = model.known_prefix_end().unwrap();
        let hull = model.newton_polygon(degree).unwrap();
        let t = Rat::new(t_num, t_den);
        let pt = model.max_modulus_log(&LogRadius(t.clone())).unwrap();
        prop_assert_eq!(hull.indices_at(&t), (pt.mu, pt.nu));
        // and the hull slopes strictly increase
        let slopes = hull.slopes();
        for w in slopes.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn built_pairs_commute_and_perturbations_break(
        ks in proptest::collection::btree_set(1u32..12, 1..4),
        b_num in 1i64..9,
        b_den in 1i64..4,
        c_num in -6i64..6,
        perturb_at in 0usize..24,
        delta_num in 1i64..5,
    ) {
        let coeffs: std::collections::BTreeMap<u32, Rat> = ks
            .iter()
            .map(|&k| (k, Rat::new(if c_num == 0 { 1 } else { c_num }, 1)))
            .collect();
        let order = 2 * 12 + 2;
        let b = Rat::new(b_num, b_den);
        let (p, f) = build_commuting_pair(p5(), 2, &b, &coeffs, order).unwrap();
        prop_assert!(commute_residual(&f, &p.to_poly(), order).unwrap().is_zero());

        let mut cs = f.coeffs().to_vec();
        cs[perturb_at] = cs[perturb_at].clone() + Rat::new(delta_num, 1);
        let g = TruncatedSeries::new(p5(), cs);
        prop_assert!(!commute_residual(&g, &p.to_poly(), order).unwrap().is_zero());
    }

    #[test]
    fn scaled_zero_counts_are_scale_invariant(
        f in poly_strategy(6),
        c in nonzero_rat_strategy(),
        t_num in -12i64..12,
        t_den in 1i64..4,
    ) {
        prop_assume!(!f.is_zero());
        // scaling a polynomial shifts every valuation uniformly and
        // leaves all zero counts unchanged
        let t = LogRadius(Rat::new(t_num, t_den));
        let plain = CoefficientModel::poly(p5(), f.clone()).zero_counts(&t).unwrap();
        let scaled = CoefficientModel::poly(p5(), f.scale(&c)).zero_counts(&t).unwrap();
        prop_assert_eq!(plain, scaled);
    }
}

/// Disk nesting as a plain seeded test: mu and nu are nondecreasing in t
/// and nu(t1) <= mu(t2) whenever t1 < t2.
#[test]
fn zero_counts_nest_across_radii() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let degree = rng.gen_range(1..=8usize);
        let mut poly = Poly::new(vec![Rat::one()]);
        for _ in 0..degree {
            let v: i64 = rng.gen_range(-4..=4);
            let unit = [1i64, 2, 3, 7][rng.gen_range(0..4)];
            let z = if v >= 0 {
                Rat::from_int(unit * 5i64.pow(v as u32))
            } else {
                Rat::from_int(unit) / Rat::from_int(5i64.pow((-v) as u32))
            };
            poly = poly.mul(&Poly::new(vec![-z, Rat::one()]));
        }
        let model = CoefficientModel::poly(p5(), poly);
        let mut ts: Vec<Rat> = (0..6)
            .map(|_| Rat::new(rng.gen_range(-10i64..=10), rng.gen_range(1i64..=3)))
            .collect();
        ts.sort();
        ts.dedup();
        let points: Vec<_> = ts
            .iter()
            .map(|t| model.max_modulus_log(&LogRadius(t.clone())).unwrap())
            .collect();
        for pair in points.windows(2) {
            assert!(pair[0].mu <= pair[1].mu);
            assert!(pair[0].nu <= pair[1].nu);
            assert!(pair[0].nu <= pair[1].mu, "nesting across distinct radii");
        }
    }
}

/// The symbolic support test and the exact residual agree for the
/// rational multiplier -1 on arbitrary supports.
#[test]
fn support_congruence_matches_exact_residual() {
    use padic_factor::permutability::{verify_support_commutation, SupportSpec};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..50 {
        let mut exponents = std::collections::BTreeSet::new();
        for _ in 0..rng.gen_range(1..=5usize) {
            exponents.insert(rng.gen_range(1..=14u64));
        }
        let spec = SupportSpec::new(exponents.clone(), 2).unwrap();
        let symbolic = verify_support_commutation(&spec);
        let top = *exponents.iter().max().unwrap() as usize;
        let mut coeffs = vec![Rat::zero(); top + 1];
        for &e in &exponents {
            coeffs[e as usize] = Rat::from_int(rng.gen_range(1i64..=5));
        }
        let f = TruncatedSeries::new(p5(), coeffs);
        let neg = Poly::new(vec![Rat::zero(), Rat::from_int(-1)]);
        let exact = commute_residual(&f, &neg, top).unwrap().is_zero();
        assert_eq!(symbolic, exact, "support {exponents:?}");
    }
}

/// The family ratio sequence stays strictly increasing past the derived
/// start index for non-integer and large valuation steps as well.
#[test]
fn family_ratio_increase_is_step_invariant() {
    use padic_factor::derive_tail_start;
    for big_n in [3u32, 4, 5] {
        let n0 = derive_tail_start(big_n).unwrap();
        for v in ["1", "1/2", "3"] {
            let model = CoefficientModel::family(p5(), big_n, v.parse().unwrap()).unwrap();
            let mut prev = model.log_critical_radius(n0).unwrap();
            for n in n0 + 1..=10_000usize {
                let cur = model.log_critical_radius(n).unwrap();
                assert!(cur > prev, "N = {big_n}, v = {v}, n = {n}");
                prev = cur;
            }
        }
    }
}

/// Whenever the engine would derive the finite-multiplicity hypothesis
/// from a ratio condition, the localization threshold is finite for every
/// sampled translate valuation.
#[test]
fn localization_threshold_is_finite_on_a_value_grid() {
    use padic_factor::{check_ratio_condition, multiple_zero_localization, HypothesisKind};
    let model = CoefficientModel::family(p5(), 3, Rat::one()).unwrap();
    let hypothesis = match check_ratio_condition(&model, 200) {
        padic_factor::HypothesisCheck::Established(h) => h,
        padic_factor::HypothesisCheck::Failed { reason } => panic!("{reason}"),
    };
    let HypothesisKind::RatioCondition { n0 } = hypothesis.kind else {
        panic!("ratio hypothesis expected");
    };
    let mut grid: Vec<ExtValuation> = ["-5", "-2", "-1/2", "0", "1/3", "2", "10"]
        .iter()
        .map(|s| ExtValuation::Finite(s.parse().unwrap()))
        .collect();
    grid.push(ExtValuation::Infinite);
    for v_beta in &grid {
        let t = multiple_zero_localization(&model, v_beta, n0).unwrap();
        // a finite rational came back; beyond it the argmax excludes the
        // constant term, checked here at one radius past the threshold
        let probe = LogRadius(t.0.clone() + Rat::one());
        let pt = model.max_modulus_log(&probe).unwrap();
        assert!(pt.mu >= 1, "argmax must exclude index 0 at {probe:?}");
    }
}

/// A promoted polynomial model in its final linear regime never yields a
/// growth witness once the comparison carries any positive slack.
#[test]
fn polynomial_models_pass_the_growth_inequality_beyond_their_slopes() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..40 {
        let order = rng.gen_range(2..=7usize);
        let mut coeffs: Vec<Rat> = (0..=order)
            .map(|_| Rat::from_int(rng.gen_range(-4i64..=4)))
            .collect();
        coeffs[order] = Rat::from_int(rng.gen_range(1i64..=4));
        let f = TruncatedSeries::new(p5(), coeffs);
        let model = CoefficientModel::from_series(&f);
        assert!(matches!(model.growth_classify(), Growth::Polynomial { .. }));
        // grid beyond every hull slope, so both M(t) and M(2t) sit on the
        // top-degree term and the inequality has slack exactly log_beta
        let degree = model.known_prefix_end().unwrap();
        let hull = model.newton_polygon(degree).unwrap();
        let start = hull
            .slopes()
            .last()
            .map(|s| s.floor_int() + num_bigint::BigInt::from(1))
            .unwrap_or_default();
        let start = Rat::from_int(start).max(Rat::one());
        let grid: Vec<LogRadius> = (0..8)
            .map(|k| LogRadius(start.clone() + Rat::from_int(k)))
            .collect();
        let out = model
            .transcendence_witness(&Rat::zero(), &Rat::new(1, 7), 2, &grid)
            .unwrap();
        assert_eq!(out, padic_factor::polygon::WitnessOutcome::InequalityHeldOnGrid);
    }
}

/// Circle counts between consecutive strictly-increasing ratios: 1 on the
/// critical circles, 0 strictly between them.
#[test]
fn strictly_increasing_ratios_localize_single_zeros() {
    let w: Vec<ExtValuation> = (0..=120)
        .map(|n: i64| ExtValuation::from(n * n)) // rho_n = 2n + 1, strictly increasing
        .collect();
    let model = CoefficientModel::list(p5(), w);
    for k in 0..40usize {
        let rho_k = model.log_critical_radius(k).unwrap();
        let counts = model.zero_counts(&LogRadius(rho_k.clone())).unwrap();
        assert_eq!(counts.on_circle, 1, "at rho_{k}");
        let between = rho_k + Rat::one(); // strictly between 2k+1 and 2k+3
        let counts = model.zero_counts(&LogRadius(between)).unwrap();
        assert_eq!(counts.on_circle, 0, "between rho_{k} and rho_{}", k + 1);
    }
}
