use exactmath::rational::{int, rat};
use exactmath::{Rational, RationalMatrix};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rootdata::{
    build_root_system, kac_fixed_subalgebra, lin_min_over_weights, lowest_weight, weight_system, weyl_dim, Family,
    RootSystem, SimpleType, Weight,
};

fn st(f: Family, n: usize) -> SimpleType {
    SimpleType::new(f, n).unwrap()
}

fn w(rs: &RootSystem, labels: &[i64]) -> Weight {
    Weight::from_labels(rs.ty, labels).unwrap()
}

#[test]
fn a2_defining_representation() {
    let rs = build_root_system(st(Family::A, 2));
    let ws = weight_system(&rs, &w(&rs, &[1, 0])).unwrap();
    assert_eq!(ws.len(), 3);
    assert!(ws.entries.iter().all(|(_, m)| *m == 1));
}

#[test]
fn g2_seven_dimensional() {
    let rs = build_root_system(st(Family::G, 2));
    let ws = weight_system(&rs, &w(&rs, &[1, 0])).unwrap();
    assert_eq!(ws.total_multiplicity(), 7);
    assert_eq!(ws.entries.iter().find(|(x, _)| x.is_zero()).unwrap().1, 1);
    assert_eq!(weyl_dim(&rs, &ws.highest).unwrap(), 7);
}

#[test]
fn a5_third_exterior_power() {
    let rs = build_root_system(st(Family::A, 5));
    let ws = weight_system(&rs, &w(&rs, &[0, 0, 1, 0, 0])).unwrap();
    // binomial(6, 3)
    assert_eq!(ws.len(), 20);
    assert!(ws.entries.iter().all(|(_, m)| *m == 1));
}

#[test]
fn lowest_weights() {
    let a2 = build_root_system(st(Family::A, 2));
    assert_eq!(lowest_weight(&a2, &w(&a2, &[1, 0])).unwrap(), w(&a2, &[0, -1]));
    let a5 = build_root_system(st(Family::A, 5));
    assert_eq!(lowest_weight(&a5, &w(&a5, &[0, 0, 1, 0, 0])).unwrap(), w(&a5, &[0, 0, -1, 0, 0]));
    assert!(lowest_weight(&a5, &Weight::zero(a5.ty)).unwrap().is_zero());
}

#[test]
fn directional_minima() {
    let g2 = build_root_system(st(Family::G, 2));
    let l1 = Weight::fundamental(g2.ty, 1);
    assert_eq!(lin_min_over_weights(&g2, &l1, &l1).unwrap(), rat(-2, 3));
    let a2 = build_root_system(st(Family::A, 2));
    assert_eq!(lin_min_over_weights(&a2, &Weight::fundamental(a2.ty, 1), &w(&a2, &[1, 2])).unwrap(), rat(-5, 3));
    let a5 = build_root_system(st(Family::A, 5));
    let h = Weight::fundamental(a5.ty, 3).scale(&rat(2, 3));
    assert_eq!(lin_min_over_weights(&a5, &h, &w(&a5, &[0, 0, 2, 0, 0])).unwrap(), int(-2));
}

#[test]
fn kac_examples() {
    let e6 = st(Family::E, 6);
    let t = kac_fixed_subalgebra(e6, &[0, 0, 0, 0, 1, 0, 0], 1).unwrap();
    assert_eq!(t.to_string(), "A2,1 A2,1 A2,1");
    assert_eq!(t.abelian_rank(), 0);
    let d4 = st(Family::D, 4);
    let t = kac_fixed_subalgebra(d4, &[1, 0, 1, 0, 0], 1).unwrap();
    assert_eq!(t.to_string(), "A1,1 A1,1 A1,1 U(1)");
    let t = kac_fixed_subalgebra(d4, &[1, 0, 0], 3).unwrap();
    assert_eq!(t.ideals().len(), 1);
    assert_eq!(t.ideals()[0].0, st(Family::G, 2));
}

/// `w_0(Λ_i) = −Λ_{n+1−i}` in type A, extended linearly.
fn a_type_w0(labels: &[i64]) -> Vec<i64> {
    labels.iter().rev().map(|x| -x).collect()
}

fn simple_coordinates(rs: &RootSystem, labels: &[i64]) -> Vec<Rational> {
    let n = rs.rank();
    let c = RationalMatrix::from_fn(n, n, |i, j| int(rs.cartan[i][j]));
    let cinv = c.inverse().unwrap();
    (0..n).map(|j| (0..n).map(|i| int(labels[i]) * &cinv[(i, j)]).sum()).collect()
}

fn small_type() -> impl Strategy<Value = SimpleType> {
    prop_oneof![
        (1usize..5).prop_map(|n| st(Family::A, n)),
        (2usize..4).prop_map(|n| st(Family::B, n)),
        (2usize..4).prop_map(|n| st(Family::C, n)),
        Just(st(Family::D, 4)),
        Just(st(Family::G, 2)),
        Just(st(Family::F, 4)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn freudenthal_total_matches_weyl_dimension(t in small_type(), seed in proptest::collection::vec(0i64..3, 4)) {
        let rs = build_root_system(t);
        let labels: Vec<i64> = seed.iter().take(t.rank()).copied().chain(std::iter::repeat(0)).take(t.rank()).collect();
        let lam = w(&rs, &labels);
        let d = weyl_dim(&rs, &lam).unwrap();
        prop_assume!(d <= 10_000);
        let ws = weight_system(&rs, &lam).unwrap();
        prop_assert_eq!(ws.total_multiplicity(), d);
    }

    #[test]
    fn lowest_weight_is_in_weight_system_and_below(t in small_type(), seed in proptest::collection::vec(0i64..3, 4)) {
        let rs = build_root_system(t);
        let labels: Vec<i64> = seed.iter().copied().chain(std::iter::repeat(0)).take(t.rank()).collect();
        let lam = w(&rs, &labels);
        prop_assume!(weyl_dim(&rs, &lam).unwrap() <= 5_000);
        let low = lowest_weight(&rs, &lam).unwrap();
        let ws = weight_system(&rs, &lam).unwrap();
        prop_assert!(ws.contains(&low));
        let diff: Vec<i64> = labels.iter().zip(low.labels().unwrap()).map(|(a, b)| a - b).collect();
        for c in simple_coordinates(&rs, &diff) {
            prop_assert!(c.is_integer() && !c.is_negative());
        }
    }

    #[test]
    fn type_a_minimum_equals_w0_shortcut(n in 1usize..5, lam in proptest::collection::vec(0i64..3, 4), big in proptest::collection::vec(0i64..4, 4)) {
        let rs = build_root_system(st(Family::A, n));
        let lam: Vec<i64> = lam.into_iter().take(n).collect();
        let big = Weight::new(rs.ty, big.into_iter().take(n).map(|x| rat(x, 3)).collect()).unwrap();
        let brute = lin_min_over_weights(&rs, &big, &w(&rs, &lam)).unwrap();
        let shortcut = rs.inner(&big, &w(&rs, &a_type_w0(&lam)));
        prop_assert_eq!(brute, shortcut);
    }

    #[test]
    fn kac_rank_bookkeeping(t in small_type(), s in proptest::collection::vec(0i64..2, 5)) {
        let n = t.rank() + 1;
        let s: Vec<i64> = s.into_iter().chain(std::iter::repeat(0)).take(n).collect();
        prop_assume!(s.iter().any(|&x| x != 0));
        let fixed = kac_fixed_subalgebra(t, &s, 1).unwrap();
        prop_assert_eq!(fixed.rank(), t.rank());
        prop_assert!(fixed.ideals().iter().all(|(_, l)| *l > Rational::zero()));
    }
}
