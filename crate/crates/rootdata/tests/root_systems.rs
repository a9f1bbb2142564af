use exactmath::rational::{int, rat};
use exactmath::Rational;
use num_traits::Zero;
use rootdata::{build_root_system, dual_coxeter, inner_product, weyl_dim, Family, SimpleType, Weight};

fn st(f: Family, n: usize) -> SimpleType {
    SimpleType::new(f, n).unwrap()
}

#[test]
fn a2_has_six_roots_of_norm_two() {
    let rs = build_root_system(st(Family::A, 2));
    assert_eq!(rs.roots.len(), 6);
    assert!(rs.roots.iter().all(|r| rs.root_inner(r, r) == int(2)));
}

#[test]
fn g2_root_norms() {
    let rs = build_root_system(st(Family::G, 2));
    assert_eq!(rs.roots.len(), 12);
    let short = rs.roots.iter().filter(|r| rs.root_inner(r, r) == rat(2, 3)).count();
    let long = rs.roots.iter().filter(|r| rs.root_inner(r, r) == int(2)).count();
    assert_eq!((short, long), (6, 6));
}

#[test]
fn e6_has_72_roots() {
    assert_eq!(build_root_system(st(Family::E, 6)).roots.len(), 72);
}

#[test]
fn closure_under_negation_and_reflection() {
    for t in [st(Family::A, 3), st(Family::D, 4), st(Family::E, 6), st(Family::G, 2), st(Family::B, 3), st(Family::C, 3)] {
        let rs = build_root_system(t);
        let n = t.rank();
        let set: std::collections::HashSet<Vec<i64>> = rs.roots.iter().cloned().collect();
        for r in &rs.roots {
            assert!(set.contains(&r.iter().map(|x| -x).collect::<Vec<_>>()));
            for i in 0..n {
                let p: i64 = (0..n).map(|j| r[j] * rs.cartan[j][i]).sum();
                let mut s = r.clone();
                s[i] -= p;
                assert!(set.contains(&s), "{t}: reflection leaves the root set");
            }
        }
    }
}

#[test]
fn classical_root_counts() {
    for n in 1..8 {
        assert_eq!(build_root_system(st(Family::A, n)).roots.len(), n * (n + 1));
    }
    assert_eq!(build_root_system(st(Family::D, 4)).roots.len(), 24);
}

#[test]
fn g2_first_fundamental_weight_norm() {
    let rs = build_root_system(st(Family::G, 2));
    let l1 = Weight::fundamental(rs.ty, 1);
    assert_eq!(inner_product(&rs, &l1, &l1).unwrap(), rat(2, 3));
}

/// Inverse Cartan matrix of A_n: min(i,j)(n+1-max(i,j))/(n+1).
fn a_type_inverse_cartan(n: i64, i: i64, j: i64) -> Rational {
    rat(i.min(j) * (n + 1 - i.max(j)), n + 1)
}

#[test]
fn a5_weight_form_matches_inverse_cartan() {
    let rs = build_root_system(st(Family::A, 5));
    for i in 1..=5 {
        for j in 1..=5 {
            let got = inner_product(&rs, &Weight::fundamental(rs.ty, i), &Weight::fundamental(rs.ty, j)).unwrap();
            assert_eq!(got, a_type_inverse_cartan(5, i as i64, j as i64));
        }
    }
    let l3 = Weight::fundamental(rs.ty, 3);
    assert_eq!(inner_product(&rs, &l3, &l3).unwrap(), rat(3, 2));
}

#[test]
fn simple_roots_dual_to_fundamental_weights() {
    for t in [st(Family::G, 2), st(Family::F, 4), st(Family::C, 4), st(Family::B, 3), st(Family::E, 7)] {
        let rs = build_root_system(t);
        for i in 1..=t.rank() {
            for j in 1..=t.rank() {
                let v = inner_product(&rs, &rs.simple_root(i), &Weight::fundamental(t, j)).unwrap();
                let expect = if i == j { &rs.gram[(j - 1, j - 1)] / int(2) } else { Rational::zero() };
                assert_eq!(v, expect);
            }
        }
    }
}

#[test]
fn system_mismatch_is_an_error() {
    let rs = build_root_system(st(Family::A, 2));
    let other = Weight::fundamental(st(Family::G, 2), 1);
    assert!(inner_product(&rs, &other, &other).is_err());
}

#[test]
fn dual_coxeter_numbers() {
    assert_eq!(dual_coxeter(st(Family::E, 6)), 12);
    assert_eq!(dual_coxeter(st(Family::D, 4)), 6);
    assert_eq!(dual_coxeter(st(Family::G, 2)), 4);
}

#[test]
fn dual_coxeter_from_root_data_matches_closed_form() {
    let mut types = Vec::new();
    for n in 1..=12 {
        types.push(st(Family::A, n));
    }
    for n in 2..=8 {
        types.push(st(Family::B, n));
        types.push(st(Family::C, n));
    }
    for n in 4..=8 {
        types.push(st(Family::D, n));
    }
    types.extend([st(Family::E, 6), st(Family::E, 7), st(Family::E, 8), st(Family::F, 4), st(Family::G, 2)]);
    for t in types {
        assert_eq!(dual_coxeter(t) as usize, t.dual_coxeter_formula(), "{t}");
    }
}

#[test]
fn weyl_dimensions() {
    let g2 = build_root_system(st(Family::G, 2));
    assert_eq!(weyl_dim(&g2, &Weight::zero(g2.ty)).unwrap(), 1);
    assert_eq!(weyl_dim(&g2, &g2.theta_weight()).unwrap(), 14);
    let e6 = build_root_system(st(Family::E, 6));
    assert_eq!(weyl_dim(&e6, &e6.theta_weight()).unwrap(), 78);
    assert_eq!(weyl_dim(&e6, &Weight::fundamental(e6.ty, 1)).unwrap(), 27);
}
