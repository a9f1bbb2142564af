use std::sync::OnceLock;

use exactmath::rational::{int, rat};
use exactmath::Rational;
use latticevoa::intmat::integer_kernel;
use latticevoa::isometry::{identity, mat_mul, reflection, transpose};
use latticevoa::{
    assemble_niemeier, build_isometry, fixed_projection_norm, fixed_subalgebra, identify_type, lift, standard_lift,
    standard_lift_with_phase, twisted_ground_energy, twisted_ground_energy_of, EvenLattice, GlueCode, IsometryName,
    LatticeIsometry, LatticeLie, LieAutomorphism,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rootdata::{Family, SemisimpleTypeWithLevels, SimpleType};

struct Setup {
    lat: EvenLattice,
    lie: LatticeLie,
}

fn e6_setup() -> &'static Setup {
    static S: OnceLock<Setup> = OnceLock::new();
    S.get_or_init(|| {
        let lat = assemble_niemeier(&GlueCode::e6_4()).unwrap();
        let lie = LatticeLie::from_lattice(&lat).unwrap();
        Setup { lat, lie }
    })
}

fn d4_setup() -> &'static Setup {
    static S: OnceLock<Setup> = OnceLock::new();
    S.get_or_init(|| {
        let lat = assemble_niemeier(&GlueCode::d4_6()).unwrap();
        let lie = LatticeLie::from_lattice(&lat).unwrap();
        Setup { lat, lie }
    })
}

fn setup_for(name: IsometryName) -> &'static Setup {
    match name {
        IsometryName::Sigma6 => e6_setup(),
        _ => d4_setup(),
    }
}

fn ty(s: &str) -> SemisimpleTypeWithLevels {
    s.parse().unwrap()
}

#[test]
fn algebra_dimensions() {
    assert_eq!(e6_setup().lie.dim(), 312);
    assert_eq!(d4_setup().lie.dim(), 168);
}

#[test]
fn isometries_have_order_three_and_preserve_the_lattice() {
    for name in [IsometryName::Sigma6, IsometryName::Sigma2, IsometryName::Sigma4] {
        let s = setup_for(name);
        let g = build_isometry(name, &s.lat).unwrap();
        assert_eq!(g.order(), Some(3), "{name:?}");
        let m = &g.basis_matrix;
        assert_eq!(mat_mul(&mat_mul(&transpose(m), &s.lat.gram), m), s.lat.gram);
    }
}

#[test]
fn fixed_ranks() {
    let s2 = build_isometry(IsometryName::Sigma2, &d4_setup().lat).unwrap();
    assert_eq!(s2.fixed_rank(), 0);
    let s6 = build_isometry(IsometryName::Sigma6, &e6_setup().lat).unwrap();
    assert_eq!(s6.fixed_rank(), 6);
    // ψ fixes a plane, components 4–6 contribute a diagonal D4
    let s4 = build_isometry(IsometryName::Sigma4, &d4_setup().lat).unwrap();
    assert_eq!(s4.fixed_rank(), 2 + 4);
}

#[test]
fn jacobi_identity_on_random_triples() {
    let lie = &d4_setup().lie;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let [x, y, z] = [0; 3].map(|_| lie.basis_elem(rng.gen_range(0..lie.dim())));
        let mut total = lie.bracket(&x, &lie.bracket(&y, &z));
        total.add_scaled(&lie.bracket(&y, &lie.bracket(&z, &x)), &int(1));
        total.add_scaled(&lie.bracket(&z, &lie.bracket(&x, &y)), &int(1));
        assert!(total.is_zero());
    }
}

#[test]
fn form_is_invariant_on_random_triples() {
    let lie = &e6_setup().lie;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2_000 {
        let [x, y, z] = [0; 3].map(|_| lie.basis_elem(rng.gen_range(0..lie.dim())));
        assert_eq!(lie.form(&lie.bracket(&x, &y), &z), lie.form(&x, &lie.bracket(&y, &z)));
    }
}

#[test]
fn lifts_are_automorphisms_of_order_three() {
    for name in [IsometryName::Sigma6, IsometryName::Sigma2, IsometryName::Sigma4] {
        let s = setup_for(name);
        let g = build_isometry(name, &s.lat).unwrap();
        let (lifted, phase) = standard_lift_with_phase(&s.lie, &g.matrix).unwrap();
        assert!(lifted.is_automorphism_of(&s.lie), "{name:?}");
        assert_eq!(lifted.order(), Some(3));
        for f in integer_kernel(&sub_identity(&g.matrix), 24) {
            assert_eq!(phase.eval(&f), 1, "{name:?} phase on the fixed sublattice");
        }
        for (k, r) in s.lie.roots.iter().enumerate() {
            assert_eq!(phase.eval(r), lifted.phase[k]);
        }
    }
}

fn sub_identity(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[i][j] - i64::from(i == j)).collect()).collect()
}

#[test]
fn sigma2_lift_cubes_to_identity_on_every_basis_element() {
    let s = d4_setup();
    let g = build_isometry(IsometryName::Sigma2, &s.lat).unwrap();
    let lifted = standard_lift(&s.lie, &g.matrix).unwrap();
    let cube = lifted.power(3);
    for i in 0..s.lie.dim() {
        let b = s.lie.basis_elem(i);
        assert_eq!(cube.apply(&b), b);
    }
}

#[test]
fn identity_lifts_to_identity() {
    let s = d4_setup();
    let lifted = standard_lift(&s.lie, &identity(24)).unwrap();
    assert_eq!(lifted, LieAutomorphism::identity(&s.lie));
}

#[test]
fn sigma6_has_no_fixed_roots() {
    let s = e6_setup();
    let g = build_isometry(IsometryName::Sigma6, &s.lat).unwrap();
    let lifted = standard_lift(&s.lie, &g.matrix).unwrap();
    let fixed = fixed_subalgebra(&s.lie, &lifted).unwrap();
    assert_eq!(fixed.fixed_roots, 0);
    assert_eq!(fixed.root_orbits, 96);
}

fn fixed_type(name: IsometryName, seed: u64) -> (usize, SemisimpleTypeWithLevels) {
    let s = setup_for(name);
    let g = build_isometry(name, &s.lat).unwrap();
    let lifted = standard_lift(&s.lie, &g.matrix).unwrap();
    let fixed = fixed_subalgebra(&s.lie, &lifted).unwrap();
    (fixed.dim(), identify_type(&s.lie, &fixed, seed).unwrap())
}

#[test]
fn sigma6_fixed_algebra() {
    assert_eq!(fixed_type(IsometryName::Sigma6, 1), (102, ty("E6,3 A2,1^3")));
}

#[test]
fn sigma2_fixed_algebra() {
    assert_eq!(fixed_type(IsometryName::Sigma2, 1), (48, ty("A2,3^6")));
}

#[test]
fn sigma4_fixed_algebra() {
    assert_eq!(fixed_type(IsometryName::Sigma4, 1), (54, ty("A2,3^2 U(1) D4,3 A1,1^3")));
}

#[test]
fn identity_on_d4_lattice_gives_the_full_algebra() {
    let s = d4_setup();
    let fixed = fixed_subalgebra(&s.lie, &LieAutomorphism::identity(&s.lie)).unwrap();
    assert_eq!(fixed.dim(), 168);
    assert_eq!(identify_type(&s.lie, &fixed, 3).unwrap(), ty("D4,1^6"));
}

#[test]
fn identification_is_conjugation_invariant() {
    let s = d4_setup();
    let g = build_isometry(IsometryName::Sigma4, &s.lat).unwrap();
    let lifted = standard_lift(&s.lie, &g.matrix).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let d4 = SimpleType::new(Family::D, 4).unwrap();
    let mut w = identity(24);
    for _ in 0..6 {
        let comp = rng.gen_range(0..6);
        let node = rng.gen_range(0..4);
        let r = reflection(d4, node);
        let mut block = identity(24);
        for i in 0..4 {
            for j in 0..4 {
                block[4 * comp + i][4 * comp + j] = r[i][j];
            }
        }
        w = mat_mul(&w, &block);
    }
    let wl = lift(&s.lie, &w).unwrap();
    assert!(wl.is_automorphism_of(&s.lie));
    let conj = wl.compose(&lifted).compose(&wl.inverse());
    assert!(conj.is_automorphism_of(&s.lie));
    let fixed = fixed_subalgebra(&s.lie, &conj).unwrap();
    assert_eq!(fixed.dim(), 54);
    assert_eq!(identify_type(&s.lie, &fixed, 9).unwrap(), ty("A2,3^2 U(1) D4,3 A1,1^3"));
}

#[test]
fn ground_energies() {
    let s = e6_setup();
    let g = build_isometry(IsometryName::Sigma6, &s.lat).unwrap();
    let rho = twisted_ground_energy(&g).unwrap();
    assert_eq!(rho.multiplicities, vec![6, 9, 9]);
    assert_eq!(rho.rho, int(1));
    assert!(rho.grid_contains(&rat(4, 3)));
    assert!(!rho.grid_contains(&rat(1, 2)));

    assert_eq!(twisted_ground_energy(&LatticeIsometry::identity(&s.lat)).unwrap().rho, int(0));
    for d in [1usize, 4, 24] {
        let minus: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| -i64::from(i == j)).collect()).collect();
        assert_eq!(twisted_ground_energy_of(&minus).unwrap().rho, rat(d as i64, 16));
    }
}

#[test]
fn ground_energy_of_square_agrees() {
    for name in [IsometryName::Sigma6, IsometryName::Sigma2, IsometryName::Sigma4] {
        let g = build_isometry(name, &setup_for(name).lat).unwrap();
        let a = twisted_ground_energy(&g).unwrap().rho;
        let b = twisted_ground_energy_of(&g.power(2)).unwrap().rho;
        assert_eq!(a, b, "{name:?}");
    }
}

#[test]
fn projection_norms() {
    let s = e6_setup();
    let g = build_isometry(IsometryName::Sigma6, &s.lat).unwrap();
    let u = s.lat.code.glue_vector(&[0, 1, 0, 0]).unwrap();
    assert_eq!(fixed_projection_norm(&s.lat, &g, &u).1, rat(4, 9));
    let u = s.lat.code.glue_vector(&[1, 0, 0, 0]).unwrap();
    let (p, n) = fixed_projection_norm(&s.lat, &g, &u);
    assert!(p.iter().all(Zero::is_zero));
    assert_eq!(n, Rational::zero());

    let id = LatticeIsometry::identity(&s.lat);
    let u = s.lat.code.glue_vector(&[0, 1, 2, 1]).unwrap();
    assert_eq!(fixed_projection_norm(&s.lat, &id, &u).0, u);
}
