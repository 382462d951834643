use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use loopindex::circle_index::{index_equality_report, CircleSubgroup};
use loopindex::hofer::{check_norm_inequality, hofer_length_circle, orbit_sum, positive_norm};
use loopindex::loop_morse::stratum_poincare;
use loopindex::quantum::{Basis, Cp1Ring, QuantumElement, Term};
use loopindex::root_system::SUPPORTED;
use loopindex::variational::{discrete_energy, discrete_lplus, hessian_spectrum_at, DiscreteLoop, Functional};
use loopindex::{Coweight, RootSystem};

fn system() -> impl Strategy<Value = RootSystem> {
    (0..SUPPORTED.len()).prop_map(|i| RootSystem::from_label(SUPPORTED[i]).unwrap())
}

fn coweight(rank: usize, bound: i64) -> impl Strategy<Value = Coweight> {
    proptest::collection::vec(-bound..=bound, rank).prop_map(Coweight::new)
}

fn system_and(k: usize, bound: i64) -> impl Strategy<Value = (RootSystem, Vec<Coweight>)> {
    system().prop_flat_map(move |s| {
        let r = s.rank();
        (Just(s), proptest::collection::vec(coweight(r, bound), k))
    })
}

/// Apply a random word in the simple reflections.
fn act(sys: &RootSystem, word: &[usize], xi: &Coweight) -> Coweight {
    word.iter()
        .fold(xi.clone(), |v, &i| sys.reflect_coweight(i % sys.rank(), &v))
}

fn element() -> impl Strategy<Value = QuantumElement> {
    let term = (-3i64..=3, prop::bool::ANY, -8i32..=8).prop_map(|(c, pt, e)| {
        let basis = if pt { Basis::Pt } else { Basis::Fund };
        Term::new(BigRational::from_integer(BigInt::from(c)), basis, f64::from(e) / 4.0)
    });
    proptest::collection::vec(term, 0..4).prop_map(QuantumElement::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutions((sys, v) in system_and(1, 5), i in 0usize..4) {
        let i = i % sys.rank();
        prop_assert_eq!(sys.reflect_coweight(i, &sys.reflect_coweight(i, &v[0])), v[0].clone());
        let root = sys.positive_roots()[i % sys.positive_roots().len()].clone();
        prop_assert_eq!(sys.reflect_root(i, &sys.reflect_root(i, &root)), root);
    }

    #[test]
    fn reflections_preserve_the_inner_product((sys, v) in system_and(2, 4), i in 0usize..4) {
        let i = i % sys.rank();
        let a = sys.reflect_coweight(i, &v[0]);
        let b = sys.reflect_coweight(i, &v[1]);
        prop_assert_eq!(sys.inner(&a, &b).unwrap(), sys.inner(&v[0], &v[1]).unwrap());
    }

    #[test]
    fn orbit_is_closed_and_sums_to_zero((sys, v) in system_and(1, 3)) {
        let orbit = sys.weyl_orbit(&v[0]).unwrap();
        for w in &orbit {
            for i in 0..sys.rank() {
                prop_assert!(orbit.binary_search(&sys.reflect_coweight(i, w)).is_ok());
            }
        }
        prop_assert!(orbit_sum(&sys, &v[0]).unwrap().is_zero());
    }

    #[test]
    fn orbit_stabilizer((sys, v) in system_and(1, 3)) {
        let dom = sys.dominant_representative(&v[0]).unwrap();
        let walls: Vec<usize> = (0..sys.rank()).filter(|&i| dom.coords()[i] == 0).collect();
        let stab = sys.weyl_poincare(&walls).unwrap().eval(1) as u64;
        let orbit = sys.weyl_orbit(&v[0]).unwrap().len() as u64;
        prop_assert_eq!(orbit * stab, sys.weyl_order());
        // the stratum polynomial counts the same cosets
        prop_assert_eq!(stratum_poincare(&sys, &dom).unwrap().eval(1) as u64, orbit);
    }

    #[test]
    fn gram_is_positive_definite(sys in system()) {
        for m in sys.gram_leading_minors() {
            prop_assert!(m > BigRational::from_integer(0.into()));
        }
    }

    #[test]
    fn virtual_index_is_weyl_invariant((sys, v) in system_and(1, 4), word in proptest::collection::vec(0usize..4, 0..8)) {
        prop_assume!(!v[0].is_zero());
        let moved = act(&sys, &word, &v[0]);
        let a = index_equality_report(&CircleSubgroup::new(&sys, v[0].clone()).unwrap()).unwrap();
        let b = index_equality_report(&CircleSubgroup::new(&sys, moved).unwrap()).unwrap();
        prop_assert_eq!(a.virtual_index, b.virtual_index);
        prop_assert_eq!(a.riemannian_index, b.riemannian_index);
    }

    #[test]
    fn virtual_index_grows_under_scaling((sys, v) in system_and(1, 3), m in 2i64..4) {
        prop_assume!(!v[0].is_zero());
        let a = index_equality_report(&CircleSubgroup::new(&sys, v[0].clone()).unwrap()).unwrap();
        let b = index_equality_report(&CircleSubgroup::new(&sys, v[0].scaled(m)).unwrap()).unwrap();
        prop_assert!(b.virtual_index >= a.virtual_index);
        prop_assert_eq!(a.virtual_index, a.riemannian_index);
    }

    #[test]
    fn hofer_length_scales_linearly((sys, v) in system_and(1, 3), m in 1i64..5) {
        prop_assume!(!v[0].is_zero());
        let base = hofer_length_circle(&sys, &v[0]).unwrap().value_squared;
        let scaled = hofer_length_circle(&sys, &v[0].scaled(m)).unwrap().value_squared;
        prop_assert_eq!(scaled, base * BigRational::from_integer((m * m).into()));
    }

    #[test]
    fn positive_norm_is_weyl_invariant_in_eta(
        (sys, v) in system_and(2, 3),
        word in proptest::collection::vec(0usize..4, 0..8),
    ) {
        prop_assume!(!v[0].is_zero());
        let eta = &v[1];
        let a = positive_norm(&sys, eta, &v[0]).unwrap();
        let b = positive_norm(&sys, &act(&sys, &word, eta), &v[0]).unwrap();
        prop_assert_eq!(a.maximum, b.maximum);
        prop_assert!(check_norm_inequality(&sys, eta, &v[0]).unwrap());
    }

    #[test]
    fn quantum_product_is_a_commutative_ring(a in element(), b in element(), c in element(), area in 1i32..4) {
        let ring = Cp1Ring::new(f64::from(area) / 2.0).unwrap();
        let ab = ring.product(&a, &b);
        prop_assert!(ab.approx_eq(&ring.product(&b, &a)));
        prop_assert!(ring.product(&ab, &c).approx_eq(&ring.product(&a, &ring.product(&b, &c))));
        prop_assert!(ring.product(&a, &b.add(&c)).approx_eq(&ring.product(&a, &b).add(&ring.product(&a, &c))));
        prop_assert!(ring.product(&QuantumElement::fund(), &a).approx_eq(&a));
    }

    #[test]
    fn invertible_elements_have_inverses(a in element(), area in 1i32..4) {
        let ring = Cp1Ring::new(f64::from(area) / 2.0).unwrap();
        if ring.is_invertible(&a) {
            prop_assert!(ring.inverse(&a, 3).is_some());
        }
    }

    #[test]
    fn cauchy_schwarz_on_random_loops(seed in any::<u64>(), n in 3usize..48) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let l = DiscreteLoop::random(n, &mut rng);
        let lp = discrete_lplus(&l);
        prop_assert!(lp * lp <= discrete_energy(&l) * (1.0 + 1e-10));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn hessian_counts_are_gauge_invariant(q in proptest::array::uniform4(-1.0f64..1.0)) {
        let norm = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assume!(norm > 0.1);
        let g = loopindex::su2::Su2::new(q[0], q[1], q[2], q[3]).normalize();
        let base = loopindex::variational::geodesic_loop(1, 32).unwrap();
        let a = hessian_spectrum_at(&base, Functional::Energy, 1, 1e-4, 1e-6).unwrap();
        let b = hessian_spectrum_at(&base.conjugated(&g), Functional::Energy, 1, 1e-4, 1e-6).unwrap();
        prop_assert_eq!(a.negative_count, b.negative_count);
        prop_assert_eq!(a.zero_count, b.zero_count);
    }
}
