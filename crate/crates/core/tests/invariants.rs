use proptest::prelude::*;
use torus_quant::exact_algebra::rational::int;
use torus_quant::exact_algebra::{coset_reps, hnf, same_coset, signature, snf, IntMatrix, RatMatrix, UnitPhase};
use torus_quant::maslov::{mp_act, mp_generators, tau, LagLift, MpGenerator};
use torus_quant::quantization::{bks_matrix, HilbertSpace};
use torus_quant::random::{random_lagrangian, random_lagrangian_meeting, random_sp, rng};
use torus_quant::representations::{heisenberg_matrix, heisenberg_mul, HeisenbergElement};
use torus_quant::symplectic_lattice::{adapted_basis, intersect, pair_adapted_bases, SymplecticSpace};

fn square(n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| IntMatrix::from_fn(n, n, |i, j| v[i * n + j]))
}

fn symmetric(n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    square(n, bound).prop_map(|m| IntMatrix::from_fn(m.rows(), m.rows(), |i, j| m[(i.min(j), i.max(j))]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_left_equivalent(m in square(3, 6)) {
        let (h, u) = hnf(&m);
        prop_assert_eq!(&u * &m, h.clone());
        prop_assert_eq!(u.det().unwrap().abs(), 1);
        for i in 0..3 {
            for j in 0..i.min(3) {
                prop_assert_eq!(h[(i, j)], 0);
            }
        }
    }

    #[test]
    fn snf_divisibility(m in square(3, 6)) {
        let (s, u, v) = snf(&m);
        prop_assert_eq!(&(&u * &m) * &v, s.clone());
        for i in 0..2 {
            let (a, b) = (s[(i, i)], s[(i + 1, i + 1)]);
            prop_assert!(a >= 0 && (a == 0 && b == 0 || a != 0 && b % a == 0));
        }
        prop_assert_eq!(s.det().unwrap().abs(), m.det().unwrap().abs());
    }

    #[test]
    fn coset_reps_are_distinct_and_complete(m in square(2, 4)) {
        let d = m.det().unwrap();
        prop_assume!(d != 0);
        let reps = coset_reps(&m).unwrap();
        prop_assert_eq!(reps.len() as i64, d.abs());
        for (i, x) in reps.iter().enumerate() {
            for y in &reps[i + 1..] {
                prop_assert!(!same_coset(&m, x, y).unwrap());
            }
        }
    }

    #[test]
    fn signature_is_congruence_invariant(q in symmetric(3, 4), p in 0u64..1000) {
        let s = SymplecticSpace::standard(3);
        // a unimodular change of variables from a random symplectic word
        let c = random_sp(&s, 4, &mut rng(p)).unwrap().matrix().submatrix(0, 3, 0, 3);
        prop_assume!(c.det().unwrap() != 0);
        let moved = &(&c.transpose() * &q) * &c;
        let a = signature(&RatMatrix::from(&q)).unwrap();
        let b = signature(&RatMatrix::from(&moved)).unwrap();
        prop_assert_eq!((a.n_plus, a.n_minus), (b.n_plus, b.n_minus));
        prop_assert_eq!(a.dim(), 3);
    }

    #[test]
    fn adapted_bases_are_symplectic(seed in 0u64..10_000, g in 1usize..=3) {
        let s = SymplecticSpace::standard(g);
        let l = random_lagrangian(&s, &mut rng(seed)).unwrap();
        let b = adapted_basis(&l).unwrap();
        b.check().unwrap();
        prop_assert_eq!(s.pairing(&b.frame(), &b.frame()), s.gram().clone());
        prop_assert_eq!(b.lagrangian(), l.clone());
        prop_assert_eq!(adapted_basis(&l).unwrap(), b);
    }

    #[test]
    fn pair_adapted_bases_share_intersection(seed in 0u64..10_000, d in 0usize..=2) {
        let s = SymplecticSpace::standard(2);
        let mut r = rng(seed);
        let l1 = random_lagrangian(&s, &mut r).unwrap();
        let l2 = random_lagrangian_meeting(&l1, d, &mut r).unwrap();
        let (b1, b2) = pair_adapted_bases(&l1, &l2).unwrap();
        let h = 2 - intersect(&l1, &l2).unwrap().rank();
        for i in h..2 {
            prop_assert_eq!(b1.w().row(i), b2.w().row(i));
            prop_assert_eq!(b1.wperp().row(i), b2.wperp().row(i));
        }
        prop_assert_eq!(b1.lagrangian(), l1);
        prop_assert_eq!(b2.lagrangian(), l2);
    }

    #[test]
    fn tau_is_alternating_and_invariant(seed in 0u64..10_000) {
        let s = SymplecticSpace::standard(2);
        let mut r = rng(seed);
        let ls: Vec<_> = (0..3).map(|_| random_lagrangian(&s, &mut r).unwrap()).collect();
        let t = tau(&ls[0], &ls[1], &ls[2]).unwrap();
        prop_assert!(t.abs() <= 2);
        prop_assert_eq!(tau(&ls[1], &ls[2], &ls[0]).unwrap(), t);
        prop_assert_eq!(tau(&ls[0], &ls[2], &ls[1]).unwrap(), -t);
        let b = random_sp(&s, 5, &mut r).unwrap();
        let moved: Vec<_> = ls.iter().map(|l| b.act(l).unwrap()).collect();
        prop_assert_eq!(tau(&moved[0], &moved[1], &moved[2]).unwrap(), t);
    }

    #[test]
    fn mp_action_is_associative(seed in 0u64..10_000, word in prop::collection::vec(0usize..4, 2)) {
        let s = SymplecticSpace::standard(1);
        let base = torus_quant::symplectic_lattice::Lagrangian::standard(&s);
        let kinds = [
            MpGenerator::Gamma,
            MpGenerator::Beta(IntMatrix::diag(&[1])),
            MpGenerator::Alpha(IntMatrix::diag(&[-1])),
            MpGenerator::Epsilon,
        ];
        let (x, y) = (mp_generators(&base, &kinds[word[0]]).unwrap(), mp_generators(&base, &kinds[word[1]]).unwrap());
        let mut r = rng(seed);
        let l = random_lagrangian(&s, &mut r).unwrap();
        let d = intersect(&l, &base).unwrap().rank() as i64;
        let lift = LagLift::new(&base, &l, 1 - d + 2 * (seed as i64 % 4), 4).unwrap();
        let xy = torus_quant::maslov::mp_mul(&x, &y).unwrap();
        prop_assert_eq!(mp_act(&xy, &lift).unwrap(), mp_act(&x, &mp_act(&y, &lift).unwrap()).unwrap());
    }

    #[test]
    fn heisenberg_law(seed in 0u64..10_000, n in prop::collection::vec(-8i64..8, 12), k in prop::sample::select(vec![2i64, 4, 6])) {
        let s = SymplecticSpace::standard(2);
        let l = random_lagrangian(&s, &mut rng(seed)).unwrap();
        let h = HilbertSpace::from_lagrangian(&l, k).unwrap();
        let b = h.polarization().basis();
        let el = |v: &[i64]| HeisenbergElement::new(b, k, UnitPhase::new(int(v[0]) / int(7)), v).unwrap();
        let (x, y, z) = (el(&n[0..4]), el(&n[4..8]), el(&n[8..12]));
        for e in [&x, &y, &z] {
            prop_assert!(e.n().iter().all(|c| (0..k).contains(c)));
        }
        let xy = heisenberg_mul(&x, &y).unwrap();
        prop_assert_eq!(heisenberg_mul(&xy, &z).unwrap(), heisenberg_mul(&x, &heisenberg_mul(&y, &z).unwrap()).unwrap());
        let lhs = &heisenberg_matrix(&x, &h).unwrap().matrix * &heisenberg_matrix(&y, &h).unwrap().matrix;
        prop_assert!(lhs.max_abs_diff(&heisenberg_matrix(&xy, &h).unwrap().matrix) < 1e-9);
    }

    #[test]
    fn bks_operators_are_unitary(seed in 0u64..10_000, d in 0usize..=2, k in prop::sample::select(vec![2i64, 4])) {
        let s = SymplecticSpace::standard(2);
        let mut r = rng(seed);
        let l1 = random_lagrangian(&s, &mut r).unwrap();
        let l2 = random_lagrangian_meeting(&l1, d, &mut r).unwrap();
        prop_assume!(l2.gens().max_abs() <= 5);
        let f = bks_matrix(&HilbertSpace::from_lagrangian(&l1, k).unwrap(), &HilbertSpace::from_lagrangian(&l2, k).unwrap()).unwrap();
        prop_assert!(f.unitarity_error() < 1e-9);
    }
}
