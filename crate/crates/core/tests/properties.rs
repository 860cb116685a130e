use dps_core::derivatives::{composition_profile, phi, phi_tower, rank_of_full, RankDirection};
use dps_core::grassmann::{act_orthogonal, cosine, sample_frame, sample_orthogonal, Frame};
use dps_core::infchar::{expand_segment, infchar_of, is_generalized_segment, is_segment, CNumberMultiset, SegmentDesc};
use dps_core::reducibility::{
    finite_dim_quotient, finite_dim_submodule, is_reducible_closed, is_reducible_recursive, Side,
};
use dps_core::spectral::{eigenvalue_mero, eigenvalue_quadrature, is_exceptional};
use dps_core::{make_character, Character, ComplexRational, FieldKind, InducedRepDesc, Rational};
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = FieldKind> {
    prop_oneof![Just(FieldKind::Real), Just(FieldKind::Complex), Just(FieldKind::NonArchimedean)]
}

fn rational(span: i64) -> impl Strategy<Value = Rational> {
    (-span * 4..=span * 4, 1..=4i64).prop_map(|(a, d)| Rational::new(a, d))
}

fn character_on(field: FieldKind, p: u32) -> impl Strategy<Value = Character> {
    (0..2i64, -3..=3i64, rational(8), prop::bool::weighted(0.1)).prop_map(move |(e, a, s, imag)| {
        let sign = (field == FieldKind::Real).then_some(e);
        let alpha = (field == FieldKind::Complex).then_some(a);
        let im = if imag { Rational::new(1, 3) } else { Rational::from_integer(0) };
        make_character(field, p, sign, alpha, ComplexRational::new(s, im)).unwrap()
    })
}

/// `(field, n, p1, χ)` with `χ` on `GL_{p1}`.
fn cell() -> impl Strategy<Value = (FieldKind, u32, u32, Character)> {
    (field(), 2..=10u32)
        .prop_flat_map(|(f, n)| (Just(f), Just(n), 1..n))
        .prop_flat_map(|(f, n, p1)| (Just(f), Just(n), Just(p1), character_on(f, p1)))
}

proptest! {
    #[test]
    fn invert_is_an_involution((_f, _n, _p, chi) in cell()) {
        prop_assert_eq!(chi.invert().invert(), chi);
        prop_assert_eq!(chi.invert().s_of(), -chi.s_of());
    }

    #[test]
    fn restrict_commutes_with_invert((_f, _n, _p, chi) in cell()) {
        prop_assert_eq!(chi.restrict().unwrap().invert(), chi.invert().restrict().unwrap());
    }

    #[test]
    fn normalize_with_trivial_is_identity((_f, n, _p, chi) in cell()) {
        let rep = InducedRepDesc::with_trivial(n, chi).unwrap();
        prop_assert_eq!(rep.normalize().unwrap(), (chi, false));
    }

    #[test]
    fn closed_and_recursive_agree((f, n, p1, chi) in cell()) {
        prop_assert_eq!(
            is_reducible_closed(f, n, p1, &chi).unwrap().reducible,
            is_reducible_recursive(f, n, p1, &chi).unwrap().reducible
        );
    }

    #[test]
    fn verdict_is_duality_invariant((f, n, p1, chi) in cell()) {
        prop_assert_eq!(
            is_reducible_closed(f, n, p1, &chi).unwrap().reducible,
            is_reducible_closed(f, n, p1, &chi.invert()).unwrap().reducible
        );
    }

    #[test]
    fn finite_dim_side_follows_sign_of_s((f, n, p1, chi) in cell()) {
        let s = chi.s_of();
        if s > Rational::from_integer(0) {
            prop_assert!(finite_dim_submodule(f, n, p1, &chi).unwrap().is_none());
        }
        if s < Rational::from_integer(0) {
            prop_assert!(finite_dim_quotient(f, n, p1, &chi).unwrap().is_none());
        }
    }

    #[test]
    fn monotone_recursion((f, n, p1, chi) in cell()) {
        if p1 >= 2 && n - p1 >= 2 {
            let inner = is_reducible_closed(f, n - 2, p1 - 1, &chi.restrict().unwrap()).unwrap();
            if inner.reducible {
                prop_assert!(is_reducible_closed(f, n, p1, &chi).unwrap().reducible);
            }
        }
    }

    #[test]
    fn tower_length_is_rank((_f, n, _p, chi) in cell()) {
        let rep = InducedRepDesc::with_trivial(n, chi).unwrap();
        let tower = phi_tower(&rep).unwrap();
        prop_assert_eq!(rank_of_full(&rep) as usize, tower.len() - 1);
        for w in tower.windows(2) {
            prop_assert_eq!(w[0].rank(), w[1].rank() + 1);
        }
        prop_assert_eq!(phi(&rep).unwrap(), tower[1]);
    }

    #[test]
    fn direction_flips_under_duality((f, n, p1, chi) in cell()) {
        let a = composition_profile(f, n, p1, &chi).unwrap();
        let b = composition_profile(f, n, p1, &chi.invert()).unwrap();
        if a.reducible && chi.s_of() != Rational::from_integer(0) {
            prop_assert_eq!(
                a.direction == RankDirection::DescendingRank,
                b.direction == RankDirection::AscendingRank
            );
        }
        if f == FieldKind::NonArchimedean {
            prop_assert_eq!(a.length_exact, Some(if a.reducible { 2 } else { 1 }));
        }
        if let Some(c) = a.finite_dim_constituent {
            let other = match c.side {
                Side::Submodule => finite_dim_quotient(f, n, p1, &chi).unwrap(),
                Side::Quotient => finite_dim_submodule(f, n, p1, &chi).unwrap(),
            };
            if f.is_archimedean() {
                prop_assert!(other.is_none());
            }
        }
    }

    #[test]
    fn expanded_segments_are_segments(re in rational(20), im in rational(3), length in 1..=16u32) {
        let ms = expand_segment(&SegmentDesc { center: ComplexRational::new(re, im), length });
        prop_assert_eq!(ms.len(), length as usize);
        prop_assert!(is_segment(&ms).unwrap());
        prop_assert!(is_generalized_segment(&ms).unwrap());
    }

    #[test]
    fn segment_implies_generalized(v in prop::collection::vec(rational(4), 1..8)) {
        let ms: CNumberMultiset = v.into_iter().map(ComplexRational::real).collect();
        if is_segment(&ms).unwrap() {
            prop_assert!(is_generalized_segment(&ms).unwrap());
        }
    }

    #[test]
    fn union_is_commutative_and_counts(a in prop::collection::vec(rational(4), 0..6), b in prop::collection::vec(rational(4), 0..6)) {
        let x: CNumberMultiset = a.iter().copied().map(ComplexRational::real).collect();
        let y: CNumberMultiset = b.iter().copied().map(ComplexRational::real).collect();
        prop_assert_eq!(x.union(&y), y.union(&x));
        prop_assert_eq!(x.union(&y).len(), a.len() + b.len());
    }

    #[test]
    fn finite_dim_infchar_is_generalized_segment((f, n, p1, chi) in cell()) {
        if f.is_archimedean() && finite_dim_submodule(f, n, p1, &chi).unwrap().is_some() {
            prop_assert!(infchar_of(f, n, p1, &chi).unwrap().is_generalized_segment().unwrap());
        }
    }

    #[test]
    fn cosine_symmetric_bounded_invariant(seed in any::<u64>(), n in 2..=7usize, i_frac in 0.0..1.0f64) {
        let i = 1 + ((n - 1) as f64 * i_frac) as usize;
        let i = i.min(n - 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = sample_frame(n, i, &mut rng).unwrap();
        let f = sample_frame(n, i, &mut rng).unwrap();
        let c = cosine(&e, &f).unwrap();
        prop_assert!((0.0..=1.0).contains(&c));
        prop_assert!((c - cosine(&f, &e).unwrap()).abs() <= 1e-10);
        // another orthonormal frame of the same subspace
        let h = sample_orthogonal(i, &mut rng);
        let e2 = Frame::new(e.columns() * h).unwrap();
        prop_assert!((c - cosine(&e2, &f).unwrap()).abs() <= 1e-12);
        let g = sample_orthogonal(n, &mut rng);
        let moved = cosine(&act_orthogonal(&g, &e).unwrap(), &act_orthogonal(&g, &f).unwrap()).unwrap();
        prop_assert!((c - moved).abs() <= 1e-10);
    }

    #[test]
    fn lines_reduce_to_inner_product(u in prop::collection::vec(-1.0..1.0f64, 4), v in prop::collection::vec(-1.0..1.0f64, 4)) {
        let (u, v) = (DVector::from_vec(u), DVector::from_vec(v));
        prop_assume!(u.norm() > 1e-3 && v.norm() > 1e-3);
        let (u, v) = (u.normalize(), v.normalize());
        let e = Frame::new(DMatrix::from_column_slice(4, 1, u.as_slice())).unwrap();
        let f = Frame::new(DMatrix::from_column_slice(4, 1, v.as_slice())).unwrap();
        prop_assert!((cosine(&e, &f).unwrap() - u.dot(&v).abs()).abs() <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mero_matches_quadrature(n in 3..=6u32, a in -3..=24i64, m in 0..=10u32) {
        let alpha = Rational::new(a, 4);
        prop_assume!(!is_exceptional(n, 1, alpha).unwrap());
        let exact = eigenvalue_mero(n, alpha, m).unwrap().value().unwrap().re;
        let numeric = eigenvalue_quadrature(n, a as f64 / 4.0, m).unwrap();
        prop_assert!((exact - numeric).abs() <= 1e-8, "{exact} vs {numeric}");
    }
}

#[test]
fn normalization_at_zero() {
    for n in 3..=12 {
        let v = eigenvalue_mero(n, Rational::from_integer(0), 0).unwrap();
        assert_eq!(v.value().unwrap().re, 1.0);
        assert_eq!(v.pole_order, 0);
    }
}
