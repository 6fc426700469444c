mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tbtool_core::extremal::binomial;
use tbtool_core::generate;
use tbtool_core::{
    bigraded, canonical_form, d_total, reduced_betti, reduced_euler, tb_reduced, Complex,
    FieldSpec, Simplex,
};

const FIELDS: [FieldSpec; 3] = [FieldSpec::F2, FieldSpec::Fp(3), FieldSpec::Rationals];

fn complex_on(m: usize, raw: Vec<u64>, full: bool) -> Complex {
    let universe = Simplex::prefix(m).bits();
    let mut faces: Vec<Simplex> = raw.into_iter().map(|b| Simplex::from_bits(b & universe)).collect();
    if full {
        faces.extend((1..=m).map(Simplex::vertex));
    }
    Complex::from_facets(m, faces).unwrap()
}

fn arb_complex(max_m: usize) -> impl Strategy<Value = Complex> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(any::<u64>(), 1..=2 * m).prop_map(move |raw| complex_on(m, raw, false))
    })
}

fn arb_full(max_m: usize) -> impl Strategy<Value = Complex> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(any::<u64>(), 1..=2 * m).prop_map(move |raw| complex_on(m, raw, true))
    })
}

/// Two complexes on the same `[m]`.
fn arb_pair(max_m: usize, full: bool) -> impl Strategy<Value = (Complex, Complex)> {
    (1..=max_m).prop_flat_map(move |m| {
        (
            prop::collection::vec(any::<u64>(), 1..=2 * m),
            prop::collection::vec(any::<u64>(), 1..=2 * m),
        )
            .prop_map(move |(a, b)| (complex_on(m, a, full), complex_on(m, b, full)))
    })
}

fn arb_perm(m: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=m).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn faces_are_downward_closed(k in arb_complex(7)) {
        let faces: Vec<Simplex> = k.faces_by_dim().into_iter().flatten().collect();
        for f in &faces {
            for sub in f.subsets() {
                prop_assert!(faces.contains(&sub));
            }
        }
        prop_assert!(faces.contains(&Simplex::EMPTY));
    }

    #[test]
    fn nested_restriction(k in arb_complex(7), a in any::<u64>(), b in any::<u64>()) {
        let j1 = Simplex::from_bits(a & k.universe().bits());
        let j2 = Simplex::from_bits(b & j1.bits());
        let twice = k.restrict(j1).unwrap().restrict(j2.compress(j1)).unwrap();
        prop_assert_eq!(twice, k.restrict(j2).unwrap());
    }

    #[test]
    fn join_dimension_and_associativity(a in arb_complex(3), b in arb_complex(3), c in arb_complex(3)) {
        let ab = a.join(&b).unwrap();
        if !a.is_empty_complex() && !b.is_empty_complex() {
            prop_assert_eq!(ab.dim(), a.dim() + b.dim() + 1);
        }
        let left = ab.join(&c).unwrap();
        let right = a.join(&b.join(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        (k, perm) in arb_complex(7).prop_flat_map(|k| { let m = k.m(); (Just(k), arb_perm(m)) })
    ) {
        let moved = k.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&k).unwrap(), canonical_form(&moved).unwrap());
    }

    #[test]
    fn minimal_non_faces_describe_the_complement(k in arb_complex(6)) {
        let mnf = k.minimal_non_faces();
        for bits in 0..1u64 << k.m() {
            let s = Simplex::from_bits(bits);
            let blocked = mnf.iter().any(|n| n.is_subset_of(s));
            prop_assert_eq!(k.contains_face(s), !blocked);
        }
    }

    #[test]
    fn euler_matches_alternating_betti(k in arb_complex(7)) {
        for f in FIELDS {
            let b = reduced_betti(&k, f);
            let alt: i64 = b.iter().map(|(i, v)| if i.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) }).sum();
            prop_assert_eq!(alt, reduced_euler(&k));
            prop_assert_eq!(b.get(-1), usize::from(k.is_empty_complex()));
        }
    }

    #[test]
    fn mayer_vietoris_for_tb((k, l) in arb_pair(7, false)) {
        for f in [FieldSpec::F2, FieldSpec::Rationals] {
            let lhs = tb_reduced(&k, f) + tb_reduced(&l, f);
            let rhs = tb_reduced(&k.intersection(&l).unwrap(), f) + tb_reduced(&k.union(&l).unwrap(), f);
            prop_assert!(lhs <= rhs);
        }
    }

    #[test]
    fn tb_is_multiplicative_under_join(a in arb_complex(4), b in arb_complex(4)) {
        for f in [FieldSpec::F2, FieldSpec::Rationals] {
            let joined = a.join(&b).unwrap();
            prop_assert_eq!(tb_reduced(&joined, f), tb_reduced(&a, f) * tb_reduced(&b, f));
        }
    }

    #[test]
    fn d_total_monotone_under_deletion(k in arb_full(7)) {
        let whole = d_total(&k, FieldSpec::F2).unwrap();
        for w in 1..=k.m() {
            let smaller = k.delete_vertex(w).unwrap();
            prop_assert!(d_total(&smaller, FieldSpec::F2).unwrap() <= whole);
        }
    }

    #[test]
    fn d_total_is_multiplicative_under_join(a in arb_full(5), b in arb_full(5)) {
        let joined = a.join(&b).unwrap();
        prop_assert_eq!(
            d_total(&joined, FieldSpec::F2).unwrap(),
            d_total(&a, FieldSpec::F2).unwrap() * d_total(&b, FieldSpec::F2).unwrap()
        );
    }

    #[test]
    fn mayer_vietoris_for_d_total((k, l) in arb_pair(6, true)) {
        let f = FieldSpec::F2;
        let lhs = d_total(&k, f).unwrap() + d_total(&l, f).unwrap();
        let rhs = d_total(&k.intersection(&l).unwrap(), f).unwrap() + d_total(&k.union(&l).unwrap(), f).unwrap();
        prop_assert!(lhs <= rhs);
    }

    #[test]
    fn d_total_lower_bounds(k in arb_full(7)) {
        let d = d_total(&k, FieldSpec::F2).unwrap();
        prop_assert!(d >= 1 << (k.m() as isize - k.mdim() - 1));
        prop_assert!(d >= 1 << (k.m() as isize - k.dim() - 1));
    }

    #[test]
    fn bigraded_is_an_isomorphism_invariant(
        (k, perm) in arb_full(6).prop_flat_map(|k| { let m = k.m(); (Just(k), arb_perm(m)) })
    ) {
        let moved = k.relabel(&perm).unwrap();
        prop_assert_eq!(bigraded(&k, FieldSpec::F2).unwrap(), bigraded(&moved, FieldSpec::F2).unwrap());
    }
}

#[test]
fn euler_is_bounded_by_tb_on_random_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let m = rng.gen_range(1..=7);
        let k = generate::random(m, &mut rng).unwrap();
        for f in FIELDS {
            assert!(reduced_euler(&k).unsigned_abs() as usize <= tb_reduced(&k, f), "{k:?}");
        }
    }
}

#[test]
fn bjorner_kalai_exhaustive_up_to_five_vertices() {
    for m in 1..=5 {
        let n = m - 1;
        let bound = binomial(n, n / 2);
        for k in common::all_labeled_complexes(m) {
            for f in [FieldSpec::F2, FieldSpec::Rationals] {
                assert!(num_bigint::BigUint::from(tb_reduced(&k, f)) <= bound, "{k:?}");
            }
        }
    }
}

#[test]
fn only_the_simplex_has_d_total_one() {
    for m in 1..=5 {
        for k in common::all_labeled_complexes(m) {
            if !k.full_support() {
                continue;
            }
            let d = d_total(&k, FieldSpec::F2).unwrap();
            let is_simplex = k.facets() == [Simplex::prefix(m)];
            assert_eq!(d == 1, is_simplex, "{k:?}");
            if !is_simplex {
                assert!(d >= 2);
            }
        }
    }
}

#[test]
fn torsion_free_families_agree_across_fields() {
    let mut ks = Vec::new();
    for m in 1..=7 {
        for k in 0..m {
            ks.push(generate::skeleton(m, k).unwrap());
        }
    }
    ks.push(generate::sphere_join(&[2, 3, 2]).unwrap());
    ks.push(generate::simplex_sphere_join(2, &[3, 3]).unwrap());
    for k in ks {
        let t = tb_reduced(&k, FieldSpec::F2);
        assert_eq!(tb_reduced(&k, FieldSpec::Fp(3)), t);
        assert_eq!(tb_reduced(&k, FieldSpec::Rationals), t);
    }
}

#[test]
fn skeleton_d_total_matches_closed_form() {
    for m in 1..=8 {
        for d in 0..m {
            let k = generate::skeleton(m, d).unwrap();
            let value = tbtool_core::extremal::d_skeleton_value(m, d).unwrap();
            assert_eq!(num_bigint::BigUint::from(d_total(&k, FieldSpec::F2).unwrap()), value, "m={m} d={d}");
        }
    }
}
