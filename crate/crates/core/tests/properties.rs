use num_bigint::BigInt;
use proptest::prelude::*;

use qcong_core::counting::{count, enumerate_small, Kind, ENUMERATION_LIMIT};
use qcong_core::qfunctions::{euler_product, general_theta, phi, phi_neg, psi, ThetaSpec};
use qcong_core::{EtaQuotient, Ring, Series};

const ORDER: usize = 64;

fn exact() -> impl Strategy<Value = Series> {
    prop::collection::vec(-1000i64..1000, ORDER).prop_map(|v| Series::from_ints(&v))
}

fn residues() -> impl Strategy<Value = (u64, Series, Series, Series)> {
    (2u64..5000).prop_flat_map(|m| {
        let s = || prop::collection::vec(0..m, ORDER).prop_map(move |v| Series::from_residues(m, v).unwrap());
        (Just(m), s(), s(), s())
    })
}

/// A unit: constant term +1 or -1, the rest arbitrary.
fn unit() -> impl Strategy<Value = Series> {
    (prop::bool::ANY, prop::collection::vec(-50i64..50, ORDER - 1)).prop_map(|(neg, rest)| {
        let mut v = vec![if neg { -1 } else { 1 }];
        v.extend(rest);
        Series::from_ints(&v)
    })
}

fn ring_axioms(a: &Series, b: &Series, c: &Series, zero: &Series, one: &Series) {
    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
    assert_eq!(a.add(b).unwrap().add(c).unwrap(), a.add(&b.add(c).unwrap()).unwrap());
    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
    assert_eq!(a.mul(b).unwrap().mul(c).unwrap(), a.mul(&b.mul(c).unwrap()).unwrap());
    assert_eq!(
        a.mul(&b.add(c).unwrap()).unwrap(),
        a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap()
    );
    assert_eq!(&a.add(zero).unwrap(), a);
    assert_eq!(&a.mul(one).unwrap(), a);
    assert_eq!(&a.sub(a).unwrap(), zero);
    assert_eq!(&a.add(&a.neg()).unwrap(), zero);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_ring_axioms(a in exact(), b in exact(), c in exact()) {
        ring_axioms(&a, &b, &c, &Series::zero(ORDER), &Series::one(ORDER));
    }

    #[test]
    fn residue_ring_axioms((m, a, b, c) in residues()) {
        let ring = Ring::Mod(m);
        ring_axioms(&a, &b, &c, &Series::zero_in(ring, ORDER), &Series::one_in(ring, ORDER));
    }

    #[test]
    fn reduction_is_a_homomorphism(a in exact(), b in exact(), m in 2u64..10_000) {
        let r = |s: &Series| s.reduce_mod(m).unwrap();
        prop_assert_eq!(r(&a.mul(&b).unwrap()), r(&a).mul(&r(&b)).unwrap());
        prop_assert_eq!(r(&a.add(&b).unwrap()), r(&a).add(&r(&b)).unwrap());
        prop_assert_eq!(r(&a.neg()), r(&a).neg());
        prop_assert_eq!(r(&a).residues().unwrap().to_vec(), (0..ORDER).map(|i| a.residue(i, m).unwrap()).collect::<Vec<_>>());
    }

    #[test]
    fn dissection_is_linear(a in exact(), b in exact(), step in 1usize..12, k in -20i64..20) {
        for r in 0..step {
            let d = |s: &Series| s.dissect(step, r).unwrap();
            prop_assert_eq!(d(&a.add(&b).unwrap()), d(&a).add(&d(&b)).unwrap());
            prop_assert_eq!(d(&a.scale(k)), d(&a).scale(k));
        }
    }

    #[test]
    fn dissection_components_tile_the_series(a in exact(), step in 1usize..20) {
        let mut rebuilt = vec![None; ORDER];
        for r in 0..step {
            for (i, c) in a.dissect(step, r).unwrap().coeffs().into_iter().enumerate() {
                let slot = &mut rebuilt[step * i + r];
                prop_assert!(slot.is_none());
                *slot = Some(c);
            }
        }
        let rebuilt: Vec<BigInt> = rebuilt.into_iter().map(Option::unwrap).collect();
        prop_assert_eq!(rebuilt, a.coeffs());
    }

    #[test]
    fn text_and_json_round_trip(a in exact(), sparse in prop::bool::ANY) {
        prop_assert_eq!(&Series::from_text(&a.to_text(sparse), Some(ORDER)).unwrap(), &a);
        prop_assert_eq!(&Series::from_json_array(&a.to_json_array()).unwrap(), &a);
    }

    #[test]
    fn shift_and_dilate_agree_with_multiplication(a in exact(), k in 1usize..10) {
        prop_assert_eq!(a.shift(k), a.mul(&Series::monomial(ORDER, k, 1)).unwrap());
        prop_assert_eq!(a.dilate(1).unwrap(), a.clone());
        prop_assert_eq!(a.negate_q().negate_q(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn invert_is_an_inverse(u in unit()) {
        let inv = u.invert().unwrap();
        prop_assert_eq!(u.mul(&inv).unwrap(), Series::one(ORDER));
        prop_assert_eq!(inv.invert().unwrap(), u.clone());
        prop_assert_eq!(u.pow(-2).unwrap().mul(&u.pow(2).unwrap()).unwrap(), Series::one(ORDER));
    }

    #[test]
    fn invert_is_an_inverse_mod_m(u in unit(), m in 2u64..1000) {
        let u = u.reduce_mod(m).unwrap();
        prop_assert_eq!(u.mul(&u.invert().unwrap()).unwrap(), Series::one_in(Ring::Mod(m), ORDER));
    }

    #[test]
    fn theta_routes_agree(order in 1usize..400) {
        let eta = |f: &[(usize, i64)]| qcong_core::qfunctions::eta_quotient(&EtaQuotient::new(f.iter().copied()).unwrap(), order).unwrap();
        let phi_q = phi(order);
        prop_assert_eq!(&general_theta(ThetaSpec::positive(1, 1).unwrap(), 1, order).unwrap(), &phi_q);
        prop_assert_eq!(&eta(&[(2, 5), (1, -2), (4, -2)]), &phi_q);
        let psi_q = psi(order);
        prop_assert_eq!(&general_theta(ThetaSpec::positive(1, 3).unwrap(), 1, order).unwrap(), &psi_q);
        prop_assert_eq!(&eta(&[(2, 2), (1, -1)]), &psi_q);
        prop_assert_eq!(&phi_neg(order).unwrap(), &phi_q.negate_q());
        prop_assert_eq!(
            general_theta(ThetaSpec::negative(1, 2).unwrap(), 1, order).unwrap(),
            euler_product(1, order).unwrap()
        );
    }

    #[test]
    fn modular_expansion_matches_reduced_exact(h in 1usize..6, e in -6i64..6, m in 2u64..500) {
        let q = EtaQuotient::new([(h, e), (1, -1)]).unwrap();
        let exact = qcong_core::qfunctions::eta_quotient(&q, 200).unwrap();
        let modular = qcong_core::qfunctions::eta_quotient_in(&q, Ring::Mod(m), 200).unwrap();
        prop_assert_eq!(exact.reduce_mod(m).unwrap(), modular);
    }
}

fn kinds() -> Vec<Kind> {
    let mut out = vec![Kind::PlainP, Kind::Overpartition, Kind::DistinctTwoCopies];
    for l in 2..=6 {
        out.extend([Kind::LRegular(l), Kind::OverlinedLRegular(l), Kind::NonOverlinedLRegular(l)]);
    }
    out
}

#[test]
fn enumeration_matches_counts() {
    for kind in kinds() {
        let table = count(kind, ENUMERATION_LIMIT).unwrap();
        for n in 0..=ENUMERATION_LIMIT {
            let parts = enumerate_small(kind, n).unwrap();
            assert_eq!(BigInt::from(parts.len()), table.values[n as usize], "{kind} at {n}");
            assert!(parts.iter().all(|p| p.total() == n));
            let mut dedup = parts.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), parts.len(), "{kind} at {n} lists a partition twice");
        }
    }
}

#[test]
fn counts_match_generating_functions() {
    for kind in kinds() {
        let table = count(kind, 149).unwrap();
        let series = qcong_core::qfunctions::eta_quotient(&kind.quotient(), 150).unwrap();
        assert_eq!(series.coeffs(), table.values, "{kind}");
    }
}

#[test]
fn psi_product_form_to_500() {
    let product = qcong_core::qfunctions::eta_quotient(&EtaQuotient::new([(2, 2), (1, -1)]).unwrap(), 500).unwrap();
    assert_eq!(product, psi(500));
}

#[test]
fn known_small_values() {
    let rstar2 = count(Kind::NonOverlinedLRegular(2), 3).unwrap();
    assert_eq!(rstar2.values, [1, 2, 3, 6].map(BigInt::from));
    let p = count(Kind::PlainP, 100).unwrap();
    assert_eq!(p.values[100], "190569292".parse::<BigInt>().unwrap());
    let pbar = count(Kind::Overpartition, 10).unwrap();
    assert_eq!(pbar.values, [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232].map(BigInt::from));
}
