use nbstab::derive;
use nbstab::enumerate::Execution;
use nbstab::families;
use nbstab::grm::{self, Ordering};
use nbstab::puncture;
use nbstab::stabilizer::DistanceStatus;
use nbstab::{Error, Field, StabilizerCode};

fn exact(code: &StabilizerCode) -> (usize, Option<usize>) {
    let r = code.verify(true, Execution::default());
    assert!(r.passed(), "{code} failed verification: {r:?}");
    assert_eq!(r.distance.status, DistanceStatus::Exact, "{code}");
    (r.distance.value, r.pure_to)
}

fn div_ceil(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

#[test]
fn family_parameters_follow_their_formulas() {
    for (q, m) in [(2u64, 2u32), (3, 3), (4, 2), (5, 3)] {
        let Ok(code) = families::quantum_hamming_hermitian(q, m) else { continue };
        let n = (q.pow(2 * m) - 1) / (q * q - 1);
        assert_eq!((code.n() as u64, code.k()), (n, Some((n - 2 * m as u64) as usize)));
        assert!(code.verify(false, Execution::default()).passed());
    }
    for (q, m, delta) in [(2u64, 4u32, 3u64), (3, 3, 4), (4, 2, 3), (2, 5, 5), (3, 2, 2)] {
        let code = families::quantum_bch_euclidean(q, m, delta).unwrap();
        let n = q.pow(m) - 1;
        let k = n - 2 * m as u64 * div_ceil((delta - 1) * (q - 1), q);
        assert_eq!((code.n() as u64, code.k().map(|k| k as u64)), (n, Some(k)), "bch-e({q},{m},{delta})");
        assert!(code.verify(false, Execution::default()).passed());
    }
    for (q, m, delta) in [(2u64, 2u32, 3u64), (3, 1, 2), (2, 3, 5)] {
        let code = families::quantum_bch_hermitian(q, m, delta).unwrap();
        let n = q.pow(2 * m) - 1;
        let k = n - 2 * m as u64 * div_ceil((delta - 1) * (q * q - 1), q * q);
        assert_eq!((code.n() as u64, code.k().map(|k| k as u64)), (n, Some(k)), "bch-h({q},{m},{delta})");
    }
    let ch = families::quantum_character(3, 4, 1, 2).unwrap();
    assert_eq!((ch.n(), ch.k()), (16, Some(11 - 5)));
    assert_eq!(exact(&ch).0, 4);
}

#[test]
fn small_families_have_expected_exact_distances() {
    let cases = [
        (families::quantum_hamming_euclidean(2, 3).unwrap(), 7, 1, 3),
        (families::quantum_qr(2, 7).unwrap(), 7, 1, 3),
        (families::quantum_qr(2, 17).unwrap(), 17, 1, 5),
        (families::quantum_hamming_euclidean(3, 3).unwrap(), 13, 7, 3),
    ];
    for (code, n, k, d) in cases {
        assert_eq!((code.n(), code.k(), exact(&code).0), (n, Some(k), d), "{code}");
    }
}

#[test]
fn invalid_family_parameters_are_rejected() {
    assert!(matches!(families::quantum_qr(3, 22), Err(Error::NotPrime(22))));
    assert!(matches!(families::quantum_qr(2, 5), Err(Error::NotResidue { .. })));
    assert!(matches!(families::quantum_bch_euclidean(2, 4, 4), Err(Error::DeltaOutOfRange { .. })));
    assert!(matches!(families::quantum_melas(3, 1), Err(Error::BadParameters(_))));
    assert!(families::quantum_hamming_euclidean(3, 2).is_err());
    let css = families::quantum_bch_euclidean(2, 4, 3).unwrap();
    assert!(matches!(families::extend_bch(&css), Err(Error::NotExtendable(_))));
}

#[test]
fn sequential_and_parallel_scans_agree() {
    let code = families::quantum_qr(3, 13).unwrap();
    let a = code.verify(true, Execution::Sequential);
    let b = code.verify(true, Execution::Parallel);
    assert_eq!((a.distance, a.pure_to), (b.distance, b.pure_to));
    let c = families::quantum_bch_hermitian(2, 2, 3).unwrap();
    assert_eq!(
        c.dual().weight_enumerator(Execution::Sequential).unwrap(),
        c.dual().weight_enumerator(Execution::Parallel).unwrap()
    );
}

#[test]
fn json_round_trip_keeps_the_code() {
    for code in [
        families::quantum_hamming_hermitian(2, 2).unwrap(),
        families::quantum_qr(3, 13).unwrap(),
        families::quantum_bch_hermitian(2, 2, 3).unwrap(),
    ] {
        let text = serde_json::to_string(&code.to_json()).unwrap();
        let back = StabilizerCode::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.carrier(), code.carrier());
        assert_eq!(back.params(), code.params());
        assert!(back.verify(false, Execution::default()).source_ok);
    }
}

#[test]
fn grm_subcodes_sit_inside_bch_puncture_codes() {
    for (q, m, delta) in [(2u64, 4u32, 3u64), (3, 2, 2), (2, 5, 3)] {
        let pc = puncture::bch_puncture_code(q, m, delta).unwrap();
        let menu = puncture::bch_puncture_menu(q, m, delta).unwrap();
        assert!(!menu.is_empty());
        for e in &menu {
            let sub = grm::grm_code(q, e.mu, m, Ordering::Cyclic).unwrap();
            for row in sub.generator_matrix() {
                assert!(pc.contains(row).unwrap(), "({q},{m},{delta}) μ = {}", e.mu);
            }
            let w = grm::grm_min_weight_word(q, e.mu, m, Ordering::Cyclic).unwrap();
            assert_eq!(w.iter().filter(|&&x| x != 0).count() as u64, e.length);
            assert!(pc.contains(&w).unwrap());
        }
    }
    assert_eq!(puncture::bch_puncture_code(2, 4, 3).unwrap().code().rank(), 5);
}

#[test]
fn puncturing_rejects_bad_words() {
    let code = families::quantum_bch_euclidean(2, 4, 3).unwrap();
    let zero = vec![0; 15];
    assert!(matches!(puncture::puncture_to(&code, &zero), Err(Error::ZeroWeightWord)));
    let mut single = zero.clone();
    single[0] = 1;
    assert!(matches!(puncture::puncture_to(&code, &single), Err(Error::NotInPunctureCode)));
}

#[test]
fn puncturing_every_weight_of_the_five_qubit_code() {
    let five = families::quantum_hamming_hermitian(2, 2).unwrap();
    let pc = puncture::puncture_code(five.carrier()).unwrap();
    for r in 1..=5 {
        let Some(x) = puncture::find_weight_word(&pc, r, Execution::default()).unwrap() else {
            continue;
        };
        let out = puncture::puncture_to(&five, &x).unwrap();
        let rep = out.verify(true, Execution::default());
        assert!(rep.self_orthogonal && rep.size_ok, "r = {r}");
        assert_eq!(out.n(), r);
    }
}

#[test]
fn derivation_rules_on_small_codes() {
    let five = families::quantum_hamming_hermitian(2, 2).unwrap();

    let zero = derive::reduce_dim(&five).unwrap();
    assert_eq!((zero.n(), zero.k()), (5, Some(0)));
    assert!(exact(&zero).0 >= 3);

    let nested = derive::nested_combine(&five, &zero).unwrap();
    assert_eq!((nested.n(), nested.k()), (10, Some(1)));
    assert!(exact(&nested).0 >= nested.d_claimed());

    let diff = derive::difference_combine(&five, &zero).unwrap();
    assert_eq!((diff.n(), diff.k()), (10, Some(1)));
    assert!(exact(&diff).0 >= diff.d_claimed());

    let f4 = families::quantum_hamming_hermitian(4, 2).unwrap();
    let big = derive::expand_field(&f4, 1, None).unwrap();
    assert_eq!((big.n(), big.k_exp()), (34, f4.k_exp()));
    assert!(big.verify(false, Execution::default()).passed());
    let back = derive::contract_field(&big, 2, None).unwrap();
    assert_eq!(back.carrier(), f4.carrier());
}

#[test]
fn derivation_errors() {
    let five = families::quantum_hamming_hermitian(2, 2).unwrap();
    let longer = derive::lengthen(&five).unwrap();
    assert!(matches!(derive::shorten_pure(&longer), Err(Error::NotPure)));
    let zero = derive::reduce_dim(&five).unwrap();
    assert!(matches!(derive::lengthen(&zero), Err(Error::ZeroDimensional)));
    assert!(matches!(derive::reduce_dim(&zero), Err(Error::NoRoom)));
    assert!(matches!(derive::nested_combine(&zero, &five), Err(Error::NotNested)));
    assert!(matches!(derive::difference_combine(&five, &five), Err(Error::BadParameters(_))));
    let qr = families::quantum_qr(3, 13).unwrap();
    assert!(matches!(derive::direct_sum(&five, &qr), Err(Error::MixedFields)));
    let ternary = families::quantum_hamming_euclidean(3, 3).unwrap();
    assert!(matches!(derive::difference_combine(&ternary, &ternary), Err(Error::OddCharacteristic)));
    let f = Field::get(2, 2).unwrap();
    assert!(matches!(derive::FieldExpansion::new(&f, 1, Some(&[1, 1])), Err(Error::NotABasis)));
}
